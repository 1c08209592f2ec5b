//! Finite measurable spaces with their full power set, capacities stored as
//! one value per bitmask subset, measurable functions, and instances.

mod json;
mod random;

pub use json::{CapacityDoc, InstanceDoc};
pub use random::{random_capacity, random_function, FUNCTION_LATTICE};

use serde::{Deserialize, Serialize};

use crate::report::{Axiom, Location, ValidationReport, Violation};
use crate::scalar::check_unit;
use crate::{Error, Result, Scalar};

/// Largest supported number of points (2^16 subsets).
pub const MAX_POINTS: usize = 16;

/// A subset of a [`FiniteSpace`], bit `i` set iff point `i` belongs to it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Subset(pub u32);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub fn full(n: usize) -> Self {
        Subset(((1u64 << n) - 1) as u32)
    }

    pub fn singleton(i: usize) -> Self {
        Subset(1 << i)
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 & (1 << i) != 0
    }

    pub fn insert(self, i: usize) -> Self {
        Subset(self.0 | (1 << i))
    }

    pub fn is_subset_of(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// Ordered, distinct point labels; the sigma-algebra is the full power set.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteSpace {
    labels: Vec<String>,
}

impl FiniteSpace {
    pub fn new<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.is_empty() || labels.len() > MAX_POINTS {
            return Err(Error::Structural(format!(
                "a space needs between 1 and {MAX_POINTS} points, got {}",
                labels.len()
            )));
        }
        for (i, label) in labels.iter().enumerate() {
            if label.is_empty() || label.contains(',') {
                return Err(Error::Structural(format!("point label {label:?} must be non-empty and comma-free")));
            }
            if labels[..i].contains(label) {
                return Err(Error::Structural(format!("duplicate point label {label:?}")));
            }
        }
        Ok(Self { labels })
    }

    /// `x1, ..., xn`.
    pub fn with_size(n: usize) -> Result<Self> {
        Self::new((1..=n).map(|i| format!("x{i}")))
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn full(&self) -> Subset {
        Subset::full(self.len())
    }

    pub fn subset_count(&self) -> usize {
        1 << self.len()
    }

    /// Comma-joined labels in point order; the empty set is `""`.
    pub fn key(&self, subset: Subset) -> String {
        (0..self.len()).filter(|&i| subset.contains(i)).map(|i| self.labels[i].as_str()).collect::<Vec<_>>().join(",")
    }

    /// Inverse of [`key`](Self::key); accepts labels in any order.
    pub fn parse_key(&self, key: &str) -> Result<Subset> {
        if key.is_empty() {
            return Ok(Subset::EMPTY);
        }
        let mut subset = Subset::EMPTY;
        for label in key.split(',') {
            let i = self
                .index_of(label.trim())
                .ok_or_else(|| Error::Structural(format!("unknown point label {label:?} in subset key {key:?}")))?;
            if subset.contains(i) {
                return Err(Error::Structural(format!("label {label:?} repeated in subset key {key:?}")));
            }
            subset = subset.insert(i);
        }
        Ok(subset)
    }
}

/// A set function on the power set of a finite space.
///
/// Construction checks only the table shape; the capacity axioms are
/// reported by [`validate_capacity`] and enforced by [`Instance::new`].
#[derive(Debug, Clone, PartialEq)]
pub struct Capacity<T> {
    space: FiniteSpace,
    values: Vec<T>,
}

impl<T: Scalar> Capacity<T> {
    pub fn new(space: FiniteSpace, values: Vec<T>) -> Result<Self> {
        if values.len() != space.subset_count() {
            return Err(Error::Structural(format!(
                "capacity on {} points needs {} values, got {}",
                space.len(),
                space.subset_count(),
                values.len()
            )));
        }
        if let Some(v) = values.iter().find(|v| !v.is_finite()) {
            return Err(Error::Structural(format!("capacity value {v} is not finite")));
        }
        Ok(Self { space, values })
    }

    /// Builds a capacity from a per-subset closure.
    pub fn from_fn(space: FiniteSpace, f: impl Fn(Subset) -> T) -> Result<Self> {
        let values = (0..space.subset_count() as u32).map(|m| f(Subset(m))).collect();
        Self::new(space, values)
    }

    /// The additive capacity with equal mass on each point.
    pub fn uniform(space: FiniteSpace) -> Self {
        let n = T::from_usize(space.len()).expect("point count");
        Self::from_fn(space, |s| T::from_usize(s.len()).expect("subset size") / n).expect("shape matches")
    }

    pub fn space(&self) -> &FiniteSpace {
        &self.space
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn measure(&self, subset: Subset) -> T {
        self.values[subset.index()]
    }
}

/// Reports every boundary, range, and single-element monotonicity breach.
pub fn validate_capacity<T: Scalar>(capacity: &Capacity<T>) -> ValidationReport<T> {
    let space = &capacity.space;
    let n = space.len();
    let (zero, one) = (T::zero(), T::one());
    let tol = T::TOLERANCE;
    let mut violations = Vec::new();
    let subset_loc = |s: Subset| Location::Subset { mask: s.0, key: space.key(s) };

    let empty = capacity.measure(Subset::EMPTY);
    if !empty.approx_eq(zero) {
        violations.push(Violation {
            axiom: Axiom::EmptySet,
            location: subset_loc(Subset::EMPTY),
            observed: empty,
            bound: zero,
        });
    }
    let full = capacity.measure(space.full());
    if !full.approx_eq(one) {
        violations.push(Violation {
            axiom: Axiom::FullSet,
            location: subset_loc(space.full()),
            observed: full,
            bound: one,
        });
    }
    for m in 0..space.subset_count() as u32 {
        let a = Subset(m);
        let va = capacity.measure(a);
        if va < zero - tol || va > one + tol {
            violations.push(Violation {
                axiom: Axiom::Range,
                location: subset_loc(a),
                observed: va,
                bound: va.max(zero).min(one),
            });
        }
        for i in (0..n).filter(|&i| !a.contains(i)) {
            let b = a.insert(i);
            let vb = capacity.measure(b);
            if va > vb + tol {
                violations.push(Violation {
                    axiom: Axiom::SetMonotonicity,
                    location: Location::Inclusion { subset: space.key(a), superset: space.key(b) },
                    observed: va,
                    bound: vb,
                });
            }
        }
    }
    ValidationReport::from_violations(violations, None)
}

/// A `[0, 1]`-valued function on the points of a space.
#[derive(Debug, Clone, PartialEq)]
pub struct MeasurableFunction<T> {
    space: FiniteSpace,
    values: Vec<T>,
}

impl<T: Scalar> MeasurableFunction<T> {
    pub fn new(space: FiniteSpace, values: Vec<T>) -> Result<Self> {
        if values.len() != space.len() {
            return Err(Error::Structural(format!(
                "function on {} points needs {} values, got {}",
                space.len(),
                space.len(),
                values.len()
            )));
        }
        for &v in &values {
            check_unit("function value", v)?;
        }
        Ok(Self { space, values })
    }

    pub fn constant(space: FiniteSpace, c: T) -> Result<Self> {
        let n = space.len();
        Self::new(space, vec![c; n])
    }

    pub fn space(&self) -> &FiniteSpace {
        &self.space
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn max_value(&self) -> T {
        self.values.iter().copied().fold(T::zero(), T::max)
    }

    pub fn min_value(&self) -> T {
        self.values.iter().copied().fold(T::one(), T::min)
    }

    /// `{x : f(x) >= t}`.
    pub fn level_set(&self, t: T) -> Subset {
        self.values.iter().enumerate().filter(|(_, &v)| v >= t).fold(Subset::EMPTY, |s, (i, _)| s.insert(i))
    }

    /// Distinct strictly positive values, ascending.
    pub fn positive_levels(&self) -> Vec<T> {
        let mut levels: Vec<T> = self.values.iter().copied().filter(|&v| v > T::zero()).collect();
        levels.sort_by(|a, b| a.partial_cmp(b).expect("values are finite"));
        levels.dedup();
        levels
    }
}

/// `f + a` pointwise, provided it stays within [0, 1].
///
/// Sums that exceed 1 by no more than the equality tolerance are clamped
/// to 1; anything larger is reported against the first offending point.
pub fn shift_function<T: Scalar>(f: &MeasurableFunction<T>, a: T) -> Result<MeasurableFunction<T>> {
    check_unit("a", a)?;
    let one = T::one();
    let mut values = Vec::with_capacity(f.values.len());
    for (label, &v) in f.space.labels.iter().zip(&f.values) {
        let shifted = v + a;
        if shifted > one + T::TOLERANCE {
            return Err(Error::ShiftOverflow { label: label.clone(), value: shifted.as_f64() });
        }
        values.push(shifted.min(one));
    }
    Ok(MeasurableFunction { space: f.space.clone(), values })
}

/// A capacity and a function on the same space, with the capacity axioms
/// already verified.
#[derive(Debug, Clone, PartialEq)]
pub struct Instance<T> {
    capacity: Capacity<T>,
    function: MeasurableFunction<T>,
}

impl<T: Scalar> Instance<T> {
    pub fn new(capacity: Capacity<T>, function: MeasurableFunction<T>) -> Result<Self> {
        if capacity.space != function.space {
            return Err(Error::SpaceMismatch);
        }
        let report = validate_capacity(&capacity);
        if !report.passed {
            return Err(Error::InvalidCapacity(report.summary()));
        }
        Ok(Self { capacity, function })
    }

    pub fn capacity(&self) -> &Capacity<T> {
        &self.capacity
    }

    pub fn function(&self) -> &MeasurableFunction<T> {
        &self.function
    }

    pub fn space(&self) -> &FiniteSpace {
        &self.capacity.space
    }

    /// Same capacity, function replaced by `f + a`.
    pub fn shifted(&self, a: T) -> Result<Self> {
        Ok(Self { capacity: self.capacity.clone(), function: shift_function(&self.function, a)? })
    }

    pub fn into_parts(self) -> (Capacity<T>, MeasurableFunction<T>) {
        (self.capacity, self.function)
    }
}

/// `mu({x : f(x) >= t})`.
pub fn level_set_measure<T: Scalar>(inst: &Instance<T>, t: T) -> Result<T> {
    check_unit("t", t)?;
    Ok(inst.capacity.measure(inst.function.level_set(t)))
}

/// Two-point instance whose level profile `t -> mu({f >= t})` is
/// 1 at `t = 0`, `b` on `(0, 1 - a]` and 0 on `(1 - a, 1]`.
///
/// `f = (1 - a, 0)`, `mu({x1}) = b`, `mu({x2}) = 0`. The shift `a = 0` is
/// rejected since translation by zero cannot fail.
pub fn witness_instance<T: Scalar>(a: T, b: T) -> Result<Instance<T>> {
    check_unit("a", a)?;
    check_unit("b", b)?;
    if a == T::zero() {
        return Err(Error::InvalidArgument("witness shift a must be positive".into()));
    }
    let (zero, one) = (T::zero(), T::one());
    let space = FiniteSpace::with_size(2)?;
    let capacity = Capacity::new(space.clone(), vec![zero, b, zero, one])?;
    let function = MeasurableFunction::new(space, vec![one - a, zero])?;
    Instance::new(capacity, function)
}
