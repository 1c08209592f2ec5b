//! Semicopulas (t-seminorms): construction, evaluation, lattice validation,
//! and distance to the Łukasiewicz t-norm.
//!
//! A semicopula is a map `S: [0,1]^2 -> [0,1]` that is non-decreasing in each
//! argument and has 1 as neutral element. Boundedness by `min` and the zero
//! annihilator follow from those two axioms.

use serde::{Deserialize, Serialize};

use crate::report::{Axiom, Location, ValidationReport, Violation};
use crate::scalar::check_unit;
use crate::{Error, Result, Scalar};

/// Sampled semicopula on the uniform lattice `{0, 1/r, ..., 1}^2`.
///
/// Interior evaluation is the step function taking the value of the nearest
/// lattice cell below the query point, so a monotone table stays monotone
/// and never exceeds its own samples. On the edges `x = 1` and `y = 1` the
/// samples are interpolated linearly instead.
#[derive(Debug, Clone, PartialEq)]
pub struct Table<T> {
    resolution: usize,
    // row-major: row = x step, column = y step
    values: Vec<T>,
}

impl<T: Scalar> Table<T> {
    pub fn new(resolution: usize, rows: Vec<Vec<T>>) -> Result<Self> {
        if resolution == 0 {
            return Err(Error::Structural("table resolution must be positive".into()));
        }
        let side = resolution + 1;
        if rows.len() != side {
            return Err(Error::Structural(format!(
                "table of resolution {resolution} needs {side} rows, got {}",
                rows.len()
            )));
        }
        let mut values = Vec::with_capacity(side * side);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != side {
                return Err(Error::Structural(format!("table row {i} has {} entries, expected {side}", row.len())));
            }
            for v in row {
                check_unit("table entry", v)?;
                values.push(v);
            }
        }
        Ok(Self { resolution, values })
    }

    pub fn resolution(&self) -> usize {
        self.resolution
    }

    pub fn get(&self, i: usize, j: usize) -> T {
        self.values[i * (self.resolution + 1) + j]
    }

    pub fn rows(&self) -> Vec<Vec<T>> {
        self.values.chunks(self.resolution + 1).map(<[T]>::to_vec).collect()
    }

    fn cell(&self, v: T) -> usize {
        let r = T::from_usize(self.resolution).expect("resolution");
        // lattice points k/r may land a few ulps below k after scaling
        let k = (v * r + T::TOLERANCE).floor().to_usize().unwrap_or(0);
        k.min(self.resolution)
    }

    fn lookup(&self, x: T, y: T) -> T {
        let one = T::one();
        let r = self.resolution;
        if x == one {
            return self.along_edge(y, |j| self.get(r, j));
        }
        if y == one {
            return self.along_edge(x, |i| self.get(i, r));
        }
        self.get(self.cell(x), self.cell(y))
    }

    // Linear interpolation along the x = 1 or y = 1 edge. For a table that
    // satisfies the axioms on its lattice this makes the neutral element
    // hold everywhere, and the interior steps stay below the edges.
    fn along_edge(&self, v: T, sample: impl Fn(usize) -> T) -> T {
        let r = T::from_usize(self.resolution).expect("resolution");
        let k = self.cell(v);
        let frac = v * r - T::from_usize(k).expect("cell");
        if k == self.resolution || frac <= T::TOLERANCE {
            return sample(k);
        }
        let (lo, hi) = (sample(k), sample(k + 1));
        lo + (hi - lo) * frac
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum SemicopulaKind<T> {
    /// `M(x, y) = min(x, y)`, giving the Sugeno integral.
    Min,
    /// `Π(x, y) = xy`, giving the Shilkret integral.
    Product,
    /// `S_L(x, y) = max(x + y - 1, 0)`.
    Lukasiewicz,
    /// `min(x, y)` on the boundary `max(x, y) = 1`, zero elsewhere.
    Drastic,
    /// `max(1 - ((1-x)^p + (1-y)^p)^(1/p), 0)`; equals `S_L` at `p = 1`.
    Yager {
        p: T,
    },
    Table(Table<T>),
}

/// An evaluable semicopula together with a display label.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "SpecDoc<T>", into = "SpecDoc<T>", bound = "T: Scalar")]
pub struct SemicopulaSpec<T> {
    kind: SemicopulaKind<T>,
    label: String,
}

impl<T: Scalar> SemicopulaSpec<T> {
    fn from_kind(kind: SemicopulaKind<T>) -> Self {
        let label = default_label(&kind);
        Self { kind, label }
    }

    pub fn min() -> Self {
        Self::from_kind(SemicopulaKind::Min)
    }

    pub fn product() -> Self {
        Self::from_kind(SemicopulaKind::Product)
    }

    pub fn lukasiewicz() -> Self {
        Self::from_kind(SemicopulaKind::Lukasiewicz)
    }

    pub fn drastic() -> Self {
        Self::from_kind(SemicopulaKind::Drastic)
    }

    pub fn yager(p: T) -> Result<Self> {
        if !(p.is_finite() && p > T::zero()) {
            return Err(Error::InvalidArgument(format!("Yager parameter must be positive and finite, got {p}")));
        }
        Ok(Self::from_kind(SemicopulaKind::Yager { p }))
    }

    pub fn table(table: Table<T>) -> Self {
        Self::from_kind(SemicopulaKind::Table(table))
    }

    /// Samples `f` on the lattice of the given resolution into a table.
    /// Sampled values must lie in [0, 1]; the axioms are not enforced here.
    pub fn from_fn(resolution: usize, f: impl Fn(T, T) -> T) -> Result<Self> {
        let rows = (0..=resolution)
            .map(|i| {
                let x = T::lattice(i, resolution);
                (0..=resolution).map(|j| f(x, T::lattice(j, resolution))).collect()
            })
            .collect();
        Ok(Self::table(Table::new(resolution, rows)?))
    }

    /// Looks up one of the parameter-free families by name.
    pub fn by_name(name: &str) -> Option<Self> {
        match name.to_ascii_lowercase().as_str() {
            "min" | "minimum" | "sugeno" => Some(Self::min()),
            "product" | "prod" | "shilkret" => Some(Self::product()),
            "lukasiewicz" | "łukasiewicz" => Some(Self::lukasiewicz()),
            "drastic" => Some(Self::drastic()),
            _ => None,
        }
    }

    /// Every closed-form family in the crate, with Yager at p = 0.5, 1, 2.
    pub fn catalog() -> Vec<Self> {
        let yager = |p: f64| Self::yager(T::lit(p)).expect("positive parameter");
        vec![Self::min(), Self::product(), Self::lukasiewicz(), Self::drastic(), yager(0.5), yager(1.0), yager(2.0)]
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn kind(&self) -> &SemicopulaKind<T> {
        &self.kind
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn is_lukasiewicz_family(&self) -> bool {
        match self.kind {
            SemicopulaKind::Lukasiewicz => true,
            SemicopulaKind::Yager { p } => p == T::one(),
            _ => false,
        }
    }

    /// `S(x, y)`, rejecting arguments outside [0, 1].
    pub fn eval(&self, x: T, y: T) -> Result<T> {
        check_unit("x", x)?;
        check_unit("y", y)?;
        Ok(self.apply(x, y))
    }

    /// `S(x, y)` for arguments already known to lie in [0, 1].
    ///
    /// Closed-form families return the neutral-element and annihilator
    /// values exactly on the boundary of the square.
    pub fn apply(&self, x: T, y: T) -> T {
        let (zero, one) = (T::zero(), T::one());
        if let SemicopulaKind::Table(table) = &self.kind {
            return table.lookup(x, y);
        }
        if x == one {
            return y;
        }
        if y == one {
            return x;
        }
        if x == zero || y == zero {
            return zero;
        }
        match &self.kind {
            SemicopulaKind::Min => x.min(y),
            SemicopulaKind::Product => x * y,
            SemicopulaKind::Lukasiewicz => lukasiewicz(x, y),
            // both coordinates are below one here
            SemicopulaKind::Drastic => zero,
            SemicopulaKind::Yager { p } => yager(*p, x, y),
            SemicopulaKind::Table(_) => unreachable!(),
        }
    }
}

#[inline]
pub(crate) fn lukasiewicz<T: Scalar>(x: T, y: T) -> T {
    // x + 1 - 1 is not always x in floating point
    if x == T::one() {
        return y;
    }
    if y == T::one() {
        return x;
    }
    (x + y - T::one()).max(T::zero())
}

fn yager<T: Scalar>(p: T, x: T, y: T) -> T {
    let one = T::one();
    if p == one {
        return lukasiewicz(x, y);
    }
    let s = (one - x).powf(p) + (one - y).powf(p);
    (one - s.powf(p.recip())).max(T::zero()).min(x.min(y))
}

fn default_label<T: Scalar>(kind: &SemicopulaKind<T>) -> String {
    match kind {
        SemicopulaKind::Min => "min".into(),
        SemicopulaKind::Product => "product".into(),
        SemicopulaKind::Lukasiewicz => "lukasiewicz".into(),
        SemicopulaKind::Drastic => "drastic".into(),
        SemicopulaKind::Yager { p } => format!("yager(p={p})"),
        SemicopulaKind::Table(t) => format!("table({})", t.resolution),
    }
}

fn check_resolution(resolution: usize) -> Result<()> {
    if resolution < 2 {
        return Err(Error::InvalidArgument(format!("lattice resolution must be at least 2, got {resolution}")));
    }
    Ok(())
}

/// Checks the semicopula axioms on the `(resolution + 1)^2` lattice.
///
/// Monotonicity is checked between lattice neighbours only. Passing is a
/// statement about the sampled points, not about the whole square.
pub fn validate_semicopula<T: Scalar>(spec: &SemicopulaSpec<T>, resolution: usize) -> Result<ValidationReport<T>> {
    check_resolution(resolution)?;
    let tol = T::TOLERANCE;
    let (zero, one) = (T::zero(), T::one());
    let grid: Vec<T> = (0..=resolution).map(|k| T::lattice(k, resolution)).collect();
    let side = grid.len();
    let values: Vec<T> = grid.iter().flat_map(|&x| grid.iter().map(move |&y| spec.apply(x, y))).collect();
    let at = |i: usize, j: usize| values[i * side + j];
    let point = |i: usize, j: usize| Location::Point { x: grid[i], y: grid[j] };

    let mut violations = Vec::new();
    let mut push = |axiom, location, observed, bound| violations.push(Violation { axiom, location, observed, bound });

    for i in 0..side {
        for j in 0..side {
            let (x, y, s) = (grid[i], grid[j], at(i, j));
            if !s.in_unit_interval() {
                push(Axiom::Range, point(i, j), s, s.max(zero).min(one));
            }
            if s > x.min(y) + tol {
                push(Axiom::BoundedByMin, point(i, j), s, x.min(y));
            }
            if i + 1 < side && at(i + 1, j) + tol < s {
                push(Axiom::Monotonicity, point(i + 1, j), at(i + 1, j), s);
            }
            if j + 1 < side && at(i, j + 1) + tol < s {
                push(Axiom::Monotonicity, point(i, j + 1), at(i, j + 1), s);
            }
        }
    }
    let last = side - 1;
    for (k, &v) in grid.iter().enumerate() {
        if !at(k, last).approx_eq(v) {
            push(Axiom::NeutralElement, point(k, last), at(k, last), v);
        }
        if !at(last, k).approx_eq(v) {
            push(Axiom::NeutralElement, point(last, k), at(last, k), v);
        }
        if !at(k, 0).approx_eq(zero) {
            push(Axiom::ZeroAnnihilator, point(k, 0), at(k, 0), zero);
        }
        if !at(0, k).approx_eq(zero) {
            push(Axiom::ZeroAnnihilator, point(0, k), at(0, k), zero);
        }
    }
    Ok(ValidationReport::from_violations(violations, Some(resolution)))
}

/// Pointwise distance `|S(c, b) - S_L(c, b)|` at one lattice point.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(bound = "T: Scalar")]
pub struct LukasiewiczGap<T> {
    pub gap: T,
    pub c: T,
    pub b: T,
}

/// All lattice deviations from `S_L`, in lexicographic `(c, b)` order.
pub(crate) fn lukasiewicz_deviations<T: Scalar>(
    spec: &SemicopulaSpec<T>,
    resolution: usize,
) -> Result<Vec<LukasiewiczGap<T>>> {
    check_resolution(resolution)?;
    let mut out = Vec::with_capacity((resolution + 1) * (resolution + 1));
    for i in 0..=resolution {
        let c = T::lattice(i, resolution);
        for j in 0..=resolution {
            let b = T::lattice(j, resolution);
            let gap = (spec.apply(c, b) - lukasiewicz(c, b)).abs();
            out.push(LukasiewiczGap { gap, c, b });
        }
    }
    Ok(out)
}

/// Largest lattice deviation from the Łukasiewicz t-norm.
///
/// Ties go to the lexicographically smallest `(c, b)`.
pub fn lukasiewicz_gap<T: Scalar>(spec: &SemicopulaSpec<T>, resolution: usize) -> Result<LukasiewiczGap<T>> {
    let deviations = lukasiewicz_deviations(spec, resolution)?;
    let mut best = deviations[0];
    for d in &deviations[1..] {
        if d.gap > best.gap {
            best = *d;
        }
    }
    Ok(best)
}

// ---------------------------------------------------------------------------
// JSON descriptor

#[derive(Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", bound = "T: Scalar")]
enum KindDoc<T> {
    Min,
    Product,
    Lukasiewicz,
    Drastic,
    Yager { p: T },
    Table { resolution: usize, values: Vec<Vec<T>> },
}

#[derive(Serialize, Deserialize)]
#[serde(bound = "T: Scalar")]
struct SpecDoc<T> {
    #[serde(flatten)]
    kind: KindDoc<T>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    label: Option<String>,
}

impl<T: Scalar> TryFrom<SpecDoc<T>> for SemicopulaSpec<T> {
    type Error = Error;

    fn try_from(doc: SpecDoc<T>) -> Result<Self> {
        let spec = match doc.kind {
            KindDoc::Min => Self::min(),
            KindDoc::Product => Self::product(),
            KindDoc::Lukasiewicz => Self::lukasiewicz(),
            KindDoc::Drastic => Self::drastic(),
            KindDoc::Yager { p } => Self::yager(p)?,
            KindDoc::Table { resolution, values } => Self::table(Table::new(resolution, values)?),
        };
        Ok(match doc.label {
            Some(label) => spec.with_label(label),
            None => spec,
        })
    }
}

impl<T: Scalar> From<SemicopulaSpec<T>> for SpecDoc<T> {
    fn from(spec: SemicopulaSpec<T>) -> Self {
        let custom = spec.label != default_label(&spec.kind);
        let kind = match spec.kind {
            SemicopulaKind::Min => KindDoc::Min,
            SemicopulaKind::Product => KindDoc::Product,
            SemicopulaKind::Lukasiewicz => KindDoc::Lukasiewicz,
            SemicopulaKind::Drastic => KindDoc::Drastic,
            SemicopulaKind::Yager { p } => KindDoc::Yager { p },
            SemicopulaKind::Table(t) => KindDoc::Table { resolution: t.resolution, values: t.rows() },
        };
        SpecDoc { kind, label: custom.then_some(spec.label) }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type S = SemicopulaSpec<f64>;

    #[test]
    fn closed_forms() {
        assert!((S::lukasiewicz().eval(0.7, 0.6).unwrap() - 0.3).abs() <= 1e-9);
        assert_eq!(S::product().eval(0.5, 1.0).unwrap(), 0.5);
        assert_eq!(S::drastic().eval(0.5, 0.5).unwrap(), 0.0);
        assert_eq!(S::drastic().eval(1.0, 0.3).unwrap(), 0.3);
        assert_eq!(S::min().eval(0.2, 0.9).unwrap(), 0.2);
        let y2 = S::yager(2.0).unwrap().eval(0.5, 0.5).unwrap();
        assert!((y2 - (1.0 - 0.5f64.sqrt())).abs() < 1e-12);
    }

    #[test]
    fn eval_rejects_out_of_range() {
        assert!(matches!(S::min().eval(1.5, 0.2), Err(Error::OutOfUnitInterval { name: "x", .. })));
        assert!(S::min().eval(0.2, -0.1).is_err());
        assert!(S::min().eval(f64::NAN, 0.2).is_err());
    }

    #[test]
    fn yager_parameter_must_be_positive() {
        assert!(S::yager(0.0).is_err());
        assert!(S::yager(-1.0).is_err());
        assert!(S::yager(f64::INFINITY).is_err());
    }

    #[test]
    fn table_shape_is_checked() {
        assert!(Table::<f64>::new(2, vec![vec![0.0; 3]; 2]).is_err());
        assert!(Table::<f64>::new(2, vec![vec![0.0; 2]; 3]).is_err());
        assert!(Table::<f64>::new(1, vec![vec![0.0, 2.0], vec![0.0, 1.0]]).is_err());
    }

    #[test]
    fn table_uses_nearest_below_cell() {
        let t = S::from_fn(4, |x, y| x * y).unwrap();
        // 0.6 -> cell 2 (0.5), 0.99 -> cell 3 (0.75)
        assert_eq!(t.eval(0.6, 0.99).unwrap(), 0.375);
        assert_eq!(t.eval(1.0, 1.0).unwrap(), 1.0);
        assert_eq!(t.eval(0.25, 1.0).unwrap(), 0.25);
    }

    #[test]
    fn table_cell_survives_rounding_below_lattice_point() {
        let t = S::from_fn(10, |x, y| x.min(y)).unwrap();
        let x = 1.0 - 0.9; // 0.09999999999999998, scales to just under 1
        assert!(x * 10.0 < 1.0);
        assert_eq!(t.eval(x, 1.0).unwrap(), 0.1);
    }

    #[test]
    fn table_edges_interpolate() {
        let t = S::from_fn(4, |x, y| x * y).unwrap();
        assert!((t.eval(1.0, 0.3).unwrap() - 0.3).abs() <= 1e-12);
        assert!((t.eval(0.6, 1.0).unwrap() - 0.6).abs() <= 1e-12);
        assert_eq!(t.eval(1.0, 0.75).unwrap(), 0.75);
        // a valid lattice table is a semicopula off the lattice too
        assert!(validate_semicopula(&t, 60).unwrap().passed);
    }

    #[test]
    fn builtin_families_pass_validation() {
        for spec in S::catalog() {
            let report = validate_semicopula(&spec, 64).unwrap();
            assert!(report.passed, "{}: {}", spec.label(), report.summary());
            assert_eq!(report.grid_resolution, Some(64));
        }
    }

    #[test]
    fn projection_violates_neutral_element() {
        let proj = S::from_fn(64, |x, _| x).unwrap();
        let report = validate_semicopula(&proj, 64).unwrap();
        assert!(!report.passed);
        let hit =
            report.violations_of(Axiom::NeutralElement).find(|v| v.location == Location::Point { x: 1.0, y: 0.5 });
        let hit = hit.expect("neutral-element violation at (1, 0.5)");
        assert_eq!(hit.observed, 1.0);
        assert_eq!(hit.bound, 0.5);
    }

    #[test]
    fn max_violates_bound_by_min() {
        let max = S::from_fn(64, |x, y| x.max(y)).unwrap();
        let report = validate_semicopula(&max, 64).unwrap();
        let hit = report
            .violations_of(Axiom::BoundedByMin)
            .find(|v| v.location == Location::Point { x: 0.25, y: 0.75 })
            .expect("bound violation at (0.25, 0.75)");
        assert_eq!(hit.observed, 0.75);
        assert_eq!(hit.bound, 0.25);
    }

    #[test]
    fn decreasing_table_violates_monotonicity() {
        let bad = S::from_fn(4, |x, y| {
            if x == 1.0 {
                y
            } else if y == 1.0 {
                x
            } else {
                (0.5 - x).max(0.0).min(x.min(y))
            }
        })
        .unwrap();
        let report = validate_semicopula(&bad, 4).unwrap();
        assert!(report.violations_of(Axiom::Monotonicity).count() > 0);
    }

    #[test]
    fn validation_requires_resolution_two() {
        assert!(validate_semicopula(&S::min(), 1).is_err());
        assert!(lukasiewicz_gap(&S::min(), 0).is_err());
    }

    #[test]
    fn gap_examples() {
        let g = lukasiewicz_gap(&S::lukasiewicz(), 64).unwrap();
        assert_eq!(g.gap, 0.0);
        assert_eq!((g.c, g.b), (0.0, 0.0));

        let g = lukasiewicz_gap(&S::min(), 2).unwrap();
        assert_eq!((g.gap, g.c, g.b), (0.5, 0.5, 0.5));

        let g = lukasiewicz_gap(&S::product(), 64).unwrap();
        assert!((g.gap - 0.25).abs() <= 1e-9);
        assert_eq!((g.c, g.b), (0.5, 0.5));
    }

    #[test]
    fn yager_one_is_lukasiewicz() {
        let y1 = S::yager(1.0).unwrap();
        assert!(y1.is_lukasiewicz_family());
        for r in [2, 3, 7, 64, 100] {
            assert_eq!(lukasiewicz_gap(&y1, r).unwrap().gap, 0.0);
            assert_eq!(lukasiewicz_gap(&S::lukasiewicz(), r).unwrap().gap, 0.0);
        }
    }

    #[test]
    fn descriptor_json() {
        let s: S = serde_json::from_str(r#"{"kind":"lukasiewicz"}"#).unwrap();
        assert_eq!(s, S::lukasiewicz());
        assert_eq!(serde_json::to_string(&s).unwrap(), r#"{"kind":"lukasiewicz"}"#);

        let y: S = serde_json::from_str(r#"{"kind":"yager","p":2.0}"#).unwrap();
        assert_eq!(y, S::yager(2.0).unwrap());

        let t: S = serde_json::from_str(r#"{"kind":"table","resolution":2,"values":[[0,0,0],[0,0.25,0.5],[0,0.5,1]]}"#)
            .unwrap();
        assert_eq!(t.eval(0.5, 0.5).unwrap(), 0.25);
        let back: S = serde_json::from_str(&serde_json::to_string(&t).unwrap()).unwrap();
        assert_eq!(back, t);

        let labelled = S::min().with_label("sugeno");
        let json = serde_json::to_string(&labelled).unwrap();
        assert_eq!(json, r#"{"kind":"min","label":"sugeno"}"#);

        assert!(serde_json::from_str::<S>(r#"{"kind":"yager","p":-1}"#).is_err());
        assert!(serde_json::from_str::<S>(r#"{"kind":"hamacher"}"#).is_err());
        assert!(serde_json::from_str::<S>(r#"{"kind":"table","resolution":2,"values":[[0]]}"#).is_err());
    }

    #[test]
    fn works_in_single_precision() {
        let s = SemicopulaSpec::<f32>::lukasiewicz();
        assert_eq!(s.eval(0.75, 0.5).unwrap(), 0.25);
        assert!(validate_semicopula(&SemicopulaSpec::<f32>::yager(2.0).unwrap(), 32).unwrap().passed);
    }
}
