//! Axiom-violation reports shared by semicopula and capacity validation.

use serde::{Deserialize, Serialize};

use crate::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Axiom {
    /// S(x, 1) = x and S(1, y) = y.
    NeutralElement,
    /// S(x, y) <= min(x, y).
    BoundedByMin,
    /// Non-decreasing in each coordinate.
    Monotonicity,
    /// S(x, 0) = 0 = S(0, x).
    ZeroAnnihilator,
    /// Value lies in [0, 1].
    Range,
    /// mu(empty) = 0.
    EmptySet,
    /// mu(X) = 1.
    FullSet,
    /// A subset of B implies mu(A) <= mu(B).
    SetMonotonicity,
}

/// Where a violation was observed.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "at", rename_all = "kebab-case", bound = "T: Scalar")]
pub enum Location<T> {
    Point { x: T, y: T },
    Subset { mask: u32, key: String },
    Inclusion { subset: String, superset: String },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(bound = "T: Scalar")]
pub struct Violation<T> {
    pub axiom: Axiom,
    pub location: Location<T>,
    pub observed: T,
    /// The value the observation should have equalled or stayed within.
    pub bound: T,
}

/// Outcome of checking a semicopula or a capacity against its axioms.
///
/// Semicopula reports are lattice certificates: the axioms are checked only
/// at the `(grid_resolution + 1)^2` sampled points. Capacity reports are
/// exhaustive over the power set and carry no resolution.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(bound = "T: Scalar")]
pub struct ValidationReport<T> {
    pub passed: bool,
    pub violations: Vec<Violation<T>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub grid_resolution: Option<usize>,
}

impl<T: Scalar> ValidationReport<T> {
    pub(crate) fn from_violations(violations: Vec<Violation<T>>, grid_resolution: Option<usize>) -> Self {
        Self { passed: violations.is_empty(), violations, grid_resolution }
    }

    pub fn violations_of(&self, axiom: Axiom) -> impl Iterator<Item = &Violation<T>> {
        self.violations.iter().filter(move |v| v.axiom == axiom)
    }

    /// One-line human summary, used in error messages.
    pub fn summary(&self) -> String {
        if self.passed {
            return "all axioms hold".to_string();
        }
        let first = &self.violations[0];
        format!(
            "{} violation(s); first: {:?} at {:?} (observed {}, bound {})",
            self.violations.len(),
            first.axiom,
            first.location,
            first.observed,
            first.bound
        )
    }
}
