//! Translation invariance `I(mu, f + a) = I(mu, f) + a`.
//!
//! On the two-point witness with level profile `(1, b, 0)` and plateau end
//! `c = 1 - a`, both sides collapse to the scalar equation
//!
//! ```text
//! a ∨ S(1, b) = S(1 - a, b) + a
//! ```
//!
//! whose residual equals `S_L(c, b) - S(c, b)` for every semicopula. Any
//! lattice point where `S` departs from the Łukasiewicz t-norm therefore
//! yields a concrete counterexample, and [`synthesize_counterexample`] builds
//! one from the largest such departure.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::capacity::{random_capacity, random_function, witness_instance, FiniteSpace, Instance, FUNCTION_LATTICE};
use crate::integral::{integrate_parts, seminormed_integral};
use crate::scalar::check_unit;
use crate::semicopula::{lukasiewicz_deviations, SemicopulaSpec};
use crate::{Error, Result, Scalar};

/// Both sides of the translation equation on one instance.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(bound = "T: Scalar")]
pub struct TranslationResidual<T> {
    /// `I(mu, f + a)`.
    pub lhs: T,
    /// `I(mu, f) + a`.
    pub rhs: T,
    pub gap: T,
    /// `a ∨ max_k S(v_k + a, mu({f >= v_k}))` over the positive values
    /// `v_k` of `f`; agrees with `lhs` for every semicopula.
    pub decomposed_lhs: T,
}

/// `I(mu, f + a) - (I(mu, f) + a)`, cross-checked against the threshold
/// decomposition of the left-hand side.
///
/// Fails if `f + a` leaves [0, 1], or if the two routes to the left-hand
/// side disagree by more than the tolerance (possible only for tables that
/// break the neutral element).
pub fn translation_residual_instance<T: Scalar>(
    semicopula: &SemicopulaSpec<T>,
    inst: &Instance<T>,
    a: T,
) -> Result<TranslationResidual<T>> {
    let shifted = crate::capacity::shift_function(inst.function(), a)?;
    let capacity = inst.capacity();
    let lhs = integrate_parts(semicopula, capacity, &shifted).value;
    let rhs = integrate_parts(semicopula, capacity, inst.function()).value + a;

    let function = inst.function();
    let decomposed_lhs = function
        .positive_levels()
        .into_iter()
        .map(|v| semicopula.apply((v + a).min(T::one()), capacity.measure(function.level_set(v))))
        .fold(a, T::max);
    if !lhs.approx_eq(decomposed_lhs) {
        return Err(Error::DecompositionMismatch { direct: lhs.as_f64(), decomposed: decomposed_lhs.as_f64() });
    }
    Ok(TranslationResidual { lhs, rhs, gap: lhs - rhs, decomposed_lhs })
}

/// `(a ∨ S(1, b)) - (S(1 - a, b) + a)`.
pub fn functional_residual<T: Scalar>(semicopula: &SemicopulaSpec<T>, a: T, b: T) -> Result<T> {
    check_unit("a", a)?;
    check_unit("b", b)?;
    let one = T::one();
    Ok(a.max(semicopula.apply(one, b)) - (semicopula.apply(one - a, b) + a))
}

/// A counterexample certificate to translation invariance.
///
/// Witnesses from the lattice search carry the plateau measure `b` of the
/// two-point instance; witnesses found by the random sweep have `b = None`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(bound = "T: Scalar")]
pub struct InvarianceWitness<T> {
    pub a: T,
    pub b: Option<T>,
    /// `1 - a`.
    pub c: T,
    pub instance: Instance<T>,
    pub lhs: T,
    pub rhs: T,
    pub gap: T,
    pub semicopula: SemicopulaSpec<T>,
}

/// Recomputation of a witness from its instance and descriptor.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(bound = "T: Scalar")]
pub struct WitnessCheck<T> {
    pub lhs: T,
    pub rhs: T,
    pub gap: T,
    pub reproduced: bool,
}

/// Recomputes both sides of a certificate with the integral evaluator alone.
pub fn verify_witness<T: Scalar>(witness: &InvarianceWitness<T>) -> Result<WitnessCheck<T>> {
    let shifted = witness.instance.shifted(witness.a)?;
    let lhs = seminormed_integral(&witness.semicopula, &shifted).value;
    let rhs = seminormed_integral(&witness.semicopula, &witness.instance).value + witness.a;
    let gap = lhs - rhs;
    let reproduced = lhs.approx_eq(witness.lhs)
        && rhs.approx_eq(witness.rhs)
        && gap.approx_eq(witness.gap)
        && witness.c.approx_eq(T::one() - witness.a)
        && witness.gap.approx_eq(witness.lhs - witness.rhs);
    Ok(WitnessCheck { lhs, rhs, gap, reproduced })
}

/// Builds a counterexample from the largest lattice departure of `S` from
/// `S_L`, or `None` when `S` matches `S_L` at every lattice point.
///
/// Candidates are ranked by descending `|S - S_L|`, ties by smallest
/// `(c, b)`. Points with `c = 1` are skipped since they force `a = 0`.
pub fn synthesize_counterexample<T: Scalar>(
    semicopula: &SemicopulaSpec<T>,
    resolution: usize,
) -> Result<Option<InvarianceWitness<T>>> {
    let one = T::one();
    let mut candidates: Vec<_> = lukasiewicz_deviations(semicopula, resolution)?
        .into_iter()
        .filter(|d| d.c < one && d.gap > T::TOLERANCE)
        .collect();
    // stable: equal gaps keep lexicographic (c, b) order
    candidates.sort_by(|x, y| y.gap.partial_cmp(&x.gap).expect("finite gaps"));
    let Some(best) = candidates.first() else {
        return Ok(None);
    };
    let a = one - best.c;
    let instance = witness_instance(a, best.b)?;
    let residual = translation_residual_instance(semicopula, &instance, a)?;
    Ok(Some(InvarianceWitness {
        a,
        b: Some(best.b),
        c: one - a,
        instance,
        lhs: residual.lhs,
        rhs: residual.rhs,
        gap: residual.gap,
        semicopula: semicopula.clone(),
    }))
}

/// How hard [`check_invariance`] looks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SamplingPlan {
    /// Lattice resolution for the counterexample search.
    pub resolution: usize,
    /// Random instances in the confirmation sweep.
    pub samples: usize,
    pub seed: u64,
}

impl Default for SamplingPlan {
    fn default() -> Self {
        Self { resolution: 64, samples: 1000, seed: 1 }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(bound = "T: Scalar")]
pub struct InvarianceVerdict<T> {
    pub invariant: bool,
    pub witness: Option<InvarianceWitness<T>>,
    /// Random instances evaluated in the confirmation sweep. The sweep is
    /// supplementary evidence; a failure is only ever established by a
    /// witness.
    pub samples_checked: usize,
    /// Largest `|gap|` observed across both phases.
    pub max_residual_seen: T,
    pub lattice_resolution: usize,
}

/// Decides translation invariance of `S` in two phases.
///
/// 1. Lattice synthesis: a witness whose `|gap|` exceeds the violation
///    threshold settles the question negatively.
/// 2. Random sweep: `plan.samples` seeded instances (1 to 6 points,
///    functions on the 1/64 lattice, shifts on the 1/64 lattice within the
///    available headroom). Any residual above the threshold also yields a
///    witness.
///
/// `invariant = true` only when both phases pass.
pub fn check_invariance<T: Scalar>(semicopula: &SemicopulaSpec<T>, plan: SamplingPlan) -> Result<InvarianceVerdict<T>> {
    let mut max_residual = T::zero();
    let verdict = |invariant, witness, samples_checked, max_residual_seen| InvarianceVerdict {
        invariant,
        witness,
        samples_checked,
        max_residual_seen,
        lattice_resolution: plan.resolution,
    };

    if let Some(w) = synthesize_counterexample(semicopula, plan.resolution)? {
        max_residual = w.gap.abs();
        if w.gap.abs() > T::VIOLATION_THRESHOLD {
            return Ok(verdict(false, Some(w), 0, max_residual));
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(plan.seed);
    let steps = T::from_usize(FUNCTION_LATTICE).expect("lattice size");
    for i in 0..plan.samples {
        let n = rng.gen_range(1..=6);
        let space = FiniteSpace::with_size(n)?;
        let capacity = random_capacity(&space, rng.gen());
        let top = T::lattice(rng.gen_range(0..=FUNCTION_LATTICE), FUNCTION_LATTICE);
        let function = random_function(&space, rng.gen(), top)?;
        let used = (function.max_value() * steps).round().to_usize().expect("lattice index");
        let a = T::lattice(rng.gen_range(0..=FUNCTION_LATTICE - used), FUNCTION_LATTICE);

        let instance = Instance::new(capacity, function)?;
        let residual = translation_residual_instance(semicopula, &instance, a)?;
        max_residual = max_residual.max(residual.gap.abs());
        if residual.gap.abs() > T::VIOLATION_THRESHOLD {
            let witness = InvarianceWitness {
                a,
                b: None,
                c: T::one() - a,
                instance,
                lhs: residual.lhs,
                rhs: residual.rhs,
                gap: residual.gap,
                semicopula: semicopula.clone(),
            };
            return Ok(verdict(false, Some(witness), i + 1, max_residual));
        }
    }
    Ok(verdict(true, None, plan.samples, max_residual))
}

#[cfg(test)]
mod tests {
    use super::*;

    type S = SemicopulaSpec<f64>;

    #[test]
    fn lukasiewicz_witness_residual() {
        let w = witness_instance(0.5, 0.5).unwrap();
        let r = translation_residual_instance(&S::lukasiewicz(), &w, 0.5).unwrap();
        assert!((r.lhs - 0.5).abs() <= 1e-9);
        assert!((r.rhs - 0.5).abs() <= 1e-9);
        assert!(r.gap.abs() <= 1e-9);
    }

    #[test]
    fn product_witness_residual() {
        let w = witness_instance(0.5, 0.5).unwrap();
        let r = translation_residual_instance(&S::product(), &w, 0.5).unwrap();
        assert!((r.lhs - 0.5).abs() <= 1e-9);
        assert!((r.rhs - 0.75).abs() <= 1e-9);
        assert!((r.gap + 0.25).abs() <= 1e-9);
        assert_eq!(r.lhs, r.decomposed_lhs);
    }

    #[test]
    fn zero_shift_is_tautological() {
        let space = FiniteSpace::with_size(4).unwrap();
        let inst = Instance::new(random_capacity(&space, 3), random_function(&space, 4, 1.0).unwrap()).unwrap();
        for s in S::catalog() {
            assert_eq!(translation_residual_instance(&s, &inst, 0.0).unwrap().gap, 0.0);
        }
    }

    #[test]
    fn overflowing_shift_is_rejected() {
        let w = witness_instance(0.5, 0.5).unwrap();
        assert!(matches!(translation_residual_instance(&S::min(), &w, 0.75), Err(Error::ShiftOverflow { .. })));
    }

    #[test]
    fn functional_residual_examples() {
        for (a, b) in [(0.1, 0.9), (0.5, 0.5), (0.9, 0.1), (1.0, 0.0), (0.0, 1.0)] {
            assert!(functional_residual(&S::lukasiewicz(), a, b).unwrap().abs() <= 1e-9);
        }
        assert!((functional_residual(&S::product(), 0.5, 0.5).unwrap() + 0.25).abs() <= 1e-9);
        assert!((functional_residual(&S::min(), 0.5, 0.5).unwrap() + 0.5).abs() <= 1e-9);
        assert!(functional_residual(&S::min(), 1.5, 0.5).is_err());
    }

    #[test]
    fn synthesis_examples() {
        assert!(synthesize_counterexample(&S::lukasiewicz(), 64).unwrap().is_none());

        let w = synthesize_counterexample(&S::product(), 64).unwrap().unwrap();
        assert_eq!((w.a, w.b, w.c), (0.5, Some(0.5), 0.5));
        assert!((w.gap + 0.25).abs() <= 1e-9);

        let w = synthesize_counterexample(&S::yager(2.0).unwrap(), 64).unwrap().unwrap();
        assert!(w.gap.abs() >= 0.05);
    }

    #[test]
    fn synthesis_skips_unit_plateau_end() {
        // agrees with S_L everywhere except on the c = 1 row
        let odd = S::from_fn(4, |x, y| if x == 1.0 { y * 0.5 } else { (x + y - 1.0).max(0.0) }).unwrap();
        assert!(synthesize_counterexample(&odd, 4).unwrap().is_none());
    }

    #[test]
    fn witness_gap_matches_functional_residual() {
        for s in S::catalog() {
            if let Some(w) = synthesize_counterexample(&s, 64).unwrap() {
                let fr = functional_residual(&s, w.a, w.b.unwrap()).unwrap();
                assert!((w.gap - fr).abs() <= 1e-9, "{}", s.label());
            }
        }
    }

    #[test]
    fn verify_detects_tampering() {
        let mut w = synthesize_counterexample(&S::min(), 64).unwrap().unwrap();
        assert!(verify_witness(&w).unwrap().reproduced);
        w.gap = 0.0;
        assert!(!verify_witness(&w).unwrap().reproduced);
    }

    #[test]
    fn check_examples() {
        let plan = SamplingPlan { resolution: 64, samples: 200, seed: 1 };
        let v = check_invariance(&S::lukasiewicz(), plan).unwrap();
        assert!(v.invariant);
        assert_eq!(v.samples_checked, 200);
        assert!(v.max_residual_seen <= 1e-9);

        let v = check_invariance(&S::min(), plan).unwrap();
        assert!(!v.invariant);
        let w = v.witness.unwrap();
        assert_eq!((w.a, w.b), (0.5, Some(0.5)));
        assert!((w.gap + 0.5).abs() <= 1e-9);
        assert!((w.lhs - 0.5).abs() <= 1e-9 && (w.rhs - 1.0).abs() <= 1e-9);

        let v = check_invariance(&S::drastic(), SamplingPlan { samples: 0, ..plan }).unwrap();
        assert!(!v.invariant);
    }

    #[test]
    fn random_sweep_catches_what_a_coarse_lattice_misses() {
        // equals S_L on the 2-lattice, departs between lattice points
        let s = S::from_fn(4, |x, y| if x == 0.5 && y == 0.75 { 0.5 } else { (x + y - 1.0).max(0.0) }).unwrap();
        assert!(synthesize_counterexample(&s, 2).unwrap().is_none());
        let v = check_invariance(&s, SamplingPlan { resolution: 2, samples: 2000, seed: 11 }).unwrap();
        assert!(!v.invariant, "max residual {}", v.max_residual_seen);
        let w = v.witness.unwrap();
        assert_eq!(w.b, None);
        assert!(verify_witness(&w).unwrap().reproduced);
    }
}
