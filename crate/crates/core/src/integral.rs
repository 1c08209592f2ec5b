//! The smallest semicopula-based integral
//!
//! ```text
//! I_S(mu, f) = sup_{t in [0,1]} S(t, mu({f >= t}))
//! ```
//!
//! evaluated exactly on finite instances. The level measure
//! `t -> mu({f >= t})` is a step function, constant on each interval
//! `(v_{k-1}, v_k]` between consecutive distinct values of `f`. Because `S`
//! is non-decreasing in its first argument, the supremum over such an
//! interval sits at its right end, so the supremum over `[0, 1]` reduces to
//! `max_k S(v_k, mu({f >= v_k}))` over the distinct positive values `v_k`.
//! Thresholds above `max f` see the empty set and contribute `S(t, 0) = 0`.

use serde::{Deserialize, Serialize};

use crate::capacity::{Capacity, Instance, MeasurableFunction};
use crate::semicopula::SemicopulaSpec;
use crate::{Error, Result, Scalar};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(bound = "T: Scalar")]
pub struct IntegralResult<T> {
    pub value: T,
    #[serde(rename = "argmax_t")]
    pub argmax_threshold: T,
    #[serde(rename = "level")]
    pub level_at_argmax: T,
}

/// Exact `I_S(mu, f)`.
///
/// The maximizing threshold is the smallest candidate attaining the
/// maximum. For `f ≡ 0` the result is `0` at `t* = 0` with level `mu(X)`.
pub fn seminormed_integral<T: Scalar>(semicopula: &SemicopulaSpec<T>, inst: &Instance<T>) -> IntegralResult<T> {
    integrate_parts(semicopula, inst.capacity(), inst.function())
}

pub(crate) fn integrate_parts<T: Scalar>(
    semicopula: &SemicopulaSpec<T>,
    capacity: &Capacity<T>,
    function: &MeasurableFunction<T>,
) -> IntegralResult<T> {
    let mut best = IntegralResult {
        value: T::zero(),
        argmax_threshold: T::zero(),
        level_at_argmax: capacity.measure(capacity.space().full()),
    };
    let mut first = true;
    for t in function.positive_levels() {
        let level = capacity.measure(function.level_set(t));
        let value = semicopula.apply(t, level);
        if first || value > best.value {
            best = IntegralResult { value, argmax_threshold: t, level_at_argmax: level };
            first = false;
        }
    }
    best
}

/// Sugeno integral, `S = min`.
pub fn sugeno_integral<T: Scalar>(inst: &Instance<T>) -> IntegralResult<T> {
    seminormed_integral(&SemicopulaSpec::min(), inst)
}

/// Shilkret integral, `S = product`.
pub fn shilkret_integral<T: Scalar>(inst: &Instance<T>) -> IntegralResult<T> {
    seminormed_integral(&SemicopulaSpec::product(), inst)
}

/// Brute-force supremum over `{0, step, 2 step, ..., 1}` together with the
/// exact values taken by `f`.
///
/// The values of `f` are included so semicopulas with jumps (drastic,
/// tables) are sampled at the true maximizers. Independent of the
/// threshold reduction used by [`seminormed_integral`].
pub fn grid_oracle<T: Scalar>(semicopula: &SemicopulaSpec<T>, inst: &Instance<T>, step: T) -> Result<T> {
    if !(step > T::zero() && step <= T::lit(0.01)) {
        return Err(Error::InvalidArgument(format!("oracle step must lie in (0, 0.01], got {step}")));
    }
    let capacity = inst.capacity();
    let function = inst.function();
    let sample = |t: T| semicopula.apply(t, capacity.measure(function.level_set(t)));

    let one = T::one();
    let mut best = T::zero();
    let mut i = 0usize;
    loop {
        let t = T::from_usize(i).expect("grid index") * step;
        if t >= one {
            break;
        }
        best = best.max(sample(t));
        i += 1;
    }
    best = best.max(sample(one));
    for &v in function.values() {
        best = best.max(sample(v));
    }
    Ok(best)
}
