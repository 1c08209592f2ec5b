//! Scalar abstraction shared by every evaluator in the crate.

use std::fmt::{Debug, Display};

use num_traits::{Float, FromPrimitive};
use serde::de::DeserializeOwned;
use serde::Serialize;

/// Floating-point type the integrals and checkers are generic over.
///
/// Two tolerances are carried per type: `TOLERANCE` is the absolute slack
/// for equality assertions and `VIOLATION_THRESHOLD` is the residual
/// magnitude above which a translation-invariance failure is declared.
pub trait Scalar:
    Float + FromPrimitive + Debug + Display + Default + Send + Sync + Serialize + DeserializeOwned + 'static
{
    const TOLERANCE: Self;
    const VIOLATION_THRESHOLD: Self;

    /// Converts an `f64` literal. Panics only on non-representable input,
    /// which never happens for the finite constants used in this crate.
    #[inline]
    fn lit(v: f64) -> Self {
        Self::from_f64(v).expect("finite literal")
    }

    /// `k / steps`, the k-th point of the uniform lattice on [0, 1].
    #[inline]
    fn lattice(k: usize, steps: usize) -> Self {
        if k == steps {
            return Self::one();
        }
        let k = Self::from_usize(k).expect("lattice index");
        let steps = Self::from_usize(steps).expect("lattice size");
        k / steps
    }

    #[inline]
    fn approx_eq(self, other: Self) -> bool {
        (self - other).abs() <= Self::TOLERANCE
    }

    #[inline]
    fn in_unit_interval(self) -> bool {
        self >= Self::zero() && self <= Self::one()
    }

    /// Lossy view used in error messages.
    #[inline]
    fn as_f64(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Scalar for f64 {
    const TOLERANCE: f64 = 1e-9;
    const VIOLATION_THRESHOLD: f64 = 1e-6;
}

// f32 carries ~7 significant digits; the double-precision tolerances would
// be below its rounding noise.
impl Scalar for f32 {
    const TOLERANCE: f32 = 1e-5;
    const VIOLATION_THRESHOLD: f32 = 1e-4;
}

/// Rejects values outside [0, 1] (NaN included).
pub(crate) fn check_unit<T: Scalar>(name: &'static str, value: T) -> crate::Result<T> {
    if value.in_unit_interval() {
        Ok(value)
    } else {
        Err(crate::Error::OutOfUnitInterval { name, value: value.as_f64() })
    }
}
