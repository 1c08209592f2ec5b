//! Exact evaluation of the smallest semicopula-based (seminormed) integral
//! `I_S(mu, f) = sup_t S(t, mu({f >= t}))` on finite capacity spaces, and a
//! checker for the translation equation `I(mu, f + a) = I(mu, f) + a`,
//! which holds for every instance exactly when `S` is the Łukasiewicz
//! t-norm. For any other semicopula the checker produces a re-verifiable
//! counterexample certificate.
//!
//! Everything is generic over the [`Scalar`] type (`f64` or `f32`); the
//! aliases below fix it to `f64`.

pub mod capacity;
mod error;
pub mod integral;
pub mod invariance;
pub mod report;
mod scalar;
pub mod semicopula;

pub use capacity::{
    level_set_measure, random_capacity, random_function, shift_function, validate_capacity, witness_instance, Capacity,
    CapacityDoc, FiniteSpace, Instance, InstanceDoc, MeasurableFunction, Subset,
};
pub use error::{Error, Result};
pub use integral::{grid_oracle, seminormed_integral, shilkret_integral, sugeno_integral, IntegralResult};
pub use invariance::{
    check_invariance, functional_residual, synthesize_counterexample, translation_residual_instance, verify_witness,
    InvarianceVerdict, InvarianceWitness, SamplingPlan, TranslationResidual, WitnessCheck,
};
pub use report::{Axiom, Location, ValidationReport, Violation};
pub use scalar::Scalar;
pub use semicopula::{lukasiewicz_gap, validate_semicopula, LukasiewiczGap, SemicopulaKind, SemicopulaSpec, Table};

pub type Semicopula = SemicopulaSpec<f64>;
pub type Capacity64 = Capacity<f64>;
pub type Function64 = MeasurableFunction<f64>;
pub type Instance64 = Instance<f64>;
pub type Integral64 = IntegralResult<f64>;
pub type Witness64 = InvarianceWitness<f64>;
pub type Verdict64 = InvarianceVerdict<f64>;
pub type Report64 = ValidationReport<f64>;

pub type Semicopula32 = SemicopulaSpec<f32>;
pub type Instance32 = Instance<f32>;
