use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{name} = {value} lies outside [0, 1]")]
    OutOfUnitInterval { name: &'static str, value: f64 },

    #[error("structural error: {0}")]
    Structural(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("shift overflows at point `{label}`: f + a = {value} > 1")]
    ShiftOverflow { label: String, value: f64 },

    #[error("capacity is not a valid capacity: {0}")]
    InvalidCapacity(String),

    #[error("function and capacity live on different spaces")]
    SpaceMismatch,

    #[error("left-hand side {direct} disagrees with its threshold decomposition {decomposed}")]
    DecompositionMismatch { direct: f64, decomposed: f64 },
}
