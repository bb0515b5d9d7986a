use thiserror::Error;

use crate::families::SymmetryCondition;
use crate::field::Level;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid field: {0}")]
    InvalidField(String),

    #[error("modulus {modulus:?} is reducible over {over}")]
    ReducibleModulus { modulus: String, over: &'static str },

    #[error("malformed modulus: {0}")]
    MalformedModulus(String),

    #[error("level mismatch: expected {expected:?}, found {found:?}")]
    LevelMismatch { expected: Level, found: Level },

    #[error("division by zero")]
    DivisionByZero,

    #[error("coefficient value out of range: {0}")]
    OutOfRange(String),

    #[error("sweep over {size} elements exceeds the configured bound of {limit}")]
    ScaleExceeded { size: u64, limit: u64 },

    #[error("factor triple #{index} ({triple}) is inadmissible: its norm form vanishes")]
    InadmissibleTriple { index: usize, triple: String },

    #[error("symmetry condition {0} of the factor triples is violated")]
    SymmetryViolated(SymmetryCondition),
}
