use thiserror::Error;

/// Errors raised by the arithmetic kernel, the decomposition engines and the
/// identity catalog.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("denominator vanishes at sample point {0}")]
    PoleAtSample(String),
    #[error("degree {degree} is too large (must be below {bound})")]
    DegreeTooLarge { degree: usize, bound: usize },
    #[error("poles must be pairwise distinct (pole {0} repeats)")]
    DuplicatePoles(usize),
    #[error("multiplicity must be at least 1")]
    ZeroMultiplicity,
    #[error("linear system is singular")]
    SingularSystem,
    #[error("unknown identity `{0}`")]
    NotFound(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
