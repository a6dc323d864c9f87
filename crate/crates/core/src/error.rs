use thiserror::Error;

/// Errors raised by the exact arithmetic and sequence layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    /// The divisor series does not start with a nonzero constant.
    #[error("series divisor has a non-unit constant term: {0}")]
    NonUnitConstant(String),

    #[error("index {index} is beyond truncation order {order}")]
    OutOfRange { index: usize, order: usize },

    #[error("need {needed} Bell arguments, got {given}")]
    Arity { needed: usize, given: usize },

    #[error("malformed rational literal `{0}`")]
    ParseRational(String),

    #[error("invalid polynomial data: {0}")]
    InvalidPoly(String),

    #[error("{0}")]
    Usage(String),
}

pub type Result<T> = std::result::Result<T, Error>;
