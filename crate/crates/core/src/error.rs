use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ring mismatch: operands live in ({0}) and ({1})")]
    RingMismatch(String, String),

    #[error("syntax error at column {column}: {message}")]
    Syntax { column: usize, message: String },

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("invalid ring: {0}")]
    InvalidRing(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("input is not graded: {0}")]
    Ungraded(String),

    #[error("grading is not positive; graded pieces may be infinite-dimensional")]
    NonPositiveGrading,

    #[error("quotient is infinite-dimensional: {0}")]
    InfiniteDimensional(String),

    #[error("lift failed: {0}")]
    LiftFailed(String),

    #[error("obstruction is not covered by the supplied obstruction space at order {order}")]
    UncoveredObstruction { order: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
