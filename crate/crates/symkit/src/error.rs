use thiserror::Error;

/// Errors produced across the toolkit.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("operands belong to different fields")]
    FieldMismatch,

    #[error("zero has no multiplicative inverse")]
    ZeroInverse,

    #[error("matrix is singular")]
    Singular,

    #[error("matrix is not symplectic")]
    NotSymplectic,

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("generators {first} and {second} anticommute")]
    AnticommutingGenerators { first: usize, second: usize },

    #[error("generator {index} is a product of earlier generators")]
    DependentGenerator { index: usize },

    #[error("gadget does not preserve the code")]
    NotPreserving,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("problem too large: {0}")]
    TooLarge(String),

    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
