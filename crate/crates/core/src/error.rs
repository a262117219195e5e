use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid images {images:?}: {reason}")]
    InvalidImages { images: Vec<i32>, reason: String },

    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("index {index} out of range for degree {n}")]
    IndexOutOfRange { index: i64, n: usize },

    #[error("bad partition: {0}")]
    BadPartition(String),

    #[error("bad cross pair ({l}, {m}): {reason}")]
    BadCrossPair { l: usize, m: usize, reason: String },

    #[error("{kind} generators need degree at least {min}, got {n}")]
    DegreeTooSmall { kind: &'static str, n: usize, min: usize },

    #[error("closure exceeded cap of {cap} elements")]
    CapExceeded { cap: usize },

    #[error("size exceeded: {what} needs {needed}, limit is {limit}")]
    SizeExceeded { what: &'static str, needed: u128, limit: u128 },

    #[error("parity convention is not total here: {0}")]
    ConventionNotTotal(String),

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("matrix is singular")]
    SingularMatrix,

    #[error("boost parameter t = {0} is a pole")]
    PoleParameter(String),

    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("empty input: {0}")]
    Empty(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
