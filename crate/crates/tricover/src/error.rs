use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("rectangle {0} has an open side; this solver needs closed rectangles")]
    OpenSide(usize),
    #[error("rectangle {0} is not a closed axis-aligned unit square")]
    NotUnitSquare(usize),
    #[error("weighted input given to an unweighted solver")]
    WeightedInput,
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("budget exceeded: {0}")]
    Budget(String),
    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
