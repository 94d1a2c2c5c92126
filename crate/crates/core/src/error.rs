use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("unsupported division: divisor has {0} radical terms")]
    UnsupportedDivision(usize),
    #[error("unsupported square root: {0}")]
    UnsupportedSqrt(String),
    #[error("pole: denominator vanishes at q = {0}")]
    Pole(String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("element lies outside the span of matrix coefficients up to j = {jmax}: {monomials}")]
    SpanExceeded { jmax: String, monomials: String },
    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("shape mismatch: expected {expected}, got {got}")]
    ShapeMismatch { expected: String, got: String },
    #[error("not a representation: {0}")]
    NotARepresentation(String),
    #[error("truncation too small: {0}")]
    Truncation(String),
    #[error("invalid group table: {0}")]
    InvalidGroup(String),
}

pub type Result<T> = std::result::Result<T, Error>;
