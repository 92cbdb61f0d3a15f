use thiserror::Error;

/// Errors raised by the exact-arithmetic and algebra layers.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("subspaces live in different ambient spaces ({left} vs {right})")]
    AmbientMismatch { left: usize, right: usize },

    #[error("quotient requires the second subspace to lie inside the first")]
    NotASubspace,

    #[error("subspace is not a two-sided ideal")]
    NotAnIdeal,

    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },

    #[error("coefficient {0} is not real but the table is tagged rational")]
    NotReal(String),

    #[error("parameter m must be at least 1 (got {0})")]
    InvalidM(usize),

    #[error("restriction violated: {0}")]
    Restriction(String),

    #[error("invalid problem: {0}")]
    InvalidProblem(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
