//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    /// Binary series operation on operands of different truncation orders.
    #[error("series order mismatch: {0} vs {1}")]
    OrderMismatch(usize, usize),

    /// Reciprocal of a series with vanishing constant term.
    #[error("series has zero constant term, reciprocal is not a power series")]
    SingularSeries,

    /// Operation restricted to a particular constant term (e.g. exp needs 0,
    /// inverse square root needs 1).
    #[error("unsupported normalization: constant term must be {expected}, found {found}")]
    UnsupportedNormalization { expected: String, found: String },

    /// Coefficient or derivative index past the truncation order.
    #[error("index {index} out of range for series of order {order}")]
    IndexOutOfRange { index: usize, order: usize },

    /// Parameter outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// Structurally invalid call (bad argument shape, family/rule mismatch).
    #[error("usage error: {0}")]
    Usage(String),

    /// A numeric evaluation produced a non-finite value.
    #[error("evaluation error: {0}")]
    Evaluation(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn usage(msg: impl Into<String>) -> Self {
        Error::Usage(msg.into())
    }
}
