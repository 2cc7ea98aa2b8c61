//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    /// A parameter or argument lies outside its mathematical domain.
    #[error("domain error in `{field}`: {message}")]
    Domain { field: &'static str, message: String },

    /// A level index `n` outside the bound-state range `n < A`.
    #[error("level error: n = {n} is not below A = {a}")]
    Level { n: usize, a: f64 },

    /// A sampled function does not decay at the grid boundary.
    #[error("boundary error: {0}")]
    Boundary(String),

    /// An iterative numerical procedure failed to converge.
    #[error("convergence error: {0}")]
    Convergence(String),

    /// An input is degenerate (zero norm, underflow).
    #[error("degenerate error: {0}")]
    Degenerate(String),
}

impl Error {
    pub fn domain(field: &'static str, message: impl Into<String>) -> Self {
        Error::Domain {
            field,
            message: message.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
