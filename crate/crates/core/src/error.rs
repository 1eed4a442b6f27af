//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// A parameter violated a precondition (bad step size, radius, bounds...).
    #[error("invalid parameter: {0}")]
    Parameter(String),

    /// Vector/matrix dimensions do not agree.
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    /// Enumeration would exceed the requested cap.
    #[error("state space too large: {size} states exceeds cap {cap}")]
    EnumerationCap { size: f64, cap: usize },

    /// Least-squares preconditioner fit had no usable information.
    #[error("degenerate fit: {0}")]
    DegenerateFit(String),

    /// A cached eigendecomposition no longer matches its matrix.
    #[error("stale preconditioner cache: {0}")]
    StaleCache(String),

    #[error("config error: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub fn parameter(msg: impl Into<String>) -> Self {
        Error::Parameter(msg.into())
    }

    pub fn dimension(msg: impl Into<String>) -> Self {
        Error::Dimension(msg.into())
    }
}
