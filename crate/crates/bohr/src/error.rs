//! Error type shared across the crate.

use thiserror::Error;

/// Errors produced by radius solvers, series constructors and the
/// verification harness.
#[derive(Debug, Error)]
pub enum Error {
    /// A numeric argument is outside its mathematical domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// A structural/configuration precondition is violated (sample counts,
    /// truncation orders, flag combinations).
    #[error("configuration error: {0}")]
    Config(String),

    /// A caller-side precondition that is checked at runtime because the
    /// result would be silently wrong otherwise.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// The solver could not locate a root it is guaranteed to find.
    /// This signals a bug, not a property of the input.
    #[error("solver failure: {0}")]
    Solver(String),

    #[error("serialization error: {0}")]
    Serde(#[from] serde_json::Error),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn config(msg: impl Into<String>) -> Self {
        Error::Config(msg.into())
    }

    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }
}
