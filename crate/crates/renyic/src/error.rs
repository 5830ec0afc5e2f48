//! Error types shared by the whole crate.

use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    /// An argument was outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// The integrand or objective returned a non-finite value.
    #[error("non-finite sample at x = {at}")]
    NonFiniteSample { at: f64 },

    /// A semi-infinite integral kept growing under successive doublings of
    /// the truncation radius.
    #[error("suspected divergent integral: {context}")]
    Divergent { context: String },

    /// A density transform was requested that the density cannot support.
    #[error("unsupported transform: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
