//! Error type shared across the library.
//!
//! The variants map onto the process exit codes used by the command line
//! front end: invalid arguments exit with 2, exceeded size/cap bounds with 3
//! and internal failures with 4.

use thiserror::Error;

/// Library-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    /// A caller-supplied argument violates a documented precondition.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// An exact search or enumeration would exceed a configured bound.
    #[error("bound exceeded: {0}")]
    BoundExceeded(String),

    /// An internal invariant failed; indicates a bug in the library.
    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    /// Process exit code associated with this error class.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::InvalidArgument(_) => 2,
            Error::BoundExceeded(_) => 3,
            Error::Internal(_) => 4,
        }
    }
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
