//! Error type shared across the toolkit.
//!
//! The variants map onto the CLI exit codes: domain and parse errors exit
//! with 1, capability guards and solver failures with 2, verification
//! failures with 3.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Invalid argument or precondition violation.
    #[error("domain error: {0}")]
    Domain(String),

    /// Malformed textual input; `pos` is a byte offset into the line.
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    /// A resource or size guard was exceeded.
    #[error("capability guard: {0}")]
    Capability(String),

    /// The Jacobi eigensolver did not reach the requested tolerance.
    #[error("eigensolver did not converge after {sweeps} sweeps (order {n})")]
    NoConvergence { n: usize, sweeps: usize },

    /// An independent re-check of a result failed; names the failing checks.
    #[error("verification failure: {0}")]
    Verification(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse { pos, msg: msg.into() }
    }

    pub fn capability(msg: impl Into<String>) -> Self {
        Error::Capability(msg.into())
    }

    /// CLI exit code for this error class.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Domain(_) | Error::Parse { .. } | Error::Io(_) => 1,
            Error::Capability(_) | Error::NoConvergence { .. } => 2,
            Error::Verification(_) => 3,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
