//! Error taxonomy shared by every module.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Two values live in polynomial rings with different variable counts.
    #[error("ambient variable count mismatch: {left} vs {right}")]
    AmbientMismatch { left: usize, right: usize },

    /// An exponent or degree left the machine-word range.
    #[error("exponent overflow while {context}")]
    ExponentOverflow { context: &'static str },

    /// Malformed caller input (bad flag value, invalid twist data, ...).
    #[error("input error: {0}")]
    Input(String),

    /// The operation is not defined for this value (unit ideal, zero ideal, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// A size guard was exceeded; see `Guards` for raising limits.
    #[error("capacity guard exceeded: {0}")]
    Capacity(String),

    /// Numeric data that cannot come from an actual resolution.
    #[error("inconsistent data: {0}")]
    Inconsistent(String),

    /// Text/JSON input error with source position.
    #[error("{file}:{line}:{col}: {msg}")]
    Parse {
        file: String,
        line: usize,
        col: usize,
        msg: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
