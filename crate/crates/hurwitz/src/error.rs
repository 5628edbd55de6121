//! Crate-wide error type.

use std::path::PathBuf;

pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong across parsing, group construction and search.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// Malformed input text (image rows, cycle notation, data files).
    #[error("format error: {0}")]
    Format(String),

    /// Arguments outside the mathematical domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// Inconsistent pieces handed to a constructor, such as generators of
    /// mixed degree.
    #[error("construction error: {0}")]
    Construction(String),

    /// A configured budget would be exceeded; nothing was computed.
    #[error("resource limit exceeded: {0}")]
    Resource(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub(crate) fn format_at(line: usize, msg: impl std::fmt::Display) -> Self {
        Error::Format(format!("line {line}: {msg}"))
    }

    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io { path: path.into(), source }
    }

    /// Process exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Resource(_) => 3,
            _ => 2,
        }
    }
}
