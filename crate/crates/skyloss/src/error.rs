//! Crate-wide error type.

use std::fmt;

/// Errors produced by the pipeline.
#[derive(Debug)]
pub enum Error {
    /// Invalid configuration value or parameter range.
    Config(String),
    /// Mathematical domain violation (e.g. non-positive distance).
    Domain(String),
    /// Mismatched shapes, grids, or altitude sets between inputs.
    Consistency(String),
    /// Input that is valid in shape but carries no usable data
    /// (e.g. a receiver grid that is entirely indoor).
    Degenerate(String),
    /// Training failure, with the epoch at which it occurred.
    Training { epoch: usize, message: String },
    /// Underlying I/O failure.
    Io(std::io::Error),
    /// Malformed file contents (manifest, checkpoint, raster, CSV).
    Format(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Config(msg) => write!(f, "configuration error: {msg}"),
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::Consistency(msg) => write!(f, "consistency error: {msg}"),
            Error::Degenerate(msg) => write!(f, "degenerate input: {msg}"),
            Error::Training { epoch, message } => {
                write!(f, "training error at epoch {epoch}: {message}")
            }
            Error::Io(err) => write!(f, "i/o error: {err}"),
            Error::Format(msg) => write!(f, "format error: {msg}"),
        }
    }
}

impl std::error::Error for Error {
    fn source(&self) -> Option<&(dyn std::error::Error + 'static)> {
        match self {
            Error::Io(err) => Some(err),
            _ => None,
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(err: std::io::Error) -> Self {
        Error::Io(err)
    }
}

impl From<serde_json::Error> for Error {
    fn from(err: serde_json::Error) -> Self {
        Error::Format(err.to_string())
    }
}
