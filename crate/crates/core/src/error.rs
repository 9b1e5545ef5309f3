//! Error type shared by every module in the engine.

use std::path::PathBuf;

use thiserror::Error;

/// Engine-wide error.
///
/// Variants map to the failure classes surfaced by the CLI: configuration
/// and format problems are validation failures, data/domain/shape problems
/// are runtime data errors.
#[derive(Debug, Error)]
pub enum Error {
    /// Invalid configuration value (bad unit string, infeasible bounds,
    /// mix weights that do not sum to one, ...).
    #[error("configuration error: {0}")]
    Config(String),

    /// Structural mismatch between sequences (length, year basis).
    #[error("shape error: {0}")]
    Shape(String),

    /// Argument outside an operation's mathematical domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// Missing or inconsistent input data discovered at run time.
    #[error("data error: {0}")]
    Data(String),

    /// Malformed input file (missing heading, unparseable table).
    #[error("format error: {0}")]
    Format(String),

    /// Filesystem failure, tagged with the offending path.
    #[error("io error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
