use std::path::PathBuf;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// An argument was outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A vector that must be normalized had zero Euclidean norm.
    #[error("degenerate input: {0}")]
    Degenerate(String),

    /// More scalars than 2^n amplitudes can hold.
    #[error("capacity error: {len} values do not fit in {qubits} qubits ({capacity} amplitudes)")]
    Capacity {
        len: usize,
        qubits: usize,
        capacity: usize,
    },

    #[error("unsupported gradient method: {0}")]
    UnsupportedMethod(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: u64, msg: String },

    #[error("configuration error: {0}")]
    Config(String),

    #[error("serialization error: {0}")]
    Serialize(String),

    #[error("i/o error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    /// Short machine-readable tag, used by the CLI error line.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Domain(_) => "domain",
            Error::Degenerate(_) => "degenerate",
            Error::Capacity { .. } => "capacity",
            Error::UnsupportedMethod(_) => "unsupported-method",
            Error::Parse { .. } => "parse",
            Error::Config(_) => "config",
            Error::Serialize(_) => "serialize",
            Error::Io { .. } => "io",
        }
    }

    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
