//! Errors of the driver and their exit codes.

use std::path::PathBuf;

/// Exit code for success.
pub const EXIT_OK: i32 = 0;
/// Exit code for invalid input or usage.
pub const EXIT_USAGE: i32 = 1;
/// Exit code when a certificate or a sweep fails.
pub const EXIT_CERTIFICATE: i32 = 2;
/// Exit code when pending verdicts remain.
pub const EXIT_PENDING: i32 = 3;
/// Exit code for I/O failures.
pub const EXIT_IO: i32 = 4;

/// Errors raised by the driver.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// Error from the mathematical core.
    #[error(transparent)]
    Core(#[from] kostant_core::Error),
    /// File system error with the path involved.
    #[error("{path}: {source}")]
    Io {
        /// The file or directory.
        path: PathBuf,
        /// The underlying error.
        source: std::io::Error,
    },
    /// A file exists but its contents are not usable.
    #[error("{path}: {reason}")]
    Format {
        /// The file.
        path: PathBuf,
        /// What is wrong.
        reason: String,
    },
    /// Invalid configuration or arguments.
    #[error("invalid configuration: {0}")]
    Config(String),
    /// JSON serialisation failed.
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    /// CSV serialisation failed.
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl Error {
    /// Wraps an I/O error with its path.
    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io { path: path.into(), source }
    }

    /// The process exit code for this error.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Io { .. } | Error::Format { .. } => EXIT_IO,
            Error::Csv(e) if matches!(e.kind(), csv::ErrorKind::Io(_)) => EXIT_IO,
            _ => EXIT_USAGE,
        }
    }
}

/// Driver result alias.
pub type Result<T> = std::result::Result<T, Error>;
