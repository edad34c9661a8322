use std::path::PathBuf;

use thiserror::Error;

/// Errors produced anywhere in the detection / planning pipeline.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("degenerate geometry: {0}")]
    DegenerateGeometry(String),

    #[error("insufficient sites: {0}")]
    InsufficientSites(String),

    /// Two sensors share one position.
    #[error("duplicate site: sensors {first} and {second} share position ({x}, {y})")]
    DuplicateSite {
        first: u32,
        second: u32,
        x: f64,
        y: f64,
    },

    #[error("not found: {0}")]
    NotFound(String),

    #[error("inconsistent input: {0}")]
    InconsistentInput(String),

    #[error("unsupported schema version {found} in {path} (expected {expected})")]
    UnsupportedSchema {
        path: String,
        found: u32,
        expected: u32,
    },

    #[error("{path}:{line}:{column}: {message}")]
    Parse {
        path: String,
        line: usize,
        column: usize,
        message: String,
    },

    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    /// Stable machine-readable tag for the error variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::InvalidInput(_) => "invalid-input",
            Error::DegenerateGeometry(_) => "degenerate-geometry",
            Error::InsufficientSites(_) => "insufficient-sites",
            Error::DuplicateSite { .. } => "duplicate-site",
            Error::NotFound(_) => "not-found",
            Error::InconsistentInput(_) => "inconsistent-input",
            Error::UnsupportedSchema { .. } => "unsupported-schema",
            Error::Parse { .. } => "parse",
            Error::Io { .. } => "io",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
