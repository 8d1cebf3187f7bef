//! Command-line front end: configure a run, simulate, score against the
//! bundled reference tables, sweep orders and emit CSV/plot artifacts.
//!
//! The binary is called `ffml`. Everything it does is also reachable
//! through this library so the behaviour can be tested in-process.

pub mod commands;
pub mod config;
pub mod csvio;

pub use commands::{cmd_compare, cmd_run, cmd_sweep, cmd_tables};
pub use config::{load, EmitSet, InputKind, Overrides, RunConfig, SchemeChoice};

use schemes::SchemeError;

/// Command failures, keyed to process exit codes: config errors exit 2,
/// numerical overflow exits 3, reference-grid mismatches exit 4 and
/// plain I/O trouble exits 1.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Config(String),
    #[error("{0}")]
    Overflow(String),
    #[error("{0}")]
    GridMismatch(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) => 2,
            CliError::Overflow(_) => 3,
            CliError::GridMismatch(_) => 4,
            CliError::Io(_) => 1,
        }
    }
}

impl From<SchemeError> for CliError {
    fn from(err: SchemeError) -> Self {
        match err {
            SchemeError::Overflow { .. } => CliError::Overflow(err.to_string()),
            other => CliError::Config(other.to_string()),
        }
    }
}

impl From<reference_data::ReferenceError> for CliError {
    fn from(err: reference_data::ReferenceError) -> Self {
        CliError::GridMismatch(err.to_string())
    }
}
