use std::path::PathBuf;
use std::process::ExitCode;

use permchan_core::Error as CoreError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Bound(String),
    #[error("verification failed: {0}")]
    Verification(String),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("CSV output: {0}")]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Core(#[from] CoreError),
}

impl CliError {
    pub fn exit_code(&self) -> ExitCode {
        let code = match self {
            CliError::Usage(_) => 2,
            CliError::Bound(_) => 3,
            CliError::Verification(_) | CliError::Io { .. } | CliError::Csv(_) => 1,
            CliError::Core(e) if e.is_resource_bound() => 3,
            CliError::Core(e) if is_input_error(e) => 2,
            CliError::Core(_) => 1,
        };
        ExitCode::from(code)
    }
}

fn is_input_error(e: &CoreError) -> bool {
    matches!(
        e,
        CoreError::InvalidPermutation(_)
            | CoreError::DegreeMismatch { .. }
            | CoreError::SymbolOutOfRange { .. }
            | CoreError::NotInGroup
            | CoreError::NotCyclic
            | CoreError::IndexOutOfRange { .. }
            | CoreError::DimensionMismatch { .. }
            | CoreError::Unknown { .. }
            | CoreError::InvalidParameter(_)
            | CoreError::Parse { .. }
    )
}

pub type CliResult<T> = Result<T, CliError>;
