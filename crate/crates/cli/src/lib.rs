//! Front end for the `kekule` binary: table and generating-function output,
//! brute-force oracles, and the verification report.

pub mod commands;
pub mod verify;

use kekule_core::kekule::KekuleError;
use kekule_core::oracles::OracleError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Budget(String),
    #[error("{0}")]
    Computation(String),
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    /// 1 for a failed computation, 2 for bad input, 3 when an oracle would
    /// exceed its search budget.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Budget(_) => 3,
            CliError::Computation(_) | CliError::Io(_) => 1,
        }
    }
}

impl From<OracleError> for CliError {
    fn from(e: OracleError) -> CliError {
        match e {
            OracleError::Budget { .. } => CliError::Budget(e.to_string()),
            OracleError::InvalidArgument(_) => CliError::Usage(e.to_string()),
        }
    }
}

impl From<KekuleError> for CliError {
    fn from(e: KekuleError) -> CliError {
        CliError::Computation(e.to_string())
    }
}
