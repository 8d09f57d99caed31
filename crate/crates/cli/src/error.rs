use std::process::ExitCode;

use taxicab_core::Error as CoreError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Parse(String),
    #[error("{0}")]
    Domain(String),
    #[error("{0}")]
    Convergence(String),
    #[error("{0}")]
    Io(String),
    #[error("{0} verification case(s) failed")]
    VerifyFailed(usize),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::VerifyFailed(_) => 1,
            CliError::Parse(_) => 2,
            CliError::Domain(_) => 3,
            CliError::Convergence(_) => 4,
            CliError::Io(_) => 5,
        }
    }
}

impl From<CliError> for ExitCode {
    fn from(e: CliError) -> Self {
        ExitCode::from(e.exit_code())
    }
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        let msg = e.to_string();
        match e {
            CoreError::Spec(_) => CliError::Parse(msg),
            CoreError::Convergence { .. } => CliError::Convergence(msg),
            CoreError::Domain(_)
            | CoreError::NegativeProfile { .. }
            | CoreError::NonFiniteIntegrand { .. }
            | CoreError::NotMonotone { .. } => CliError::Domain(msg),
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
