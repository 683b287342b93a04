use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Library(#[from] cisgraph::Error),
    #[error("cannot read {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{0}")]
    Input(String),
}

impl CliError {
    /// Process exit code: 3 for exhausted budgets and limits, 2 otherwise.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Library(
                cisgraph::Error::SearchBudgetExceeded(_)
                | cisgraph::Error::EnumerationLimitExceeded(_)
                | cisgraph::Error::GroupTooLarge(_),
            ) => 3,
            _ => 2,
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
