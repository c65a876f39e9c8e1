//! Model-file ingestion, the analyze/subsym/spin/transport/selftest command
//! pipelines, and deterministic JSON report emission.

pub mod analysis;
pub mod modelfile;
pub mod report;
pub mod selftest;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("validation error: {0}")]
    Validation(String),
    #[error("THEOREM_VIOLATION: {0}")]
    TheoremViolation(String),
    #[error("NO_FIXPOINT: {0}")]
    NoFixpoint(String),
    #[error("internal error: {0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => 1,
            CliError::Validation(_) => 2,
            CliError::TheoremViolation(_) => 3,
            CliError::NoFixpoint(_) => 4,
            CliError::Internal(_) => 70,
        }
    }
}
