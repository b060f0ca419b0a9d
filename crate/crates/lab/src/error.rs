use std::io;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum LabError {
    #[error("invalid input: {0}")]
    Input(String),
    #[error(transparent)]
    Core(#[from] idbb_core::Error),
    #[error("i/o error: {0}")]
    Io(#[from] io::Error),
    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
    #[error("assertion failed: {0}")]
    Assertion(String),
}

impl LabError {
    /// 1 for bad input, 2 for a failed internal check.
    pub fn exit_code(&self) -> i32 {
        use idbb_core::Error as E;
        match self {
            LabError::Assertion(_) => 2,
            LabError::Core(E::NormDrift { .. } | E::IterationBound { .. } | E::DishonestOracle) => 2,
            _ => 1,
        }
    }
}

pub type LabResult<T> = Result<T, LabError>;
