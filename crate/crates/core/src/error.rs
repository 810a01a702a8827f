//! Error type shared across the toolkit.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("empty dataset")]
    EmptyDataset,

    #[error("grid mismatch: {0}")]
    GridMismatch(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: u64, message: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("column {0} has (near-)zero variance")]
    DegenerateColumn(usize),

    #[error("numerical failure: {0}")]
    NumericalFailure(String),

    #[error("shape error: {0}")]
    ShapeError(String),

    #[error("class {class} has only {count} sample(s), need at least {needed}")]
    InsufficientClassData {
        class: usize,
        count: usize,
        needed: usize,
    },

    #[error("degenerate latent component {0}: response projection vanished")]
    DegenerateComponent(usize),

    #[error("degenerate calibration slope")]
    DegenerateSlope,

    #[error("degenerate target: all values identical")]
    DegenerateTarget,

    #[error("stratification error: {0}")]
    Stratification(String),

    #[error("invalid architecture: {0}")]
    InvalidArchitecture(String),

    #[error("training diverged at epoch {0}")]
    TrainingDiverged(usize),

    #[error("requested head not present in network: {0}")]
    HeadNotPresent(String),

    #[error("model format: {0}")]
    ModelFormat(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// True for failures of the numerics themselves (as opposed to bad
    /// inputs); the CLI maps these to a distinct exit code.
    pub fn is_numerical(&self) -> bool {
        matches!(
            self,
            Error::NumericalFailure(_) | Error::TrainingDiverged(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
