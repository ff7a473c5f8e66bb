use thiserror::Error;

use crate::algebra::AlgebraError;
use crate::localization::LocalizationError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TautError {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("negative bundle weight {0} makes the q-truncation unsound")]
    NegativeWeightUnsupported(i64),
    #[error("internal error: {0}")]
    Internal(String),
    #[error(transparent)]
    Localization(#[from] LocalizationError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

impl TautError {
    /// Usage errors map to exit code 2; everything else is a computation failure.
    pub fn is_usage(&self) -> bool {
        matches!(
            self,
            TautError::InvalidArgument(_)
                | TautError::NegativeWeightUnsupported(_)
                | TautError::Localization(LocalizationError::InvalidFixture(_))
        )
    }
}

pub type Result<T, E = TautError> = std::result::Result<T, E>;
