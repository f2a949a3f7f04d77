use gt_algebra::AlgebraError;
use gt_fox::FoxError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CocycleError {
    /// The quasi-derivation is not associated to the negated pairing.
    #[error("quasi-derivation and pairing are incompatible: {0}")]
    IncompatiblePair(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Fox(#[from] FoxError),
}

pub type Result<T> = std::result::Result<T, CocycleError>;
