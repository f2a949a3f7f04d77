use gt_algebra::AlgebraError;
use gt_fox::FoxError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BracketError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Fox(#[from] FoxError),
}

pub type Result<T> = std::result::Result<T, BracketError>;
