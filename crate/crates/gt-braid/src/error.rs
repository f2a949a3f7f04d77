use gt_algebra::AlgebraError;
use gt_cocycles::CocycleError;
use gt_fox::FoxError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BraidError {
    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("invalid strand labels: {0}")]
    InvalidLabels(String),
    #[error("expression is not homogeneous: {0}")]
    InhomogeneousInput(String),
    #[error("map is not surjective in degree {degree}: rank {rank} < {target_dim}")]
    NotSurjective { degree: u32, rank: usize, target_dim: usize },
    #[error("image of `{generator}` has degree {found}, expected {expected}")]
    DegreeMismatch { generator: String, expected: u32, found: u32 },
    #[error("invalid presentation: {0}")]
    InvalidPresentation(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Fox(#[from] FoxError),
    #[error(transparent)]
    Cocycle(#[from] CocycleError),
}

pub type Result<T> = std::result::Result<T, BraidError>;
