use gt_algebra::AlgebraError;
use gt_brackets::BracketError;
use gt_fox::FoxError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SurfaceError {
    #[error("invalid surface: {0}")]
    InvalidSurface(String),
    #[error("invalid framing: {0}")]
    InvalidFraming(String),
    #[error("expected a single word in the generators, got `{0}`")]
    NonGeneratorWord(String),
    #[error("element is not group-like: {0}")]
    NotGroupLike(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Fox(#[from] FoxError),
    #[error(transparent)]
    Bracket(#[from] BracketError),
}

pub type Result<T> = std::result::Result<T, SurfaceError>;
