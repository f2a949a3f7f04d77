use gt_algebra::AlgebraError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FoxError {
    #[error("table has no value for generator `{0}`")]
    IncompleteTable(String),
    #[error("expected a {expected} Fox derivative")]
    WrongSide { expected: &'static str },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

pub type Result<T> = std::result::Result<T, FoxError>;
