use thiserror::Error;

use crate::expr::ExprError;

/// Everything that stops a command before it produces a result. Each
/// variant fixes the process exit code.
#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Expr(#[from] ExprError),
    #[error("{0}")]
    Usage(String),
    #[error("config file: {0}")]
    Config(String),
    /// The surface, framing or algebra requested does not exist, or the
    /// library rejected the inputs in that context.
    #[error("{0}")]
    Context(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Expr(_) | CliError::Usage(_) | CliError::Config(_) => 2,
            CliError::Context(_) => 3,
        }
    }
}

macro_rules! context_errors {
    ($($t:ty),*) => {
        $(impl From<$t> for CliError {
            fn from(e: $t) -> Self {
                CliError::Context(e.to_string())
            }
        })*
    };
}

context_errors!(
    gt_algebra::AlgebraError,
    gt_fox::FoxError,
    gt_brackets::BracketError,
    gt_cocycles::CocycleError,
    gt_braid::BraidError
);

impl From<gt_surface::SurfaceError> for CliError {
    fn from(e: gt_surface::SurfaceError) -> Self {
        match e {
            gt_surface::SurfaceError::NotGroupLike(_) => CliError::Usage(e.to_string()),
            _ => CliError::Context(e.to_string()),
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
