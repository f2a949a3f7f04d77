use thiserror::Error;

/// Failures raised by the core algebra layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    /// Two operands were built over different alphabets or truncation bounds.
    #[error("context mismatch: {0}")]
    ContextMismatch(String),
    #[error("exponential needs an input with zero counit, got counit {0}")]
    NonAugmentedInput(String),
    #[error("element with zero counit has no inverse")]
    NotInvertible,
    #[error("invalid alphabet: {0}")]
    InvalidAlphabet(String),
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("element is not primitive")]
    NotPrimitive,
    #[error("malformed element encoding: {0}")]
    Decode(String),
}

pub type Result<T> = std::result::Result<T, AlgebraError>;
