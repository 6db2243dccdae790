use thiserror::Error;

/// Errors raised by the computational core.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("substitution would invert zero (variable {0})")]
    NonInvertibleSubstitution(String),
    #[error("expression has a pole at hbar = 0")]
    PoleAtHbarZero,
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("algebra mismatch: expected {expected}, found {found}")]
    AlgebraMismatch { expected: String, found: String },
    #[error("basis vector {0} is not legal in {1}")]
    ModeOutOfAlgebra(String, String),
    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),
    #[error("context mismatch: {0}")]
    ContextMismatch(String),
    #[error("basis vector {0} has {1} dual partners")]
    NotBasisDiagonal(String, usize),
    #[error("result changed when the window grew from {0} to {1}")]
    WindowUnstable(u32, u32),
    #[error("prerequisite failed: {0}")]
    PrerequisiteFailed(String),
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("representations belong to different families")]
    FamilyMismatch,
    #[error("model {model} cannot be evaluated in representation {rep}")]
    IncompatibleRep { model: String, rep: String },
    #[error("model has no generators")]
    EmptyModel,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
}

pub type Result<T> = std::result::Result<T, Error>;
