//! Error type shared by the algebraic modules.

use thiserror::Error;

/// Failures raised by exact algebra routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("frame mismatch: {left} vs {right}")]
    FrameMismatch { left: String, right: String },

    #[error("variable {0} is identically zero in this frame")]
    DeadVariable(String),

    #[error("polynomial is not homogeneous")]
    NotHomogeneous,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("operation needs a {expected} frame, got {found}")]
    WrongFrame { expected: String, found: String },

    #[error(
        "element has a term of weight {found}; the induced Laplacian is only defined on the \
         critical weight {expected}"
    )]
    WrongWeight { expected: String, found: String },

    #[error("element is outside the required subspace: {0}")]
    NotInSubspace(String),

    #[error("exact solve failed: {0}")]
    Singular(String),
}

pub type Result<T> = std::result::Result<T, Error>;
