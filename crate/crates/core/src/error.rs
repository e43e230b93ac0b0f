use thiserror::Error;

use crate::poly::Variable;

/// Errors raised by the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("variable {0} is not part of the grading")]
    UnknownVariable(Variable),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("polynomial is not symmetric in Z(1..{0})")]
    NonSymmetric(usize),
    #[error("polynomial is not homogeneous for the grading")]
    NotHomogeneous,
    #[error("coordinate changes disagree on the initial ideal (NON-GENERIC); retry with a fresh seed")]
    NonGeneric,
    #[error("DESK-SCALE-EXCEEDED: {0}")]
    DeskScaleExceeded(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }
}
