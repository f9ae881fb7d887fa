use thiserror::Error;

/// Errors raised by the exact and numeric routines of this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("arity error: {0}")]
    Arity(String),
    #[error("inexact division: {0}")]
    Divisibility(String),
    #[error("degenerate input: {0}")]
    DegenerateInput(String),
    #[error("parameter degeneracy: {0}")]
    ParameterDegeneracy(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("index out of range: {0}")]
    Index(String),
    #[error("point outside the domain: {0}")]
    Domain(String),
    #[error("pole: {0}")]
    Pole(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
