use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("pole at q = {0}")]
    Pole(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid root system {0}")]
    InvalidRootSystem(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("{0} is not an inversion of the given element")]
    NotAnInversion(String),
    #[error("roots {0} and {1} are not orthogonal")]
    NotOrthogonal(String, String),
    #[error("size guard exceeded: {0}")]
    Guard(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("internal failure: {0}")]
    Internal(String),
    #[error("element is not in the span: {0}")]
    NotInSpan(String),
    #[error("invalid character: {0}")]
    InvalidCharacter(String),
    #[error("closure failure for the pair ({0}, {1})")]
    Closure(String, String),
    #[error("mismatch: {0}")]
    Mismatch(String),
}

pub type Result<T> = std::result::Result<T, Error>;
