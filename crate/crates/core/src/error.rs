use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithmeticError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot parse number: {0:?}")]
    Parse(String),
}

/// Errors raised by the higher-level procedures.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Sh3Error {
    #[error(transparent)]
    Arithmetic(#[from] ArithmeticError),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("inconsistent linear system: {0}")]
    Inconsistent(String),
    #[error("identity violated: {0}")]
    IdentityViolated(String),
    #[error("certificate failure: {0}")]
    Certificate(String),
}

pub type Result<T, E = Sh3Error> = std::result::Result<T, E>;
