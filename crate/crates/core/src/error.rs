use thiserror::Error;

/// Errors raised by the kernel, the distribution builders and the front ends.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QError {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// A factor that must be inverted is zero.
    #[error("division by zero: {0}")]
    DivisionByZero(String),
    /// The operation is not defined for the regime of the deformation parameter.
    #[error("regime error: {0}")]
    Regime(String),
    /// The request exceeds a hard size guard.
    #[error("resource limit: {0}")]
    Resource(String),
    #[error("parse error: {0}")]
    Parse(String),
    /// A name that is not in the catalog it was looked up in.
    #[error("{0}")]
    Unknown(String),
    /// Two routes that must agree produced different values.
    #[error("inconsistent result: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, QError>;
