use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error)]
pub enum Error {
    /// An argument violates a documented precondition.
    #[error("invalid input: {0}")]
    InvalidInput(String),
    /// An evaluation point leaves the domain [0, 1].
    #[error("domain violation: {0}")]
    DomainViolation(String),
    /// The requested operation needs a capability the input does not have
    /// (e.g. an exact derivative of a non-differentiable descriptor).
    #[error("capability: {0}")]
    Capability(String),
    /// A numerical computation failed to meet its own consistency checks.
    #[error("computation: {0}")]
    Computation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
