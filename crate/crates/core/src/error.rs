use thiserror::Error;

/// Errors raised by the algebra engine, the ring constructors and the
/// classifier. Every variant carries a human-readable message.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Operands built over different generator lists.
    #[error("structural error: {0}")]
    Structural(String),
    /// An operation was called outside its precondition (non-homogeneous
    /// input, non-cocycle class, wrong degree, ...).
    #[error("precondition violated: {0}")]
    Precondition(String),
    /// A parameter outside the supported range.
    #[error("domain error: {0}")]
    Domain(String),
    /// Ring arithmetic requested for a space that carries none.
    #[error("unsupported space: {0}")]
    UnsupportedSpace(String),
    #[error("parse error: {0}")]
    Parse(String),
    /// The Massey engine disagreed with the decision table.
    #[error("cross-check failure: {0}")]
    CrossCheck(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
