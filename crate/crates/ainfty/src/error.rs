use thiserror::Error;

/// Errors surfaced by the engine. Diagnostic reports (axiom checkers) are
/// values, not errors; this type covers genuine preconditions and I/O.
#[derive(Debug, Error)]
pub enum Error {
    #[error("field mismatch: {0}")]
    FieldMismatch(String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("connective input required: {0}")]
    NotConnective(String),
    #[error("non-split semisimple quotient: {0}")]
    NonSplit(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("invalid retraction: {0}")]
    InvalidRetraction(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("axiom violation: {0}")]
    AxiomViolation(String),
    #[error("internal check failed: {0}")]
    Internal(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
