use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// `a / b` has no solution in the context.
    #[error("not divisible: {0}")]
    NotDivisible(String),
    /// Operands or inputs have the wrong shape or belong to another context.
    #[error("malformed input: {0}")]
    Malformed(String),
    /// The operation is not available for this context.
    #[error("unsupported: {0}")]
    Unsupported(String),
    /// An index lies outside its documented range.
    #[error("index out of range: {0}")]
    OutOfRange(String),
    /// An element does not lie in the requested module.
    #[error("not in module: {0}")]
    NotInModule(String),
    /// A documented precondition is violated.
    #[error("precondition violated: {0}")]
    Precondition(String),
    /// Internal equations disagree. Indicates invalid input data.
    #[error("inconsistent: {0}")]
    Inconsistent(String),
    /// A literal could not be parsed. `pos` is a 0-based character offset.
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
