//! Error type shared by all modules.  Failed checks are not errors — they are
//! `fail` certificates; errors are structural problems (dimension mismatches,
//! singular matrices where nondegeneracy is required, malformed input).

use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    /// Dimensions of the operands do not fit together.
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    /// A nondegenerate matrix or form was required but a singular one was given.
    #[error("nondegenerate required: {0}")]
    Singular(String),

    /// Incompatible algebra kind / operation combination.
    #[error("kind mismatch: {0}")]
    Kind(String),

    /// A documented precondition of an operation does not hold; the payload names
    /// the failed prerequisite check.
    #[error("precondition failed: {0}")]
    Precondition(String),

    /// A basis subset does not span a subalgebra; the payload describes the
    /// witness product that escapes the span.
    #[error("not a subalgebra: {0}")]
    NotSubalgebra(String),

    /// Malformed input data (file parsing, index ranges, duplicate entries).
    #[error("invalid input: {0}")]
    Invalid(String),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
