//! Error type shared by the whole crate.

use alloc::string::String;

/// Errors raised by fallible operations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// Two operands live in symmetric groups of different degree.
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch {
        /// Degree of the left operand.
        left: usize,
        /// Degree of the right operand.
        right: usize,
    },
    /// Text could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),
    /// A sequence is not a permutation of `1..=n`.
    #[error("not a permutation: {0}")]
    InvalidPermutation(String),
    /// A precondition of an operation does not hold.
    #[error("precondition violated: {0}")]
    Precondition(String),
    /// Integer coefficient arithmetic overflowed `i64`.
    #[error("coefficient overflow")]
    Overflow,
    /// The degree is outside the range supported by table-based code.
    #[error("degree {0} is not supported here")]
    UnsupportedDegree(usize),
}

/// Crate result alias.
pub type Result<T> = core::result::Result<T, Error>;
