use thiserror::Error;

use crate::perm::Pattern;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty permutation")]
    Empty,

    #[error("invalid token {token:?}: not a positive integer")]
    BadToken { token: String },

    #[error("duplicate value {token:?}")]
    Duplicate { token: String },

    #[error("value {token:?} out of range 1..{n}")]
    OutOfRange { token: String, n: usize },

    #[error("compact digit form {token:?} is only accepted for n <= 9")]
    CompactTooLong { token: String },

    #[error("{perm} contains a {pattern} pattern")]
    ContainsPattern { perm: String, pattern: Pattern },

    #[error("not a template: row {row} has no admissible square")]
    NotATemplate { row: usize },

    #[error("square ({row},{col}) lies outside the {n}x{n} grid")]
    SquareOutOfGrid { row: usize, col: usize, n: usize },

    #[error("inserting {value} would need a third tableau row")]
    ThirdRow { value: usize },

    #[error("malformed tableau: {0}")]
    MalformedTableau(String),

    #[error("invalid Dyck path {word:?}: {reason}")]
    InvalidDyck { word: String, reason: String },

    #[error("size mismatch: expected n={expected}, got n={actual}")]
    SizeMismatch { expected: usize, actual: usize },

    #[error("n={n} is outside the supported range 1..={cap}")]
    NOutOfRange { n: usize, cap: usize },

    #[error("unknown check {0:?}")]
    UnknownCheck(String),

    #[error("gamma rewriting did not terminate within {cap} steps on {perm}")]
    SafetyCapExceeded { perm: String, cap: usize },
}
