//! Error type shared across the crate.

use thiserror::Error;

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

/// Failure modes of the clustering and reporting pipeline.
#[derive(Debug, Error)]
pub enum Error {
    /// Two coordinate sequences of different lengths were combined.
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    /// A configuration value is unusable (k = 0, k > n, zero iteration cap).
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    /// Input data violates a documented precondition.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A CSV row does not have the expected number of fields.
    #[error("row {row}: expected {expected} fields, found {found}")]
    RaggedRow {
        row: usize,
        expected: usize,
        found: usize,
    },

    /// A score cell failed to parse as a number.
    #[error("row {row}, column {col}: {value:?} is not a number")]
    NonNumericCell {
        row: usize,
        col: usize,
        value: String,
    },

    /// A score lies outside the accepted [0, 100] range.
    #[error("row {row}, column {col}: score {value} is outside [0, 100]")]
    ScoreOutOfRange { row: usize, col: usize, value: f64 },

    /// Two rows carry the same student id.
    #[error("duplicate student id {id:?}")]
    DuplicateId { id: String },

    /// The input contains no data rows.
    #[error("empty input: no data rows")]
    EmptyInput,

    /// An internal invariant was violated; indicates a bug, not a user error.
    #[error("internal consistency: {0}")]
    Internal(String),

    /// A chart was requested for a k that the report does not contain.
    #[error("k = {k} is not present in the report")]
    KNotInReport { k: usize },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("malformed report: {0}")]
    Json(#[from] serde_json::Error),
}
