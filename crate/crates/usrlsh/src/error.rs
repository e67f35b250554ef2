//! Error type shared across the crate.

use thiserror::Error;

/// Errors produced by hashing, indexing, storage and evaluation.
#[derive(Debug, Error)]
pub enum Error {
    /// A dimension parameter was zero or otherwise unusable.
    #[error("invalid dimension: {0}")]
    InvalidDimension(String),

    /// An input vector's length does not match the configured dimension.
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    /// An input contained NaN or infinite entries.
    #[error("non-finite input at index {index}")]
    NonFinite { index: usize },

    /// The dataset has no usable norm statistics (e.g. all points are zero).
    #[error("degenerate dataset: {0}")]
    DegenerateDataset(String),

    /// An invalid parameter combination was requested.
    #[error("configuration error: {0}")]
    Config(String),

    /// An id is already present in the store.
    #[error("duplicate id: {0}")]
    DuplicateId(u64),

    /// An id was not found in the store or code table.
    #[error("unknown id: {0}")]
    UnknownId(u64),

    /// The operation is not available in the store's current mode.
    #[error("unsupported operation: {0}")]
    Unsupported(String),

    /// A file did not match the expected on-disk format.
    #[error("format error: {0}")]
    Format(String),

    /// A file ended early or its contents are internally inconsistent.
    #[error("corrupt file: {0}")]
    Corrupt(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
