//! Crate-wide error type.

use std::path::PathBuf;

use thiserror::Error;

/// Errors produced anywhere in the pipeline.
#[derive(Debug, Error)]
pub enum Error {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("line {line}, field {field}: cannot parse {token:?} as {expected}")]
    Parse {
        line: usize,
        field: usize,
        token: String,
        expected: &'static str,
    },

    #[error("line {line}, field {field}: non-finite value {token:?}")]
    NonFiniteValue {
        line: usize,
        field: usize,
        token: String,
    },

    #[error("line {line}: empty series after label removal")]
    EmptySeries { line: usize },

    #[error("empty series")]
    EmptyInput,

    #[error("need at least 2 series, got {n}")]
    TooFewSeries { n: usize },

    #[error("pair sample spans {sample_n} series but dataset has {dataset_n}")]
    SampleMismatch { sample_n: usize, dataset_n: usize },

    #[error("index {index} out of range for order {n}")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("duplicate entry ({i}, {j})")]
    DuplicateEntry { i: usize, j: usize },

    #[error("diagonal entry ({row}, {row}) is not observed")]
    MissingDiagonal { row: usize },

    #[error("{path}: line {line}: {reason}")]
    Format {
        path: PathBuf,
        line: usize,
        reason: String,
    },

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("observed matrix has zero norm")]
    ZeroNormMatrix,

    #[error("numeric failure: {0}")]
    Numeric(String),

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("k-means needs 1 <= k <= n, got k={k} with n={n}")]
    InvalidK { k: usize, n: usize },

    #[error("binary AUC needs exactly two classes, found {found}")]
    NotBinary { found: usize },
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
