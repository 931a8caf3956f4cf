//! Crate-wide error type.

use std::path::PathBuf;

/// Errors produced anywhere in the pipeline.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{path}: malformed row {row}: {reason}")]
    MalformedRow {
        path: PathBuf,
        row: usize,
        reason: String,
    },

    #[error("non-monotone timestamp at row {row}")]
    NonMonotoneTimestamp { row: usize },

    #[error("series has {n} samples, need at least 2")]
    TooFewSamples { n: usize },

    #[error("channel {axis:?} has length {len}, expected {expected}")]
    ChannelLengthMismatch {
        axis: String,
        len: usize,
        expected: usize,
    },

    #[error("missing column {column:?} in header")]
    MissingColumn { column: String },

    #[error("axis {axis:?} is constant (max == min); cannot rescale")]
    ConstantSeries { axis: String },

    #[error("value {value} at index {index} outside the arccos domain [-1, 1]")]
    Domain { value: f64, index: usize },

    #[error(
        "segment {segment} of modality {modality:?} holds {size} indices, needs {required}"
    )]
    SegmentTooSmall {
        modality: String,
        segment: usize,
        size: usize,
        required: usize,
    },

    #[error("modality {modality:?} not in sample plan")]
    UnknownModality { modality: String },

    #[error("plan expects length {expected} for modality {modality:?}, input has {actual}")]
    PlanMismatch {
        modality: String,
        expected: usize,
        actual: usize,
    },

    #[error("shape mismatch: {context}")]
    ShapeMismatch { context: String },

    #[error("{path}: bad file format: {reason}")]
    Format { path: PathBuf, reason: String },

    #[error("config line {line}: {reason}")]
    Config { line: usize, reason: String },

    #[error("invalid synthetic spec: {reason}")]
    InvalidSpec { reason: String },

    #[error("refusing to overwrite {path} (pass --force to allow)")]
    WouldOverwrite { path: PathBuf },

    #[error("training diverged at epoch {epoch}: loss is not finite")]
    Diverged { epoch: usize },

    #[error("evaluation split is empty")]
    EmptySplit,
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    pub(crate) fn format(path: impl Into<PathBuf>, reason: impl Into<String>) -> Self {
        Error::Format {
            path: path.into(),
            reason: reason.into(),
        }
    }

    pub(crate) fn shape(context: impl Into<String>) -> Self {
        Error::ShapeMismatch {
            context: context.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
