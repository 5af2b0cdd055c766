use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("cannot read {path}: {source}")]
    Input {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{path}: {field}: {message}")]
    Format {
        path: PathBuf,
        /// Header field (or format property) that was rejected.
        field: &'static str,
        message: String,
    },

    #[error("mask is {mask_width}x{mask_height} but image is {image_width}x{image_height}")]
    DimensionMismatch {
        image_width: usize,
        image_height: usize,
        mask_width: usize,
        mask_height: usize,
    },

    #[error("empty ROI")]
    EmptyRoi,

    #[error("no valid pixel pairs for offset ({dx}, {dy})")]
    EmptyPairs { dx: i32, dy: i32 },

    #[error("no runs in direction {degrees} degrees")]
    EmptyRuns { degrees: u32 },

    #[error("cannot normalize an all-zero {0}")]
    DivisionByZero(&'static str),

    #[error("sample {id}: {source}")]
    Sample {
        id: String,
        #[source]
        source: Box<Error>,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("training failed: {0}")]
    Training(String),

    #[error("non-finite feature value in sample {id}")]
    NonFinite { id: String },

    #[error("expected {expected} features, got {found}")]
    FeatureDimension { expected: usize, found: usize },

    #[error("fold {fold}: {source}")]
    Fold {
        fold: usize,
        #[source]
        source: Box<Error>,
    },

    #[error("CSV header mismatch: expected [{expected}], found [{found}]")]
    Header { expected: String, found: String },

    #[error("row {row}, column {column}: {message}")]
    Cell {
        row: usize,
        column: String,
        message: String,
    },

    #[error("unknown label {0:?} (expected \"normal\" or \"finding\")")]
    Vocabulary(String),

    #[error("duplicate sample id {0:?}")]
    DuplicateId(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn for_sample(self, id: &str) -> Error {
        Error::Sample {
            id: id.to_owned(),
            source: Box::new(self),
        }
    }
}
