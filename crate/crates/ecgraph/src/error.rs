use std::path::PathBuf;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("record {record}: malformed header: {reason}")]
    MalformedHeader { record: String, reason: String },

    #[error("record {record}: unsupported storage format {format} (only 212 is supported)")]
    UnsupportedFormat { record: String, format: i64 },

    #[error("record {record}: {reason}")]
    BadRecord { record: String, reason: String },

    #[error("truncated format-212 stream at byte offset {offset}")]
    TruncatedSignal { offset: usize },

    #[error("annotation stream ended before terminator (offset {offset})")]
    TruncatedAnnotations { offset: usize },

    #[error("missing data files for records: {0:?}")]
    MissingRecords(Vec<String>),

    #[error("gain must be positive, got {0}")]
    BadGain(f64),

    #[error("moving average window must be >= 1")]
    EmptyWindow,

    #[error("signal too short: {len} samples, need more than {min}")]
    SignalTooShort { len: usize, min: usize },

    #[error("invalid band edges: low {low} Hz, high {high} Hz at fs {fs} Hz")]
    BadBandEdges { low: f64, high: f64, fs: f64 },

    #[error("need at least {min} rows, got {got}")]
    TooFewRows { got: usize, min: usize },

    #[error("prediction/label length mismatch: {predictions} vs {labels}")]
    LengthMismatch { predictions: usize, labels: usize },

    #[error("non-finite {what} at epoch {epoch}; training aborted")]
    Diverged { what: String, epoch: usize },

    #[error("stage `{stage}` requires `{missing}`; run the `{produced_by}` stage first")]
    MissingArtifact {
        stage: String,
        missing: String,
        produced_by: String,
    },

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{path}: {reason}")]
    BadArtifact { path: PathBuf, reason: String },

    #[error("config error: {0}")]
    Config(String),
}

impl Error {
    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    pub fn artifact(path: impl Into<PathBuf>, reason: impl Into<String>) -> Self {
        Error::BadArtifact {
            path: path.into(),
            reason: reason.into(),
        }
    }
}
