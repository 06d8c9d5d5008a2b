//! Correlation-graph arrhythmia classifier for MIT-BIH lead-II ECG.
//!
//! The pipeline parses WFDB records, removes baseline wander, bandpass-filters
//! the signal, segments beats around annotated R peaks, extracts 20 per-beat
//! features, builds a Pearson-correlation adjacency graph over the training
//! features, and trains a GraphSAGE + linear fusion classifier over the AAMI
//! N/S/V classes under an inter-patient record split.

pub mod error;
pub mod features;
pub mod fiducials;
pub mod graph;
pub mod metrics;
pub mod model;
pub mod pipeline;
pub mod preprocess;
pub mod synth;
pub mod wfdb;

pub use error::{Error, Result};

/// MIT-BIH sampling rate in Hz; every accepted record must match it.
pub const SAMPLING_RATE_HZ: f64 = 360.0;

/// Samples kept before the R peak in a beat segment.
pub const SEGMENT_PRE: usize = 86;
/// Samples kept after the R peak in a beat segment.
pub const SEGMENT_POST: usize = 130;
/// Total beat segment length (R sample included).
pub const SEGMENT_LEN: usize = SEGMENT_PRE + 1 + SEGMENT_POST;
/// Offset of the R peak inside a segment.
pub const R_OFFSET: usize = SEGMENT_PRE;
