//! WFDB record ingestion: `.hea` headers, format-212 `.dat` signals and
//! MIT-format `.atr` annotations, plus the AAMI class mapping and the
//! inter-patient train/test record split.

mod annotations;
mod dataset;
mod format212;
mod header;

pub use annotations::parse_annotations;
pub use dataset::{load_dataset, load_record, write_beat_audit, LoadedDataset};
pub use format212::{decode_format212, encode_format212};
pub use header::parse_header;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// The three AAMI beat classes kept by the pipeline.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum AamiClass {
    N,
    S,
    V,
}

impl AamiClass {
    pub const ALL: [AamiClass; 3] = [AamiClass::N, AamiClass::S, AamiClass::V];

    pub fn index(self) -> usize {
        match self {
            AamiClass::N => 0,
            AamiClass::S => 1,
            AamiClass::V => 2,
        }
    }

    pub fn from_index(i: usize) -> Option<AamiClass> {
        Self::ALL.get(i).copied()
    }

    pub fn letter(self) -> char {
        match self {
            AamiClass::N => 'N',
            AamiClass::S => 'S',
            AamiClass::V => 'V',
        }
    }
}

impl std::fmt::Display for AamiClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// Per-signal specification from a header line.
#[derive(Debug, Clone, PartialEq)]
pub struct SignalSpec {
    pub file_name: String,
    pub storage_format: i64,
    /// ADC units per millivolt.
    pub gain: f64,
    /// ADC value corresponding to 0 mV.
    pub adc_zero: i32,
    /// Trailing description token(s), e.g. "MLII" or "V5".
    pub lead_name: String,
}

/// Parsed `.hea` contents.
#[derive(Debug, Clone, PartialEq)]
pub struct RecordHeader {
    pub record_id: String,
    pub n_signals: usize,
    pub sampling_rate: f64,
    pub n_samples: usize,
    pub signals: Vec<SignalSpec>,
}

/// One annotated beat: R-peak sample position plus its class mapping.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AnnotatedBeat {
    pub sample_index: usize,
    pub symbol: char,
    pub aami_class: Option<AamiClass>,
}

/// A fully loaded record: header, lead-II physical signal (mV) and beats.
#[derive(Debug, Clone)]
pub struct EcgRecord {
    pub header: RecordHeader,
    /// Channel index that carried MLII.
    pub lead_index: usize,
    pub lead_ii: Vec<f64>,
    pub beats: Vec<AnnotatedBeat>,
}

/// Map an MIT-BIH annotation symbol onto its AAMI class.
///
/// N covers {N, L, R, e, j}, S covers {A, a, J, S}, V covers {V, E}.
/// Everything else (fusion, paced, unclassifiable, non-beat symbols) maps
/// to `None` and is excluded from the dataset.
pub fn map_symbol(symbol: char) -> Option<AamiClass> {
    match symbol {
        'N' | 'L' | 'R' | 'e' | 'j' => Some(AamiClass::N),
        'A' | 'a' | 'J' | 'S' => Some(AamiClass::S),
        'V' | 'E' => Some(AamiClass::V),
        _ => None,
    }
}

/// Convert one digital sample to millivolts.
pub fn to_physical(digital: i32, gain: f64, adc_zero: i32) -> Result<f64> {
    if gain <= 0.0 {
        return Err(Error::BadGain(gain));
    }
    Ok((digital - adc_zero) as f64 / gain)
}

/// Index of the MLII channel. Not always channel 0: record 114 stores
/// MLII second.
pub fn select_lead_ii(header: &RecordHeader) -> Result<usize> {
    header
        .signals
        .iter()
        .position(|s| s.lead_name == "MLII")
        .ok_or_else(|| Error::BadRecord {
            record: header.record_id.clone(),
            reason: format!(
                "no MLII lead among {:?}",
                header
                    .signals
                    .iter()
                    .map(|s| s.lead_name.as_str())
                    .collect::<Vec<_>>()
            ),
        })
}

/// The 22/22 inter-patient record split (records 102, 104, 107 and 217
/// are excluded from both sides).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DatasetSplit {
    pub train_ids: Vec<String>,
    pub test_ids: Vec<String>,
}

pub const TRAIN_RECORD_IDS: [&str; 22] = [
    "101", "106", "108", "109", "112", "114", "115", "116", "118", "119", "122", "124", "201",
    "203", "205", "207", "208", "209", "215", "220", "223", "230",
];

pub const TEST_RECORD_IDS: [&str; 22] = [
    "100", "103", "105", "111", "113", "117", "121", "123", "200", "202", "210", "212", "213",
    "214", "219", "221", "222", "228", "231", "232", "233", "234",
];

impl DatasetSplit {
    /// The standard inter-patient split over the 44 retained records.
    pub fn inter_patient() -> DatasetSplit {
        DatasetSplit {
            train_ids: TRAIN_RECORD_IDS.iter().map(|s| s.to_string()).collect(),
            test_ids: TEST_RECORD_IDS.iter().map(|s| s.to_string()).collect(),
        }
    }

    pub fn all_ids(&self) -> Vec<String> {
        let mut ids = self.train_ids.clone();
        ids.extend(self.test_ids.iter().cloned());
        ids
    }
}
