use std::fs;
use std::io::Write;
use std::path::Path;

use rayon::prelude::*;

use crate::{Error, Result, SAMPLING_RATE_HZ};

use super::{
    decode_format212, map_symbol, parse_annotations, parse_header, select_lead_ii, AnnotatedBeat,
    DatasetSplit, EcgRecord,
};

/// Train and test records, in split order.
#[derive(Debug, Clone)]
pub struct LoadedDataset {
    pub train: Vec<EcgRecord>,
    pub test: Vec<EcgRecord>,
}

/// Load one record (`.hea` + `.dat` + `.atr`) from `dir`.
pub fn load_record(dir: &Path, record_id: &str) -> Result<EcgRecord> {
    let hea_path = dir.join(format!("{record_id}.hea"));
    let header_text =
        fs::read_to_string(&hea_path).map_err(|e| Error::io(&hea_path, e))?;
    let header = parse_header(&header_text)?;

    let reject = |reason: String| Error::BadRecord {
        record: record_id.to_string(),
        reason,
    };
    if header.record_id != record_id {
        return Err(reject(format!(
            "header names record {:?}",
            header.record_id
        )));
    }
    if header.n_signals != 2 {
        return Err(reject(format!("{} signals, expected 2", header.n_signals)));
    }
    if header.sampling_rate != SAMPLING_RATE_HZ {
        return Err(reject(format!(
            "sampling rate {} Hz, expected {} Hz",
            header.sampling_rate, SAMPLING_RATE_HZ
        )));
    }

    let lead_index = select_lead_ii(&header)?;
    let spec = &header.signals[lead_index];

    let dat_path = dir.join(format!("{record_id}.dat"));
    let dat_bytes = fs::read(&dat_path).map_err(|e| Error::io(&dat_path, e))?;
    let (ch0, ch1) = decode_format212(&dat_bytes, header.n_samples)?;
    let digital = if lead_index == 0 { ch0 } else { ch1 };

    if spec.gain <= 0.0 {
        return Err(Error::BadGain(spec.gain));
    }
    let lead_ii: Vec<f64> = digital
        .iter()
        .map(|&d| (d - spec.adc_zero) as f64 / spec.gain)
        .collect();

    let atr_path = dir.join(format!("{record_id}.atr"));
    let atr_bytes = fs::read(&atr_path).map_err(|e| Error::io(&atr_path, e))?;
    let beats: Vec<AnnotatedBeat> = parse_annotations(&atr_bytes)?
        .into_iter()
        .map(|(sample_index, symbol)| AnnotatedBeat {
            sample_index,
            symbol,
            aami_class: map_symbol(symbol),
        })
        .collect();

    for pair in beats.windows(2) {
        if pair[1].sample_index <= pair[0].sample_index {
            return Err(reject(format!(
                "annotation times not strictly increasing at sample {}",
                pair[1].sample_index
            )));
        }
    }
    if let Some(last) = beats.last() {
        if last.sample_index >= header.n_samples {
            return Err(reject(format!(
                "annotation at sample {} beyond record end {}",
                last.sample_index, header.n_samples
            )));
        }
    }

    Ok(EcgRecord {
        header,
        lead_index,
        lead_ii,
        beats,
    })
}

/// Load every record of the split. All missing files are reported together
/// before any record is parsed.
pub fn load_dataset(dir: &Path, split: &DatasetSplit) -> Result<LoadedDataset> {
    let mut missing = Vec::new();
    for id in split.all_ids() {
        for ext in ["hea", "dat", "atr"] {
            if !dir.join(format!("{id}.{ext}")).exists() {
                missing.push(format!("{id}.{ext}"));
            }
        }
    }
    if !missing.is_empty() {
        return Err(Error::MissingRecords(missing));
    }

    // Records are independent; load them in parallel, keeping split order.
    let load_all = |ids: &[String]| -> Result<Vec<EcgRecord>> {
        ids.par_iter().map(|id| load_record(dir, id)).collect()
    };
    Ok(LoadedDataset {
        train: load_all(&split.train_ids)?,
        test: load_all(&split.test_ids)?,
    })
}

/// Write the per-record beat audit CSV: `sample_index,symbol,aami_class`.
pub fn write_beat_audit(record: &EcgRecord, path: &Path) -> Result<()> {
    let mut out = fs::File::create(path).map_err(|e| Error::io(path, e))?;
    writeln!(out, "sample_index,symbol,aami_class").map_err(|e| Error::io(path, e))?;
    for beat in &record.beats {
        let class = beat
            .aami_class
            .map(|c| c.letter().to_string())
            .unwrap_or_default();
        writeln!(out, "{},{},{}", beat.sample_index, beat.symbol, class)
            .map_err(|e| Error::io(path, e))?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::wfdb::DatasetSplit;

    #[test]
    fn empty_directory_reports_all_missing_files() {
        let dir = tempfile::tempdir().unwrap();
        let err = load_dataset(dir.path(), &DatasetSplit::inter_patient()).unwrap_err();
        match err {
            Error::MissingRecords(files) => {
                assert_eq!(files.len(), 44 * 3);
                assert!(files.contains(&"100.hea".to_string()));
                assert!(files.contains(&"230.atr".to_string()));
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn missing_record_error_names_the_record() {
        let dir = tempfile::tempdir().unwrap();
        let err = load_record(dir.path(), "100").unwrap_err();
        assert!(err.to_string().contains("100.hea"));
    }
}
