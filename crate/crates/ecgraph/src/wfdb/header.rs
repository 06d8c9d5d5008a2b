use crate::{Error, Result};

use super::{RecordHeader, SignalSpec};

/// Parse the contents of a WFDB `.hea` file.
///
/// Expected layout: a record line `ID nsig fs nsamples` (extra trailing
/// fields like base time are ignored), followed by one line per signal:
/// `file format gain adc_res adc_zero init_value checksum block_size description`.
/// Comment lines start with `#`.
pub fn parse_header(text: &str) -> Result<RecordHeader> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));

    let record_line = lines.next().ok_or_else(|| Error::MalformedHeader {
        record: "<unknown>".into(),
        reason: "empty header".into(),
    })?;
    let tokens: Vec<&str> = record_line.split_whitespace().collect();
    if tokens.len() < 4 {
        return Err(Error::MalformedHeader {
            record: tokens.first().copied().unwrap_or("<unknown>").into(),
            reason: format!("record line has {} fields, expected at least 4", tokens.len()),
        });
    }
    let record_id = tokens[0].to_string();
    let bad_field = |field: &str, value: &str| Error::MalformedHeader {
        record: record_id.clone(),
        reason: format!("non-numeric {field}: {value:?}"),
    };

    let n_signals: usize = tokens[1]
        .parse()
        .map_err(|_| bad_field("signal count", tokens[1]))?;
    // The sampling-rate field may carry a counter rate after '/'.
    let fs_token = tokens[2].split('/').next().unwrap_or(tokens[2]);
    let sampling_rate: f64 = fs_token
        .parse()
        .map_err(|_| bad_field("sampling rate", tokens[2]))?;
    let n_samples: usize = tokens[3]
        .parse()
        .map_err(|_| bad_field("sample count", tokens[3]))?;

    let mut signals = Vec::with_capacity(n_signals);
    for i in 0..n_signals {
        let line = lines.next().ok_or_else(|| Error::MalformedHeader {
            record: record_id.clone(),
            reason: format!("expected {} signal lines, found {}", n_signals, i),
        })?;
        signals.push(parse_signal_line(&record_id, line)?);
    }

    for spec in &signals {
        if spec.storage_format != 212 {
            return Err(Error::UnsupportedFormat {
                record: record_id,
                format: spec.storage_format,
            });
        }
    }

    Ok(RecordHeader {
        record_id,
        n_signals,
        sampling_rate,
        n_samples,
        signals,
    })
}

fn parse_signal_line(record_id: &str, line: &str) -> Result<SignalSpec> {
    let tokens: Vec<&str> = line.split_whitespace().collect();
    if tokens.len() < 9 {
        return Err(Error::MalformedHeader {
            record: record_id.to_string(),
            reason: format!("signal line has {} fields, expected at least 9: {line:?}", tokens.len()),
        });
    }
    let bad_field = |field: &str, value: &str| Error::MalformedHeader {
        record: record_id.to_string(),
        reason: format!("non-numeric {field}: {value:?}"),
    };

    // Format may carry a samples-per-frame or skew suffix ("212x2", "212:1").
    let format_token: String = tokens[1]
        .chars()
        .take_while(|c| c.is_ascii_digit())
        .collect();
    let storage_format: i64 = format_token
        .parse()
        .map_err(|_| bad_field("storage format", tokens[1]))?;

    // Gain may carry a baseline "(b)" and units "/mV" suffix.
    let gain_token: String = tokens[2]
        .chars()
        .take_while(|&c| c != '(' && c != '/')
        .collect();
    let gain: f64 = gain_token
        .parse()
        .map_err(|_| bad_field("gain", tokens[2]))?;

    let adc_zero: i32 = tokens[4]
        .parse()
        .map_err(|_| bad_field("adc zero", tokens[4]))?;

    // Remaining numeric fields (adc_res, init, checksum, block size) are
    // parsed only to validate the line shape.
    for (name, idx) in [("adc resolution", 3), ("initial value", 5), ("checksum", 6), ("block size", 7)] {
        tokens[idx]
            .parse::<i64>()
            .map_err(|_| bad_field(name, tokens[idx]))?;
    }

    Ok(SignalSpec {
        file_name: tokens[0].to_string(),
        storage_format,
        gain,
        adc_zero,
        lead_name: tokens[8..].join(" "),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::wfdb::select_lead_ii;

    // The distributed MIT-BIH header for record 100.
    const HEADER_100: &str = "100 2 360 650000 0:0:0 0/0/0\n\
        100.dat 212 200 11 1024 995 -22131 0 MLII\n\
        100.dat 212 200 11 1024 1011 20052 0 V5\n\
        # 69 M 1085 1629 x1\n\
        # Aldomet, Inderal\n";

    // Record 114 carries MLII on the second channel.
    const HEADER_114: &str = "114 2 360 650000\n\
        114.dat 212 200 11 1024 -20 -2418 0 V5\n\
        114.dat 212 200 11 1024 -49 -20505 0 MLII\n";

    #[test]
    fn parses_record_100_header() {
        let h = parse_header(HEADER_100).unwrap();
        assert_eq!(h.record_id, "100");
        assert_eq!(h.n_signals, 2);
        assert_eq!(h.sampling_rate, 360.0);
        assert_eq!(h.n_samples, 650_000);
        let leads: Vec<_> = h.signals.iter().map(|s| s.lead_name.as_str()).collect();
        assert_eq!(leads, ["MLII", "V5"]);
        assert_eq!(h.signals[0].gain, 200.0);
        assert_eq!(h.signals[0].adc_zero, 1024);
        assert_eq!(select_lead_ii(&h).unwrap(), 0);
    }

    #[test]
    fn parses_record_114_header_with_mlii_second() {
        let h = parse_header(HEADER_114).unwrap();
        assert_eq!(select_lead_ii(&h).unwrap(), 1);
    }

    #[test]
    fn parses_synthetic_minimal_header() {
        let text = "X 2 360 10\n\
            X.dat 212 200 11 0 0 0 0 MLII\n\
            X.dat 212 200 11 0 0 0 0 V5\n";
        let h = parse_header(text).unwrap();
        assert_eq!(h.n_samples, 10);
        assert_eq!(h.record_id, "X");
    }

    #[test]
    fn rejects_format_16() {
        let text = "X 2 360 10\n\
            X.dat 16 200 11 0 0 0 0 MLII\n\
            X.dat 16 200 11 0 0 0 0 V5\n";
        let err = parse_header(text).unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("unsupported storage format"), "{msg}");
        assert!(msg.contains('X'), "{msg}");
    }

    #[test]
    fn rejects_missing_signal_lines() {
        let text = "X 2 360 10\nX.dat 212 200 11 0 0 0 0 MLII\n";
        assert!(parse_header(text).is_err());
    }

    #[test]
    fn rejects_non_numeric_fields() {
        let text = "X 2 abc 10\n\
            X.dat 212 200 11 0 0 0 0 MLII\n\
            X.dat 212 200 11 0 0 0 0 V5\n";
        let err = parse_header(text).unwrap_err();
        assert!(err.to_string().contains("sampling rate"));
    }

    #[test]
    fn rejects_header_without_mlii() {
        let text = "X 2 360 10\n\
            X.dat 212 200 11 0 0 0 0 V5\n\
            X.dat 212 200 11 0 0 0 0 V2\n";
        let h = parse_header(text).unwrap();
        assert!(select_lead_ii(&h).is_err());
    }
}
