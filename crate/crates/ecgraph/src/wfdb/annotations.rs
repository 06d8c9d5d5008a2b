use crate::{Error, Result};

const SKIP: u16 = 59;
const NUM: u16 = 60;
const SUB: u16 = 61;
const CHN: u16 = 62;
const AUX: u16 = 63;

/// Symbol for an MIT annotation beat code, if the code denotes a beat.
fn beat_symbol(code: u16) -> Option<char> {
    Some(match code {
        1 => 'N',
        2 => 'L',
        3 => 'R',
        4 => 'a',
        5 => 'V',
        6 => 'F',
        7 => 'J',
        8 => 'A',
        9 => 'S',
        10 => 'E',
        11 => 'j',
        34 => 'e',
        _ => return None,
    })
}

/// Parse an MIT-format `.atr` stream into `(sample_index, symbol)` beat pairs.
///
/// The stream is a sequence of little-endian 16-bit words holding a 6-bit
/// code and a 10-bit time interval. Interval times accumulate; SKIP words
/// carry a 4-byte signed long interval (most-significant 16-bit half first,
/// each half little-endian). NUM/SUB/CHN carry attributes and AUX carries
/// `interval` bytes of text (odd lengths padded); none of those advance time.
/// Non-beat annotation codes advance time but are not emitted.
pub fn parse_annotations(bytes: &[u8]) -> Result<Vec<(usize, char)>> {
    let mut beats = Vec::new();
    let mut time: i64 = 0;
    let mut pos = 0usize;

    let read_word = |pos: &mut usize| -> Result<u16> {
        if *pos + 2 > bytes.len() {
            return Err(Error::TruncatedAnnotations { offset: *pos });
        }
        let w = u16::from_le_bytes([bytes[*pos], bytes[*pos + 1]]);
        *pos += 2;
        Ok(w)
    };

    loop {
        let word = read_word(&mut pos)?;
        let code = word >> 10;
        let interval = word & 0x3FF;

        if code == 0 && interval == 0 {
            return Ok(beats);
        }

        match code {
            SKIP => {
                let high = read_word(&mut pos)? as u32;
                let low = read_word(&mut pos)? as u32;
                time += ((high << 16) | low) as i32 as i64;
            }
            NUM | SUB | CHN => {}
            AUX => {
                let mut skip = interval as usize;
                if skip % 2 == 1 {
                    skip += 1;
                }
                if pos + skip > bytes.len() {
                    return Err(Error::TruncatedAnnotations { offset: pos });
                }
                pos += skip;
            }
            _ => {
                time += interval as i64;
                if let Some(symbol) = beat_symbol(code) {
                    beats.push((time as usize, symbol));
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(code: u16, interval: u16) -> [u8; 2] {
        ((code << 10) | (interval & 0x3FF)).to_le_bytes()
    }

    #[test]
    fn parses_single_beat() {
        let mut stream = Vec::new();
        stream.extend_from_slice(&word(1, 77));
        stream.extend_from_slice(&word(0, 0));
        assert_eq!(parse_annotations(&stream).unwrap(), vec![(77, 'N')]);
    }

    #[test]
    fn skips_aux_payload_with_pad_byte() {
        let mut stream = Vec::new();
        stream.extend_from_slice(&word(63, 3));
        stream.extend_from_slice(b"(N\0\0"); // 3 aux bytes + 1 pad
        stream.extend_from_slice(&word(5, 10));
        stream.extend_from_slice(&word(0, 0));
        assert_eq!(parse_annotations(&stream).unwrap(), vec![(10, 'V')]);
    }

    #[test]
    fn accumulates_times_across_beats_and_nonbeats() {
        let mut stream = Vec::new();
        stream.extend_from_slice(&word(1, 100));
        stream.extend_from_slice(&word(28, 5)); // rhythm change: advances time, no beat
        stream.extend_from_slice(&word(8, 200));
        stream.extend_from_slice(&word(0, 0));
        assert_eq!(
            parse_annotations(&stream).unwrap(),
            vec![(100, 'N'), (305, 'A')]
        );
    }

    #[test]
    fn skip_word_carries_long_interval() {
        // 100000 = 0x000186A0: high half 0x0001 first, then low half 0x86A0.
        let mut stream = Vec::new();
        stream.extend_from_slice(&word(59, 0));
        stream.extend_from_slice(&0x0001u16.to_le_bytes());
        stream.extend_from_slice(&0x86A0u16.to_le_bytes());
        stream.extend_from_slice(&word(2, 7));
        stream.extend_from_slice(&word(0, 0));
        assert_eq!(parse_annotations(&stream).unwrap(), vec![(100_007, 'L')]);
    }

    #[test]
    fn num_sub_chn_do_not_advance_time() {
        let mut stream = Vec::new();
        stream.extend_from_slice(&word(1, 50));
        stream.extend_from_slice(&word(60, 1));
        stream.extend_from_slice(&word(61, 2));
        stream.extend_from_slice(&word(62, 1));
        stream.extend_from_slice(&word(1, 50));
        stream.extend_from_slice(&word(0, 0));
        assert_eq!(
            parse_annotations(&stream).unwrap(),
            vec![(50, 'N'), (100, 'N')]
        );
    }

    #[test]
    fn errors_on_missing_terminator() {
        let stream = word(1, 77).to_vec();
        match parse_annotations(&stream).unwrap_err() {
            Error::TruncatedAnnotations { offset } => assert_eq!(offset, 2),
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn errors_on_truncated_aux() {
        let mut stream = Vec::new();
        stream.extend_from_slice(&word(63, 6));
        stream.extend_from_slice(b"abc"); // promises 6 bytes, provides 3
        assert!(parse_annotations(&stream).is_err());
    }
}
