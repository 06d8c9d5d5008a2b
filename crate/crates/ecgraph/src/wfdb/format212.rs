use crate::{Error, Result};

/// Decode a format-212 byte stream into two digital sample sequences.
///
/// Each 3-byte group packs one 12-bit two's-complement sample per signal:
/// `s0 = ((b1 & 0x0F) << 8) | b0` and `s1 = ((b1 & 0xF0) << 4) | b2`.
pub fn decode_format212(bytes: &[u8], n_samples_per_signal: usize) -> Result<(Vec<i32>, Vec<i32>)> {
    let needed = n_samples_per_signal * 3;
    if bytes.len() < needed {
        return Err(Error::TruncatedSignal {
            offset: bytes.len(),
        });
    }
    let mut ch0 = Vec::with_capacity(n_samples_per_signal);
    let mut ch1 = Vec::with_capacity(n_samples_per_signal);
    for group in bytes[..needed].chunks_exact(3) {
        let (b0, b1, b2) = (group[0] as u16, group[1] as u16, group[2] as u16);
        ch0.push(sign_extend_12(((b1 & 0x0F) << 8) | b0));
        ch1.push(sign_extend_12(((b1 & 0xF0) << 4) | b2));
    }
    Ok((ch0, ch1))
}

/// Pack two equal-length digital sequences into a format-212 byte stream.
/// Samples are truncated to their low 12 bits.
pub fn encode_format212(ch0: &[i32], ch1: &[i32]) -> Vec<u8> {
    assert_eq!(ch0.len(), ch1.len(), "format 212 interleaves two channels");
    let mut bytes = Vec::with_capacity(ch0.len() * 3);
    for (&s0, &s1) in ch0.iter().zip(ch1) {
        let u0 = (s0 as u16) & 0x0FFF;
        let u1 = (s1 as u16) & 0x0FFF;
        bytes.push((u0 & 0xFF) as u8);
        bytes.push(((u0 >> 8) as u8 & 0x0F) | (((u1 >> 8) as u8 & 0x0F) << 4));
        bytes.push((u1 & 0xFF) as u8);
    }
    bytes
}

fn sign_extend_12(v: u16) -> i32 {
    if v & 0x800 != 0 {
        v as i32 - 4096
    } else {
        v as i32
    }
}
