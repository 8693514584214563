//! graph6 encoding (the `nauty`/`networkx` interchange format).
//!
//! Only the vertex counts this crate supports are accepted: the one-byte
//! header for `n <= 62` and the `~` + 18-bit header for `63 <= n <= 64`.

use super::{Graph, GraphError, MAX_VERTICES};

const BIAS: u8 = 63;

pub fn graph6_encode(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else {
        out.push(b'~');
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + BIAS);
        }
    }
    let mut chunk = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            chunk = (chunk << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(chunk + BIAS);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((chunk << (6 - filled)) + BIAS);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

pub fn graph6_decode(text: &str) -> Result<Graph, GraphError> {
    let s = text.trim_end_matches(['\n', '\r']);
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let bytes = s.as_bytes();
    let bad = |msg: &str| GraphError::MalformedGraph6(format!("{msg}: {text:?}"));
    if bytes.is_empty() {
        return Err(bad("empty string"));
    }
    if let Some(&c) = bytes.iter().find(|&&c| !(BIAS..=126).contains(&c)) {
        return Err(bad(&format!("byte {c} outside 63..=126")));
    }
    let (n, body) = if bytes[0] != b'~' {
        ((bytes[0] - BIAS) as usize, &bytes[1..])
    } else {
        if bytes.len() >= 2 && bytes[1] == b'~' {
            return Err(GraphError::TooManyVertices(1 << 18));
        }
        if bytes.len() < 4 {
            return Err(bad("truncated size header"));
        }
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - BIAS) as usize);
        (n, &bytes[4..])
    };
    if n > MAX_VERTICES {
        return Err(GraphError::TooManyVertices(n));
    }
    let pairs = n * n.saturating_sub(1) / 2;
    let expected = pairs.div_ceil(6);
    if body.len() != expected {
        return Err(bad(&format!(
            "expected {expected} data bytes for n={n}, found {}",
            body.len()
        )));
    }
    let mut g = Graph::empty(n)?;
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - BIAS;
            if (byte >> (5 - k % 6)) & 1 == 1 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    if pairs % 6 != 0 {
        let last = body[body.len() - 1] - BIAS;
        let pad = 6 - pairs % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(bad("nonzero padding bits"));
        }
    }
    Ok(g)
}
