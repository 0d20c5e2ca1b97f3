//! The `sg6` line format: `<graph6>:<hex>`.
//!
//! `<graph6>` is the standard graph6 encoding of the underlying graph
//! (column-major upper-triangle bits, 6 bits per printable byte). `<hex>`
//! carries one bit per edge in lexicographic `(i,j)`, `i < j` order —
//! bit 1 means negative — packed most-significant-bit first into lowercase
//! hex digits and zero-padded to `ceil(m/4)` digits. `#`-prefixed lines in
//! sg6 files are comments.

use super::{Sign, SignedGraph};
use crate::error::{Error, Result};
use crate::MAX_N;
use std::io::BufRead;

fn graph6_append_n(out: &mut Vec<u8>, n: usize) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        // 18-bit form, big-endian 6-bit groups.
        out.push(b'~');
        out.push(((n >> 12) & 0x3f) as u8 + 63);
        out.push(((n >> 6) & 0x3f) as u8 + 63);
        out.push((n & 0x3f) as u8 + 63);
    }
}

fn graph6_encode_underlying(g: &SignedGraph) -> String {
    let n = g.order();
    let mut out = Vec::new();
    graph6_append_n(&mut out, n);
    let mut acc = 0u8;
    let mut nbits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            nbits += 1;
            if nbits == 6 {
                out.push(acc + 63);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        out.push((acc << (6 - nbits)) + 63);
    }
    String::from_utf8(out).unwrap()
}

/// Parses the graph6 part; returns `(n, upper-triangle bits in column-major
/// order)` where bit `(i,j)` for `i < j` is at position
/// `j(j-1)/2 + i`.
fn graph6_decode_underlying(bytes: &[u8], base: usize) -> Result<(usize, Vec<bool>)> {
    if bytes.is_empty() {
        return Err(Error::parse(base, "empty graph6 field"));
    }
    let (n, pos) = if bytes[0] == b'~' {
        if bytes.len() >= 2 && bytes[1] == b'~' {
            return Err(Error::parse(base, "graph6 orders above 258047 are not supported"));
        }
        if bytes.len() < 4 {
            return Err(Error::parse(base, "truncated graph6 size field"));
        }
        for (k, b) in bytes.iter().enumerate().take(4).skip(1) {
            if !(63..=126).contains(b) {
                return Err(Error::parse(base + k, "invalid graph6 byte"));
            }
        }
        let n = (((bytes[1] - 63) as usize) << 12)
            | (((bytes[2] - 63) as usize) << 6)
            | ((bytes[3] - 63) as usize);
        (n, 4)
    } else {
        if !(63..=126).contains(&bytes[0]) {
            return Err(Error::parse(base, "invalid graph6 byte"));
        }
        ((bytes[0] - 63) as usize, 1)
    };
    if n > MAX_N {
        return Err(Error::parse(base, format!("order {n} exceeds the cap of {MAX_N}")));
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let nbytes = nbits.div_ceil(6);
    if bytes.len() - pos != nbytes {
        return Err(Error::parse(
            base + pos,
            format!("graph6 body has {} bytes, expected {}", bytes.len() - pos, nbytes),
        ));
    }
    let mut bits = Vec::with_capacity(nbits);
    for (k, &b) in bytes[pos..].iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Error::parse(base + pos + k, "invalid graph6 byte"));
        }
        let v = b - 63;
        for t in (0..6).rev() {
            if bits.len() < nbits {
                bits.push(v & (1 << t) != 0);
            } else if v & (1 << t) != 0 {
                return Err(Error::parse(base + pos + k, "nonzero padding in graph6 body"));
            }
        }
    }
    Ok((n, bits))
}

/// Encodes a signed graph as one sg6 line.
pub fn encode_sg6(g: &SignedGraph) -> String {
    let mut line = graph6_encode_underlying(g);
    line.push(':');
    let m = g.size();
    let mut digits = vec![0u8; m.div_ceil(4)];
    for (k, (_, _, s)) in g.edges().enumerate() {
        if s == Sign::Minus {
            digits[k / 4] |= 8 >> (k % 4);
        }
    }
    for d in digits {
        line.push(char::from_digit(d as u32, 16).unwrap());
    }
    line
}

/// Decodes one sg6 line. Round-trips exactly with [`encode_sg6`].
pub fn decode_sg6(line: &str) -> Result<SignedGraph> {
    let line = line.trim_end_matches(['\r', '\n']);
    let bytes = line.as_bytes();
    let sep = match bytes.iter().position(|&b| b == b':') {
        Some(p) => p,
        None => return Err(Error::parse(line.len(), "missing ':' separator")),
    };
    let (n, tri) = graph6_decode_underlying(&bytes[..sep], 0)?;
    let mut adj = vec![0u64; n];
    let mut m = 0usize;
    for j in 1..n {
        for i in 0..j {
            if tri[j * (j - 1) / 2 + i] {
                adj[i] |= 1u64 << j;
                adj[j] |= 1u64 << i;
                m += 1;
            }
        }
    }
    let hex = &bytes[sep + 1..];
    let want = m.div_ceil(4);
    if hex.len() != want {
        return Err(Error::parse(
            sep + 1,
            format!("sign field has {} hex digits, expected {} for {} edges", hex.len(), want, m),
        ));
    }
    let mut sign_bits = Vec::with_capacity(m);
    for (k, &b) in hex.iter().enumerate() {
        let d = (b as char)
            .to_digit(16)
            .ok_or_else(|| Error::parse(sep + 1 + k, "invalid hex digit in sign field"))? as u8;
        for t in (0..4).rev() {
            if sign_bits.len() < m {
                sign_bits.push(d & (1 << t) != 0);
            } else if d & (1 << t) != 0 {
                return Err(Error::parse(sep + 1 + k, "nonzero padding in sign field"));
            }
        }
    }
    let mut neg = vec![0u64; n];
    let mut k = 0;
    for i in 0..n {
        for j in (i + 1)..n {
            if adj[i] & (1u64 << j) != 0 {
                if sign_bits[k] {
                    neg[i] |= 1u64 << j;
                    neg[j] |= 1u64 << i;
                }
                k += 1;
            }
        }
    }
    Ok(SignedGraph::from_rows(n, adj, neg))
}

/// Reads sg6 lines from a reader, skipping blank and `#`-comment lines.
/// Returns `(line_number, graph)` pairs; line numbers are 1-based.
pub fn read_sg6_lines<R: BufRead>(reader: R) -> Result<Vec<(usize, SignedGraph)>> {
    let mut out = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let g = decode_sg6(trimmed).map_err(|e| match e {
            Error::Parse { pos, msg } => {
                Error::Parse { pos, msg: format!("line {}: {}", idx + 1, msg) }
            }
            other => other,
        })?;
        out.push((idx + 1, g));
    }
    Ok(out)
}
