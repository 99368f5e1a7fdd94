//! graph6 encoding, small format only (`n <= 62`).
//!
//! The first byte is `n + 63`. The upper triangle of the adjacency matrix is
//! read column by column (`x(0,1), x(0,2), x(1,2), x(0,3), ...`), packed into
//! 6-bit groups big-endian, zero padded, and each group offset by 63.

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const MAX_SMALL_ORDER: usize = 62;

pub fn graph6_encode(g: &Graph) -> Result<String> {
    let n = g.order();
    if n > MAX_SMALL_ORDER {
        return Err(Error::InvalidParameter(format!(
            "graph6 small format holds at most {MAX_SMALL_ORDER} vertices, got {n}"
        )));
    }
    let mut out = String::with_capacity(1 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    out.push((n as u8 + 63) as char);
    let mut group = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            group = (group << 1) | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push((group + 63) as char);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((group << (6 - filled)) + 63) as char);
    }
    Ok(out)
}

pub fn graph6_decode(s: &str) -> Result<Graph> {
    let s = s.trim_end_matches(['\n', '\r']);
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let bytes = s.as_bytes();
    let (&head, body) = bytes
        .split_first()
        .ok_or_else(|| Error::Parse("empty graph6 string".into()))?;
    if !(63..=126).contains(&head) {
        return Err(Error::Parse(format!("invalid graph6 header byte {head:#x}")));
    }
    if head == 126 {
        return Err(Error::Parse("graph6 large format (n > 62) is not supported".into()));
    }
    let n = (head - 63) as usize;
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return Err(Error::Parse(format!(
            "graph6 body for n={n} needs {expected} bytes, got {}",
            body.len()
        )));
    }
    let mut values = Vec::with_capacity(body.len());
    for &b in body {
        if !(63..=126).contains(&b) {
            return Err(Error::Parse(format!("invalid graph6 data byte {b:#x}")));
        }
        values.push(b - 63);
    }
    let bit = |k: usize| (values[k / 6] >> (5 - k % 6)) & 1 == 1;
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    if (bits..expected * 6).any(bit) {
        return Err(Error::Parse("nonzero padding bits in graph6 string".into()));
    }
    Graph::new(n, edges)
}
