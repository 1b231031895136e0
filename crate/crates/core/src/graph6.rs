//! graph6 encoding for graphs with at most 62 nodes (our cap is 32).
//!
//! Byte 0 is `n + 63`; the upper triangle follows in column order
//! `(0,1), (0,2), (1,2), (0,3), ...`, six bits per byte, each byte offset by 63,
//! with the final group zero-padded on the right.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_NODES};

/// Header line some tools emit before graph6 data.
pub const HEADER: &str = ">>graph6<<";

pub fn parse_graph6(line: &str) -> Result<Graph> {
    let line = line.strip_suffix('\n').unwrap_or(line);
    let line = line.strip_suffix('\r').unwrap_or(line);
    let line = line.strip_prefix(HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    let Some((&first, body)) = bytes.split_first() else {
        return Err(Error::Graph6("empty line".into()));
    };
    for (pos, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Error::Graph6(format!("byte {b} at position {pos} outside 63..=126")));
        }
    }
    if first == 126 {
        return Err(Error::Graph6("node counts above 62 are not supported".into()));
    }
    let n = (first - 63) as usize;
    if n == 0 || n > MAX_NODES {
        return Err(Error::NodeCount(n));
    }
    let bits = n * (n - 1) / 2;
    let needed = bits.div_ceil(6);
    if body.len() < needed {
        return Err(Error::Graph6(format!(
            "truncated: {n} nodes need {needed} data bytes, found {}",
            body.len()
        )));
    }
    if body.len() > needed {
        return Err(Error::Graph6(format!(
            "{} trailing bytes after {needed} data bytes",
            body.len() - needed
        )));
    }
    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    let mut rows = vec![0u32; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
            k += 1;
        }
    }
    Ok(Graph::from_rows(n, &rows))
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let bits = n * (n - 1) / 2;
    let mut out = Vec::with_capacity(1 + bits.div_ceil(6));
    out.push(n as u8 + 63);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}
