//! The graph6 interchange format (bit-exact to the published definition).
//!
//! `N(n)` is one byte `n + 63` for `n <= 62`, else `'~'` followed by three
//! 6-bit bytes. The adjacency bits are the upper triangle taken column by
//! column (`x(0,1) x(0,2) x(1,2) x(0,3) …`), padded with zeros to a multiple
//! of six and emitted six bits per byte, each byte offset by 63.

use alloc::string::String;
use alloc::vec::Vec;

use crate::bitset::MAX_VERTICES;
use crate::error::{Error, Result};
use crate::graph::Graph;

const HEADER: &str = ">>graph6<<";

pub fn encode(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        let row = g.neighbors(j);
        for i in 0..j {
            acc = (acc << 1) | row.contains(i) as u8;
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
    // every byte is in 63..=126
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

pub fn decode(s: &str) -> Result<Graph> {
    let s = s.strip_prefix(HEADER).unwrap_or(s);
    let s = s.strip_suffix('\n').unwrap_or(s);
    let s = s.strip_suffix('\r').unwrap_or(s);
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(Error::Graph6("empty input"));
    }
    if bytes.iter().find(|&&b| !(63..=126).contains(&b)).is_some() {
        return Err(Error::Graph6("byte outside 63..=126"));
    }
    let (n, body) = if bytes[0] != 126 {
        ((bytes[0] - 63) as usize, &bytes[1..])
    } else {
        if bytes.len() >= 2 && bytes[1] == 126 {
            return Err(Error::Graph6("orders above 258047 are not supported"));
        }
        if bytes.len() < 4 {
            return Err(Error::Graph6("truncated order field"));
        }
        let n = bytes[1..4].iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
        if n <= 62 {
            return Err(Error::Graph6("non-minimal order field"));
        }
        (n, &bytes[4..])
    };
    if n > MAX_VERTICES {
        return Err(Error::CapacityExceeded { n, cap: MAX_VERTICES });
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let need = nbits.div_ceil(6);
    if body.len() < need {
        return Err(Error::Graph6("truncated adjacency bits"));
    }
    if body.len() > need {
        return Err(Error::Graph6("trailing bytes after adjacency bits"));
    }
    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    if (nbits..need * 6).any(bit) {
        return Err(Error::Graph6("nonzero padding bits"));
    }
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
    Graph::from_edge_list(n, edges)
}

/// Decodes newline-separated graph6 lines, skipping blank lines.
pub fn decode_many(text: &str) -> Result<Vec<Graph>> {
    text.lines().map(str::trim_end).filter(|l| !l.is_empty()).map(decode).collect()
}
