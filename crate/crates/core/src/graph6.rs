//! graph6: `N(n)` followed by the upper triangle of the adjacency matrix in
//! column order (`x(0,1), x(0,2), x(1,2), x(0,3), ...`), six bits per byte,
//! each byte offset by 63.

use alloc::string::String;
use alloc::vec::Vec;

use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("byte {byte} at offset {offset} is outside 63..=126")]
    BadByte { offset: usize, byte: u8 },
    #[error("graph6 body has {found} bytes, expected {expected} for the declared order")]
    BadLength { expected: usize, found: usize },
    #[error("trailing padding bits are not zero")]
    NonzeroPadding,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn encode_order(n: usize, out: &mut Vec<u8>) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        out.extend((0..3).rev().map(|i| ((n >> (6 * i)) & 63) as u8 + 63));
    } else {
        out.extend([126, 126]);
        out.extend((0..6).rev().map(|i| ((n >> (6 * i)) & 63) as u8 + 63));
    }
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::new();
    encode_order(n, &mut out);
    let (mut acc, mut filled) = (0u8, 0u32);
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
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
    // every byte is in 63..=126, hence ASCII
    String::from_utf8(out).expect("graph6 output is ASCII")
}

fn sextet(bytes: &[u8], offset: usize) -> Result<u8, Graph6Error> {
    let byte = bytes[offset];
    if !(63..=126).contains(&byte) {
        return Err(Graph6Error::BadByte { offset, byte });
    }
    Ok(byte - 63)
}

fn decode_order(bytes: &[u8]) -> Result<(usize, usize), Graph6Error> {
    let wide = |start: usize, len: usize| -> Result<(usize, usize), Graph6Error> {
        if bytes.len() < start + len {
            return Err(Graph6Error::BadLength { expected: start + len, found: bytes.len() });
        }
        let mut n = 0usize;
        for offset in start..start + len {
            n = (n << 6) | usize::from(sextet(bytes, offset)?);
        }
        Ok((n, start + len))
    };
    match bytes.first() {
        None => Err(Graph6Error::Empty),
        Some(126) if bytes.get(1) == Some(&126) => wide(2, 6),
        Some(126) => wide(1, 3),
        Some(_) => Ok((usize::from(sextet(bytes, 0)?), 1)),
    }
}

/// Parses one graph6 line. An optional `>>graph6<<` header and surrounding
/// whitespace are ignored.
pub fn from_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let text = text.trim();
    let text = text.strip_prefix(">>graph6<<").unwrap_or(text);
    let bytes = text.as_bytes();
    let (n, start) = decode_order(bytes)?;
    let bits = n * n.saturating_sub(1) / 2;
    let expected = start + bits.div_ceil(6);
    if bytes.len() != expected {
        return Err(Graph6Error::BadLength { expected: expected - start, found: bytes.len() - start });
    }
    let mut edges = Vec::new();
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            let b = sextet(bytes, start + k / 6)?;
            if (b >> (5 - k % 6)) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    if bits % 6 != 0 {
        let last = sextet(bytes, expected - 1)?;
        if last & ((1 << (6 - bits % 6)) - 1) != 0 {
            return Err(Graph6Error::NonzeroPadding);
        }
    }
    Ok(Graph::from_edges(n, edges)?)
}
