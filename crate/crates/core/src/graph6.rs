//! graph6 encoding and decoding.
//!
//! The format: an order field (one byte `63+n` for `n <= 62`, or `'~'`
//! plus three bytes of 18 bits, or `"~~"` plus six bytes of 36 bits),
//! followed by the upper triangle of the adjacency matrix in the column
//! order (0,1),(0,2),(1,2),(0,3),... packed big-endian six bits per byte,
//! each byte offset by 63. No header; a record is one line.

use crate::graph::{Graph, CONSTRUCTION_ORDER_CAP};
use std::error::Error;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Graph6Error {
    /// The record is empty after stripping the line terminator.
    Empty,
    /// A byte outside the printable graph6 range `63..=126`.
    InvalidByte { offset: usize, byte: u8 },
    /// Fewer bytes than the order requires.
    Truncated { expected: usize, got: usize },
    /// More bytes than the order requires.
    TrailingData { offset: usize },
    /// Padding bits of the final byte are not zero.
    NonzeroPadding { offset: usize },
    /// Order beyond the construction cap of this crate.
    OrderTooLarge { order: u64 },
}

impl fmt::Display for Graph6Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Graph6Error::Empty => write!(f, "empty graph6 record"),
            Graph6Error::InvalidByte { offset, byte } => {
                write!(f, "invalid byte 0x{byte:02x} at offset {offset}")
            }
            Graph6Error::Truncated { expected, got } => {
                write!(f, "truncated record: expected {expected} bytes, got {got}")
            }
            Graph6Error::TrailingData { offset } => {
                write!(f, "trailing data at offset {offset}")
            }
            Graph6Error::NonzeroPadding { offset } => {
                write!(f, "nonzero padding bits in final byte at offset {offset}")
            }
            Graph6Error::OrderTooLarge { order } => {
                write!(
                    f,
                    "order {order} exceeds the construction cap {CONSTRUCTION_ORDER_CAP}"
                )
            }
        }
    }
}

impl Error for Graph6Error {}

fn sextet(bytes: &[u8], offset: usize) -> Result<u64, Graph6Error> {
    match bytes.get(offset) {
        None => Err(Graph6Error::Truncated {
            expected: offset + 1,
            got: bytes.len(),
        }),
        Some(&b) if (63..=126).contains(&b) => Ok((b - 63) as u64),
        Some(&b) => Err(Graph6Error::InvalidByte { offset, byte: b }),
    }
}

/// Parses a single graph6 record. A trailing newline is tolerated.
pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }

    let (order, data_start) = if bytes[0] == b'~' {
        if bytes.get(1) == Some(&b'~') {
            let mut n: u64 = 0;
            for k in 0..6 {
                n = (n << 6) | sextet(bytes, 2 + k)?;
            }
            (n, 8)
        } else {
            let mut n: u64 = 0;
            for k in 0..3 {
                n = (n << 6) | sextet(bytes, 1 + k)?;
            }
            (n, 4)
        }
    } else {
        (sextet(bytes, 0)?, 1)
    };

    if order > CONSTRUCTION_ORDER_CAP as u64 {
        return Err(Graph6Error::OrderTooLarge { order });
    }
    let n = order as usize;
    let nbits = n * n.saturating_sub(1) / 2;
    let nbytes = nbits.div_ceil(6);
    let expected = data_start + nbytes;
    if bytes.len() < expected {
        return Err(Graph6Error::Truncated {
            expected,
            got: bytes.len(),
        });
    }
    if bytes.len() > expected {
        return Err(Graph6Error::TrailingData { offset: expected });
    }

    let mut edges = Vec::new();
    let mut k = 0usize;
    let mut last_sextet = 0u64;
    for j in 1..n {
        for i in 0..j {
            let byte_idx = data_start + k / 6;
            if k % 6 == 0 {
                last_sextet = sextet(bytes, byte_idx)?;
            }
            if last_sextet >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    if nbits % 6 != 0 {
        let pad = 6 - nbits % 6;
        if last_sextet & ((1 << pad) - 1) != 0 {
            return Err(Graph6Error::NonzeroPadding {
                offset: expected - 1,
            });
        }
    }
    Ok(Graph::from_edges(n, edges))
}

/// Encodes a graph as a graph6 record (no trailing newline).
pub fn write_graph6(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.order();
    if n > 258047 {
        return Err(Graph6Error::OrderTooLarge { order: n as u64 });
    }
    let mut out = Vec::new();
    if n <= 62 {
        out.push(63 + n as u8);
    } else {
        out.push(b'~');
        out.push(63 + ((n >> 12) & 63) as u8);
        out.push(63 + ((n >> 6) & 63) as u8);
        out.push(63 + (n & 63) as u8);
    }
    let mut acc = 0u8;
    let mut used = 0u8;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            used += 1;
            if used == 6 {
                out.push(63 + acc);
                acc = 0;
                used = 0;
            }
        }
    }
    if used > 0 {
        out.push(63 + (acc << (6 - used)));
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are printable"))
}

/// Iterates the graph6 records of a corpus: one record per line, blank
/// lines and lines starting with `#` skipped. Yields 1-based line numbers.
pub fn parse_graph6_lines(
    text: &str,
) -> impl Iterator<Item = (usize, Result<Graph, Graph6Error>)> + '_ {
    text.lines().enumerate().filter_map(|(idx, line)| {
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            None
        } else {
            Some((idx + 1, parse_graph6(line)))
        }
    })
}
