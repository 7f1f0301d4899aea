//! The graph6 codec (header-less variant), bit-exact per the published format.
//!
//! Layout of a line: N(n) followed by R(x), where N(n) is `n + 63` for
//! `n <= 62` and `'~'` plus three 6-bit groups for larger orders, and R(x)
//! packs the upper adjacency triangle in column order `(0,1) (0,2) (1,2)
//! (0,3) ...` into 6-bit groups, most significant bit first, zero-padded,
//! every byte offset by 63. Lines ending in LF or CRLF are both accepted.

use thiserror::Error;

use crate::graph::{Graph, MAX_ORDER};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty graph6 input")]
    Empty,
    #[error("invalid graph6 byte 0x{byte:02x} at offset {offset}")]
    InvalidByte { offset: usize, byte: u8 },
    #[error("graph6 input truncated at offset {offset}: expected {expected} bytes")]
    Truncated { offset: usize, expected: usize },
    #[error("trailing garbage at offset {offset}")]
    TrailingGarbage { offset: usize },
    #[error("nonzero padding bits at offset {offset}")]
    NonzeroPadding { offset: usize },
    #[error("graph6 order {order} out of range (supported: 1..={MAX_ORDER})")]
    OrderOutOfRange { order: usize },
}

fn sextet(bytes: &[u8], offset: usize) -> Result<u64, Graph6Error> {
    match bytes.get(offset) {
        None => Err(Graph6Error::Truncated {
            offset,
            expected: offset + 1,
        }),
        Some(&b) if (63..=126).contains(&b) => Ok(u64::from(b - 63)),
        Some(&b) => Err(Graph6Error::InvalidByte { offset, byte: b }),
    }
}

/// Parses one graph6 line (without the optional `>>graph6<<` header).
pub fn parse_graph6(input: &[u8]) -> Result<Graph, Graph6Error> {
    let mut line = input;
    if line.ends_with(b"\n") {
        line = &line[..line.len() - 1];
    }
    if line.ends_with(b"\r") {
        line = &line[..line.len() - 1];
    }
    if line.is_empty() {
        return Err(Graph6Error::Empty);
    }

    // Order field.
    let (n, mut pos) = if line[0] == b'~' {
        if line.get(1) == Some(&b'~') {
            // 8-byte form encodes n >= 258048, always out of range here.
            let mut n = 0usize;
            for i in 0..6 {
                n = n << 6 | sextet(line, 2 + i)? as usize;
            }
            return Err(Graph6Error::OrderOutOfRange { order: n });
        }
        let mut n = 0usize;
        for i in 0..3 {
            n = n << 6 | sextet(line, 1 + i)? as usize;
        }
        (n, 4)
    } else {
        (sextet(line, 0)? as usize, 1)
    };
    if n == 0 || n > MAX_ORDER {
        return Err(Graph6Error::OrderOutOfRange { order: n });
    }

    let bit_count = n * (n - 1) / 2;
    let byte_count = bit_count.div_ceil(6);
    if line.len() < pos + byte_count {
        return Err(Graph6Error::Truncated {
            offset: line.len(),
            expected: pos + byte_count,
        });
    }
    if line.len() > pos + byte_count {
        return Err(Graph6Error::TrailingGarbage {
            offset: pos + byte_count,
        });
    }

    let mut edges = Vec::new();
    let mut bit = 0usize;
    let mut chunk = 0u64;
    for v in 1..n {
        for u in 0..v {
            if bit.is_multiple_of(6) {
                chunk = sextet(line, pos)?;
                pos += 1;
            }
            if chunk >> (5 - bit % 6) & 1 == 1 {
                edges.push((u, v));
            }
            bit += 1;
        }
    }
    if !bit.is_multiple_of(6) {
        let pad = 6 - bit % 6;
        if chunk & ((1 << pad) - 1) != 0 {
            return Err(Graph6Error::NonzeroPadding { offset: pos - 1 });
        }
    }

    Graph::from_edges(n, edges).map_err(|_| Graph6Error::OrderOutOfRange { order: n })
}

/// Encodes a graph as a graph6 line (no header, no trailing newline).
pub fn encode_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(b'~');
        out.push(((n >> 12) & 0x3f) as u8 + 63);
        out.push(((n >> 6) & 0x3f) as u8 + 63);
        out.push((n & 0x3f) as u8 + 63);
    }

    let mut chunk = 0u8;
    let mut filled = 0u8;
    for v in 1..n {
        for u in 0..v {
            chunk <<= 1;
            if g.adjacent(u, v) {
                chunk |= 1;
            }
            filled += 1;
            if filled == 6 {
                out.push(chunk + 63);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((chunk << (6 - filled)) + 63);
    }

    // Every byte lies in 63..=126, so this is valid ASCII.
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}
