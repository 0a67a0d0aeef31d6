//! The graph6 text encoding for undirected graphs.
//!
//! Bit layout follows the published format byte for byte: the vertex count
//! in 6-bit chunks offset by 63, then the upper triangle of the adjacency
//! matrix in column order, packed six bits per byte, zero padded. Parsing
//! accepts an optional `>>graph6<<` header; emission is headerless.

use thiserror::Error;

use crate::graph::{Graph, MAX_VERTICES};

const HEADER: &str = ">>graph6<<";

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("byte {byte:#04x} at position {pos} outside the graph6 range 63..=126")]
    ByteOutOfRange { pos: usize, byte: u8 },
    #[error("vertex count {0} exceeds the supported maximum of {MAX_VERTICES}")]
    TooManyVertices(usize),
    #[error("expected {expected} data bytes for {n} vertices, found {found}")]
    BadLength {
        n: usize,
        expected: usize,
        found: usize,
    },
}

/// Parses one graph6 line. Surrounding whitespace and the optional
/// `>>graph6<<` header are stripped.
pub fn parse_graph6(line: &str) -> Result<Graph, Graph6Error> {
    let mut s = line.trim();
    if let Some(rest) = s.strip_prefix(HEADER) {
        s = rest.trim();
    }
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    for (pos, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::ByteOutOfRange { pos, byte: b });
        }
    }

    // Vertex count.
    let (n, data) = if bytes[0] == 126 {
        if bytes.len() >= 2 && bytes[1] == 126 {
            // 8-byte form encodes n ≥ 258048, far beyond the 64-vertex cap.
            return Err(Graph6Error::TooManyVertices(258_048));
        }
        if bytes.len() < 4 {
            return Err(Graph6Error::BadLength {
                n: 0,
                expected: 4,
                found: bytes.len(),
            });
        }
        let n = ((bytes[1] as usize - 63) << 12)
            | ((bytes[2] as usize - 63) << 6)
            | (bytes[3] as usize - 63);
        (n, &bytes[4..])
    } else {
        ((bytes[0] - 63) as usize, &bytes[1..])
    };
    if n > MAX_VERTICES {
        return Err(Graph6Error::TooManyVertices(n));
    }

    let bit_count = n.saturating_sub(1) * n / 2;
    let expected = bit_count.div_ceil(6);
    if data.len() != expected {
        return Err(Graph6Error::BadLength {
            n,
            expected,
            found: data.len(),
        });
    }

    let mut g = Graph::new(n).expect("size checked above");
    let mut bit_index = 0;
    'columns: for j in 1..n {
        for i in 0..j {
            let byte = data[bit_index / 6];
            if (byte - 63) >> (5 - bit_index % 6) & 1 == 1 {
                g.add_edge(i, j).expect("ids in range");
            }
            bit_index += 1;
            if bit_index == bit_count {
                break 'columns;
            }
        }
    }
    Ok(g)
}

/// Emits the canonical headerless graph6 string for a graph.
pub fn emit_graph6(g: &Graph) -> String {
    let n = g.vertex_count();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        out.push(((n >> 12) & 0x3f) as u8 + 63);
        out.push(((n >> 6) & 0x3f) as u8 + 63);
        out.push((n & 0x3f) as u8 + 63);
    }

    let mut group: u8 = 0;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            group <<= 1;
            if g.has_edge(i, j) {
                group |= 1;
            }
            filled += 1;
            if filled == 6 {
                out.push(group + 63);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((group << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}
