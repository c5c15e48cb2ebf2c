//! graph6 codec.
//!
//! Layout: one size byte `63 + n` (n <= 62), then the upper triangle of the
//! adjacency matrix read column by column (`x(0,1), x(0,2), x(1,2), x(0,3), ...`),
//! packed big-endian into 6-bit groups each offset by 63, zero padded.

use thiserror::Error;

use super::{Graph, GraphError, MAX_ORDER};

const HEADER: &str = ">>graph6<<";

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("malformed length prefix")]
    MalformedLength,
    #[error("body has {found} bytes, expected {expected} for {order} vertices")]
    BodyLength { order: usize, expected: usize, found: usize },
    #[error("byte {byte:#04x} at offset {offset} outside 63..=126")]
    InvalidByte { offset: usize, byte: u8 },
    #[error("nonzero padding bits")]
    NonzeroPadding,
    #[error("graph has {0} vertices; at most {MAX_ORDER} supported")]
    TooLarge(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn sextet(offset: usize, byte: u8) -> Result<u32, Graph6Error> {
    if (63..=126).contains(&byte) {
        Ok(u32::from(byte - 63))
    } else {
        Err(Graph6Error::InvalidByte { offset, byte })
    }
}

/// Decodes one graph6 line. A leading `>>graph6<<` header is accepted.
pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let text = text.trim_end_matches(['\n', '\r']);
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    let (&first, _) = bytes.split_first().ok_or(Graph6Error::Empty)?;

    let (n, body_start) = if first == 126 {
        // 4- or 8-byte size forms only encode n >= 63
        let (width, start) = match bytes.get(1) {
            Some(&126) => (6, 2),
            Some(_) => (3, 1),
            None => return Err(Graph6Error::MalformedLength),
        };
        let digits = bytes.get(start..start + width).ok_or(Graph6Error::MalformedLength)?;
        let mut n = 0usize;
        for (i, &b) in digits.iter().enumerate() {
            n = (n << 6) | sextet(start + i, b)? as usize;
        }
        if n <= 62 {
            return Err(Graph6Error::MalformedLength);
        }
        return Err(Graph6Error::TooLarge(n));
    } else {
        (sextet(0, first)? as usize, 1)
    };
    if n > MAX_ORDER {
        return Err(Graph6Error::TooLarge(n));
    }
    if n == 0 {
        return Err(Graph6Error::Graph(GraphError::UnsupportedOrder(0)));
    }

    let pairs = n * (n - 1) / 2;
    let expected = pairs.div_ceil(6);
    let body = &bytes[body_start..];
    if body.len() != expected {
        return Err(Graph6Error::BodyLength { order: n, expected, found: body.len() });
    }

    let mut g = Graph::empty(n)?;
    let mut k = 0usize;
    for (i, &b) in body.iter().enumerate() {
        let group = sextet(body_start + i, b)?;
        for shift in (0..6).rev() {
            let set = (group >> shift) & 1 == 1;
            if k >= pairs {
                if set {
                    return Err(Graph6Error::NonzeroPadding);
                }
            } else if set {
                let (u, v) = pair_at(k);
                g.add_edge(u, v);
            }
            k += 1;
        }
    }
    Ok(g)
}

/// Position `k` of the column-major upper triangle as `(row, column)`.
fn pair_at(k: usize) -> (usize, usize) {
    let mut v = 1;
    let mut start = 0;
    while start + v <= k {
        start += v;
        v += 1;
    }
    (k - start, v)
}

/// Encodes `g` as a graph6 body (no header, no newline).
pub fn write_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = String::with_capacity(1 + (n * n).div_ceil(12));
    out.push(char::from(63 + n as u8));
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | u8::from(g.has_edge(u, v));
            filled += 1;
            if filled == 6 {
                out.push(char::from(63 + acc));
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(char::from(63 + (acc << (6 - filled))));
    }
    out
}
