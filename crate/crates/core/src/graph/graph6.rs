//! graph6 text encoding: size field, then the upper triangle column by column
//! in big-endian 6-bit groups, each offset by 63 into printable ASCII.

use super::simple::{Graph, MAX_ORDER};
use crate::error::{Error, Result};

pub const HEADER: &str = ">>graph6<<";

fn parse_err(offset: usize, reason: impl Into<String>) -> Error {
    Error::Graph6 { offset, reason: reason.into() }
}

fn sextet(bytes: &[u8], at: usize) -> Result<u32> {
    match bytes.get(at) {
        Some(&b) if (63..=126).contains(&b) => Ok((b - 63) as u32),
        Some(&b) => Err(parse_err(at, format!("byte 0x{b:02x} is outside the graph6 range 63..=126"))),
        None => Err(parse_err(at, "unexpected end of input")),
    }
}

/// Decodes one graph6 string. A leading `>>graph6<<` header and a trailing
/// line terminator are accepted; byte offsets in errors refer to `text`.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    let mut pos = if bytes.starts_with(HEADER.as_bytes()) { HEADER.len() } else { 0 };

    let first = sextet(bytes, pos)?;
    let n = if first < 63 {
        pos += 1;
        first as usize
    } else if bytes.get(pos + 1) == Some(&126) {
        let mut n = 0usize;
        for k in 0..6 {
            n = n << 6 | sextet(bytes, pos + 2 + k)? as usize;
        }
        pos += 8;
        n
    } else {
        let mut n = 0usize;
        for k in 0..3 {
            n = n << 6 | sextet(bytes, pos + 1 + k)? as usize;
        }
        if n < 63 {
            return Err(parse_err(pos, format!("order {n} must use the one-byte size field")));
        }
        pos += 4;
        n
    };
    if n == 0 {
        return Err(parse_err(pos.saturating_sub(1), "graph of order 0"));
    }
    if n > MAX_ORDER {
        return Err(Error::UnsupportedOrder { order: n, limit: MAX_ORDER });
    }

    let bit_count = n * (n - 1) / 2;
    let byte_count = bit_count.div_ceil(6);
    let body = &bytes[pos..];
    if body.len() != byte_count {
        let at = pos + body.len().min(byte_count);
        return Err(parse_err(
            at,
            format!("order {n} needs {byte_count} body bytes, found {}", body.len()),
        ));
    }

    let mut graph = Graph::empty(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let value = sextet(bytes, pos + k / 6)?;
            if value >> (5 - k % 6) & 1 == 1 {
                graph.add_edge(i, j)?;
            }
            k += 1;
        }
    }
    if bit_count % 6 != 0 {
        let last = pos + byte_count - 1;
        let pad = 6 - bit_count % 6;
        if sextet(bytes, last)? & ((1 << pad) - 1) != 0 {
            return Err(parse_err(last, "padding bits are not zero"));
        }
    }
    Ok(graph)
}

/// Encodes a graph as graph6 without header or newline.
pub fn encode_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::new();
    if n < 63 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push((n >> shift & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for bit in g.upper_triangle_bits() {
        acc = acc << 1 | bit as u8;
        filled += 1;
        if filled == 6 {
            out.push(acc + 63);
            acc = 0;
            filled = 0;
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 output is ASCII")
}

/// Parses one graph per non-empty line; the header may prefix any line.
pub fn parse_graph6_lines(text: &str) -> Vec<Result<Graph>> {
    text.lines().filter(|l| !l.trim().is_empty()).map(parse_graph6).collect()
}
