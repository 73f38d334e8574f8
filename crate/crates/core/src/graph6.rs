//! graph6 encoding restricted to graphs with at most 62 vertices.
//!
//! Layout: optional `>>graph6<<` header, one order byte `n + 63`, then the
//! upper-triangle bits `x(0,1), x(0,2), x(1,2), x(0,3), ..` packed big-endian
//! into 6-bit groups, each written as `value + 63`, zero padded.

use crate::error::{Error, Result, MAX_VERTICES};
use crate::graph::Graph;

const HEADER: &[u8] = b">>graph6<<";

fn payload_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

fn err(offset: usize, reason: impl Into<String>) -> Error {
    Error::Graph6 {
        offset,
        reason: reason.into(),
    }
}

pub fn emit(g: &Graph) -> Vec<u8> {
    let n = g.n();
    let mut out = Vec::with_capacity(1 + payload_len(n));
    out.push(n as u8 + 63);
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = acc << 1 | g.has_edge(u, v) as u8;
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
    out
}

pub fn emit_string(g: &Graph) -> String {
    String::from_utf8(emit(g)).expect("graph6 is printable ASCII")
}

/// Parses a single graph6 record. A trailing `\n` or `\r\n` is tolerated.
pub fn parse(text: &[u8]) -> Result<Graph> {
    let mut text = text;
    while let Some((b'\n' | b'\r', rest)) = text.split_last() {
        text = rest;
    }
    let start = if text.starts_with(HEADER) {
        HEADER.len()
    } else {
        0
    };
    let body = &text[start..];
    let Some((&order, payload)) = body.split_first() else {
        return Err(err(start, "missing order byte"));
    };
    if !(63..=126).contains(&order) {
        return Err(err(
            start,
            format!("order byte {order:#04x} outside 63..=126"),
        ));
    }
    let n = (order - 63) as usize;
    if n > MAX_VERTICES {
        return Err(err(start, format!("order {n} exceeds {MAX_VERTICES}")));
    }
    let expected = payload_len(n);
    if payload.len() != expected {
        let offset = start + 1 + payload.len().min(expected);
        return Err(err(
            offset,
            format!("expected {expected} payload bytes, found {}", payload.len()),
        ));
    }
    let mut g = Graph::empty(n)?;
    let bits = n * n.saturating_sub(1) / 2;
    let mut k = 0;
    for (i, &byte) in payload.iter().enumerate() {
        let offset = start + 1 + i;
        if !(63..=126).contains(&byte) {
            return Err(err(offset, format!("byte {byte:#04x} outside 63..=126")));
        }
        let value = byte - 63;
        for shift in (0..6).rev() {
            let bit = value >> shift & 1 == 1;
            if k < bits {
                if bit {
                    let (u, v) = pair_at(k);
                    g.set_edge(u, v);
                }
            } else if bit {
                return Err(err(offset, "nonzero padding bits"));
            }
            k += 1;
        }
    }
    Ok(g)
}

pub fn parse_str(text: &str) -> Result<Graph> {
    parse(text.as_bytes())
}

/// Column-major position `k` to the pair `(u, v)`, `u < v`.
fn pair_at(k: usize) -> (usize, usize) {
    let mut v = 1;
    let mut base = 0;
    while base + v <= k {
        base += v;
        v += 1;
    }
    (k - base, v)
}

/// One line of a multi-graph graph6 file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Line {
    Comment(String),
    Graph(Graph),
}

/// Splits a multi-graph file into comments and graphs; blank lines are dropped.
/// Errors carry the 1-based line number.
pub fn parse_lines(text: &str) -> std::result::Result<Vec<(usize, Line)>, (usize, Error)> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim_end_matches('\r');
        if line.trim().is_empty() {
            continue;
        }
        if line.starts_with('#') {
            out.push((i + 1, Line::Comment(line.to_string())));
        } else {
            let g = parse(line.trim().as_bytes()).map_err(|e| (i + 1, e))?;
            out.push((i + 1, Line::Graph(g)));
        }
    }
    Ok(out)
}

/// Graphs only, comments skipped.
pub fn parse_graphs(text: &str) -> std::result::Result<Vec<Graph>, (usize, Error)> {
    Ok(parse_lines(text)?
        .into_iter()
        .filter_map(|(_, l)| match l {
            Line::Graph(g) => Some(g),
            Line::Comment(_) => None,
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::patterns::{complete, path};

    #[test]
    fn small_graphs_encode_exactly() {
        assert_eq!(emit_string(&complete(2)), "A_");
        assert_eq!(emit_string(&complete(3)), "Bw");
        assert_eq!(emit_string(&path(3)), "Bg");
        assert_eq!(emit_string(&Graph::empty(5).unwrap()), "D??");
        assert_eq!(emit_string(&Graph::empty(0).unwrap()), "?");
    }

    #[test]
    fn small_graphs_decode_exactly() {
        assert_eq!(parse_str("A_").unwrap(), complete(2));
        assert_eq!(parse_str("Bw").unwrap(), complete(3));
        assert_eq!(parse_str("Bg").unwrap(), path(3));
        assert_eq!(parse_str("D??").unwrap(), Graph::empty(5).unwrap());
        assert_eq!(parse_str(">>graph6<<Bw\n").unwrap(), complete(3));
    }

    #[test]
    fn pair_positions() {
        assert_eq!(pair_at(0), (0, 1));
        assert_eq!(pair_at(1), (0, 2));
        assert_eq!(pair_at(2), (1, 2));
        assert_eq!(pair_at(3), (0, 3));
        assert_eq!(pair_at(5), (2, 3));
        assert_eq!(pair_at(6), (0, 4));
    }

    #[test]
    fn malformed_input_reports_offsets() {
        assert!(matches!(
            parse_str(""),
            Err(Error::Graph6 { offset: 0, .. })
        ));
        assert!(matches!(
            parse_str("~"),
            Err(Error::Graph6 { offset: 0, .. })
        ));
        // K3 needs one payload byte
        assert!(matches!(
            parse_str("B"),
            Err(Error::Graph6 { offset: 1, .. })
        ));
        assert!(matches!(
            parse_str("Bww"),
            Err(Error::Graph6 { offset: 2, .. })
        ));
        // 'x' = 57 sets a padding bit for n = 3
        assert!(matches!(
            parse_str("Bx"),
            Err(Error::Graph6 { offset: 1, .. })
        ));
        assert!(matches!(
            parse_str("B "),
            Err(Error::Graph6 { offset: 1, .. })
        ));
        assert!(matches!(
            parse_str(">>graph6<<B"),
            Err(Error::Graph6 { offset: 11, .. })
        ));
    }

    #[test]
    fn multi_graph_files() {
        let text = "# header\nA_\n\nBw\r\n";
        let lines = parse_lines(text).unwrap();
        assert_eq!(lines.len(), 3);
        assert_eq!(lines[0], (1, Line::Comment("# header".into())));
        assert_eq!(parse_graphs(text).unwrap(), vec![complete(2), complete(3)]);
        let bad = parse_lines("A_\nB\n").unwrap_err();
        assert_eq!(bad.0, 2);
    }
}
