//! graph6 and plain edge-list encodings.
//!
//! graph6 follows the public format description used by nauty/geng: a
//! size prefix followed by the upper triangle of the adjacency matrix,
//! column by column, packed six bits per printable byte.

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{SimpleGraph, VertexSet, MAX_VERTICES};

const HEADER: &str = ">>graph6<<";

/// Parses one graph6 line. Surrounding whitespace and the optional
/// `>>graph6<<` header are accepted.
pub fn parse_graph6(text: &str) -> Result<SimpleGraph> {
    let lead = text.len() - text.trim_start().len();
    let mut body = text.trim();
    let mut base = lead;
    if let Some(rest) = body.strip_prefix(HEADER) {
        body = rest;
        base += HEADER.len();
    }
    let bytes = body.as_bytes();
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Error::parse(base + i, format!("byte 0x{b:02x} outside graph6 range")));
        }
    }
    let (n, mut pos) = decode_size(bytes).map_err(|(off, msg)| Error::parse(base + off, msg))?;
    if n > MAX_VERTICES {
        return Err(Error::TooLarge { n, cap: MAX_VERTICES });
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let need = nbits.div_ceil(6);
    if bytes.len() - pos < need {
        return Err(Error::parse(
            base + bytes.len(),
            format!("truncated: expected {need} data bytes, found {}", bytes.len() - pos),
        ));
    }
    if bytes.len() - pos > need {
        return Err(Error::parse(base + pos + need, "trailing bytes after edge data"));
    }
    let mut adj = vec![VertexSet::EMPTY; n];
    let mut k = 0;
    'outer: for j in 1..n {
        for i in 0..j {
            let byte = bytes[pos + k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                adj[i].insert(j);
                adj[j].insert(i);
            }
            k += 1;
            if k == nbits {
                break 'outer;
            }
        }
    }
    if need > 0 {
        pos += need - 1;
        let pad = need * 6 - nbits;
        let last = bytes[pos] - 63;
        if last & ((1u8 << pad) - 1) != 0 {
            return Err(Error::parse(base + pos, "non-zero padding bits"));
        }
    }
    Ok(SimpleGraph::from_adjacency_unchecked(adj))
}

fn decode_size(bytes: &[u8]) -> std::result::Result<(usize, usize), (usize, String)> {
    let val = |off: usize, len: usize| -> std::result::Result<usize, (usize, String)> {
        if bytes.len() < off + len {
            return Err((bytes.len(), "truncated size prefix".to_string()));
        }
        Ok(bytes[off..off + len]
            .iter()
            .fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize))
    };
    match bytes.first() {
        None => Err((0, "empty input".to_string())),
        Some(&126) => {
            if bytes.get(1) == Some(&126) {
                Ok((val(2, 6)?, 8))
            } else {
                Ok((val(1, 3)?, 4))
            }
        }
        Some(&b) => Ok(((b - 63) as usize, 1)),
    }
}

/// Encodes a graph as a graph6 line (no header, no newline).
pub fn write_graph6(g: &SimpleGraph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        // n is capped at 128, well inside the 18-bit form
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut cur = 0u8;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            cur = cur << 1 | g.has_edge(i, j) as u8;
            k += 1;
            if k == 6 {
                out.push(cur + 63);
                cur = 0;
                k = 0;
            }
        }
    }
    if k > 0 {
        out.push((cur << (6 - k)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

/// Parses the edge-list format: a header line holding `n`, then one
/// `u v` pair per line with 0-based vertices. Blank lines and lines
/// starting with `#` are skipped.
pub fn parse_edgelist(text: &str) -> Result<SimpleGraph> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    let mut offset = 0;
    for line in text.split_inclusive('\n') {
        let start = offset;
        offset += line.len();
        let body = line.trim();
        if body.is_empty() || body.starts_with('#') {
            continue;
        }
        let mut fields = body.split_whitespace();
        let num = |s: Option<&str>| -> Result<usize> {
            s.ok_or_else(|| Error::parse(start, "missing field"))?
                .parse::<usize>()
                .map_err(|e| Error::parse(start, format!("bad integer: {e}")))
        };
        match n {
            None => {
                let v = num(fields.next())?;
                if fields.next().is_some() {
                    return Err(Error::parse(start, "header must hold only the vertex count"));
                }
                if v > MAX_VERTICES {
                    return Err(Error::TooLarge {
                        n: v,
                        cap: MAX_VERTICES,
                    });
                }
                n = Some(v);
            }
            Some(count) => {
                let u = num(fields.next())?;
                let v = num(fields.next())?;
                if fields.next().is_some() {
                    return Err(Error::parse(start, "edge line must hold two vertices"));
                }
                if u >= count || v >= count || u == v {
                    return Err(Error::parse(start, format!("invalid edge {u} {v} for n={count}")));
                }
                edges.push((u, v));
            }
        }
    }
    let n = n.ok_or_else(|| Error::parse(offset, "missing vertex-count header"))?;
    SimpleGraph::from_edges(n, &edges)
}

pub fn write_edgelist(g: &SimpleGraph) -> String {
    let mut s = format!("{}\n", g.n());
    for (u, v) in g.edges() {
        s.push_str(&format!("{u} {v}\n"));
    }
    s
}

/// Graphs serialize as their graph6 string.
impl Serialize for SimpleGraph {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&write_graph6(self))
    }
}

impl<'de> Deserialize<'de> for SimpleGraph {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        parse_graph6(&text).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_graph6_examples() {
        let k1 = parse_graph6("@").unwrap();
        assert_eq!(k1.n(), 1);
        assert_eq!(k1.edge_count(), 0);
        assert_eq!(parse_graph6("A_").unwrap(), SimpleGraph::complete(2));
        assert_eq!(parse_graph6("Bw").unwrap(), SimpleGraph::complete(3));
        assert_eq!(write_graph6(&SimpleGraph::complete(2)), "A_");
        assert_eq!(write_graph6(&SimpleGraph::empty(1)), "@");
        assert_eq!(write_graph6(&SimpleGraph::empty(0)), "?");
        assert_eq!(parse_graph6(">>graph6<<Bw\n").unwrap(), SimpleGraph::complete(3));
    }

    #[test]
    fn petgraph_reference_string() {
        // 5 vertices, edges a-c a-e b-d d-e
        let g = SimpleGraph::from_edges(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(write_graph6(&g), "DQc");
    }

    #[test]
    fn large_size_prefix() {
        let g = SimpleGraph::path(100);
        let s = write_graph6(&g);
        assert!(s.starts_with('~'));
        assert_eq!(parse_graph6(&s).unwrap(), g);
        let g = SimpleGraph::cycle(128);
        assert_eq!(parse_graph6(&write_graph6(&g)).unwrap(), g);
    }

    #[test]
    fn graph6_errors_name_offsets() {
        assert!(matches!(parse_graph6(""), Err(Error::Parse { offset: 0, .. })));
        // K3 needs one data byte
        assert!(matches!(parse_graph6("B"), Err(Error::Parse { offset: 1, .. })));
        assert!(matches!(parse_graph6("Bww"), Err(Error::Parse { offset: 2, .. })));
        assert!(matches!(parse_graph6("B w"), Err(Error::Parse { offset: 1, .. })));
        // padding bit set: 'x' = 57 = 111001
        assert!(matches!(parse_graph6("Bx"), Err(Error::Parse { offset: 1, .. })));
        assert!(matches!(parse_graph6("~?A@"), Err(Error::TooLarge { n: 129, .. })));
    }

    #[test]
    fn edgelist_round_trip() {
        let g = SimpleGraph::cycle(5).with_edge(0, 2);
        let text = write_edgelist(&g);
        assert_eq!(text, "5\n0 1\n0 2\n0 4\n1 2\n2 3\n3 4\n");
        assert_eq!(parse_edgelist(&text).unwrap(), g);
        assert_eq!(parse_edgelist("# comment\n\n3\n0 1\n").unwrap().edge_count(), 1);
    }

    #[test]
    fn edgelist_errors() {
        assert!(matches!(parse_edgelist(""), Err(Error::Parse { .. })));
        assert!(matches!(
            parse_edgelist("3\n0 3\n"),
            Err(Error::Parse { offset: 2, .. })
        ));
        assert!(matches!(parse_edgelist("3\n1 1\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse_edgelist("3\n0 x\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse_edgelist("500\n"), Err(Error::TooLarge { .. })));
    }
}
