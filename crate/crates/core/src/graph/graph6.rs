//! graph6 records (McKay's format).
//!
//! A record is `N(n)` followed by the upper triangle of the adjacency matrix
//! in column order, `(0,1), (0,2), (1,2), (0,3), ...`, packed six bits per
//! byte (most significant first), zero-padded, each group offset by 63.
//! `N(n)` is one byte for `n <= 62`, `126` plus three bytes for
//! `n <= 258047`, and `126 126` plus six bytes beyond that.

use super::Graph;
use crate::{Error, Result};

const SHORT_MAX: usize = 62;
const MEDIUM_MAX: usize = 258_047;
const LONG_MAX: usize = (1 << 36) - 1;

fn malformed(offset: usize, reason: impl Into<String>) -> Error {
    Error::MalformedGraph6 {
        offset,
        reason: reason.into(),
    }
}

fn sextet(bytes: &[u8], offset: usize) -> Result<u8> {
    match bytes.get(offset) {
        Some(&b) if (63..=126).contains(&b) => Ok(b - 63),
        Some(&b) => Err(malformed(offset, format!("byte {b} outside 63..=126"))),
        None => Err(malformed(offset, "record truncated")),
    }
}

fn read_n(bytes: &[u8]) -> Result<(usize, usize)> {
    if bytes.first() != Some(&126) {
        return Ok((sextet(bytes, 0)? as usize, 1));
    }
    let (start, width) = if bytes.get(1) == Some(&126) {
        (2, 6)
    } else {
        (1, 3)
    };
    let mut n = 0usize;
    for i in 0..width {
        n = (n << 6) | sextet(bytes, start + i)? as usize;
    }
    // Reject non-canonical size encodings so that encode(parse(t)) == t.
    let canonical = if width == 3 {
        n > SHORT_MAX
    } else {
        n > MEDIUM_MAX
    };
    if !canonical {
        return Err(malformed(
            0,
            format!("non-canonical size encoding for n = {n}"),
        ));
    }
    Ok((n, start + width))
}

/// Parses one graph6 record. Surrounding ASCII whitespace is ignored, as is
/// an optional `>>graph6<<` header.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let body = text.trim();
    let body = body.strip_prefix(">>graph6<<").unwrap_or(body);
    let bytes = body.as_bytes();
    if bytes.is_empty() {
        return Err(malformed(0, "empty record"));
    }
    let (n, start) = read_n(bytes)?;
    let bits = n * n.saturating_sub(1) / 2;
    let need = bits.div_ceil(6);
    let have = bytes.len() - start;
    if have < need {
        return Err(malformed(
            bytes.len(),
            format!("expected {need} data bytes, found {have}"),
        ));
    }
    if have > need {
        return Err(malformed(start + need, "trailing bytes after record"));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = sextet(bytes, start + k / 6)?;
            if byte >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    if need > 0 && bits % 6 != 0 {
        let last = start + need - 1;
        let pad = 6 - bits % 6;
        if sextet(bytes, last)? & ((1 << pad) - 1) != 0 {
            return Err(malformed(last, "nonzero padding bits"));
        }
    }
    Graph::from_edges(n, edges)
}

/// Encodes a graph as a graph6 record without header or newline.
pub fn encode_graph6(g: &Graph) -> String {
    let n = g.n();
    assert!(n <= LONG_MAX, "graph too large for graph6");
    let mut out = Vec::new();
    if n <= SHORT_MAX {
        out.push(n as u8 + 63);
    } else {
        let width = if n <= MEDIUM_MAX { 3 } else { 6 };
        out.push(126);
        if width == 6 {
            out.push(126);
        }
        for i in (0..width).rev() {
            out.push(((n >> (6 * i)) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
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

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{zoo, NamedGraph};
    use proptest::prelude::*;

    #[test]
    fn single_vertex() {
        let g = parse_graph6("@").unwrap();
        assert_eq!((g.n(), g.edge_count()), (1, 0));
        assert_eq!(encode_graph6(&g), "@");
    }

    #[test]
    fn triangle() {
        let g = parse_graph6("Bw").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 2), (1, 2)]);
        assert_eq!(encode_graph6(&g), "Bw");
    }

    #[test]
    fn truncated_is_malformed() {
        match parse_graph6("B") {
            Err(Error::MalformedGraph6 { offset, .. }) => assert_eq!(offset, 1),
            other => panic!("expected malformed record, got {other:?}"),
        }
    }

    #[test]
    fn bad_byte_reports_offset() {
        match parse_graph6("C\u{7f}") {
            Err(Error::MalformedGraph6 { offset, .. }) => assert_eq!(offset, 1),
            other => panic!("expected malformed record, got {other:?}"),
        }
    }

    #[test]
    fn nonzero_padding_rejected() {
        // n = 3 has 3 data bits; 'x' = 120 = 63 + 0b111001 sets a padding bit.
        assert!(parse_graph6("Bx").is_err());
    }

    #[test]
    fn petersen_round_trip() {
        let p = zoo(&NamedGraph::Petersen).unwrap();
        let s = encode_graph6(&p);
        assert_eq!(parse_graph6(&s).unwrap(), p);
    }

    #[test]
    fn medium_size_header() {
        let g = Graph::empty(63);
        let s = encode_graph6(&g);
        assert_eq!(&s.as_bytes()[..4], &[126, 63, 63, 63 + 63]);
        assert_eq!(parse_graph6(&s).unwrap(), g);
        let mut bad = s.into_bytes();
        bad[3] = 63 + 62; // encodes n = 62 in long form
        assert!(parse_graph6(std::str::from_utf8(&bad).unwrap()).is_err());
    }

    fn arb_graph() -> impl Strategy<Value = Graph> {
        (0usize..70).prop_flat_map(|n| {
            let pairs = n * n.saturating_sub(1) / 2;
            proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
                let mut edges = Vec::new();
                let mut k = 0;
                for j in 1..n {
                    for i in 0..j {
                        if bits[k] {
                            edges.push((i, j));
                        }
                        k += 1;
                    }
                }
                Graph::from_edges(n, edges).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn round_trip(g in arb_graph()) {
            let s = encode_graph6(&g);
            let back = parse_graph6(&s).unwrap();
            prop_assert_eq!(encode_graph6(&back), s);
            prop_assert_eq!(back, g);
        }
    }
}
