//! graph6 and DIMACS edge-list codecs.

use super::{check_order, Graph, GraphBuilder};
use crate::error::{Error, Result};

const G6_HEADER: &[u8] = b">>graph6<<";

fn encode_order(n: usize, out: &mut Vec<u8>) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
}

/// Encodes `g` in graph6 without header or trailing newline.
pub fn emit_g6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    encode_order(n, &mut out);
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | g.adjacent(u, v) as u8;
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
    String::from_utf8(out).expect("graph6 output is printable ASCII")
}

fn sextet(bytes: &[u8], pos: usize) -> Result<u8> {
    match bytes.get(pos) {
        Some(&b) if (63..=126).contains(&b) => Ok(b - 63),
        Some(&b) => Err(Error::parse(pos, format!("byte 0x{b:02x} is not a graph6 character"))),
        None => Err(Error::parse(pos, "unexpected end of graph6 data")),
    }
}

/// Decodes one graph6 string. An optional `>>graph6<<` header and one trailing
/// newline are accepted; padding bits must be zero.
pub fn parse_g6(text: &str) -> Result<Graph> {
    let mut bytes = text.as_bytes();
    let mut base = 0;
    if bytes.starts_with(G6_HEADER) {
        bytes = &bytes[G6_HEADER.len()..];
        base = G6_HEADER.len();
    }
    if let Some(stripped) = bytes.strip_suffix(b"\n") {
        bytes = stripped.strip_suffix(b"\r").unwrap_or(stripped);
    }
    let err = |e: Error| match e {
        Error::Parse { offset, message } => Error::Parse { offset: offset + base, message },
        other => other,
    };
    decode_g6(bytes).map_err(err)
}

fn decode_g6(bytes: &[u8]) -> Result<Graph> {
    if bytes.is_empty() {
        return Err(Error::parse(0, "empty graph6 string"));
    }
    let (n, mut pos) = if bytes[0] != 126 {
        (sextet(bytes, 0)? as usize, 1)
    } else if bytes.get(1) != Some(&126) {
        let mut n = 0usize;
        for i in 1..4 {
            n = (n << 6) | sextet(bytes, i)? as usize;
        }
        (n, 4)
    } else {
        let mut n = 0usize;
        for i in 2..8 {
            n = (n << 6) | sextet(bytes, i)? as usize;
        }
        (n, 8)
    };
    let header_len = pos;
    check_order(n).map_err(|e| Error::parse(0, e))?;
    let pairs = n * n.saturating_sub(1) / 2;
    let expected = pairs.div_ceil(6);
    if bytes.len() != header_len + expected {
        return Err(Error::parse(
            bytes.len().min(header_len + expected),
            format!("length mismatch: {n} vertices need {expected} data bytes, found {}", bytes.len() - header_len),
        ));
    }
    let mut b = GraphBuilder::new(n)?;
    let mut bit = 0usize;
    let mut cur = 0u8;
    for v in 1..n {
        for u in 0..v {
            if bit.is_multiple_of(6) {
                cur = sextet(bytes, pos)?;
                pos += 1;
            }
            if (cur >> (5 - bit % 6)) & 1 == 1 {
                b.add_edge(u, v)?;
            }
            bit += 1;
        }
    }
    if !bit.is_multiple_of(6) {
        let pad = 6 - bit % 6;
        if cur & ((1u8 << pad) - 1) != 0 {
            return Err(Error::parse(pos - 1, "nonzero graph6 padding bits"));
        }
    }
    Ok(b.build())
}

/// Decodes every non-empty line of a graph6 file.
pub fn parse_g6_lines(text: &str) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    let mut offset = 0;
    for line in text.split_inclusive('\n') {
        let trimmed = line.trim_end_matches(['\n', '\r']);
        if !trimmed.is_empty() {
            out.push(parse_g6(trimmed).map_err(|e| match e {
                Error::Parse { offset: o, message } => Error::parse(offset + o, message),
                other => other,
            })?);
        }
        offset += line.len();
    }
    Ok(out)
}

/// Canonical DIMACS edge list: a `p edge n m` line then `e u v` lines (1-based,
/// `u < v`, graph6 order), each newline-terminated.
pub fn emit_dimacs(g: &Graph) -> String {
    let mut s = format!("p edge {} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        s.push_str(&format!("e {} {}\n", u + 1, v + 1));
    }
    s
}

/// Parses a DIMACS edge list. `c` lines are comments; the `p edge` (or `p col`)
/// header must precede the edges and the number of `e` lines must equal its
/// edge count. Repeated edges are accepted and merged.
pub fn parse_dimacs(text: &str) -> Result<Graph> {
    let mut builder: Option<GraphBuilder> = None;
    let mut declared = 0usize;
    let mut seen = 0usize;
    let mut offset = 0usize;
    for line in text.split_inclusive('\n') {
        let at = offset;
        offset += line.len();
        let mut fields = line.split_whitespace();
        let Some(tag) = fields.next() else { continue };
        match tag {
            "c" => {}
            "p" => {
                if builder.is_some() {
                    return Err(Error::parse(at, "duplicate problem line"));
                }
                let kind = fields.next();
                if !matches!(kind, Some("edge") | Some("col") | Some("edges")) {
                    return Err(Error::parse(at, "malformed header: expected `p edge <n> <m>`"));
                }
                let n = parse_num(fields.next(), at, "vertex count")?;
                declared = parse_num(fields.next(), at, "edge count")?;
                if fields.next().is_some() {
                    return Err(Error::parse(at, "malformed header: trailing fields"));
                }
                builder = Some(GraphBuilder::new(n).map_err(|e| Error::parse(at, e))?);
            }
            "e" => {
                let Some(b) = builder.as_mut() else {
                    return Err(Error::parse(at, "edge line before the problem line"));
                };
                let u = parse_num(fields.next(), at, "edge endpoint")?;
                let v = parse_num(fields.next(), at, "edge endpoint")?;
                if fields.next().is_some() {
                    return Err(Error::parse(at, "trailing fields on edge line"));
                }
                let n = b.n();
                if u == 0 || v == 0 || u > n || v > n {
                    return Err(Error::parse(at, format!("vertex out of range: edge {u} {v} with {n} vertices")));
                }
                b.add_edge(u - 1, v - 1).map_err(|e| Error::parse(at, e))?;
                seen += 1;
            }
            other => return Err(Error::parse(at, format!("unknown line type `{other}`"))),
        }
    }
    let Some(b) = builder else {
        return Err(Error::parse(0, "malformed header: missing problem line"));
    };
    if seen != declared {
        return Err(Error::parse(
            text.len(),
            format!("length mismatch: header declares {declared} edges, found {seen}"),
        ));
    }
    Ok(b.build())
}

fn parse_num(field: Option<&str>, at: usize, what: &str) -> Result<usize> {
    field.and_then(|f| f.parse().ok()).ok_or_else(|| Error::parse(at, format!("missing or invalid {what}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn g6_star_example() {
        // Verified against networkx.to_graph6_bytes: edges {0,1,2,3}-4.
        let g = parse_g6("D?{").unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 4), (1, 4), (2, 4), (3, 4)]);
        assert_eq!(emit_g6(&g), "D?{");
    }

    #[test]
    fn g6_empty_graph() {
        let g = Graph::empty(0).unwrap();
        assert_eq!(emit_g6(&g), "?");
        assert_eq!(parse_g6("?").unwrap(), g);
    }

    #[test]
    fn g6_header_and_newline() {
        let g = parse_g6(">>graph6<<D?{\n").unwrap();
        assert_eq!(emit_g6(&g), "D?{");
    }

    #[test]
    fn g6_large_order() {
        let g = Graph::path(100).unwrap();
        let s = emit_g6(&g);
        assert_eq!(s.as_bytes()[0], 126);
        assert_eq!(parse_g6(&s).unwrap(), g);
    }

    #[test]
    fn g6_errors_carry_offsets() {
        assert!(matches!(parse_g6("D?"), Err(Error::Parse { .. })));
        match parse_g6("D?{{") {
            Err(Error::Parse { offset, .. }) => assert_eq!(offset, 3),
            other => panic!("{other:?}"),
        }
        // '@' has its low bit set, which lands in padding for n = 3.
        match parse_g6("B@") {
            Err(Error::Parse { offset, .. }) => assert_eq!(offset, 1),
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_g6("B\x07"), Err(Error::Parse { offset: 1, .. })));
    }

    #[test]
    fn dimacs_triangle() {
        let text = "c triangle\np edge 3 3\ne 1 2\ne 2 3\ne 1 3\n";
        let g = parse_dimacs(text).unwrap();
        assert_eq!(g, Graph::complete(3).unwrap());
        assert_eq!(emit_dimacs(&g), "p edge 3 3\ne 1 2\ne 1 3\ne 2 3\n");
        assert_eq!(parse_dimacs(&emit_dimacs(&g)).unwrap(), g);
    }

    #[test]
    fn dimacs_errors() {
        assert!(matches!(parse_dimacs("e 1 2\n"), Err(Error::Parse { offset: 0, .. })));
        assert!(matches!(parse_dimacs("p edge 3 2\ne 1 2\n"), Err(Error::Parse { .. })));
        match parse_dimacs("p edge 3 1\ne 1 4\n") {
            Err(Error::Parse { offset, .. }) => assert_eq!(offset, 11),
            other => panic!("{other:?}"),
        }
        assert!(parse_dimacs("p edge x 1\n").is_err());
        assert!(parse_dimacs("").is_err());
    }

    #[test]
    fn dimacs_empty_graph() {
        let g = Graph::empty(0).unwrap();
        assert_eq!(parse_dimacs(&emit_dimacs(&g)).unwrap(), g);
    }
}
