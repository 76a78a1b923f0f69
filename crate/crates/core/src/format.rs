//! Text formats: graph6 (short form, up to 62 vertices) and plain edge lists.

use crate::error::{Error, Result};
use crate::graph::Graph;

const GRAPH6_MAX_N: usize = 62;
const HEADER: &str = ">>graph6<<";

/// Parses one graph6 line. Surrounding whitespace and the optional
/// `>>graph6<<` header are ignored; padding bits must be zero.
pub fn parse_graph6(line: &str) -> Result<Graph> {
    let lead = line.len() - line.trim_start().len();
    let mut body = line.trim();
    let mut offset = lead;
    if let Some(rest) = body.strip_prefix(HEADER) {
        body = rest;
        offset += HEADER.len();
    }
    let bytes = body.as_bytes();
    let Some(&first) = bytes.first() else {
        return Err(Error::parse(offset, "empty graph6 string"));
    };
    if !(63..=126).contains(&first) {
        return Err(Error::parse(
            offset,
            format!("invalid graph6 byte {first:#04x}"),
        ));
    }
    if first == 126 {
        return Err(Error::parse(
            offset,
            "graphs with more than 62 vertices are not supported",
        ));
    }
    let n = (first - 63) as usize;
    let bits = n * n.saturating_sub(1) / 2;
    let expected = 1 + bits.div_ceil(6);
    if bytes.len() != expected {
        return Err(Error::parse(
            offset + bytes.len().min(expected),
            format!(
                "expected {expected} bytes for n = {n}, found {}",
                bytes.len()
            ),
        ));
    }
    let mut g = Graph::new(n);
    let mut bit = 0;
    for (i, &b) in bytes[1..].iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Error::parse(
                offset + 1 + i,
                format!("invalid graph6 byte {b:#04x}"),
            ));
        }
        let chunk = b - 63;
        for shift in (0..6).rev() {
            let set = chunk >> shift & 1 == 1;
            if bit < bits {
                if set {
                    let (u, v) = pair_of(bit);
                    g.add_edge(u, v)?;
                }
            } else if set {
                return Err(Error::parse(offset + 1 + i, "non-zero padding bits"));
            }
            bit += 1;
        }
    }
    Ok(g)
}

/// `bit`-th pair in column order: (0,1), (0,2), (1,2), (0,3), ...
fn pair_of(bit: usize) -> (usize, usize) {
    let mut v = 1;
    let mut start = 0;
    while start + v <= bit {
        start += v;
        v += 1;
    }
    (bit - start, v)
}

/// Encodes `g` in graph6 (no header, no newline).
pub fn write_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > GRAPH6_MAX_N {
        return Err(Error::precondition(format!(
            "graph6 short form holds at most {GRAPH6_MAX_N} vertices, got {n}"
        )));
    }
    let mut out = String::with_capacity(1 + (n * n) / 12 + 1);
    out.push((63 + n as u8) as char);
    let mut chunk = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            chunk = chunk << 1 | g.has_edge(u, v) as u8;
            filled += 1;
            if filled == 6 {
                out.push((chunk + 63) as char);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((chunk << (6 - filled)) + 63) as char);
    }
    Ok(out)
}

/// Parses whitespace-separated `u v` pairs, optionally preceded by a line
/// holding only the vertex count. Lines starting with `#` are skipped.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut declared: Option<usize> = None;
    let mut tokens: Vec<(usize, &str)> = Vec::new();
    let mut first_line = true;
    let mut offset = 0;
    for line in text.split_inclusive('\n') {
        let start = offset;
        offset += line.len();
        let content = line.trim();
        if content.is_empty() || content.starts_with('#') {
            continue;
        }
        let words: Vec<(usize, &str)> = line
            .split_whitespace()
            .map(|w| (start + (w.as_ptr() as usize - line.as_ptr() as usize), w))
            .collect();
        if first_line && words.len() == 1 {
            let (at, w) = words[0];
            declared = Some(parse_index(at, w)?);
        } else {
            tokens.extend(words);
        }
        first_line = false;
    }
    if tokens.len() % 2 != 0 {
        let (at, _) = tokens[tokens.len() - 1];
        return Err(Error::parse(at, "dangling vertex without a partner"));
    }
    let mut pairs = Vec::with_capacity(tokens.len() / 2);
    for pair in tokens.chunks(2) {
        let (at, u) = pair[0];
        let (bt, v) = pair[1];
        let (u, v) = (parse_index(at, u)?, parse_index(bt, v)?);
        if u == v {
            return Err(Error::parse(at, format!("self-loop at vertex {u}")));
        }
        pairs.push((at, u, v));
    }
    let needed = pairs
        .iter()
        .map(|&(_, u, v)| u.max(v) + 1)
        .max()
        .unwrap_or(0);
    let n = match declared {
        Some(n) => {
            if let Some(&(at, u, v)) = pairs.iter().find(|&&(_, u, v)| u.max(v) >= n) {
                return Err(Error::parse(
                    at,
                    format!("edge {u} {v} exceeds declared n = {n}"),
                ));
            }
            n
        }
        None => needed,
    };
    let mut g = Graph::new(n);
    for (_, u, v) in pairs {
        g.add_edge(u, v)?;
    }
    Ok(g)
}

fn parse_index(at: usize, word: &str) -> Result<usize> {
    if word.starts_with('-') {
        return Err(Error::parse(at, format!("negative vertex index {word}")));
    }
    word.parse()
        .map_err(|_| Error::parse(at, format!("invalid vertex index {word:?}")))
}

/// `n` on the first line, then one edge per line.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.n());
    for e in g.edges() {
        out.push_str(&format!("{} {}\n", e.u(), e.v()));
    }
    out
}

/// A compact label for error messages: graph6 when possible.
pub(crate) fn describe(g: &Graph) -> String {
    write_graph6(g).unwrap_or_else(|_| {
        let edges: Vec<String> = g.edges().map(|e| e.to_string()).collect();
        format!("n={} [{}]", g.n(), edges.join(" "))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn known_strings() {
        assert_eq!(parse_graph6("Bw").unwrap(), Graph::complete(3));
        assert_eq!(parse_graph6("C~").unwrap(), Graph::complete(4));
        assert_eq!(write_graph6(&Graph::complete(4)).unwrap(), "C~");
        assert_eq!(write_graph6(&Graph::complete(3)).unwrap(), "Bw");
        assert_eq!(parse_graph6("?").unwrap(), Graph::new(0));
        assert_eq!(parse_graph6("@").unwrap(), Graph::new(1));
        // same string networkx produces for this labeling
        assert_eq!(write_graph6(&Graph::petersen()).unwrap(), "IheA@GUAo");
        assert_eq!(parse_graph6(">>graph6<<C~\n").unwrap(), Graph::complete(4));
    }

    #[test]
    fn pair_order() {
        let order: Vec<_> = (0..6).map(pair_of).collect();
        assert_eq!(order, vec![(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3)]);
    }

    #[test]
    fn graph6_errors_carry_offsets() {
        match parse_graph6("C~~") {
            Err(Error::Parse { offset, .. }) => assert_eq!(offset, 2),
            other => panic!("{other:?}"),
        }
        match parse_graph6("C ") {
            Err(Error::Parse { .. }) => {}
            other => panic!("{other:?}"),
        }
        match parse_graph6("C\x7f") {
            Err(Error::Parse { offset, .. }) => assert_eq!(offset, 1),
            other => panic!("{other:?}"),
        }
        assert!(parse_graph6("").is_err());
        assert!(parse_graph6("~?@").is_err());
        // K_3 is "Bw": 'w' = 63 + 0b111000; a set padding bit is rejected
        assert!(parse_graph6("Bx").is_err());
        assert!(write_graph6(&Graph::new(63)).is_err());
    }

    #[test]
    fn edge_list_examples() {
        assert_eq!(parse_edge_list("0 1\n1 2").unwrap(), Graph::path(3));
        let g = parse_edge_list("3\n0 1").unwrap();
        assert_eq!((g.n(), g.edge_count()), (3, 1));
        assert!(matches!(
            parse_edge_list("0 0"),
            Err(Error::Parse { offset: 0, .. })
        ));
        assert!(parse_edge_list("0 -1").is_err());
        assert!(parse_edge_list("0 1 2").is_err());
        assert!(parse_edge_list("2\n0 2").is_err());
        assert_eq!(parse_edge_list("0 1\n1 0\n0 1").unwrap().edge_count(), 1);
        assert_eq!(
            parse_edge_list("# comment\n0 1 1 2\n").unwrap(),
            Graph::path(3)
        );
        assert_eq!(parse_edge_list("").unwrap(), Graph::new(0));
        let g = Graph::petersen();
        assert_eq!(parse_edge_list(&write_edge_list(&g)).unwrap(), g);
    }

    fn arb_graph() -> impl Strategy<Value = Graph> {
        (0usize..=20).prop_flat_map(|n| {
            let pairs = n * n.saturating_sub(1) / 2;
            proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
                let mut g = Graph::new(n);
                for (i, b) in bits.into_iter().enumerate() {
                    if b {
                        let (u, v) = pair_of(i);
                        g.add_edge(u, v).unwrap();
                    }
                }
                g
            })
        })
    }

    proptest! {
        #[test]
        fn graph6_round_trip(g in arb_graph()) {
            let s = write_graph6(&g).unwrap();
            prop_assert_eq!(parse_graph6(&s).unwrap(), g.clone());
            prop_assert_eq!(write_graph6(&parse_graph6(&s).unwrap()).unwrap(), s);
        }
    }
}
