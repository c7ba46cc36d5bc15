//! Text formats: edge lists, colourings, triple sidecars and stable covers.

use std::fmt::Write as _;

use rainbow_core::generators::TripleVertex;
use rainbow_core::{BitSet, Colouring, Graph};

use crate::CliError;

fn at(line: usize, msg: impl Into<String>) -> CliError {
    CliError::Parse { line, msg: msg.into() }
}

/// Non-blank lines with their 1-based line numbers.
fn lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty())
}

fn numbers<T: std::str::FromStr>(line: usize, text: &str, want: usize) -> Result<Vec<T>, CliError> {
    let parts: Vec<&str> = text.split_whitespace().collect();
    if parts.len() != want {
        return Err(at(line, format!("expected {want} integers, found `{text}`")));
    }
    parts
        .iter()
        .map(|p| p.parse::<T>().map_err(|_| at(line, format!("`{p}` is not a non-negative integer"))))
        .collect()
}

/// Parses `n m` followed by `m` lines `u v`.
pub fn parse_graph(text: &str) -> Result<Graph, CliError> {
    let mut it = lines(text);
    let (hl, header) = it.next().ok_or_else(|| at(1, "missing header `n m`"))?;
    let hv: Vec<usize> = numbers(hl, header, 2)?;
    let (n, m) = (hv[0], hv[1]);
    if n > rainbow_core::bitset::CAPACITY {
        return Err(at(hl, format!("{n} vertices exceeds the supported {}", rainbow_core::bitset::CAPACITY)));
    }
    let mut adj = vec![BitSet::new(); n];
    let mut edges = Vec::with_capacity(m);
    for (line, l) in it {
        let e: Vec<usize> = numbers(line, l, 2)?;
        let (u, v) = (e[0], e[1]);
        if u >= n || v >= n {
            return Err(at(line, format!("vertex {} out of range 0..{n}", u.max(v))));
        }
        if u == v {
            return Err(at(line, format!("loop at vertex {u}")));
        }
        if adj[u].contains(v) {
            return Err(at(line, format!("duplicate edge {u} {v}")));
        }
        adj[u].insert(v);
        adj[v].insert(u);
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(at(hl, format!("header announces {m} edges, found {}", edges.len())));
    }
    Ok(Graph::from_edges(n, &edges)?)
}

pub fn emit_graph(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("{} {}\n", g.n(), edges.len());
    for (u, v) in edges {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

/// One positive colour per line, `n` lines.
pub fn parse_colouring(text: &str, n: usize) -> Result<Colouring, CliError> {
    let mut colours = Vec::with_capacity(n);
    for (line, l) in lines(text) {
        let c: Vec<u32> = numbers(line, l, 1)?;
        if c[0] == 0 {
            return Err(at(line, "colours must be positive"));
        }
        colours.push(c[0]);
    }
    if colours.len() != n {
        return Err(CliError::Input(format!("colouring has {} entries, graph has {n} vertices", colours.len())));
    }
    Ok(Colouring::new(colours)?)
}

pub fn emit_colouring(c: &Colouring) -> String {
    c.as_slice().iter().map(|x| format!("{x}\n")).collect()
}

/// `index: a b c`, one triple per line.
pub fn emit_triples(triples: &[TripleVertex]) -> String {
    triples.iter().enumerate().map(|(i, t)| format!("{i}: {} {} {}\n", t.a, t.b, t.c)).collect()
}

/// One stable set per line, as whitespace-separated vertices.
pub fn parse_cover(text: &str, n: usize) -> Result<Vec<BitSet>, CliError> {
    let mut sets = Vec::new();
    for (line, l) in lines(text) {
        let mut set = BitSet::new();
        for p in l.split_whitespace() {
            let v: usize = p.parse().map_err(|_| at(line, format!("`{p}` is not a vertex")))?;
            if v >= n {
                return Err(at(line, format!("vertex {v} out of range 0..{n}")));
            }
            set.insert(v);
        }
        sets.push(set);
    }
    Ok(sets)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rainbow_core::generators::path;

    #[test]
    fn parses_examples() {
        assert_eq!(parse_graph("3 2\n0 1\n1 2").unwrap(), path(3).unwrap());
        let err = parse_graph("2 1\n0 0").unwrap_err();
        assert!(matches!(err, CliError::Parse { line: 2, .. }), "{err}");
        assert!(matches!(parse_graph("3 2\n0 1\n1 0").unwrap_err(), CliError::Parse { line: 3, .. }));
        assert!(matches!(parse_graph("3 1\n0 3").unwrap_err(), CliError::Parse { line: 2, .. }));
        assert!(matches!(parse_graph("3\n0 1").unwrap_err(), CliError::Parse { line: 1, .. }));
        assert!(matches!(parse_graph("3 2\n0 x").unwrap_err(), CliError::Parse { line: 2, .. }));
        assert!(parse_graph("3 2\n0 1").is_err());
        assert!(parse_graph("").is_err());
    }

    #[test]
    fn colouring_round_trip() {
        let c = parse_colouring("1\n2\n\n7\n", 3).unwrap();
        assert_eq!(c.as_slice(), &[1, 2, 7]);
        assert_eq!(parse_colouring(&emit_colouring(&c), 3).unwrap(), c);
        assert!(matches!(parse_colouring("1\n0\n", 2).unwrap_err(), CliError::Parse { line: 2, .. }));
        assert!(parse_colouring("1\n", 2).is_err());
    }

    #[test]
    fn cover_and_triples() {
        let sets = parse_cover("0 2\n1\n", 3).unwrap();
        assert_eq!(sets.len(), 2);
        assert!(parse_cover("5\n", 3).is_err());
        let sg = rainbow_core::generators::shift_graph_triples(4).unwrap();
        assert_eq!(emit_triples(&sg.triples), "0: 1 2 3\n1: 1 2 4\n2: 1 3 4\n3: 2 3 4\n");
    }
}
