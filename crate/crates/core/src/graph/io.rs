use std::fmt::Write;

use super::Graph;
use crate::error::{Error, Result};

/// Parses the edge-list text format: a header line `n m` followed by `m`
/// lines `u v` with 0-based ids. Everything after `#` on a line is ignored.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let (_, header) = lines
        .next()
        .ok_or_else(|| Error::Parse("missing `n m` header".into()))?;
    let [n, m] = parse_pair(header, 0)?;

    let mut pairs = Vec::with_capacity(m);
    for (lineno, line) in lines {
        pairs.push(parse_pair(line, lineno).map(|[u, v]| (u, v))?);
    }
    if pairs.len() != m {
        return Err(Error::Parse(format!(
            "header announces {m} edges, found {}",
            pairs.len()
        )));
    }
    Graph::from_edges(n, pairs)
}

fn parse_pair(line: &str, lineno: usize) -> Result<[usize; 2]> {
    let mut it = line.split_whitespace().map(str::parse::<usize>);
    match (it.next(), it.next(), it.next()) {
        (Some(Ok(a)), Some(Ok(b)), None) => Ok([a, b]),
        _ => Err(Error::Parse(format!(
            "line {lineno}: expected two integers, got `{line}`"
        ))),
    }
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for &(u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

pub fn to_dot(g: &Graph, name: &str) -> String {
    let mut out = format!("graph {name} {{\n");
    for v in 0..g.vertex_count() {
        writeln!(out, "  {v};").unwrap();
    }
    for &(u, v) in g.edges() {
        writeln!(out, "  {u} -- {v};").unwrap();
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_with_comments() {
        let text = "# a triangle\n3 3\n0 1\n1 2 # side\n\n2 0\n";
        assert_eq!(parse_edge_list(text).unwrap(), Graph::complete(3));
    }

    #[test]
    fn edge_count_must_match_header() {
        assert!(matches!(
            parse_edge_list("3 2\n0 1\n"),
            Err(Error::Parse(_))
        ));
        assert!(matches!(parse_edge_list(""), Err(Error::Parse(_))));
        assert!(matches!(
            parse_edge_list("3 1\n0 x\n"),
            Err(Error::Parse(_))
        ));
    }

    #[test]
    fn writes_and_reads_back() {
        let g = Graph::complete_bipartite(2, 3);
        assert_eq!(parse_edge_list(&to_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn dot_output() {
        let dot = to_dot(&Graph::path(2), "G");
        assert_eq!(dot, "graph G {\n  0;\n  1;\n  0 -- 1;\n}\n");
    }
}
