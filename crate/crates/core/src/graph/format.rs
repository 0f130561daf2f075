//! Text format: a header line `n m`, then one line `u v` (0-based, `u < v`)
//! per edge.

use std::fmt::Write as _;

use super::{Graph, GraphError};

fn parse_error(line: usize, message: impl Into<String>) -> GraphError {
    GraphError::Parse {
        line,
        message: message.into(),
    }
}

fn numbers(line_no: usize, line: &str) -> Result<Vec<usize>, GraphError> {
    line.split_whitespace()
        .map(|t| {
            t.parse::<usize>()
                .map_err(|_| parse_error(line_no, format!("expected a non-negative integer, found `{t}`")))
        })
        .collect()
}

pub fn parse_graph(text: &str) -> Result<Graph, GraphError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (hl, header) = lines.next().ok_or_else(|| parse_error(1, "missing `n m` header"))?;
    let [n, m] = numbers(hl, header)?[..] else {
        return Err(parse_error(hl, "header must be `n m`"));
    };
    if n > crate::MAX_VERTICES {
        return Err(GraphError::TooManyVertices(n));
    }
    let mut g = Graph::new(n);
    for _ in 0..m {
        let (ln, line) = lines
            .next()
            .ok_or_else(|| parse_error(hl, format!("expected {m} edge lines")))?;
        let [u, v] = numbers(ln, line)?[..] else {
            return Err(parse_error(ln, "edge line must be `u v`"));
        };
        if u >= n || v >= n {
            return Err(parse_error(ln, format!("vertex out of range 0..{n}")));
        }
        if u == v {
            return Err(parse_error(ln, format!("loop at vertex {u}")));
        }
        if u > v {
            return Err(parse_error(ln, "edges must be written with u < v"));
        }
        if g.has_edge(u, v) {
            return Err(parse_error(ln, format!("duplicate edge {u} {v}")));
        }
        g.add_edge(u, v);
    }
    if let Some((ln, _)) = lines.next() {
        return Err(parse_error(ln, "trailing content after the declared edges"));
    }
    Ok(g)
}

pub fn write_graph(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("{} {}\n", g.n(), edges.len());
    for (u, v) in edges {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}
