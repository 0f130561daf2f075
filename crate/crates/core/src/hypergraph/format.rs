//! Text format: a header line `n m`, then one line `k v1 … vk` per hyperedge.
//! Vertices are `0..n`; `k = 0` encodes the empty hyperedge.

use std::fmt::Write as _;

use super::{Hypergraph, HypergraphError};

fn parse_error(line: usize, message: impl Into<String>) -> HypergraphError {
    HypergraphError::Parse {
        line,
        message: message.into(),
    }
}

fn numbers(line_no: usize, line: &str) -> Result<Vec<usize>, HypergraphError> {
    line.split_whitespace()
        .map(|t| {
            t.parse::<usize>()
                .map_err(|_| parse_error(line_no, format!("expected a non-negative integer, found `{t}`")))
        })
        .collect()
}

pub fn parse_hypergraph(text: &str) -> Result<Hypergraph, HypergraphError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (hl, header) = lines.next().ok_or_else(|| parse_error(1, "missing `n m` header"))?;
    let header = numbers(hl, header)?;
    let [n, m] = header[..] else {
        return Err(parse_error(hl, "header must be `n m`"));
    };
    if n > crate::MAX_VERTICES {
        return Err(HypergraphError::TooManyVertices(n));
    }
    let mut masks = Vec::with_capacity(m);
    for _ in 0..m {
        let (ln, line) = lines
            .next()
            .ok_or_else(|| parse_error(hl, format!("expected {m} hyperedge lines")))?;
        let nums = numbers(ln, line)?;
        let (&k, vs) = nums.split_first().ok_or_else(|| parse_error(ln, "empty hyperedge line"))?;
        if vs.len() != k {
            return Err(parse_error(ln, format!("declared {k} vertices but listed {}", vs.len())));
        }
        let mut mask = 0u64;
        for &v in vs {
            if v >= n {
                return Err(parse_error(ln, format!("vertex {v} out of range 0..{n}")));
            }
            if mask >> v & 1 == 1 {
                return Err(parse_error(ln, format!("vertex {v} repeated")));
            }
            mask |= 1 << v;
        }
        if masks.contains(&mask) {
            return Err(parse_error(ln, "duplicate hyperedge"));
        }
        masks.push(mask);
    }
    if let Some((ln, _)) = lines.next() {
        return Err(parse_error(ln, "trailing content after the declared hyperedges"));
    }
    Hypergraph::from_masks(n, masks)
}

/// Writes the hypergraph in the text format, numbering vertices by position.
pub fn write_hypergraph(h: &Hypergraph) -> String {
    let mut out = format!("{} {}\n", h.n(), h.m());
    for &e in h.edge_masks() {
        let vs = crate::bits::to_vec(e);
        write!(out, "{}", vs.len()).unwrap();
        for v in vs {
            write!(out, " {v}").unwrap();
        }
        out.push('\n');
    }
    out
}
