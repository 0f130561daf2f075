//! Decomposition trees of graphs, with a line-oriented text form:
//!
//! ```text
//! z=0 | parts: {2},{3},{1},{4} | M[0,1]
//!   leaf {}
//!   leaf {}
//! ```
//!
//! The four sets after `parts:` are parts 1 to 4 of the node's
//! M-partition; children are indented two spaces more than their parent,
//! left child (parts 1 and 3) first.

use std::fmt;

use super::matrix::{MMatrix, MPartition, MViolation};
use crate::bits;
use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphDecompositionTree {
    /// At most one vertex.
    Leaf(u64),
    Node {
        partition: MPartition,
        /// The hyperedges `e_v` built at this node, as `(v, e_v)`.
        derived: Vec<(usize, u64)>,
        left: Box<GraphDecompositionTree>,
        right: Box<GraphDecompositionTree>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {message}")]
pub struct TreeParseError {
    pub line: usize,
    pub message: String,
}

impl GraphDecompositionTree {
    pub fn support(&self) -> u64 {
        match self {
            GraphDecompositionTree::Leaf(m) => *m,
            GraphDecompositionTree::Node { partition, .. } => partition.support(),
        }
    }

    /// Partitions of all nodes, in preorder.
    pub fn partitions(&self) -> Vec<&MPartition> {
        let mut out = Vec::new();
        self.walk(&mut |t| {
            if let GraphDecompositionTree::Node { partition, .. } = t {
                out.push(partition);
            }
        });
        out
    }

    fn walk<'a>(&'a self, f: &mut impl FnMut(&'a GraphDecompositionTree)) {
        f(self);
        if let GraphDecompositionTree::Node { left, right, .. } = self {
            left.walk(f);
            right.walk(f);
        }
    }

    pub fn node_count(&self) -> usize {
        self.partitions().len()
    }

    pub fn depth(&self) -> usize {
        match self {
            GraphDecompositionTree::Leaf(_) => 0,
            GraphDecompositionTree::Node { left, right, .. } => 1 + left.depth().max(right.depth()),
        }
    }

    /// Validates every node partition against `g`, and that every node's
    /// children cover exactly its parts 1, 3 and 2, 4.
    pub fn validate(&self, g: &Graph) -> Result<(), MViolation> {
        match self {
            GraphDecompositionTree::Leaf(m) if m.count_ones() <= 1 => Ok(()),
            GraphDecompositionTree::Leaf(_) => Err(MViolation::NotAPartition),
            GraphDecompositionTree::Node { partition, left, right, .. } => {
                partition.validate(g)?;
                let p = partition.parts;
                if left.support() != p[1] | p[3] || right.support() != p[2] | p[4] {
                    return Err(MViolation::NotAPartition);
                }
                left.validate(g)?;
                right.validate(g)
            }
        }
    }

    /// The graph on `n` vertices determined by the tree: every pair is fixed
    /// by a 0/1 entry at exactly one node.
    pub fn recompose(&self, n: usize) -> Graph {
        let mut g = Graph::new(n);
        for p in self.partitions() {
            for (u, v) in p.forced_edges() {
                g.add_edge(u, v);
            }
        }
        g
    }

    /// The derived hyperedges of every node, one line per node.
    pub fn trace(&self) -> String {
        let mut out = String::new();
        self.walk(&mut |t| {
            if let GraphDecompositionTree::Node { partition, derived, .. } = t {
                let edges: Vec<String> = derived.iter().map(|(v, e)| format!("e_{v}={}", set(*e))).collect();
                out.push_str(&format!("z={}: {}\n", partition.z(), edges.join(" ")));
            }
        });
        out
    }

    fn write_indented(&self, f: &mut fmt::Formatter<'_>, depth: usize) -> fmt::Result {
        let pad = "  ".repeat(depth);
        match self {
            GraphDecompositionTree::Leaf(m) => writeln!(f, "{pad}leaf {}", set(*m)),
            GraphDecompositionTree::Node { partition, left, right, .. } => {
                let p = partition.parts;
                writeln!(
                    f,
                    "{pad}z={} | parts: {},{},{},{} | {}",
                    partition.z(),
                    set(p[1]),
                    set(p[2]),
                    set(p[3]),
                    set(p[4]),
                    partition.matrix
                )?;
                left.write_indented(f, depth + 1)?;
                right.write_indented(f, depth + 1)
            }
        }
    }

    /// Parses the text form. Derived hyperedges are not part of it and come
    /// back empty.
    pub fn parse(text: &str) -> Result<Self, TreeParseError> {
        let lines: Vec<(usize, usize, &str)> = text
            .lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'))
            .map(|(i, l)| {
                let body = l.trim_start();
                (i + 1, (l.len() - body.len()) / 2, body.trim_end())
            })
            .collect();
        let mut pos = 0;
        let tree = parse_node(&lines, &mut pos, 0)?;
        if let Some(&(line, _, _)) = lines.get(pos) {
            return Err(TreeParseError { line, message: "content after the root subtree".into() });
        }
        Ok(tree)
    }
}

fn set(mask: u64) -> String {
    let items: Vec<String> = bits::iter(mask).map(|v| v.to_string()).collect();
    format!("{{{}}}", items.join(","))
}

fn parse_set(s: &str) -> Option<u64> {
    let inner = s.trim().strip_prefix('{')?.strip_suffix('}')?;
    if inner.trim().is_empty() {
        return Some(0);
    }
    inner.split(',').try_fold(0u64, |acc, t| {
        let v: usize = t.trim().parse().ok()?;
        (v < 64).then(|| acc | bits::bit(v))
    })
}

fn parse_node(lines: &[(usize, usize, &str)], pos: &mut usize, depth: usize) -> Result<GraphDecompositionTree, TreeParseError> {
    let &(line, indent, body) = lines
        .get(*pos)
        .ok_or_else(|| TreeParseError { line: lines.last().map_or(1, |l| l.0), message: "missing subtree".into() })?;
    let err = |message: &str| TreeParseError { line, message: message.into() };
    if indent != depth {
        return Err(err(&format!("expected indentation depth {depth}")));
    }
    *pos += 1;
    if let Some(rest) = body.strip_prefix("leaf ") {
        let m = parse_set(rest).ok_or_else(|| err("malformed vertex set"))?;
        if m.count_ones() > 1 {
            return Err(err("a leaf holds at most one vertex"));
        }
        return Ok(GraphDecompositionTree::Leaf(m));
    }
    let fields: Vec<&str> = body.split('|').map(str::trim).collect();
    let [zf, pf, mf] = fields[..] else {
        return Err(err("expected `z=<id> | parts: ... | M[a,b]`"));
    };
    let z: usize = zf
        .strip_prefix("z=")
        .and_then(|v| v.parse().ok())
        .filter(|&z| z < 64)
        .ok_or_else(|| err("malformed z"))?;
    let sets = pf.strip_prefix("parts:").ok_or_else(|| err("missing parts"))?;
    let mut parts = [bits::bit(z), 0, 0, 0, 0];
    let mut rest = sets.trim();
    for slot in parts.iter_mut().skip(1) {
        let end = rest.find('}').ok_or_else(|| err("malformed parts"))?;
        *slot = parse_set(&rest[..=end]).ok_or_else(|| err("malformed vertex set"))?;
        rest = rest[end + 1..].trim_start().strip_prefix(',').unwrap_or(&rest[end + 1..]).trim_start();
    }
    if !rest.is_empty() {
        return Err(err("expected four parts"));
    }
    let matrix = match mf {
        "M[0,0]" => MMatrix::new(false, false),
        "M[0,1]" => MMatrix::new(false, true),
        "M[1,0]" => MMatrix::new(true, false),
        "M[1,1]" => MMatrix::new(true, true),
        _ => return Err(err("unknown matrix")),
    };
    let left = parse_node(lines, pos, depth + 1)?;
    let right = parse_node(lines, pos, depth + 1)?;
    Ok(GraphDecompositionTree::Node {
        partition: MPartition { parts, matrix },
        derived: Vec::new(),
        left: Box::new(left),
        right: Box::new(right),
    })
}

impl fmt::Display for GraphDecompositionTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_indented(f, 0)
    }
}
