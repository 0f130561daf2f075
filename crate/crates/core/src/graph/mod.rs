//! Simple undirected graphs on vertices `0..n`, stored as bitset rows.

mod cliques;
mod derived;
mod format;
mod induced;
mod partition;
mod patterns;

use std::fmt;

use thiserror::Error;

use crate::bits;

pub use format::{parse_graph, write_graph};
pub use induced::{find_induced, find_induced_constrained, DEFAULT_PATTERN_CAP};
pub use patterns::Pattern;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph has {0} vertices; at most 64 are supported")]
    TooManyVertices(usize),
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("edge {0}-{1} is listed twice")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range 0..{n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("pattern has {size} vertices; the cap is {cap}")]
    PatternTooLarge { size: usize, cap: usize },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    ///
    /// # Panics
    /// If `n` exceeds 64.
    pub fn new(n: usize) -> Self {
        assert!(n <= crate::MAX_VERTICES, "graphs are limited to 64 vertices");
        Graph { n, adj: vec![0; n] }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        if n > crate::MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(GraphError::Loop(u));
            }
            if g.has_edge(u, v) {
                return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Graph on `n` vertices whose adjacency rows are given as bitsets; the
    /// rows are symmetrized and the diagonal cleared.
    pub fn from_rows(rows: &[u64]) -> Self {
        let mut g = Graph::new(rows.len());
        for (u, &r) in rows.iter().enumerate() {
            g.join_to(u, r & bits::full(rows.len()) & !bits::bit(u));
        }
        g
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn vertex_mask(&self) -> u64 {
        bits::full(self.n)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v, "loops are not allowed");
        self.adj[u] |= bits::bit(v);
        self.adj[v] |= bits::bit(u);
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u] &= !bits::bit(v);
        self.adj[v] &= !bits::bit(u);
    }

    /// Joins `u` to every vertex of `mask` other than itself.
    pub(crate) fn join_to(&mut self, u: usize, mask: u64) {
        let mask = mask & !bits::bit(u);
        self.adj[u] |= mask;
        for v in bits::iter(mask) {
            self.adj[v] |= bits::bit(u);
        }
    }

    pub(crate) fn make_clique(&mut self, mask: u64) {
        for u in bits::iter(mask) {
            self.adj[u] |= mask & !bits::bit(u);
        }
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    /// Open neighborhood as a bitset.
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn closed_neighborhood(&self, v: usize) -> u64 {
        self.adj[v] | bits::bit(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|u| bits::iter(self.adj[u] & !bits::full(u + 1)).map(move |v| (u, v)))
            .collect()
    }

    pub fn complement(&self) -> Graph {
        let all = self.vertex_mask();
        Graph {
            n: self.n,
            adj: (0..self.n).map(|v| all & !self.adj[v] & !bits::bit(v)).collect(),
        }
    }

    /// Subgraph induced by `mask`, with vertices renumbered in increasing order.
    pub fn induced(&self, mask: u64) -> Graph {
        let keep = bits::to_vec(mask & self.vertex_mask());
        let mut g = Graph::new(keep.len());
        for (i, &u) in keep.iter().enumerate() {
            for (j, &v) in keep.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// Graph with vertex `v` of `self` renamed to `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut g = Graph::new(self.n);
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        g
    }

    pub fn is_clique(&self, mask: u64) -> bool {
        bits::iter(mask).all(|v| bits::is_subset(mask & !bits::bit(v), self.adj[v]))
    }

    pub fn is_independent(&self, mask: u64) -> bool {
        bits::iter(mask).all(|v| self.adj[v] & mask == 0)
    }

    /// Vertices dominated by `mask`: the union of closed neighborhoods.
    pub fn dominated_by(&self, mask: u64) -> u64 {
        bits::iter(mask).fold(mask, |acc, v| acc | self.adj[v])
    }

    /// Connected components of the subgraph induced by `mask`, ordered by
    /// their smallest vertex.
    pub fn components_within(&self, mask: u64) -> Vec<u64> {
        let mut rest = mask & self.vertex_mask();
        let mut out = Vec::new();
        while rest != 0 {
            let mut comp = rest & rest.wrapping_neg();
            let mut frontier = comp;
            while frontier != 0 {
                let reach = bits::iter(frontier).fold(0, |acc, v| acc | self.adj[v]) & mask & !comp;
                comp |= reach;
                frontier = reach;
            }
            rest &= !comp;
            out.push(comp);
        }
        out
    }

    pub fn components(&self) -> Vec<u64> {
        self.components_within(self.vertex_mask())
    }

    /// Whether the subgraph induced by `mask` is connected. The empty vertex
    /// set counts as connected.
    pub fn is_connected_within(&self, mask: u64) -> bool {
        self.components_within(mask).len() <= 1
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_within(self.vertex_mask())
    }

    pub fn isolated_vertices(&self) -> u64 {
        (0..self.n).filter(|&v| self.adj[v] == 0).fold(0, |m, v| m | bits::bit(v))
    }

    /// Vertices adjacent to every other vertex.
    pub fn universal_vertices(&self) -> u64 {
        let all = self.vertex_mask();
        (0..self.n)
            .filter(|&v| self.adj[v] | bits::bit(v) == all)
            .fold(0, |m, v| m | bits::bit(v))
    }

    /// Graph induced by all vertices but `v`, renumbered.
    pub fn without(&self, v: usize) -> Graph {
        self.induced(self.vertex_mask() & !bits::bit(v))
    }

    // Named small graphs.

    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    pub fn cycle(n: usize) -> Graph {
        let mut g = Graph::path(n);
        if n >= 3 {
            g.add_edge(0, n - 1);
        }
        g
    }

    pub fn complete(n: usize) -> Graph {
        let mut g = Graph::new(n);
        g.make_clique(bits::full(n));
        g
    }

    pub fn complete_bipartite(p: usize, q: usize) -> Graph {
        let mut g = Graph::new(p + q);
        for u in 0..p {
            g.join_to(u, bits::full(p + q) & !bits::full(p));
        }
        g
    }

    /// Disjoint union, with the vertices of `other` shifted past those of `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let mut g = Graph::new(self.n + other.n);
        for (u, v) in self.edges() {
            g.add_edge(u, v);
        }
        for (u, v) in other.edges() {
            g.add_edge(u + self.n, v + self.n);
        }
        g
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}
