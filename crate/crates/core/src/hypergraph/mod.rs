//! Hypergraphs on small vertex sets.
//!
//! A [`Hypergraph`] keeps its vertex ids sorted and stores every hyperedge as
//! a bitset over the positions of those ids. Two hypergraphs compare equal
//! when they have the same vertex ids and the same family of hyperedges,
//! regardless of the order the hyperedges were inserted in.

mod decompose;
mod format;
mod incidence;
pub(crate) mod transversal;

use std::fmt;

use thiserror::Error;

use crate::bits;

pub use decompose::{glue, DecompositionTree};
pub use format::{parse_hypergraph, write_hypergraph};

pub type VertexId = u32;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HypergraphError {
    #[error("hypergraph has {0} vertices; at most 64 are supported")]
    TooManyVertices(usize),
    #[error("vertex {0} is listed twice")]
    DuplicateVertex(VertexId),
    #[error("hyperedge {0:?} is listed twice")]
    DuplicateHyperedge(Vec<VertexId>),
    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),
    #[error("vertex sets of the glued hypergraphs intersect")]
    NotDisjoint,
    #[error("gluing vertex {0} already belongs to a constituent")]
    GluingVertexCollision(VertexId),
    #[error("hypergraph is not {0}-decomposable")]
    NotDecomposable(VertexId),
    #[error("hypergraph is not 1-Sperner: {first:?} and {second:?}")]
    NotOneSperner {
        first: Vec<VertexId>,
        second: Vec<VertexId>,
    },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

#[derive(Clone, Debug)]
pub struct Hypergraph {
    vertices: Vec<VertexId>,
    edges: Vec<u64>,
}

impl PartialEq for Hypergraph {
    fn eq(&self, other: &Self) -> bool {
        self.vertices == other.vertices && self.sorted_edges() == other.sorted_edges()
    }
}

impl Eq for Hypergraph {}

impl Hypergraph {
    /// Builds a hypergraph from vertex ids and hyperedges given as id lists.
    pub fn new<V, E, I>(vertices: V, edges: E) -> Result<Self, HypergraphError>
    where
        V: IntoIterator<Item = VertexId>,
        E: IntoIterator<Item = I>,
        I: IntoIterator<Item = VertexId>,
    {
        let mut vertices: Vec<VertexId> = vertices.into_iter().collect();
        vertices.sort_unstable();
        if let Some(w) = vertices.windows(2).find(|w| w[0] == w[1]) {
            return Err(HypergraphError::DuplicateVertex(w[0]));
        }
        if vertices.len() > crate::MAX_VERTICES {
            return Err(HypergraphError::TooManyVertices(vertices.len()));
        }
        let mut h = Hypergraph {
            vertices,
            edges: Vec::new(),
        };
        for e in edges {
            let mask = h.mask_of(e)?;
            h.push_edge(mask)?;
        }
        Ok(h)
    }

    /// Hypergraph on vertices `0..n` with hyperedges given as bitsets.
    pub fn from_masks(n: usize, masks: impl IntoIterator<Item = u64>) -> Result<Self, HypergraphError> {
        if n > crate::MAX_VERTICES {
            return Err(HypergraphError::TooManyVertices(n));
        }
        let mut h = Hypergraph {
            vertices: (0..n as VertexId).collect(),
            edges: Vec::new(),
        };
        let universe = bits::full(n);
        for m in masks {
            if m & !universe != 0 {
                return Err(HypergraphError::UnknownVertex(m.trailing_zeros()));
            }
            h.push_edge(m)?;
        }
        Ok(h)
    }

    /// Same vertex ids, new hyperedge family (bitsets over this vertex order).
    pub(crate) fn with_masks(&self, masks: impl IntoIterator<Item = u64>) -> Result<Self, HypergraphError> {
        let mut h = Hypergraph {
            vertices: self.vertices.clone(),
            edges: Vec::new(),
        };
        for m in masks {
            h.push_edge(m)?;
        }
        Ok(h)
    }

    fn push_edge(&mut self, mask: u64) -> Result<(), HypergraphError> {
        if self.edges.contains(&mask) {
            return Err(HypergraphError::DuplicateHyperedge(self.ids_of(mask)));
        }
        self.edges.push(mask);
        Ok(())
    }

    pub fn empty() -> Self {
        Hypergraph {
            vertices: Vec::new(),
            edges: Vec::new(),
        }
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn n(&self) -> usize {
        self.vertices.len()
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Hyperedges as bitsets over vertex positions, in insertion order.
    pub fn edge_masks(&self) -> &[u64] {
        &self.edges
    }

    pub fn edges(&self) -> Vec<Vec<VertexId>> {
        self.edges.iter().map(|&m| self.ids_of(m)).collect()
    }

    pub(crate) fn sorted_edges(&self) -> Vec<u64> {
        let mut e = self.edges.clone();
        e.sort_unstable();
        e
    }

    pub fn universe(&self) -> u64 {
        bits::full(self.n())
    }

    pub fn index_of(&self, id: VertexId) -> Option<usize> {
        self.vertices.binary_search(&id).ok()
    }

    pub fn mask_of<I: IntoIterator<Item = VertexId>>(&self, ids: I) -> Result<u64, HypergraphError> {
        ids.into_iter().try_fold(0u64, |m, id| {
            self.index_of(id)
                .map(|i| m | bits::bit(i))
                .ok_or(HypergraphError::UnknownVertex(id))
        })
    }

    pub fn ids_of(&self, mask: u64) -> Vec<VertexId> {
        bits::iter(mask).map(|i| self.vertices[i]).collect()
    }

    pub fn contains_edge(&self, mask: u64) -> bool {
        self.edges.contains(&mask)
    }

    pub fn incidence_matrix(&self) -> IncidenceMatrix {
        IncidenceMatrix {
            rows: self.m(),
            cols: self.n(),
            entries: self
                .edges
                .iter()
                .map(|&e| (0..self.n()).map(|j| e >> j & 1 == 1).collect())
                .collect(),
        }
    }

    /// Inclusion-minimal hyperedges, sorted numerically.
    pub fn minimal_edges(&self) -> Vec<u64> {
        bits::minimal_family(self.edges.clone())
    }

    /// No hyperedge contains another one.
    pub fn is_sperner(&self) -> bool {
        self.pairs().all(|(e, f)| !bits::is_subset(e, f) && !bits::is_subset(f, e))
    }

    /// Two hyperedges, the first contained in the second.
    pub fn sperner_violation(&self) -> Option<(u64, u64)> {
        self.pairs().find_map(|(e, f)| match (bits::is_subset(e, f), bits::is_subset(f, e)) {
            (true, _) => Some((e, f)),
            (_, true) => Some((f, e)),
            _ => None,
        })
    }

    /// Two hyperedges differing by at least two vertices in both directions.
    pub fn dually_sperner_violation(&self) -> Option<(u64, u64)> {
        self.pairs().find(|&(e, f)| min_difference(e, f) > 1)
    }

    /// Every two distinct hyperedges have a set difference of size at most one
    /// in some direction.
    pub fn is_dually_sperner(&self) -> bool {
        self.pairs().all(|(e, f)| min_difference(e, f) <= 1)
    }

    pub fn is_k_sperner(&self, k: usize) -> bool {
        assert!(k >= 1, "k-Sperner needs k >= 1");
        self.pairs().all(|(e, f)| (1..=k).contains(&min_difference(e, f)))
    }

    pub fn is_1_sperner(&self) -> bool {
        self.one_sperner_violation().is_none()
    }

    /// A pair of hyperedges whose smaller set difference is not exactly one.
    pub fn one_sperner_violation(&self) -> Option<(u64, u64)> {
        self.pairs().find(|&(e, f)| min_difference(e, f) != 1)
    }

    fn pairs(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        self.edges
            .iter()
            .enumerate()
            .flat_map(move |(i, &e)| self.edges[i + 1..].iter().map(move |&f| (e, f)))
    }

    /// Vertex sets of the hypergraph with every hyperedge relabeled through `f`.
    pub(crate) fn relabel(&self, f: impl Fn(VertexId) -> VertexId) -> Result<Self, HypergraphError> {
        let vertices: Vec<VertexId> = self.vertices.iter().map(|&v| f(v)).collect();
        let edges: Vec<Vec<VertexId>> = self.edges().into_iter().map(|e| e.into_iter().map(&f).collect()).collect();
        Hypergraph::new(vertices, edges)
    }
}

pub(crate) fn min_difference(e: u64, f: u64) -> usize {
    bits::len(e & !f).min(bits::len(f & !e))
}

impl fmt::Display for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "V={:?} E={{", self.vertices)?;
        for (i, e) in self.edges().iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{{")?;
            for (j, v) in e.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{v}")?;
            }
            write!(f, "}}")?;
        }
        write!(f, "}}")
    }
}

/// 0/1 incidence matrix, rows indexed by hyperedges and columns by vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IncidenceMatrix {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<bool>>,
}

impl IncidenceMatrix {
    pub fn get(&self, edge: usize, vertex: usize) -> bool {
        self.entries[edge][vertex]
    }
}
