use std::fmt;

use super::{Hypergraph, HypergraphError, VertexId};
use crate::bits;

/// Glues `h1` and `h2` at the fresh vertex `z`.
///
/// The result has vertex set `V1 ∪ V2 ∪ {z}` and hyperedges `{z} ∪ e` for
/// `e ∈ E1` together with `V1 ∪ e` for `e ∈ E2`. Gluing two 1-Sperner
/// hypergraphs gives a 1-Sperner one except when `E1 = {V1}` and
/// `E2 = {∅}`, where `{z} ∪ V1` contains `V1`.
pub fn glue(h1: &Hypergraph, h2: &Hypergraph, z: VertexId) -> Result<Hypergraph, HypergraphError> {
    if h1.vertices().iter().any(|v| h2.index_of(*v).is_some()) {
        return Err(HypergraphError::NotDisjoint);
    }
    if h1.index_of(z).is_some() || h2.index_of(z).is_some() {
        return Err(HypergraphError::GluingVertexCollision(z));
    }
    let vertices = h1
        .vertices()
        .iter()
        .chain(h2.vertices())
        .copied()
        .chain(std::iter::once(z));
    let v1 = h1.vertices();
    let edges = h1
        .edges()
        .into_iter()
        .map(|mut e| {
            e.push(z);
            e
        })
        .chain(h2.edges().into_iter().map(|mut e| {
            e.extend_from_slice(v1);
            e
        }));
    Hypergraph::new(vertices, edges)
}

impl Hypergraph {
    /// Whether `z ∈ e \ f` implies `e \ {z} ⊆ f` for all hyperedges `e`, `f`.
    pub fn is_z_decomposable(&self, z: VertexId) -> Result<bool, HypergraphError> {
        let zi = self.index_of(z).ok_or(HypergraphError::UnknownVertex(z))?;
        Ok(self.z_decomposable_at(zi))
    }

    fn z_decomposable_at(&self, zi: usize) -> bool {
        let zb = bits::bit(zi);
        let (with, without): (Vec<u64>, Vec<u64>) = self.edge_masks().iter().partition(|&&e| e & zb != 0);
        with.iter()
            .all(|&e| without.iter().all(|&f| bits::is_subset(e & !zb, f)))
    }

    /// Inverts [`glue`]: returns `(h1, h2)` with `glue(h1, h2, z) == self`.
    ///
    /// `V1` is the union of `e \ {z}` over the hyperedges containing `z`; the
    /// remaining vertices other than `z` form `V2`.
    pub fn split_at(&self, z: VertexId) -> Result<(Hypergraph, Hypergraph), HypergraphError> {
        let zi = self.index_of(z).ok_or(HypergraphError::UnknownVertex(z))?;
        if !self.z_decomposable_at(zi) {
            return Err(HypergraphError::NotDecomposable(z));
        }
        let zb = bits::bit(zi);
        let v1 = self
            .edge_masks()
            .iter()
            .filter(|&&e| e & zb != 0)
            .fold(0, |acc, &e| acc | (e & !zb));
        let v2 = self.universe() & !v1 & !zb;
        let e1 = self.edge_masks().iter().filter(|&&e| e & zb != 0).map(|&e| e & !zb);
        let e2 = self.edge_masks().iter().filter(|&&e| e & zb == 0).map(|&e| e & !v1);
        Ok((self.restrict(v1, e1)?, self.restrict(v2, e2)?))
    }

    /// Sub-hypergraph on the positions in `vmask` with the given hyperedges
    /// (bitsets over this hypergraph's positions, contained in `vmask`).
    pub(crate) fn restrict(&self, vmask: u64, edges: impl Iterator<Item = u64>) -> Result<Hypergraph, HypergraphError> {
        let positions = bits::to_vec(vmask);
        let compress = |e: u64| {
            positions
                .iter()
                .enumerate()
                .filter(|(_, &p)| e >> p & 1 == 1)
                .fold(0u64, |m, (i, _)| m | bits::bit(i))
        };
        let mut h = Hypergraph {
            vertices: positions.iter().map(|&p| self.vertices()[p]).collect(),
            edges: Vec::new(),
        };
        for e in edges {
            debug_assert!(bits::is_subset(e, vmask));
            h.push_edge(compress(e))?;
        }
        Ok(h)
    }

    /// Recursively decomposes a 1-Sperner hypergraph, always splitting at the
    /// smallest vertex id at which the hypergraph is decomposable.
    pub fn decompose(&self) -> Result<DecompositionTree, HypergraphError> {
        if let Some((e, f)) = self.one_sperner_violation() {
            return Err(HypergraphError::NotOneSperner {
                first: self.ids_of(e),
                second: self.ids_of(f),
            });
        }
        self.decompose_unchecked()
    }

    fn decompose_unchecked(&self) -> Result<DecompositionTree, HypergraphError> {
        if self.n() == 0 {
            return Ok(DecompositionTree::Leaf(self.clone()));
        }
        let zi = (0..self.n())
            .find(|&i| self.z_decomposable_at(i))
            .ok_or(HypergraphError::NotDecomposable(self.vertices()[0]))?;
        let z = self.vertices()[zi];
        let (h1, h2) = self.split_at(z)?;
        Ok(DecompositionTree::Node {
            z,
            left: Box::new(h1.decompose_unchecked()?),
            right: Box::new(h2.decompose_unchecked()?),
        })
    }
}

/// Recursive gluing structure of a 1-Sperner hypergraph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DecompositionTree {
    /// A hypergraph without vertices: its hyperedge family is empty or `{∅}`.
    Leaf(Hypergraph),
    Node {
        z: VertexId,
        left: Box<DecompositionTree>,
        right: Box<DecompositionTree>,
    },
}

impl DecompositionTree {
    /// Glues the tree back together.
    pub fn recompose(&self) -> Result<Hypergraph, HypergraphError> {
        match self {
            DecompositionTree::Leaf(h) => Ok(h.clone()),
            DecompositionTree::Node { z, left, right } => glue(&left.recompose()?, &right.recompose()?, *z),
        }
    }

    pub fn node_count(&self) -> usize {
        match self {
            DecompositionTree::Leaf(_) => 0,
            DecompositionTree::Node { left, right, .. } => 1 + left.node_count() + right.node_count(),
        }
    }

    fn write_indented(&self, f: &mut fmt::Formatter<'_>, depth: usize) -> fmt::Result {
        let pad = "  ".repeat(depth);
        match self {
            DecompositionTree::Leaf(h) => {
                let edges = if h.m() == 0 { "{}" } else { "{{}}" };
                writeln!(f, "{pad}leaf E={edges}")
            }
            DecompositionTree::Node { z, left, right } => {
                writeln!(f, "{pad}z={z}")?;
                left.write_indented(f, depth + 1)?;
                right.write_indented(f, depth + 1)
            }
        }
    }
}

impl fmt::Display for DecompositionTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_indented(f, 0)
    }
}
