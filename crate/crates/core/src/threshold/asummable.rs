//! k-asummability: no `k` independent sets and `k` dependent sets (repeats
//! allowed) have the same sum of characteristic vectors.
//!
//! A witness can always be shrunk so that every dependent set is a minimal
//! hyperedge: dropping a vertex from some `B_i` is matched by dropping it
//! from an `A_j` that contains it, and subsets of independent sets stay
//! independent. The search therefore runs over multisets of `k` minimal
//! hyperedges and tries to split their sum into `k` independent sets.

use crate::bits;
use crate::hypergraph::{Hypergraph, VertexId};

pub const DEFAULT_K_CAP: usize = 3;

/// Sets given as bitsets over the vertex positions of the hypergraph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AsummabilityWitness {
    pub independent: Vec<u64>,
    pub dependent: Vec<u64>,
}

impl AsummabilityWitness {
    /// Checks the tags and the entrywise vector equality.
    pub fn verify(&self, h: &Hypergraph) -> bool {
        let tags = self.independent.iter().all(|&a| h.is_independent_mask(a))
            && self.dependent.iter().all(|&b| !h.is_independent_mask(b));
        let counts = |sets: &[u64]| -> Vec<usize> {
            (0..h.n()).map(|v| sets.iter().filter(|&&s| s >> v & 1 == 1).count()).collect()
        };
        self.independent.len() == self.dependent.len()
            && tags
            && counts(&self.independent) == counts(&self.dependent)
    }

    /// The sets as vertex id lists, independent ones first.
    pub fn to_ids(&self, h: &Hypergraph) -> (Vec<Vec<VertexId>>, Vec<Vec<VertexId>>) {
        let ids = |sets: &[u64]| sets.iter().map(|&s| h.ids_of(s)).collect();
        (ids(&self.independent), ids(&self.dependent))
    }
}

impl Hypergraph {
    /// A witness that the hypergraph is not k-asummable, if one exists.
    ///
    /// # Panics
    /// If `k < 2`.
    pub fn asummability_witness(&self, k: usize) -> Option<AsummabilityWitness> {
        assert!(k >= 2, "k-asummability needs k >= 2");
        let edges = self.minimal_edges();
        if edges.is_empty() || edges[0] == 0 {
            return None;
        }
        let mut tuple = vec![0usize; k];
        loop {
            let dependent: Vec<u64> = tuple.iter().map(|&i| edges[i]).collect();
            if let Some(independent) = split_into_independent(&edges, &dependent, self.n()) {
                return Some(AsummabilityWitness {
                    independent,
                    dependent,
                });
            }
            // Next non-decreasing index tuple.
            let Some(pos) = (0..k).rev().find(|&p| tuple[p] + 1 < edges.len()) else {
                return None;
            };
            let next = tuple[pos] + 1;
            for slot in &mut tuple[pos..] {
                *slot = next;
            }
        }
    }

    pub fn is_k_asummable(&self, k: usize) -> bool {
        self.asummability_witness(k).is_none()
    }
}

/// `k` independent sets whose characteristic vectors sum to those of `dependent`.
fn split_into_independent(edges: &[u64], dependent: &[u64], n: usize) -> Option<Vec<u64>> {
    let k = dependent.len();
    let counts: Vec<usize> = (0..n).map(|v| dependent.iter().filter(|&&b| b >> v & 1 == 1).count()).collect();
    let vertices: Vec<usize> = (0..n).filter(|&v| counts[v] > 0).collect();
    let mut sets = vec![0u64; k];
    fn place(
        idx: usize,
        vertices: &[usize],
        counts: &[usize],
        edges: &[u64],
        sets: &mut Vec<u64>,
    ) -> bool {
        let Some(&v) = vertices.get(idx) else {
            return true;
        };
        let k = sets.len();
        for choice in bits::combinations(k, counts[v]) {
            let ok = bits::iter(choice).all(|i| {
                let grown = sets[i] | bits::bit(v);
                !edges.iter().any(|&e| e >> v & 1 == 1 && bits::is_subset(e, grown))
            });
            if !ok {
                continue;
            }
            for i in bits::iter(choice) {
                sets[i] |= bits::bit(v);
            }
            if place(idx + 1, vertices, counts, edges, sets) {
                return true;
            }
            for i in bits::iter(choice) {
                sets[i] &= !bits::bit(v);
            }
        }
        false
    }
    place(0, &vertices, &counts, edges, &mut sets).then_some(sets)
}
