//! Seeded random instances.
//!
//! Every generator takes a [`ChaCha8Rng`], whose output stream is fixed by the
//! algorithm and the seed, so instances are reproducible across platforms.

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::bits;
use crate::decomposition::{LabeledBigraph, LabeledSplitGraph};
use crate::graph::{find_induced, Graph, Pattern};
use crate::hypergraph::{glue, Hypergraph, VertexId};

pub use rand::SeedableRng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random 1-Sperner hypergraph on vertices `0..n`.
///
/// A gluing tree is grown bottom-up: a node splits its vertex budget into
/// `z` and two random parts, and the two glued sub-hypergraphs are built
/// recursively. Empty leaves are `(∅, ∅)` or `(∅, {∅})`. A gluing whose
/// result is not 1-Sperner is discarded and redrawn. The vertex ids are
/// shuffled at the end.
pub fn one_sperner_hypergraph(rng: &mut ChaCha8Rng, n: usize) -> Hypergraph {
    assert!(n <= crate::MAX_VERTICES);
    let mut next = 0;
    let h = grow(rng, n, &mut next);
    let mut perm: Vec<VertexId> = (0..n as VertexId).collect();
    perm.shuffle(rng);
    let h = h.relabel(|v| perm[v as usize]).expect("a permutation keeps ids distinct");
    debug_assert!(h.is_1_sperner());
    h
}

fn grow(rng: &mut ChaCha8Rng, n: usize, next: &mut VertexId) -> Hypergraph {
    if n == 0 {
        let edges: Vec<Vec<VertexId>> = if rng.random_bool(0.5) { vec![vec![]] } else { vec![] };
        return Hypergraph::new([], edges).unwrap();
    }
    loop {
        let start = *next;
        let left = rng.random_range(0..n);
        let h1 = grow(rng, left, next);
        let h2 = grow(rng, n - 1 - left, next);
        let z = *next;
        *next += 1;
        let h = glue(&h1, &h2, z).expect("ids are fresh");
        if h.is_1_sperner() {
            return h;
        }
        *next = start;
    }
}

/// Random permutation of `0..n`.
fn permutation(rng: &mut ChaCha8Rng, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}

fn permute_mask(mask: u64, perm: &[usize]) -> u64 {
    bits::iter(mask).fold(0, |acc, v| acc | bits::bit(perm[v]))
}

/// A 1-Sperner hypergraph whose incidence graphs have at most `max_n`
/// vertices and at least one, i.e. `1 ≤ n + m ≤ max_n`.
///
/// A vertex count is drawn uniformly and kept for a few redraws of the
/// hypergraph before a new count is drawn, so that large counts, which
/// rarely fit, are not crowded out by small ones.
fn small_incidence(rng: &mut ChaCha8Rng, max_n: usize) -> Hypergraph {
    loop {
        let n = rng.random_range(0..=max_n);
        for _ in 0..16 {
            let h = one_sperner_hypergraph(rng, n);
            if (1..=max_n).contains(&(h.n() + h.m())) {
                return h;
            }
        }
    }
}

fn shuffle_split(rng: &mut ChaCha8Rng, ls: LabeledSplitGraph) -> LabeledSplitGraph {
    let p = permutation(rng, ls.graph().n());
    let g = ls.graph().permuted(&p);
    LabeledSplitGraph::new(g, permute_mask(ls.clique(), &p), permute_mask(ls.independent(), &p)).unwrap()
}

/// An H-free clique-Sperner split graph: the edge-clique split graph of a
/// random 1-Sperner hypergraph, with shuffled vertices.
pub fn split_h_free(rng: &mut ChaCha8Rng, max_n: usize) -> LabeledSplitGraph {
    let ls = small_incidence(rng, max_n).edge_clique_split_of();
    shuffle_split(rng, ls)
}

/// An H̄-free independent-Sperner split graph from the vertex-clique split
/// graph of a random 1-Sperner hypergraph.
pub fn split_h_bar_free(rng: &mut ChaCha8Rng, max_n: usize) -> LabeledSplitGraph {
    let ls = small_incidence(rng, max_n).vertex_clique_split_of();
    shuffle_split(rng, ls)
}

/// A 2P3-free right-Sperner bigraph from the bigraph of a random 1-Sperner
/// hypergraph. Instances with an unlabeled induced 2P3 are redrawn.
pub fn bigraph_2p3_free(rng: &mut ChaCha8Rng, max_n: usize) -> LabeledBigraph {
    loop {
        let lb = small_incidence(rng, max_n).bigraph_of();
        let p = permutation(rng, lb.graph().n());
        let g = lb.graph().permuted(&p);
        if find_induced(&g, &Pattern::TwoP3.graph()).unwrap().is_none() {
            return LabeledBigraph::new(g, permute_mask(lb.left(), &p), permute_mask(lb.right(), &p)).unwrap();
        }
    }
}

/// A co-2P3-free cobipartite graph with right-Sperner complement.
pub fn cobigraph(rng: &mut ChaCha8Rng, max_n: usize) -> Graph {
    bigraph_2p3_free(rng, max_n).graph().complement()
}
