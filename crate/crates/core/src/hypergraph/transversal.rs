use super::Hypergraph;
use crate::bits;
use crate::graph::Graph;

impl Hypergraph {
    /// The hypergraph of inclusion-minimal transversals on the same vertices.
    ///
    /// Computed by Berge multiplication: the minimal transversals of the
    /// first `i + 1` hyperedges are obtained from those of the first `i` by
    /// extending every set that misses the new hyperedge with each of its
    /// vertices, then discarding non-minimal sets.
    ///
    /// A hypergraph containing the empty hyperedge has no transversal at all;
    /// its transversal hypergraph is returned with no hyperedges. A
    /// hypergraph without hyperedges has `{∅}` as its transversal hypergraph.
    pub fn transversal(&self) -> Hypergraph {
        let edges = self.minimal_edges();
        let family = if edges.first() == Some(&0) {
            Vec::new()
        } else {
            minimal_transversals(&edges)
        };
        self.with_masks(family).expect("minimal transversals are distinct")
    }

    /// Graph on the vertex positions where two vertices are adjacent when some
    /// hyperedge contains both.
    pub fn co_occurrence(&self) -> Graph {
        let mut g = Graph::new(self.n());
        for &e in self.edge_masks() {
            for u in bits::iter(e) {
                g.join_to(u, e & !bits::bit(u));
            }
        }
        g
    }

    /// Every set of pairwise co-occurring vertices lies in some hyperedge.
    ///
    /// Singletons and the empty set count as such sets, so a conformal
    /// hypergraph covers all of its vertices and has at least one hyperedge.
    pub fn is_conformal(&self) -> bool {
        self.conformality_violation().is_none()
    }

    /// A maximal clique of the co-occurrence graph inside no hyperedge.
    pub fn conformality_violation(&self) -> Option<u64> {
        self.co_occurrence()
            .maximal_cliques()
            .into_iter()
            .find(|&c| !self.edge_masks().iter().any(|&e| bits::is_subset(c, e)))
    }
}

/// Minimal transversals of a family of non-empty sets.
pub(crate) fn minimal_transversals(edges: &[u64]) -> Vec<u64> {
    let mut order: Vec<u64> = edges.to_vec();
    order.sort_unstable_by_key(|e| e.count_ones());
    let mut current = vec![0u64];
    for &e in &order {
        let mut next = Vec::with_capacity(current.len() * 2);
        for &t in &current {
            if t & e != 0 {
                next.push(t);
            }
        }
        let hit = next.len();
        for &t in &current {
            if t & e == 0 {
                for v in bits::iter(e) {
                    let cand = t | bits::bit(v);
                    // Sets already hitting e are minimal so far; an extension
                    // survives only if none of them is contained in it.
                    if !next[..hit].iter().any(|&s| bits::is_subset(s, cand)) {
                        next.push(cand);
                    }
                }
            }
        }
        current = bits::minimal_family(next);
    }
    current
}
