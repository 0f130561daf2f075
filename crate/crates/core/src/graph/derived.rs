//! Hypergraphs derived from a graph. All of them live on the vertex set
//! `0..n` of the graph and keep only inclusion-minimal (or, for cliques and
//! independent sets, maximal) members, so each result is Sperner.

use super::Graph;
use crate::bits;
use crate::hypergraph::transversal::minimal_transversals;
use crate::hypergraph::Hypergraph;

fn on_vertices(g: &Graph, masks: Vec<u64>) -> Hypergraph {
    Hypergraph::from_masks(g.n(), masks).expect("masks are distinct subsets of 0..n")
}

impl Graph {
    /// The edges of the graph as a 2-uniform hypergraph.
    pub fn edge_hypergraph(&self) -> Hypergraph {
        let masks = self.edges().into_iter().map(|(u, v)| bits::bit(u) | bits::bit(v)).collect();
        on_vertices(self, masks)
    }

    /// Maximal cliques.
    pub fn clique_hypergraph(&self) -> Hypergraph {
        on_vertices(self, self.maximal_cliques())
    }

    /// Maximal independent sets.
    pub fn independent_set_hypergraph(&self) -> Hypergraph {
        on_vertices(self, self.complement().maximal_cliques())
    }

    /// Minimal vertex covers, computed as minimal transversals of the edges.
    pub fn vertex_cover_hypergraph(&self) -> Hypergraph {
        let edges: Vec<u64> = self.edge_hypergraph().edge_masks().to_vec();
        on_vertices(self, minimal_transversals(&edges))
    }

    /// Minimal sets of the form `N[v]`.
    pub fn closed_neighborhood_hypergraph(&self) -> Hypergraph {
        let family = (0..self.n()).map(|v| self.closed_neighborhood(v)).collect();
        on_vertices(self, bits::minimal_family(family))
    }

    /// Minimal dominating sets, computed as minimal transversals of the closed
    /// neighborhoods.
    pub fn dominating_set_hypergraph(&self) -> Hypergraph {
        let nbhds: Vec<u64> = (0..self.n()).map(|v| self.closed_neighborhood(v)).collect();
        on_vertices(self, minimal_transversals(&nbhds))
    }

    /// Minimal dominating sets by scanning all vertex subsets.
    pub fn dominating_set_hypergraph_brute(&self) -> Hypergraph {
        let all = self.vertex_mask();
        let dominating = bits::subsets(all).filter(|&d| self.dominated_by(d) == all).collect();
        on_vertices(self, bits::minimal_family(dominating))
    }

    /// Minimal sets of the form `N(v)`. An isolated vertex contributes the
    /// empty hyperedge, which then is the only one.
    pub fn neighborhood_hypergraph(&self) -> Hypergraph {
        let family = (0..self.n()).map(|v| self.neighbors(v)).collect();
        on_vertices(self, bits::minimal_family(family))
    }

    /// Minimal cutsets: sets `S` such that `G - S` is disconnected. A
    /// disconnected graph has `∅` as its only minimal cutset; a complete graph
    /// has none.
    pub fn cutset_hypergraph(&self) -> Hypergraph {
        let all = self.vertex_mask();
        let cutsets = bits::subsets(all)
            .filter(|&s| !self.is_connected_within(all & !s))
            .collect();
        on_vertices(self, bits::minimal_family(cutsets))
    }
}
