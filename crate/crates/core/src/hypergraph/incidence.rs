use super::Hypergraph;
use crate::bits;
use crate::decomposition::{LabeledBigraph, LabeledSplitGraph};
use crate::graph::Graph;

// Incidence graphs put the vertex positions of the hypergraph first
// (0..n) and its hyperedges after them (n..n+m), in insertion order.

impl Hypergraph {
    fn incidence_graph(&self) -> Graph {
        let n = self.n();
        let mut g = Graph::new(n + self.m());
        for (j, &e) in self.edge_masks().iter().enumerate() {
            g.join_to(n + j, e);
        }
        g
    }

    fn side_masks(&self) -> (u64, u64) {
        let n = self.n();
        let vside = bits::full(n);
        (vside, bits::full(n + self.m()) & !vside)
    }

    /// Bipartite incidence graph with `A` = vertices and `B` = hyperedges.
    pub fn bigraph_of(&self) -> LabeledBigraph {
        let (vside, eside) = self.side_masks();
        LabeledBigraph::new(self.incidence_graph(), vside, eside).expect("incidence bigraph is bipartite")
    }

    /// Split incidence graph where the vertices form the clique.
    pub fn vertex_clique_split_of(&self) -> LabeledSplitGraph {
        let (vside, eside) = self.side_masks();
        let mut g = self.incidence_graph();
        g.make_clique(vside);
        LabeledSplitGraph::new(g, vside, eside).expect("vertex-clique graph is split")
    }

    /// Split incidence graph where the hyperedges form the clique.
    pub fn edge_clique_split_of(&self) -> LabeledSplitGraph {
        let (vside, eside) = self.side_masks();
        let mut g = self.incidence_graph();
        g.make_clique(eside);
        LabeledSplitGraph::new(g, eside, vside).expect("edge-clique graph is split")
    }
}
