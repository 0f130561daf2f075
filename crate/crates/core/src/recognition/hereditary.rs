use crate::bits;
use crate::graph::Graph;
use crate::hypergraph::Hypergraph;

/// The property required of the derived hypergraph of every induced subgraph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HereditaryTest {
    OneSperner,
    Threshold,
    TwoAsummable,
}

impl HereditaryTest {
    pub const ALL: [HereditaryTest; 3] =
        [HereditaryTest::OneSperner, HereditaryTest::Threshold, HereditaryTest::TwoAsummable];

    fn holds(self, h: &Hypergraph) -> bool {
        match self {
            HereditaryTest::OneSperner => h.is_1_sperner(),
            HereditaryTest::Threshold => h.is_threshold(),
            HereditaryTest::TwoAsummable => h.is_k_asummable(2),
        }
    }
}

fn every_induced(g: &Graph, derived: impl Fn(&Graph) -> Hypergraph, test: HereditaryTest) -> bool {
    bits::subsets(g.vertex_mask()).all(|s| test.holds(&derived(&g.induced(s))))
}

/// Every induced subgraph has a neighborhood hypergraph passing `test`.
pub fn is_hereditary_total_domishold(g: &Graph, test: HereditaryTest) -> bool {
    every_induced(g, Graph::neighborhood_hypergraph, test)
}

/// Every induced subgraph has a cutset hypergraph passing `test`.
pub fn is_hereditary_connected_domishold(g: &Graph, test: HereditaryTest) -> bool {
    every_induced(g, Graph::cutset_hypergraph, test)
}
