use std::fmt;

use super::Graph;
use crate::bits;

/// The fixed small graphs used as forbidden induced subgraphs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Pattern {
    P4,
    C4,
    TwoK2,
    K33,
    /// K3,3 plus one edge inside one side.
    K33Plus,
    /// The complement of 2P3.
    CoTwoP3,
    TwoP3,
    /// 2P3 plus the edge between the two degree-two vertices.
    H,
    HBar,
}

impl Pattern {
    pub const ALL: [Pattern; 9] = [
        Pattern::P4,
        Pattern::C4,
        Pattern::TwoK2,
        Pattern::K33,
        Pattern::K33Plus,
        Pattern::CoTwoP3,
        Pattern::TwoP3,
        Pattern::H,
        Pattern::HBar,
    ];

    pub fn graph(self) -> Graph {
        match self {
            Pattern::P4 => Graph::path(4),
            Pattern::C4 => Graph::cycle(4),
            Pattern::TwoK2 => Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap(),
            Pattern::K33 => Graph::complete_bipartite(3, 3),
            Pattern::K33Plus => {
                let mut g = Graph::complete_bipartite(3, 3);
                g.add_edge(0, 1);
                g
            }
            Pattern::TwoP3 => Graph::from_edges(6, &[(0, 1), (1, 2), (3, 4), (4, 5)]).unwrap(),
            Pattern::CoTwoP3 => Pattern::TwoP3.graph().complement(),
            Pattern::H => {
                let mut g = Pattern::TwoP3.graph();
                g.add_edge(1, 4);
                g
            }
            Pattern::HBar => Pattern::H.graph().complement(),
        }
    }

    /// Sides of the labeled versions: `(A, B)` for 2P3, `(K, I)` for H and H̄.
    /// The two centers `1` and `4` sit in B for 2P3, in K for H and in I for H̄.
    pub fn labeled_sides(self) -> Option<(u64, u64)> {
        let centers = bits::bit(1) | bits::bit(4);
        let leaves = bits::full(6) & !centers;
        match self {
            Pattern::TwoP3 => Some((leaves, centers)),
            Pattern::H => Some((centers, leaves)),
            Pattern::HBar => Some((leaves, centers)),
            _ => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Pattern::P4 => "P4",
            Pattern::C4 => "C4",
            Pattern::TwoK2 => "2K2",
            Pattern::K33 => "K33",
            Pattern::K33Plus => "K33+",
            Pattern::CoTwoP3 => "co-2P3",
            Pattern::TwoP3 => "2P3",
            Pattern::H => "H",
            Pattern::HBar => "H-bar",
        }
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}
