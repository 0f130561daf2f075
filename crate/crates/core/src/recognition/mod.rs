//! Threshold and domishold graph recognition, construction sequences and the
//! reports that compare the graph-level and hypergraph-level characterizations.

mod construction;
mod hereditary;
mod report;

use crate::graph::{find_induced, Graph, Pattern};

pub use construction::{threshold_construction, ConstructionSequence, Step, StepKind};
pub use hereditary::{is_hereditary_connected_domishold, is_hereditary_total_domishold, HereditaryTest};
pub use report::{
    check_domishold_equivalences, check_threshold_equivalences, EquivalenceReport, PredicateResult, ReportError,
    DEFAULT_REPORT_CAP,
};

/// An induced copy of a forbidden pattern: `vertices[i]` plays the role of
/// pattern vertex `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ForbiddenWitness {
    pub pattern: Pattern,
    pub vertices: Vec<usize>,
}

pub const THRESHOLD_FORBIDDEN: [Pattern; 3] = [Pattern::P4, Pattern::C4, Pattern::TwoK2];

pub const DOMISHOLD_FORBIDDEN: [Pattern; 5] =
    [Pattern::P4, Pattern::TwoK2, Pattern::K33, Pattern::K33Plus, Pattern::CoTwoP3];

/// The first pattern of the list occurring as an induced subgraph.
pub fn find_forbidden(g: &Graph, patterns: &[Pattern]) -> Option<ForbiddenWitness> {
    patterns.iter().find_map(|&p| {
        find_induced(g, &p.graph())
            .expect("catalog patterns are within the cap")
            .map(|vertices| ForbiddenWitness { pattern: p, vertices })
    })
}

/// `Ok` for threshold graphs, otherwise an induced P4, C4 or 2K2.
pub fn threshold_graph_check(g: &Graph) -> Result<(), ForbiddenWitness> {
    find_forbidden(g, &THRESHOLD_FORBIDDEN).map_or(Ok(()), Err)
}

pub fn is_threshold_graph(g: &Graph) -> bool {
    threshold_graph_check(g).is_ok()
}

/// `Ok` for domishold graphs, otherwise an induced P4, 2K2, K33, K33+ or co-2P3.
pub fn domishold_graph_check(g: &Graph) -> Result<(), ForbiddenWitness> {
    find_forbidden(g, &DOMISHOLD_FORBIDDEN).map_or(Ok(()), Err)
}

pub fn is_domishold_graph(g: &Graph) -> bool {
    domishold_graph_check(g).is_ok()
}

/// Split with a partition `(K, I)` whose independent side has neighborhoods
/// totally ordered by inclusion.
///
/// In a threshold graph all neighborhoods are nested, so testing the one
/// partition returned by [`Graph::find_split_partition`] is enough.
pub fn is_threshold_via_nested(g: &Graph) -> bool {
    let Some((_, i)) = g.find_split_partition() else {
        return false;
    };
    let mut nbhds: Vec<u64> = crate::bits::iter(i).map(|v| g.neighbors(v)).collect();
    nbhds.sort_by_key(|m| m.count_ones());
    nbhds.windows(2).all(|w| crate::bits::is_subset(w[0], w[1]))
}
