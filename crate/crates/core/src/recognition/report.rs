use std::fmt;

use thiserror::Error;

use super::{domishold_graph_check, is_threshold_via_nested, threshold_construction, threshold_graph_check, ForbiddenWitness};
use crate::graph::Graph;
use crate::hypergraph::Hypergraph;

pub const DEFAULT_REPORT_CAP: usize = 8;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("graph has {n} vertices; reports are capped at {cap}")]
pub struct ReportError {
    pub n: usize,
    pub cap: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PredicateResult {
    pub name: &'static str,
    pub value: bool,
    /// Whether the predicate belongs to the equivalence list. Others are
    /// reported for information only.
    pub required: bool,
    pub witness: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivalenceReport {
    pub title: &'static str,
    pub predicates: Vec<PredicateResult>,
}

impl EquivalenceReport {
    /// All required predicates have the same value.
    pub fn agrees(&self) -> bool {
        let mut req = self.predicates.iter().filter(|p| p.required).map(|p| p.value);
        match req.next() {
            Some(first) => req.all(|v| v == first),
            None => true,
        }
    }

    /// The common value of the required predicates, if they agree.
    pub fn verdict(&self) -> Option<bool> {
        self.agrees()
            .then(|| self.predicates.iter().find(|p| p.required).map(|p| p.value))
            .flatten()
    }

    pub fn get(&self, name: &str) -> Option<bool> {
        self.predicates.iter().find(|p| p.name == name).map(|p| p.value)
    }
}

impl fmt::Display for EquivalenceReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.title)?;
        for p in &self.predicates {
            let tag = if p.required { "" } else { " (info)" };
            write!(f, "  {:<34} {}{tag}", p.name, p.value)?;
            if let Some(w) = &p.witness {
                write!(f, "  [{w}]")?;
            }
            writeln!(f)?;
        }
        writeln!(f, "  agreement: {}", if self.agrees() { "yes" } else { "NO" })
    }
}

fn forbidden(name: &'static str, check: Result<(), ForbiddenWitness>) -> PredicateResult {
    PredicateResult {
        name,
        value: check.is_ok(),
        required: true,
        witness: check.err().map(|w| format!("induced {} on {:?}", w.pattern, w.vertices)),
    }
}

fn one_sperner(name: &'static str, h: &Hypergraph, required: bool) -> PredicateResult {
    let v = h.one_sperner_violation();
    PredicateResult {
        name,
        value: v.is_none(),
        required,
        witness: v.map(|(e, f)| format!("{:?} vs {:?}", h.ids_of(e), h.ids_of(f))),
    }
}

fn threshold(name: &'static str, h: &Hypergraph) -> PredicateResult {
    let w = h.threshold_witness();
    PredicateResult {
        name,
        value: w.is_some(),
        required: true,
        witness: w.map(|w| {
            let (ws, t) = w.to_integers();
            format!("w={ws:?} t={t}")
        }),
    }
}

fn two_asummable(name: &'static str, h: &Hypergraph) -> PredicateResult {
    let w = h.asummability_witness(2);
    PredicateResult {
        name,
        value: w.is_none(),
        required: true,
        witness: w.map(|w| {
            let (a, b) = w.to_ids(h);
            format!("A={a:?} B={b:?}")
        }),
    }
}

fn plain(name: &'static str, value: bool, required: bool) -> PredicateResult {
    PredicateResult {
        name,
        value,
        required,
        witness: None,
    }
}

fn within_cap(g: &Graph) -> Result<(), ReportError> {
    if g.n() > DEFAULT_REPORT_CAP {
        return Err(ReportError {
            n: g.n(),
            cap: DEFAULT_REPORT_CAP,
        });
    }
    Ok(())
}

/// Graph-level threshold tests against the edge, vertex cover and clique
/// hypergraphs.
///
/// The co-occurrence predicate is decided through the clique hypergraph: a
/// 1-Sperner hypergraph with co-occurrence graph `g` exists as soon as the
/// clique hypergraph is one, and every hypergraph with co-occurrence graph `g`
/// has cliques of `g` as hyperedges.
pub fn check_threshold_equivalences(g: &Graph) -> Result<EquivalenceReport, ReportError> {
    within_cap(g)?;
    let edges = g.edge_hypergraph();
    let vc = g.vertex_cover_hypergraph();
    let cl = g.clique_hypergraph();
    let cooc = cl.is_1_sperner() && cl.co_occurrence() == *g;
    Ok(EquivalenceReport {
        title: "threshold",
        predicates: vec![
            forbidden("graph {P4,C4,2K2}-free", threshold_graph_check(g)),
            plain("graph split with nested I-side", is_threshold_via_nested(g), true),
            plain("graph built by isolated/universal", threshold_construction(g).is_some(), true),
            threshold("edges threshold", &edges),
            two_asummable("edges 2-asummable", &edges),
            one_sperner("vertex covers 1-Sperner", &vc, true),
            threshold("vertex covers threshold", &vc),
            two_asummable("vertex covers 2-asummable", &vc),
            one_sperner("cliques 1-Sperner", &cl, true),
            threshold("cliques threshold", &cl),
            two_asummable("cliques 2-asummable", &cl),
            plain("co-occurrence of a 1-Sperner", cooc, true),
            one_sperner("edges 1-Sperner", &edges, false),
        ],
    })
}

/// Graph-level domishold test against the closed neighborhood and dominating
/// set hypergraphs.
pub fn check_domishold_equivalences(g: &Graph) -> Result<EquivalenceReport, ReportError> {
    within_cap(g)?;
    let nb = g.closed_neighborhood_hypergraph();
    let dom = g.dominating_set_hypergraph();
    Ok(EquivalenceReport {
        title: "domishold",
        predicates: vec![
            forbidden("graph {P4,2K2,K33,K33+,co-2P3}-free", domishold_graph_check(g)),
            one_sperner("closed neighborhoods 1-Sperner", &nb, true),
            threshold("closed neighborhoods threshold", &nb),
            two_asummable("closed neighborhoods 2-asummable", &nb),
            threshold("dominating sets threshold", &dom),
            two_asummable("dominating sets 2-asummable", &dom),
            one_sperner("dominating sets 1-Sperner", &dom, false),
        ],
    })
}
