//! Minimum dominating, total dominating and connected dominating sets.
//!
//! [`brute_force`] is the exhaustive oracle. [`dp_dominating_set`] runs a
//! label-state dynamic program over a k-expression. [`split_reduce`] derives
//! the total and connected variants from a dominating set inside the clique
//! of a connected split graph, and [`solve_h_free_split`] chains the
//! reductions, the clique-width builder and the dynamic program for H-free
//! split graphs.

mod brute;
mod dp;
mod split;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::bits;
use crate::cliquewidth::BuildError;
use crate::graph::Graph;

pub use brute::{brute_force, brute_force_capped, DEFAULT_BRUTE_CAP};
pub use dp::{dp_dominating_set, MAX_DP_LABELS};
pub use split::{clique_sperner_reduction, solve_h_free_split, split_reduce};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Variant {
    Dominating,
    Total,
    Connected,
}

impl Variant {
    pub const ALL: [Variant; 3] = [Variant::Dominating, Variant::Total, Variant::Connected];

    pub fn name(self) -> &'static str {
        match self {
            Variant::Dominating => "dominating",
            Variant::Total => "total",
            Variant::Connected => "connected",
        }
    }

    /// Whether `d` is a set of this kind in `g`.
    pub fn accepts(self, g: &Graph, d: u64) -> bool {
        match self {
            Variant::Dominating => is_dominating(g, d),
            Variant::Total => is_total_dominating(g, d),
            Variant::Connected => is_connected_dominating(g, d),
        }
    }

    /// Whether `g` has a set of this kind at all.
    pub fn feasible_on(self, g: &Graph) -> bool {
        match self {
            Variant::Dominating => true,
            Variant::Total => g.isolated_vertices() == 0,
            Variant::Connected => g.n() == 0 || g.is_connected(),
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Variant {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Variant::ALL
            .into_iter()
            .find(|v| v.name() == s)
            .ok_or_else(|| format!("unknown variant `{s}` (expected dominating, total or connected)"))
    }
}

pub fn is_dominating(g: &Graph, d: u64) -> bool {
    g.dominated_by(d) == g.vertex_mask()
}

/// Every vertex, including those of `d`, has a neighbor in `d`.
pub fn is_total_dominating(g: &Graph, d: u64) -> bool {
    (0..g.n()).all(|v| g.neighbors(v) & d != 0)
}

/// Dominating and inducing a connected subgraph. On the empty graph the
/// empty set qualifies.
pub fn is_connected_dominating(g: &Graph, d: u64) -> bool {
    is_dominating(g, d) && (d == 0 && g.n() == 0 || d != 0 && g.is_connected_within(d))
}

/// A minimum set of the given variant, or `None` in `witness` when the graph
/// has none.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct DominationResult {
    pub variant: Variant,
    pub witness: Option<u64>,
}

impl DominationResult {
    pub fn feasible(variant: Variant, witness: u64) -> Self {
        DominationResult { variant, witness: Some(witness) }
    }

    pub fn infeasible(variant: Variant) -> Self {
        DominationResult { variant, witness: None }
    }

    pub fn is_feasible(&self) -> bool {
        self.witness.is_some()
    }

    pub fn size(&self) -> Option<usize> {
        self.witness.map(bits::len)
    }

    /// The witness is a set of the right kind; for an infeasible result,
    /// `g` indeed has none.
    pub fn verify(&self, g: &Graph) -> bool {
        match self.witness {
            Some(d) => d & !g.vertex_mask() == 0 && self.variant.accepts(g, d),
            None => !self.variant.feasible_on(g),
        }
    }
}

/// `dominating 2 1 3` or `total infeasible`.
impl fmt::Display for DominationResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.witness {
            None => write!(f, "{} infeasible", self.variant),
            Some(d) => {
                write!(f, "{} {}", self.variant, bits::len(d))?;
                for v in bits::iter(d) {
                    write!(f, " {v}")?;
                }
                Ok(())
            }
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DominationError {
    #[error("graph has {n} vertices; exhaustive search is capped at {cap}")]
    TooLarge { n: usize, cap: usize },
    #[error("expression uses {0} labels; the dynamic program supports at most 6")]
    TooManyLabels(u8),
    #[error("graph is not split")]
    NotSplit,
    #[error("graph is not connected")]
    NotConnected,
    #[error("graph needs at least two vertices")]
    TooSmall,
    #[error("graph contains an induced H on vertices {0:?}")]
    ContainsH(Vec<usize>),
    #[error(transparent)]
    Build(#[from] BuildError),
}
