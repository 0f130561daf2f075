//! Independent and dependent sets, k-asummability and thresholdness of
//! hypergraphs.
//!
//! A set of vertices is *independent* if it contains no hyperedge and
//! *dependent* otherwise. A hypergraph is threshold if some non-negative
//! weights and threshold separate the two kinds of sets exactly.

mod asummable;
mod simplex;
mod witness;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::bits;
use crate::hypergraph::transversal::minimal_transversals;
use crate::hypergraph::{Hypergraph, HypergraphError, VertexId};

pub use asummable::{AsummabilityWitness, DEFAULT_K_CAP};
pub use simplex::feasible_point;
pub use witness::{ThresholdWitness, WitnessParseError};

impl Hypergraph {
    /// Whether the vertex set given by ids contains no hyperedge.
    pub fn is_independent_set<I: IntoIterator<Item = VertexId>>(&self, ids: I) -> Result<bool, HypergraphError> {
        Ok(self.is_independent_mask(self.mask_of(ids)?))
    }

    pub fn is_independent_mask(&self, x: u64) -> bool {
        !self.edge_masks().iter().any(|&e| bits::is_subset(e, x))
    }

    /// Inclusion-maximal independent sets, as complements of the minimal
    /// transversals. Empty when `∅` is a hyperedge.
    pub fn maximal_independent_sets(&self) -> Vec<u64> {
        let edges = self.minimal_edges();
        if edges.first() == Some(&0) {
            return Vec::new();
        }
        let all = self.universe();
        let mut out: Vec<u64> = minimal_transversals(&edges).into_iter().map(|t| all & !t).collect();
        out.sort_unstable();
        out
    }

    /// A separating weight vector and threshold, or `None` if the hypergraph
    /// is not threshold.
    ///
    /// Solves `w(e) ≥ t` for the minimal hyperedges and `w(S) ≤ t - 1` for the
    /// maximal independent sets exactly over the rationals.
    pub fn threshold_witness(&self) -> Option<ThresholdWitness> {
        let n = self.n();
        let zero = || vec![BigRational::zero(); n];
        let edges = self.minimal_edges();
        if edges.is_empty() {
            return Some(ThresholdWitness::new(self.vertices().to_vec(), zero(), BigRational::one()));
        }
        if edges[0] == 0 {
            return Some(ThresholdWitness::new(self.vertices().to_vec(), zero(), BigRational::zero()));
        }
        let one = BigRational::one();
        let ind = |mask: u64, sign: &BigRational| -> Vec<BigRational> {
            (0..n)
                .map(|v| if mask >> v & 1 == 1 { sign.clone() } else { BigRational::zero() })
                .collect()
        };
        let mut a = Vec::new();
        let mut b = Vec::new();
        // Variables: w_0 .. w_{n-1}, then t.
        for &e in &edges {
            let mut row = ind(e, &one);
            row.push(-one.clone());
            a.push(row);
            b.push(BigRational::zero());
        }
        for s in self.maximal_independent_sets() {
            let mut row = ind(s, &-one.clone());
            row.push(one.clone());
            a.push(row);
            b.push(one.clone());
        }
        let mut x = simplex::feasible_point(&a, &b)?;
        let t = x.pop().unwrap();
        let w = ThresholdWitness::new(self.vertices().to_vec(), x, t);
        debug_assert!(w.separates_extremal(self));
        Some(w)
    }

    pub fn is_threshold(&self) -> bool {
        self.threshold_witness().is_some()
    }
}

#[cfg(test)]
pub(crate) fn integer(n: i64) -> BigRational {
    BigRational::from_integer(num_bigint::BigInt::from(n))
}
