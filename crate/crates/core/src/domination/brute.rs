use super::{DominationError, DominationResult, Variant};
use crate::bits;
use crate::graph::Graph;

pub const DEFAULT_BRUTE_CAP: usize = 20;

/// Exhaustive search by increasing size, up to [`DEFAULT_BRUTE_CAP`] vertices.
pub fn brute_force(g: &Graph, variant: Variant) -> Result<DominationResult, DominationError> {
    brute_force_capped(g, variant, DEFAULT_BRUTE_CAP)
}

/// The first set found in each size is the lexicographically smallest one.
pub fn brute_force_capped(g: &Graph, variant: Variant, cap: usize) -> Result<DominationResult, DominationError> {
    let n = g.n();
    if n > cap {
        return Err(DominationError::TooLarge { n, cap });
    }
    if !variant.feasible_on(g) {
        return Ok(DominationResult::infeasible(variant));
    }
    for size in 0..=n {
        let mut best: Option<u64> = None;
        for d in bits::combinations(n, size) {
            if variant.accepts(g, d) && best.is_none_or(|b| bits::lex_cmp(d, b).is_lt()) {
                best = Some(d);
            }
        }
        if let Some(d) = best {
            return Ok(DominationResult::feasible(variant, d));
        }
    }
    unreachable!("feasible variants are met by some subset")
}
