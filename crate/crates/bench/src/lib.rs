//! Fixed inputs shared by the benchmarks.

use sperner::decomposition::LabeledSplitGraph;
use sperner::generate::{self, rng};
use sperner::Hypergraph;

pub const SEED: u64 = 0x5EED;

/// One 1-Sperner hypergraph per vertex count in `sizes`.
pub fn one_sperner(sizes: &[usize]) -> Vec<Hypergraph> {
    let mut r = rng(SEED);
    sizes.iter().map(|&n| generate::one_sperner_hypergraph(&mut r, n)).collect()
}

/// The largest of `tries` generated H-free split graphs with at most `max_n`
/// vertices.
pub fn split_h_free(max_n: usize, tries: usize) -> LabeledSplitGraph {
    let mut r = rng(SEED);
    (0..tries)
        .map(|_| generate::split_h_free(&mut r, max_n))
        .max_by_key(|ls| ls.graph().n())
        .expect("tries > 0")
}
