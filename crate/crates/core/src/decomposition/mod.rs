//! Labeled split graphs and bigraphs, their Sperner-type properties, and the
//! M\[a,b\]-partition decompositions of four graph classes built on top of
//! the 1-Sperner hypergraph decomposition.

mod decompose;
mod labeled;
mod matrix;
mod tree;

use thiserror::Error;

use crate::graph::Pattern;

pub use decompose::{
    decompose_bigraph, decompose_bigraph_2p3_free, decompose_cobigraph, decompose_split_graph_h_bar_free,
    decompose_split_graph_h_free,
    decompose_split_h_bar_free, decompose_split_h_free, BIGRAPH, COBIGRAPH, SPLIT_H_BAR_FREE, SPLIT_H_FREE,
};
pub use labeled::{
    clique_sperner_partition, independent_sperner_partition, right_sperner_bipartition, LabeledBigraph, LabeledSplitGraph};
pub use matrix::{validate_m_partition, Entry, MMatrix, MPartition, MViolation};
pub use tree::{GraphDecompositionTree, TreeParseError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DecompositionError {
    #[error("the two sides do not partition the vertex set")]
    NotAPartition,
    #[error("graph is not split")]
    NotSplit,
    #[error("graph is not bipartite")]
    NotBipartite,
    #[error("graph is not cobipartite")]
    NotCobipartite,
    #[error("clique vertices {0} and {1} have nested neighborhoods in I")]
    NotCliqueSperner(usize, usize),
    #[error("independent vertices {0} and {1} have nested neighborhoods")]
    NotIndependentSperner(usize, usize),
    #[error("right vertices {0} and {1} have nested neighborhoods")]
    NotRightSperner(usize, usize),
    #[error("no partition with the required Sperner property exists")]
    NoSpernerPartition,
    #[error("induced {pattern} on vertices {vertices:?}")]
    ContainsPattern { pattern: Pattern, vertices: Vec<usize> },
    #[error("no valid gluing vertex z in {scope:#x}")]
    NoValidZ { scope: u64 },
}
