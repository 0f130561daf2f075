//! 1-Sperner hypergraphs and their graph applications.
//!
//! The crate is organized bottom-up:
//!
//! * [`hypergraph`]: hypergraphs over small vertex sets, the Sperner family of
//!   predicates, gluing and the recursive decomposition of 1-Sperner
//!   hypergraphs, transversals, conformality and incidence graphs.
//! * [`threshold`]: independent/dependent sets, k-asummability and exact
//!   thresholdness with rational weight certificates.
//! * [`graph`]: simple graphs, induced pattern detection, split partitions,
//!   bipartitions and the hypergraphs derived from a graph.
//! * [`recognition`]: threshold and domishold graph recognition and the
//!   cross-characterization reports.
//! * [`decomposition`]: labeled split graphs and bigraphs, the labeled Sperner
//!   predicates and the M\[a,b\]-partition decompositions.
//! * [`cliquewidth`]: k-expressions (parser, printer, evaluator) and the
//!   clique-width 5 builders.
//! * [`domination`]: exact domination solvers.
//! * [`generate`]: seeded random instance generators.
//!
//! Vertex sets are `u64` bitsets throughout, so every object is limited to 64
//! vertices. That is far beyond what the exponential oracles can handle anyway.

pub mod bits;
pub mod cliquewidth;
pub mod decomposition;
pub mod domination;
pub mod generate;
pub mod graph;
pub mod hypergraph;
pub mod recognition;
pub mod threshold;

pub use cliquewidth::{KExpression, LabeledGraph, Term};
pub use decomposition::{
    GraphDecompositionTree, LabeledBigraph, LabeledSplitGraph, MMatrix, MPartition,
};
pub use domination::{DominationResult, Variant};
pub use graph::{Graph, Pattern};
pub use hypergraph::{DecompositionTree, Hypergraph, IncidenceMatrix};
pub use threshold::{AsummabilityWitness, ThresholdWitness};

/// Largest vertex count representable by the bitset encoding.
pub const MAX_VERTICES: usize = 64;
