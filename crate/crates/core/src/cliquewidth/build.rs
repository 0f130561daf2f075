use thiserror::Error;

use super::{KExpression, Label, Term};
use crate::bits;
use crate::decomposition::{
    clique_sperner_partition, decompose_bigraph, independent_sperner_partition, decompose_bigraph_2p3_free, decompose_cobigraph,
    decompose_split_h_bar_free, decompose_split_h_free, DecompositionError, Entry, GraphDecompositionTree,
    LabeledBigraph, LabeledSplitGraph,
};
use crate::graph::Graph;

/// Label bound of every builder output.
pub const BUILDER_LABELS: Label = 5;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BuildError {
    #[error(transparent)]
    Decomposition(#[from] DecompositionError),
    #[error("the graph has no vertices")]
    EmptyGraph,
}

fn side_of_z(t: &GraphDecompositionTree, acc: &mut u64) {
    if let GraphDecompositionTree::Node { partition, left, right, .. } = t {
        *acc |= partition.parts[0] | partition.parts[1] | partition.parts[2];
        side_of_z(left, acc);
        side_of_z(right, acc);
    }
}

/// Vertices on the `z` side get labels 1..=3, the others 4..=5.
fn term(t: &GraphDecompositionTree, xs: u64) -> Option<Term> {
    match t {
        GraphDecompositionTree::Leaf(0) => None,
        GraphDecompositionTree::Leaf(m) => {
            let v = m.trailing_zeros() as usize;
            let label = if xs & bits::bit(v) != 0 { 1 } else { 4 };
            Some(Term::leaf(label, v.to_string()))
        }
        GraphDecompositionTree::Node { partition, left, right, .. } => {
            let mut acc = Term::leaf(1, partition.z().to_string());
            if let Some(t1) = term(left, xs) {
                acc = Term::union(acc, Term::rel(1, 2, Term::rel(3, 2, Term::rel(5, 4, t1))));
            }
            if let Some(t2) = term(right, xs) {
                acc = Term::union(acc, Term::rel(1, 3, Term::rel(2, 3, Term::rel(4, 5, t2))));
            }
            let mut pairs = Vec::new();
            for r in 0..5 {
                for c in r + 1..5 {
                    if partition.matrix.entry(r, c) == Entry::One {
                        pairs.push((r as Label + 1, c as Label + 1));
                    }
                }
            }
            for &(i, j) in pairs.iter().rev() {
                acc = Term::adde(i, j, acc);
            }
            Some(acc)
        }
    }
}

/// Turns a decomposition tree into a 5-expression whose leaves are named by
/// vertex index. `z_side` is the side holding the `z` vertices (I or A); it
/// only matters for a tree that is a single leaf, since every other vertex's
/// side can be read off the partitions. `None` for the tree of the empty
/// graph.
///
/// At a node with parts `({z}, X1, X2, Y1, Y2)` the vertex `z` gets label 1
/// and the children are relabeled so that `X1, X2, Y1, Y2` carry labels
/// 2, 3, 4, 5; then one `η` is added per 1-entry of the matrix between two
/// different parts.
pub fn expression_from_tree(t: &GraphDecompositionTree, z_side: u64) -> Option<KExpression> {
    let mut xs = z_side;
    side_of_z(t, &mut xs);
    term(t, xs).map(|root| KExpression::new(BUILDER_LABELS, root).expect("builder labels stay within 1..=5"))
}

fn finish(t: Result<GraphDecompositionTree, DecompositionError>, z_side: u64) -> Result<KExpression, BuildError> {
    expression_from_tree(&t?, z_side).ok_or(BuildError::EmptyGraph)
}

pub fn build_split_h_free(ls: &LabeledSplitGraph) -> Result<KExpression, BuildError> {
    finish(decompose_split_h_free(ls), ls.independent())
}

pub fn build_split_graph_h_free(g: &Graph) -> Result<KExpression, BuildError> {
    if g.n() == 0 {
        return Err(BuildError::EmptyGraph);
    }
    let ls = clique_sperner_partition(g)?.ok_or(DecompositionError::NoSpernerPartition)?;
    build_split_h_free(&ls)
}

pub fn build_split_h_bar_free(ls: &LabeledSplitGraph) -> Result<KExpression, BuildError> {
    finish(decompose_split_h_bar_free(ls), ls.clique())
}

pub fn build_split_graph_h_bar_free(g: &Graph) -> Result<KExpression, BuildError> {
    if g.n() == 0 {
        return Err(BuildError::EmptyGraph);
    }
    let ls = independent_sperner_partition(g)?.ok_or(DecompositionError::NoSpernerPartition)?;
    build_split_h_bar_free(&ls)
}

pub fn build_bigraph_2p3_free(lb: &LabeledBigraph) -> Result<KExpression, BuildError> {
    finish(decompose_bigraph_2p3_free(lb), lb.left())
}

pub fn build_bigraph(g: &Graph) -> Result<KExpression, BuildError> {
    finish(decompose_bigraph(g), 0)
}

pub fn build_cobigraph(g: &Graph) -> Result<KExpression, BuildError> {
    finish(decompose_cobigraph(g), 0)
}
