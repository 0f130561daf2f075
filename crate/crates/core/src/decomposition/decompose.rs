use super::labeled::{
    clique_sperner_partition, independent_sperner_partition, right_sperner_bipartition, LabeledBigraph, LabeledSplitGraph};
use super::matrix::{MMatrix, MPartition};
use super::tree::GraphDecompositionTree;
use super::DecompositionError;
use crate::bits;
use crate::graph::{find_induced, Graph, Pattern};

pub const SPLIT_H_FREE: MMatrix = MMatrix::new(false, true);
pub const SPLIT_H_BAR_FREE: MMatrix = MMatrix::new(true, false);
pub const BIGRAPH: MMatrix = MMatrix::new(false, false);
pub const COBIGRAPH: MMatrix = MMatrix::new(true, true);

/// The shared recursion. `xs` is the side holding `z` (I or A), `ys` the
/// side whose neighborhoods in `xs` form the derived 1-Sperner hypergraph
/// (K or B). At each node the lowest `z` in `xs` is taken for which
/// `Y1 = N(z)`, `X1 = xs`-vertices with a neighbor in `Y1`, `Y2 = ys - Y1`
/// leaves `X1` completely joined to `Y2`.
fn build(g: &Graph, xs: u64, ys: u64, scope: u64, matrix: MMatrix) -> Result<GraphDecompositionTree, DecompositionError> {
    if scope.count_ones() <= 1 {
        return Ok(GraphDecompositionTree::Leaf(scope));
    }
    let (xs, ys) = (xs & scope, ys & scope);
    for z in bits::iter(xs) {
        let y1 = g.neighbors(z) & ys;
        let y2 = ys & !y1;
        let rest = xs & !bits::bit(z);
        let x1 = bits::iter(rest).filter(|&u| g.neighbors(u) & y1 != 0).fold(0, |m, u| m | bits::bit(u));
        let x2 = rest & !x1;
        if !bits::iter(x1).all(|u| bits::is_subset(y2, g.neighbors(u))) {
            continue;
        }
        let derived = bits::iter(ys).map(|v| (v, g.neighbors(v) & xs)).collect();
        let left = build(g, xs, ys, x1 | y1, matrix)?;
        let right = build(g, xs, ys, x2 | y2, matrix)?;
        return Ok(GraphDecompositionTree::Node {
            partition: MPartition { parts: [bits::bit(z), x1, x2, y1, y2], matrix },
            derived,
            left: Box::new(left),
            right: Box::new(right),
        });
    }
    Err(DecompositionError::NoValidZ { scope })
}

/// Maps a tree of the complement to a tree of the graph: parts 1 and 2 swap,
/// parts 3 and 4 swap, and so do the children.
fn complement_tree(t: GraphDecompositionTree, matrix: MMatrix) -> GraphDecompositionTree {
    match t {
        GraphDecompositionTree::Leaf(m) => GraphDecompositionTree::Leaf(m),
        GraphDecompositionTree::Node { partition, derived, left, right } => {
            let [z, x1, x2, y1, y2] = partition.parts;
            GraphDecompositionTree::Node {
                partition: MPartition { parts: [z, x2, x1, y2, y1], matrix },
                derived,
                left: Box::new(complement_tree(*right, matrix)),
                right: Box::new(complement_tree(*left, matrix)),
            }
        }
    }
}

fn pattern_error(pattern: Pattern, found: Option<Vec<usize>>) -> Result<(), DecompositionError> {
    match found {
        Some(vertices) => Err(DecompositionError::ContainsPattern { pattern, vertices }),
        None => Ok(()),
    }
}

fn unlabeled(g: &Graph, pattern: Pattern) -> Option<Vec<usize>> {
    find_induced(g, &pattern.graph()).expect("six vertices are within the cap")
}

/// M[0,1]-decomposition of an H-free clique-Sperner labeled split graph.
pub fn decompose_split_h_free(ls: &LabeledSplitGraph) -> Result<GraphDecompositionTree, DecompositionError> {
    if let Some((u, v)) = ls.clique_sperner_violation() {
        return Err(DecompositionError::NotCliqueSperner(u, v));
    }
    pattern_error(Pattern::H, ls.find_h())?;
    let g = ls.graph();
    build(g, ls.independent(), ls.clique(), g.vertex_mask(), SPLIT_H_FREE)
}

/// Finds the clique-Sperner partition of a split graph and decomposes it.
pub fn decompose_split_graph_h_free(g: &Graph) -> Result<GraphDecompositionTree, DecompositionError> {
    let ls = clique_sperner_partition(g)?.ok_or(DecompositionError::NoSpernerPartition)?;
    decompose_split_h_free(&ls)
}

/// M[1,0]-decomposition of an H̄-free independent-Sperner labeled split graph,
/// through the complement.
pub fn decompose_split_h_bar_free(ls: &LabeledSplitGraph) -> Result<GraphDecompositionTree, DecompositionError> {
    if let Some((u, v)) = ls.independent_sperner_violation() {
        return Err(DecompositionError::NotIndependentSperner(u, v));
    }
    pattern_error(Pattern::HBar, ls.find_h_bar())?;
    let c = ls.complement();
    let g = c.graph();
    let t = build(g, c.independent(), c.clique(), g.vertex_mask(), SPLIT_H_FREE)?;
    Ok(complement_tree(t, SPLIT_H_BAR_FREE))
}

/// Finds the independent-Sperner partition of a split graph and decomposes it.
pub fn decompose_split_graph_h_bar_free(g: &Graph) -> Result<GraphDecompositionTree, DecompositionError> {
    let ls = independent_sperner_partition(g)?.ok_or(DecompositionError::NoSpernerPartition)?;
    decompose_split_h_bar_free(&ls)
}

/// M[0,0]-decomposition of a right-Sperner labeled bigraph without a
/// labeled 2P3.
pub fn decompose_bigraph_2p3_free(lb: &LabeledBigraph) -> Result<GraphDecompositionTree, DecompositionError> {
    if let Some((u, v)) = lb.right_sperner_violation() {
        return Err(DecompositionError::NotRightSperner(u, v));
    }
    pattern_error(Pattern::TwoP3, lb.find_2p3())?;
    let g = lb.graph();
    build(g, lb.left(), lb.right(), g.vertex_mask(), BIGRAPH)
}

/// Decomposes a 2P3-free bigraph after finding a right-Sperner bipartition.
pub fn decompose_bigraph(g: &Graph) -> Result<GraphDecompositionTree, DecompositionError> {
    pattern_error(Pattern::TwoP3, unlabeled(g, Pattern::TwoP3))?;
    let lb = right_sperner_bipartition(g)?.ok_or(DecompositionError::NoSpernerPartition)?;
    decompose_bigraph_2p3_free(&lb)
}

/// M[1,1]-decomposition of a co-2P3-free cobipartite graph whose complement
/// is right-Sperner, through the complement.
pub fn decompose_cobigraph(g: &Graph) -> Result<GraphDecompositionTree, DecompositionError> {
    pattern_error(Pattern::CoTwoP3, unlabeled(g, Pattern::CoTwoP3))?;
    let c = g.complement();
    let lb = match right_sperner_bipartition(&c) {
        Err(DecompositionError::NotBipartite) => return Err(DecompositionError::NotCobipartite),
        other => other?.ok_or(DecompositionError::NoSpernerPartition)?,
    };
    let t = build(&c, lb.left(), lb.right(), c.vertex_mask(), BIGRAPH)?;
    Ok(complement_tree(t, COBIGRAPH))
}
