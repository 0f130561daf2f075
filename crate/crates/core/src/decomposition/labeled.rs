use super::DecompositionError;
use crate::bits;
use crate::graph::{find_induced_constrained, Graph, Pattern};

/// A split graph together with a split partition `(K, I)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledSplitGraph {
    g: Graph,
    k: u64,
    i: u64,
}

/// A bipartite graph together with a bipartition `(A, B)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledBigraph {
    g: Graph,
    a: u64,
    b: u64,
}

fn check_partition(g: &Graph, x: u64, y: u64) -> Result<(), DecompositionError> {
    if x & y != 0 || x | y != g.vertex_mask() {
        return Err(DecompositionError::NotAPartition);
    }
    Ok(())
}

/// First pair `(u, v)` of distinct vertices of `side` with `nbhd(u) ⊆ nbhd(v)`.
fn comparable_pair(side: u64, nbhd: impl Fn(usize) -> u64) -> Option<(usize, usize)> {
    let vs = bits::to_vec(side);
    for &u in &vs {
        for &v in &vs {
            if u != v && bits::is_subset(nbhd(u), nbhd(v)) {
                return Some((u, v));
            }
        }
    }
    None
}

/// An induced copy of a labeled pattern whose sides must map into `x` and `y`.
fn labeled_copy(g: &Graph, pattern: Pattern, x: u64, y: u64) -> Option<Vec<usize>> {
    let (px, py) = pattern.labeled_sides().expect("pattern has a labeled version");
    let allowed: Vec<u64> = (0..6)
        .map(|v| if px >> v & 1 == 1 { x } else if py >> v & 1 == 1 { y } else { 0 })
        .collect();
    find_induced_constrained(g, &pattern.graph(), &allowed).expect("six vertices are within the cap")
}

impl LabeledSplitGraph {
    pub fn new(g: Graph, k: u64, i: u64) -> Result<Self, DecompositionError> {
        check_partition(&g, k, i)?;
        if !g.is_clique(k) || !g.is_independent(i) {
            return Err(DecompositionError::NotSplit);
        }
        Ok(LabeledSplitGraph { g, k, i })
    }

    pub fn graph(&self) -> &Graph {
        &self.g
    }

    pub fn clique(&self) -> u64 {
        self.k
    }

    pub fn independent(&self) -> u64 {
        self.i
    }

    /// Swaps the roles of `K` and `I` in the complement.
    pub fn complement(&self) -> LabeledSplitGraph {
        LabeledSplitGraph {
            g: self.g.complement(),
            k: self.i,
            i: self.k,
        }
    }

    /// Two clique vertices whose neighborhoods in `I` are comparable.
    pub fn clique_sperner_violation(&self) -> Option<(usize, usize)> {
        comparable_pair(self.k, |v| self.g.neighbors(v) & self.i)
    }

    pub fn is_clique_sperner(&self) -> bool {
        self.clique_sperner_violation().is_none()
    }

    /// Two independent vertices with comparable neighborhoods.
    pub fn independent_sperner_violation(&self) -> Option<(usize, usize)> {
        comparable_pair(self.i, |v| self.g.neighbors(v))
    }

    pub fn is_independent_sperner(&self) -> bool {
        self.independent_sperner_violation().is_none()
    }

    /// An induced H with its centers in `K` and its leaves in `I`.
    pub fn find_h(&self) -> Option<Vec<usize>> {
        labeled_copy(&self.g, Pattern::H, self.k, self.i)
    }

    /// An induced H̄ with its leaves in `K` and its centers in `I`.
    pub fn find_h_bar(&self) -> Option<Vec<usize>> {
        labeled_copy(&self.g, Pattern::HBar, self.k, self.i)
    }
}

impl LabeledBigraph {
    pub fn new(g: Graph, a: u64, b: u64) -> Result<Self, DecompositionError> {
        check_partition(&g, a, b)?;
        if !g.is_independent(a) || !g.is_independent(b) {
            return Err(DecompositionError::NotBipartite);
        }
        Ok(LabeledBigraph { g, a, b })
    }

    pub fn graph(&self) -> &Graph {
        &self.g
    }

    pub fn left(&self) -> u64 {
        self.a
    }

    pub fn right(&self) -> u64 {
        self.b
    }

    /// Two right vertices with comparable neighborhoods.
    pub fn right_sperner_violation(&self) -> Option<(usize, usize)> {
        comparable_pair(self.b, |v| self.g.neighbors(v))
    }

    pub fn is_right_sperner(&self) -> bool {
        self.right_sperner_violation().is_none()
    }

    /// An induced 2P3 with its leaves in `A` and its centers in `B`.
    pub fn find_2p3(&self) -> Option<Vec<usize>> {
        labeled_copy(&self.g, Pattern::TwoP3, self.a, self.b)
    }
}

/// The split partition required by the clique-Sperner decomposition.
///
/// Edgeless graphs get `K = ∅`; a single edge puts its lower endpoint in `K`.
/// With two or more edges the only candidate is the split partition whose
/// independent side is maximal, and it is returned if it is clique-Sperner.
pub fn clique_sperner_partition(g: &Graph) -> Result<Option<LabeledSplitGraph>, DecompositionError> {
    let (mut k, mut i) = g.find_split_partition().ok_or(DecompositionError::NotSplit)?;
    match g.m() {
        0 => {
            k = 0;
            i = g.vertex_mask();
        }
        1 => {
            let (u, _) = g.edges()[0];
            k = bits::bit(u);
            i = g.vertex_mask() & !k;
        }
        _ => {
            if let Some(v) = bits::iter(k).find(|&v| g.neighbors(v) & i == 0) {
                k &= !bits::bit(v);
                i |= bits::bit(v);
            }
        }
    }
    let ls = LabeledSplitGraph::new(g.clone(), k, i)?;
    Ok(ls.is_clique_sperner().then_some(ls))
}

/// The split partition making `g` independent-Sperner, if any. Complementing
/// swaps the two sides and reverses inclusion between the neighborhoods of
/// the independent side, so this is the clique-Sperner partition of the
/// complement read backwards.
pub fn independent_sperner_partition(g: &Graph) -> Result<Option<LabeledSplitGraph>, DecompositionError> {
    let Some(c) = clique_sperner_partition(&g.complement())? else {
        return Ok(None);
    };
    let ls = LabeledSplitGraph::new(g.clone(), c.independent(), c.clique())?;
    Ok(ls.is_independent_sperner().then_some(ls))
}

/// A bipartition making the bigraph right-Sperner, if one exists.
///
/// Isolated vertices and the lower endpoint of every `K2` component go to
/// `A`. At most one component may have more than two vertices; both of its
/// bipartitions are tried, the one putting its lowest vertex in `A` first.
pub fn right_sperner_bipartition(g: &Graph) -> Result<Option<LabeledBigraph>, DecompositionError> {
    let (base_a, _) = g.find_bipartition().ok_or(DecompositionError::NotBipartite)?;
    let big: Vec<u64> = g.components().into_iter().filter(|c| c.count_ones() > 2).collect();
    if big.len() > 1 {
        // Two components with induced P3s form an induced 2P3.
        let vertices = crate::graph::find_induced(g, &Pattern::TwoP3.graph())
            .expect("six vertices are within the cap")
            .expect("two large bipartite components contain 2P3");
        return Err(DecompositionError::ContainsPattern {
            pattern: Pattern::TwoP3,
            vertices,
        });
    }
    let small = g.vertex_mask() & !big.first().copied().unwrap_or(0);
    let small_a: u64 = g
        .components_within(small)
        .into_iter()
        .map(|c| c & c.wrapping_neg())
        .fold(0, |acc, lowest| acc | lowest);
    let options: Vec<u64> = match big.first() {
        None => vec![0],
        Some(&c) => vec![base_a & c, c & !base_a],
    };
    for big_a in options {
        let a = small_a | big_a;
        let lb = LabeledBigraph::new(g.clone(), a, g.vertex_mask() & !a)?;
        if lb.is_right_sperner() {
            return Ok(Some(lb));
        }
    }
    Ok(None)
}
