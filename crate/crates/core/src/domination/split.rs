use super::{brute_force, dp_dominating_set, DominationError, DominationResult, Variant};
use crate::bits;
use crate::cliquewidth::build_split_h_free;
use crate::decomposition::LabeledSplitGraph;
use crate::graph::{find_induced, Graph, Pattern};

fn connected_split(g: &Graph) -> Result<u64, DominationError> {
    if g.n() < 2 {
        return Err(DominationError::TooSmall);
    }
    let (k, _) = g.find_split_partition().ok_or(DominationError::NotSplit)?;
    if !g.is_connected() {
        return Err(DominationError::NotConnected);
    }
    Ok(k)
}

/// Replaces every vertex of `d` outside the clique `k` by its lowest
/// neighbor in `k`.
fn into_clique(g: &Graph, k: u64, d: u64) -> u64 {
    bits::iter(d & !k).fold(d & k, |acc, x| {
        let nb = g.neighbors(x) & k;
        acc | (nb & nb.wrapping_neg())
    })
}

/// Turns a minimum dominating set `d` of a connected split graph with clique
/// `k` into a minimum set of the requested variant.
fn derive(g: &Graph, k: u64, d: u64, variant: Variant) -> DominationResult {
    let universal = g.universal_vertices();
    let star = if universal != 0 { universal & universal.wrapping_neg() } else { into_clique(g, k, d) };
    let witness = match variant {
        Variant::Total if bits::len(star) == 1 => {
            let nb = g.neighbors(star.trailing_zeros() as usize);
            star | (nb & nb.wrapping_neg())
        }
        _ => star,
    };
    DominationResult::feasible(variant, witness)
}

/// Solves any variant on a connected split graph with at least two vertices
/// from a minimum dominating set found by exhaustive search: the connected
/// domination number equals the domination number, and the total one is
/// the larger of it and 2.
pub fn split_reduce(g: &Graph, variant: Variant) -> Result<DominationResult, DominationError> {
    let k = connected_split(g)?;
    let d = brute_force(g, Variant::Dominating)?.witness.expect("domination is always feasible");
    Ok(derive(g, k, d, variant))
}

/// Vertices kept when shrinking the labeled split graph `(g, k, i)` to a
/// clique-Sperner one: one representative (the lowest) per class of clique
/// vertices with equal neighborhoods in `i`, minus the representatives whose
/// neighborhood is strictly contained in another's. All of `i` is kept.
pub fn clique_sperner_reduction(g: &Graph, k: u64, i: u64) -> u64 {
    let nb = |u: usize| g.neighbors(u) & i;
    let mut reps: Vec<usize> = Vec::new();
    for u in bits::iter(k) {
        if reps.iter().all(|&r| nb(r) != nb(u)) {
            reps.push(u);
        }
    }
    let kept = reps.iter().filter(|&&u| !reps.iter().any(|&v| nb(u) != nb(v) && bits::is_subset(nb(u), nb(v))));
    kept.fold(i, |acc, &u| acc | bits::bit(u))
}

/// Minimum dominating set inside the clique of a connected H-free split
/// graph with at least two vertices, via the reduced graph's 5-expression.
fn dominating_in_clique(g: &Graph) -> Result<(u64, u64), DominationError> {
    let (k, i) = g.find_split_partition().ok_or(DominationError::NotSplit)?;
    let keep = clique_sperner_reduction(g, k, i);
    let old = bits::to_vec(keep);
    let squeeze = |mask: u64| bits::from_indices(old.iter().enumerate().filter(|(_, &v)| mask & bits::bit(v) != 0).map(|(j, _)| j));
    let residue = g.induced(keep);
    let ls = LabeledSplitGraph::new(residue, squeeze(k), squeeze(i)).expect("induced split partition");
    let e = build_split_h_free(&ls)?;
    let d = dp_dominating_set(&e)?.witness.expect("domination is always feasible");
    let lifted = bits::iter(d).fold(0, |acc, j| acc | bits::bit(old[j]));
    Ok((k, into_clique(g, k, lifted)))
}

/// Any variant on an H-free split graph: components are solved separately,
/// each one shrunk to a clique-Sperner split graph whose 5-expression feeds
/// the dynamic program.
pub fn solve_h_free_split(g: &Graph, variant: Variant) -> Result<DominationResult, DominationError> {
    if !g.is_split() {
        return Err(DominationError::NotSplit);
    }
    if let Some(found) = find_induced(g, &Pattern::H.graph()).expect("six vertices are within the cap") {
        return Err(DominationError::ContainsH(found));
    }
    if !variant.feasible_on(g) {
        return Ok(DominationResult::infeasible(variant));
    }
    let mut witness = 0;
    for comp in g.components() {
        if bits::len(comp) == 1 {
            witness |= comp;
            continue;
        }
        let sub = g.induced(comp);
        let (k, d) = dominating_in_clique(&sub)?;
        let local = derive(&sub, k, d, variant).witness.expect("derived sets exist");
        let old = bits::to_vec(comp);
        witness |= bits::iter(local).fold(0, |acc, j| acc | bits::bit(old[j]));
    }
    Ok(DominationResult::feasible(variant, witness))
}
