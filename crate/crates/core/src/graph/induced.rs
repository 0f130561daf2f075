use super::{Graph, GraphError};
use crate::bits;

pub const DEFAULT_PATTERN_CAP: usize = 7;

/// Looks for an induced copy of `pattern` in `g`.
///
/// On success returns the embedding: entry `i` is the vertex of `g` playing
/// pattern vertex `i`.
pub fn find_induced(g: &Graph, pattern: &Graph) -> Result<Option<Vec<usize>>, GraphError> {
    let allowed = vec![g.vertex_mask(); pattern.n()];
    find_induced_constrained(g, pattern, &allowed)
}

/// Like [`find_induced`], but pattern vertex `i` may only be mapped into
/// `allowed[i]`. Labeled containment restricts each pattern side to the
/// matching side of `g`.
pub fn find_induced_constrained(
    g: &Graph,
    pattern: &Graph,
    allowed: &[u64],
) -> Result<Option<Vec<usize>>, GraphError> {
    if pattern.n() > DEFAULT_PATTERN_CAP {
        return Err(GraphError::PatternTooLarge {
            size: pattern.n(),
            cap: DEFAULT_PATTERN_CAP,
        });
    }
    assert_eq!(allowed.len(), pattern.n());
    let mut map = Vec::with_capacity(pattern.n());
    Ok(extend(g, pattern, allowed, &mut map, 0).then_some(map))
}

fn extend(g: &Graph, pattern: &Graph, allowed: &[u64], map: &mut Vec<usize>, used: u64) -> bool {
    let i = map.len();
    if i == pattern.n() {
        return true;
    }
    let mut cand = allowed[i] & g.vertex_mask() & !used;
    for (j, &gj) in map.iter().enumerate() {
        if pattern.has_edge(i, j) {
            cand &= g.neighbors(gj);
        } else {
            cand &= !g.neighbors(gj);
        }
    }
    for v in bits::iter(cand) {
        map.push(v);
        if extend(g, pattern, allowed, map, used | bits::bit(v)) {
            return true;
        }
        map.pop();
    }
    false
}
