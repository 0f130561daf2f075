use std::fmt;

use crate::bits;
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Entry {
    Zero,
    One,
    Star,
}

/// The symmetric 5×5 matrix `M[a,b]` over `{0, 1, *}`:
///
/// ```text
/// a a a 1 0
/// a a a * 1
/// a a a 0 *
/// 1 * 0 b b
/// 0 1 * b b
/// ```
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct MMatrix {
    pub a: bool,
    pub b: bool,
}

impl MMatrix {
    pub const fn new(a: bool, b: bool) -> Self {
        MMatrix { a, b }
    }

    pub fn entry(self, row: usize, col: usize) -> Entry {
        use Entry::*;
        let bit = |x: bool| if x { One } else { Zero };
        let (r, c) = if row <= col { (row, col) } else { (col, row) };
        match (r, c) {
            (0..=2, 0..=2) => bit(self.a),
            (3..=4, 3..=4) => bit(self.b),
            (0, 3) | (1, 4) => One,
            (0, 4) | (2, 3) => Zero,
            (1, 3) | (2, 4) => Star,
            _ => panic!("M[a,b] is 5x5"),
        }
    }

    /// `M[1-a, 1-b]`, the matrix met by the complement after swapping parts
    /// 1 with 2 and 3 with 4.
    pub fn complemented(self) -> Self {
        MMatrix::new(!self.a, !self.b)
    }
}

impl fmt::Display for MMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "M[{},{}]", self.a as u8, self.b as u8)
    }
}

/// A partition `({z}, X1, X2, Y1, Y2)` of the vertices, in matrix row order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct MPartition {
    pub parts: [u64; 5],
    pub matrix: MMatrix,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MViolation {
    /// The parts overlap, miss a vertex of the scope, or `{z}` is not a
    /// single vertex.
    NotAPartition,
    /// Vertices `u` (in part `rows.0`) and `v` (in part `rows.1`) break the
    /// required entry.
    Pair { u: usize, v: usize, rows: (usize, usize), expected: Entry },
}

impl MPartition {
    pub fn z(&self) -> usize {
        self.parts[0].trailing_zeros() as usize
    }

    pub fn support(&self) -> u64 {
        self.parts.iter().fold(0, |acc, p| acc | p)
    }

    /// Checks the partition against the induced subgraph of `g` on its support.
    pub fn validate(&self, g: &Graph) -> Result<(), MViolation> {
        let total: u32 = self.parts.iter().map(|p| p.count_ones()).sum();
        if self.parts[0].count_ones() != 1 || total != self.support().count_ones() || self.support() & !g.vertex_mask() != 0 {
            return Err(MViolation::NotAPartition);
        }
        for r in 0..5 {
            for c in r..5 {
                let expected = self.matrix.entry(r, c);
                if expected == Entry::Star {
                    continue;
                }
                for u in bits::iter(self.parts[r]) {
                    let wanted = if expected == Entry::One { self.parts[c] } else { 0 };
                    let others = self.parts[c] & !bits::bit(u);
                    let bad = (g.neighbors(u) & others) ^ (wanted & others);
                    if let Some(v) = bits::iter(bad).next() {
                        return Err(MViolation::Pair { u, v, rows: (r, c), expected });
                    }
                }
            }
        }
        Ok(())
    }

    /// Edges forced by the 1-entries.
    pub(crate) fn forced_edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for r in 0..5 {
            for c in r..5 {
                if self.matrix.entry(r, c) == Entry::One {
                    for u in bits::iter(self.parts[r]) {
                        for v in bits::iter(self.parts[c]) {
                            if u < v || (r != c && u != v) {
                                out.push((u.min(v), u.max(v)));
                            }
                        }
                    }
                }
            }
        }
        out.sort_unstable();
        out.dedup();
        out
    }
}

/// Checks `p` against `g`; the whole vertex set must be covered.
pub fn validate_m_partition(g: &Graph, p: &MPartition) -> Result<(), MViolation> {
    if p.support() != g.vertex_mask() {
        return Err(MViolation::NotAPartition);
    }
    p.validate(g)
}
