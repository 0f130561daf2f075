use super::Graph;
use crate::bits;

impl Graph {
    /// All maximal cliques as bitsets, sorted numerically.
    ///
    /// Bron–Kerbosch with Tomita pivoting. The empty graph has the single
    /// maximal clique `∅`.
    pub fn maximal_cliques(&self) -> Vec<u64> {
        let mut out = Vec::new();
        self.bron_kerbosch(0, self.vertex_mask(), 0, &mut out);
        out.sort_unstable();
        out
    }

    fn bron_kerbosch(&self, r: u64, mut p: u64, mut x: u64, out: &mut Vec<u64>) {
        if p == 0 {
            if x == 0 {
                out.push(r);
            }
            return;
        }
        let pivot = bits::iter(p | x)
            .max_by_key(|&u| (self.neighbors(u) & p).count_ones())
            .unwrap();
        for v in bits::iter(p & !self.neighbors(pivot)) {
            let nv = self.neighbors(v);
            self.bron_kerbosch(r | bits::bit(v), p & nv, x & nv, out);
            p &= !bits::bit(v);
            x |= bits::bit(v);
        }
    }
}
