use std::collections::VecDeque;

use super::Graph;
use crate::bits;

impl Graph {
    /// A split partition `(K, I)` as bitsets, or `None` if the graph is not split.
    ///
    /// Uses the degree-sequence test: with degrees `d1 ≥ … ≥ dn` and
    /// `m = max{i : d_i ≥ i - 1}`, the graph is split iff
    /// `d1 + … + dm = m(m - 1) + d(m+1) + … + dn`, and then the first `m`
    /// vertices form a clique. Ties are broken by lower vertex index.
    pub fn find_split_partition(&self) -> Option<(u64, u64)> {
        let mut order: Vec<usize> = (0..self.n()).collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(self.degree(v)), v));
        let degs: Vec<usize> = order.iter().map(|&v| self.degree(v)).collect();
        let m = (1..=self.n()).filter(|&i| degs[i - 1] + 1 >= i).max().unwrap_or(0);
        let head: usize = degs[..m].iter().sum();
        let tail: usize = degs[m..].iter().sum();
        if head != m * m.saturating_sub(1) + tail {
            return None;
        }
        let k = bits::from_indices(order[..m].iter().copied());
        let i = self.vertex_mask() & !k;
        debug_assert!(self.is_clique(k) && self.is_independent(i));
        Some((k, i))
    }

    pub fn is_split(&self) -> bool {
        self.find_split_partition().is_some()
    }

    /// A bipartition `(A, B)` from BFS 2-coloring, or `None` on an odd cycle.
    /// Each component's smallest vertex goes to `A`, so isolated vertices do too.
    pub fn find_bipartition(&self) -> Option<(u64, u64)> {
        let mut side: Vec<Option<bool>> = vec![None; self.n()];
        for root in 0..self.n() {
            if side[root].is_some() {
                continue;
            }
            side[root] = Some(false);
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                let su = side[u].unwrap();
                for v in bits::iter(self.neighbors(u)) {
                    match side[v] {
                        None => {
                            side[v] = Some(!su);
                            queue.push_back(v);
                        }
                        Some(sv) if sv == su => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        let b = (0..self.n()).filter(|&v| side[v] == Some(true)).fold(0, |m, v| m | bits::bit(v));
        Some((self.vertex_mask() & !b, b))
    }

    pub fn is_bipartite(&self) -> bool {
        self.find_bipartition().is_some()
    }
}
