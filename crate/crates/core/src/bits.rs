//! Helpers for `u64` vertex bitsets.

/// Iterates over the indices of the set bits of `mask`, lowest first.
pub fn iter(mask: u64) -> Bits {
    Bits(mask)
}

#[derive(Clone, Copy, Debug)]
pub struct Bits(u64);

impl Iterator for Bits {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Bits {}

/// Mask with the lowest `n` bits set.
pub fn full(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

pub fn bit(i: usize) -> u64 {
    1u64 << i
}

pub fn is_subset(a: u64, b: u64) -> bool {
    a & !b == 0
}

pub fn len(mask: u64) -> usize {
    mask.count_ones() as usize
}

pub fn from_indices<I: IntoIterator<Item = usize>>(it: I) -> u64 {
    it.into_iter().fold(0, |m, i| m | bit(i))
}

pub fn to_vec(mask: u64) -> Vec<usize> {
    iter(mask).collect()
}

/// Orders two sets by their sorted element lists.
pub fn lex_cmp(a: u64, b: u64) -> std::cmp::Ordering {
    iter(a).cmp(iter(b))
}

/// Reduces a family to its inclusion-minimal members, dropping duplicates.
/// The result is sorted numerically.
pub fn minimal_family(mut family: Vec<u64>) -> Vec<u64> {
    family.sort_unstable_by_key(|m| (m.count_ones(), *m));
    family.dedup();
    let mut kept: Vec<u64> = Vec::with_capacity(family.len());
    for m in family {
        if !kept.iter().any(|&k| is_subset(k, m)) {
            kept.push(m);
        }
    }
    kept.sort_unstable();
    kept
}

/// Reduces a family to its inclusion-maximal members, dropping duplicates.
pub fn maximal_family(mut family: Vec<u64>) -> Vec<u64> {
    family.sort_unstable_by_key(|m| (std::cmp::Reverse(m.count_ones()), *m));
    family.dedup();
    let mut kept: Vec<u64> = Vec::with_capacity(family.len());
    for m in family {
        if !kept.iter().any(|&k| is_subset(m, k)) {
            kept.push(m);
        }
    }
    kept.sort_unstable();
    kept
}

/// All `k`-subsets of the lowest `n` bits, in increasing numeric order.
pub fn combinations(n: usize, k: usize) -> impl Iterator<Item = u64> {
    let limit = if n >= 64 { None } else { Some(1u64 << n) };
    let mut next = if k > n {
        None
    } else if k == 0 {
        Some(0)
    } else {
        Some(full(k))
    };
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 {
            None
        } else {
            // Gosper's hack.
            let c = cur & cur.wrapping_neg();
            let r = cur.wrapping_add(c);
            if r == 0 {
                None
            } else {
                let nxt = (((r ^ cur) >> 2) / c) | r;
                match limit {
                    Some(l) if nxt >= l => None,
                    _ => Some(nxt),
                }
            }
        };
        Some(cur)
    })
}

/// Subsets of `mask`, starting from the empty set.
pub fn subsets(mask: u64) -> impl Iterator<Item = u64> {
    let mut cur = Some(0u64);
    std::iter::from_fn(move || {
        let s = cur?;
        let nxt = s.wrapping_sub(mask) & mask;
        cur = if nxt == 0 { None } else { Some(nxt) };
        Some(s)
    })
}
