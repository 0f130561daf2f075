//! Reference implementations on raw adjacency rows and bitmask families.
//! Everything here is brute force and shares no code with the library.

use std::collections::BTreeSet;

use sperner::Term;

pub fn full(n: usize) -> u64 {
    if n >= 64 {
        !0
    } else {
        (1u64 << n) - 1
    }
}

pub fn members(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        (m != 0).then(|| {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            v
        })
    })
}

fn pc(m: u64) -> u32 {
    m.count_ones()
}

/// All `k`-subsets of `0..n` (Gosper's hack).
pub fn combinations(n: usize, k: usize) -> impl Iterator<Item = u64> {
    let limit = 1u64 << n;
    let mut next = if k > n { limit } else { full(k) };
    std::iter::from_fn(move || {
        if next >= limit || (k == 0 && next != 0) {
            return None;
        }
        let cur = next;
        if k == 0 {
            next = limit;
        } else {
            let c = cur & cur.wrapping_neg();
            let r = cur + c;
            next = (((r ^ cur) >> 2) / c) | r;
        }
        Some(cur)
    })
}

/// Subsets of `0..n` by increasing size.
pub fn by_size(n: usize) -> Vec<u64> {
    (0..=n).flat_map(|k| combinations(n, k)).collect()
}

pub fn complement(adj: &[u64]) -> Vec<u64> {
    let f = full(adj.len());
    adj.iter().enumerate().map(|(v, &r)| f & !r & !(1 << v)).collect()
}

pub fn is_clique(adj: &[u64], s: u64) -> bool {
    members(s).all(|v| s & !(1 << v) & !adj[v] == 0)
}

pub fn is_independent(adj: &[u64], s: u64) -> bool {
    members(s).all(|v| adj[v] & s == 0)
}

pub fn connected(adj: &[u64], s: u64) -> bool {
    if s == 0 {
        return false;
    }
    let mut seen = s & s.wrapping_neg();
    loop {
        let grow = members(seen).fold(seen, |acc, v| acc | (adj[v] & s));
        if grow == seen {
            return seen == s;
        }
        seen = grow;
    }
}

// ---- hypergraph side

fn min_diff(e: u64, f: u64) -> u32 {
    pc(e & !f).min(pc(f & !e))
}

fn all_pairs(fam: &[u64], ok: impl Fn(u64, u64) -> bool) -> bool {
    (0..fam.len()).all(|i| (i + 1..fam.len()).all(|j| ok(fam[i], fam[j])))
}

pub fn sperner(fam: &[u64]) -> bool {
    all_pairs(fam, |e, f| min_diff(e, f) >= 1)
}

pub fn dually_sperner(fam: &[u64]) -> bool {
    all_pairs(fam, |e, f| min_diff(e, f) <= 1)
}

pub fn k_sperner(fam: &[u64], k: u32) -> bool {
    all_pairs(fam, |e, f| (1..=k).contains(&min_diff(e, f)))
}

pub fn one_sperner(fam: &[u64]) -> bool {
    k_sperner(fam, 1)
}

pub fn minimal(mut fam: Vec<u64>) -> BTreeSet<u64> {
    fam.sort_unstable();
    fam.dedup();
    fam.iter().copied().filter(|&s| !fam.iter().any(|&t| t != s && t & !s == 0)).collect()
}

/// Inclusion-minimal sets satisfying a monotone predicate.
fn minimal_satisfying(n: usize, pred: impl Fn(u64) -> bool) -> BTreeSet<u64> {
    (0..1u64 << n).filter(|&s| pred(s) && members(s).all(|v| !pred(s & !(1 << v)))).collect()
}

pub fn vertex_covers(adj: &[u64]) -> BTreeSet<u64> {
    minimal_satisfying(adj.len(), |s| (0..adj.len()).all(|v| s >> v & 1 == 1 || adj[v] & !s == 0))
}

pub fn maximal_cliques(adj: &[u64]) -> BTreeSet<u64> {
    let n = adj.len();
    (0..1u64 << n)
        .filter(|&s| is_clique(adj, s) && (0..n).all(|v| s >> v & 1 == 1 || s & !adj[v] != 0))
        .collect()
}

pub fn closed_nbhd(adj: &[u64], v: usize) -> u64 {
    adj[v] | 1 << v
}

pub fn closed_neighborhoods(adj: &[u64]) -> BTreeSet<u64> {
    minimal((0..adj.len()).map(|v| closed_nbhd(adj, v)).collect())
}

pub fn dominating_sets(adj: &[u64]) -> BTreeSet<u64> {
    let n = adj.len();
    minimal_satisfying(n, |s| members(s).fold(0, |acc, v| acc | closed_nbhd(adj, v)) == full(n))
}

fn dependent(fam: &[u64], x: u64) -> bool {
    fam.iter().any(|&e| e & !x == 0)
}

/// No two independent and two dependent sets have equal characteristic
/// vector sums. Such a sum is determined by the pair (intersection, union).
pub fn two_asummable(n: usize, fam: &[u64]) -> bool {
    let (dep, ind): (Vec<u64>, Vec<u64>) = (0..1u64 << n).partition(|&x| dependent(fam, x));
    let key = |a: u64, b: u64| ((a & b) << n | (a | b)) as usize;
    let mut seen = vec![0u64; ((1usize << (2 * n)) + 63) / 64];
    for (i, &a) in ind.iter().enumerate() {
        for &b in &ind[i..] {
            let k = key(a, b);
            seen[k / 64] |= 1 << (k % 64);
        }
    }
    for (i, &a) in dep.iter().enumerate() {
        for &b in &dep[i..] {
            let k = key(a, b);
            if seen[k / 64] >> (k % 64) & 1 == 1 {
                return false;
            }
        }
    }
    true
}

/// `w(X) >= t` exactly on the sets containing a member of `fam`.
pub fn separates(n: usize, fam: &[u64], w: &[i128], t: i128) -> bool {
    w.iter().all(|&x| x >= 0)
        && (0..1u64 << n).all(|x| {
            let total: i128 = members(x).map(|v| w[v]).sum();
            (total >= t) == dependent(fam, x)
        })
}

/// Every set of pairwise co-occurring vertices, the empty set and singletons
/// included, lies in some member.
pub fn conformal(n: usize, fam: &[u64]) -> bool {
    let co = |u: usize, v: usize| fam.iter().any(|&e| e >> u & 1 == 1 && e >> v & 1 == 1);
    (0..1u64 << n).all(|x| {
        let pairwise = members(x).all(|u| members(x).all(|v| u >= v || co(u, v)));
        !pairwise || fam.iter().any(|&e| x & !e == 0)
    })
}

/// Minimal transversals by scanning all subsets.
pub fn transversal(n: usize, fam: &[u64]) -> BTreeSet<u64> {
    if fam.contains(&0) {
        return BTreeSet::new();
    }
    minimal_satisfying(n, |s| fam.iter().all(|&e| e & s != 0))
}

// ---- induced subgraphs

fn degrees(adj: &[u64], s: u64) -> Vec<u32> {
    let mut d: Vec<u32> = members(s).map(|v| pc(adj[v] & s)).collect();
    d.sort_unstable();
    d
}

pub fn has_p4_c4_2k2(adj: &[u64]) -> bool {
    combinations(adj.len(), 4).any(|s| matches!(degrees(adj, s)[..], [1, 1, 2, 2] | [2, 2, 2, 2] | [1, 1, 1, 1]))
}

fn has_p4_2k2(adj: &[u64]) -> bool {
    combinations(adj.len(), 4).any(|s| matches!(degrees(adj, s)[..], [1, 1, 2, 2] | [1, 1, 1, 1]))
}

/// K3,3, K3,3 plus an edge and co-2P3 are the six-vertex graphs whose
/// complement is two disjoint connected triples.
fn two_connected_triples(cadj: &[u64], s: u64) -> bool {
    let a = members(s).next().unwrap();
    let mut comp = 1u64 << a;
    loop {
        let grow = members(comp).fold(comp, |acc, v| acc | (cadj[v] & s));
        if grow == comp {
            break;
        }
        comp = grow;
    }
    pc(comp) == 3 && connected(cadj, s & !comp)
}

pub fn has_domishold_obstruction(adj: &[u64]) -> bool {
    let cadj = complement(adj);
    has_p4_2k2(adj) || combinations(adj.len(), 6).any(|s| two_connected_triples(&cadj, s))
}

/// An induced H: a tree with degrees 3, 3, 1, 1, 1, 1.
pub fn has_h(adj: &[u64]) -> bool {
    combinations(adj.len(), 6).any(|s| degrees(adj, s) == [1, 1, 1, 1, 3, 3])
}

/// An induced 2P3: degrees 2, 2, 1, 1, 1, 1 with nonadjacent centers.
pub fn has_2p3(adj: &[u64]) -> bool {
    combinations(adj.len(), 6).any(|s| {
        degrees(adj, s) == [1, 1, 1, 1, 2, 2] && {
            let centers: Vec<usize> = members(s).filter(|&v| pc(adj[v] & s) == 2).collect();
            adj[centers[0]] >> centers[1] & 1 == 0
        }
    })
}

/// Neighborhoods of `side` inside `other` are pairwise incomparable.
pub fn side_sperner(adj: &[u64], side: u64, other: u64) -> bool {
    let nb: Vec<u64> = members(side).map(|v| adj[v] & other).collect();
    all_pairs(&nb, |e, f| e & !f != 0 && f & !e != 0)
}

/// Two vertices of `centers` with two private neighbors each in `leaves`:
/// the labeled H, H̄ or 2P3 once the sides are fixed.
pub fn private_pairs(adj: &[u64], centers: u64, leaves: u64) -> bool {
    let nb: Vec<u64> = members(centers).map(|v| adj[v] & leaves).collect();
    !all_pairs(&nb, |e, f| min_diff(e, f) < 2)
}

// ---- graph classes with fixed sides

pub fn split_h(adj: &[u64], k: u64, i: u64) -> bool {
    is_clique(adj, k) && is_independent(adj, i) && side_sperner(adj, k, i) && !private_pairs(adj, k, i)
}

pub fn split_h_bar(adj: &[u64], k: u64, i: u64) -> bool {
    is_clique(adj, k) && is_independent(adj, i) && side_sperner(adj, i, k) && !private_pairs(adj, i, k)
}

pub fn bigraph(adj: &[u64], a: u64, b: u64) -> bool {
    is_independent(adj, a) && is_independent(adj, b) && side_sperner(adj, b, a) && !private_pairs(adj, b, a)
}

pub fn cobigraph(adj: &[u64], a: u64, b: u64) -> bool {
    bigraph(&complement(adj), a, b)
}

// ---- domination

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Dominating,
    Total,
    Connected,
}

pub fn accepts(adj: &[u64], kind: Kind, s: u64) -> bool {
    let f = full(adj.len());
    match kind {
        Kind::Dominating => members(s).fold(0, |acc, v| acc | closed_nbhd(adj, v)) == f,
        Kind::Total => members(s).fold(0, |acc, v| acc | adj[v]) == f,
        Kind::Connected => accepts(adj, Kind::Dominating, s) && connected(adj, s),
    }
}

/// Smallest accepted set size, `None` if there is none.
pub fn gamma(adj: &[u64], kind: Kind) -> Option<usize> {
    let n = adj.len();
    (0..=n).find(|&k| combinations(n, k).any(|s| accepts(adj, kind, s)))
}

// ---- k-expressions

/// Vertices as `(name, label)` and edges as index pairs.
pub struct Evaluated {
    pub vertices: Vec<(String, u8)>,
    pub edges: BTreeSet<(usize, usize)>,
}

pub fn eval(t: &Term) -> Evaluated {
    match t {
        Term::Leaf { label, vertex } => Evaluated {
            vertices: vec![(vertex.clone(), *label)],
            edges: BTreeSet::new(),
        },
        Term::Union(a, b) => {
            let mut l = eval(a);
            let r = eval(b);
            let off = l.vertices.len();
            l.vertices.extend(r.vertices);
            l.edges.extend(r.edges.into_iter().map(|(u, v)| (u + off, v + off)));
            l
        }
        Term::Relabel { from, to, sub } => {
            let mut e = eval(sub);
            for (_, l) in &mut e.vertices {
                if l == from {
                    *l = *to;
                }
            }
            e
        }
        Term::AddEdges { i, j, sub } => {
            let mut e = eval(sub);
            for (u, (_, lu)) in e.vertices.iter().enumerate() {
                for (v, (_, lv)) in e.vertices.iter().enumerate() {
                    if lu == i && lv == j {
                        e.edges.insert((u.min(v), u.max(v)));
                    }
                }
            }
            e
        }
    }
}

pub fn tokens(t: &Term) -> usize {
    match t {
        Term::Leaf { .. } => 3,
        Term::Union(a, b) => 1 + tokens(a) + tokens(b),
        Term::Relabel { sub, .. } | Term::AddEdges { sub, .. } => 3 + tokens(sub),
    }
}

/// Adjacency rows of an evaluated term whose leaves are named `0..n`.
pub fn rows_by_index(e: &Evaluated) -> Option<Vec<u64>> {
    let n = e.vertices.len();
    let idx: Vec<usize> = e.vertices.iter().map(|(name, _)| name.parse().ok()).collect::<Option<_>>()?;
    if idx.iter().copied().collect::<BTreeSet<_>>() != (0..n).collect() {
        return None;
    }
    let mut adj = vec![0u64; n];
    for &(u, v) in &e.edges {
        adj[idx[u]] |= 1 << idx[v];
        adj[idx[v]] |= 1 << idx[u];
    }
    Some(adj)
}
