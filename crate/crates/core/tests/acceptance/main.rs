//! Acceptance checks. Each criterion prints one PASS or FAIL line; the
//! process exits with status 1 if any criterion fails.
//!
//! Expected values come from the brute-force oracles in `oracle.rs`, or are
//! fixed by hand for the named fixtures.

use std::collections::BTreeSet;
use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::Instant;

use num_traits::ToPrimitive;
use rand::Rng;
use sperner::cliquewidth::{build_bigraph_2p3_free, build_cobigraph, build_split_h_bar_free, build_split_h_free};
use sperner::decomposition::{
    decompose_bigraph_2p3_free, decompose_cobigraph, decompose_split_h_bar_free, decompose_split_h_free,
    GraphDecompositionTree,
};
use sperner::domination::{brute_force, dp_dominating_set, solve_h_free_split, Variant};
use sperner::generate::{self, rng};
use sperner::recognition::{check_domishold_equivalences, check_threshold_equivalences};
use sperner::{Graph, Hypergraph, KExpression};

#[path = "../common/mod.rs"]
mod common;
mod oracle;

use oracle::{full, members, Kind};

/// Counts checks and keeps the first few failures.
#[derive(Default)]
struct Tally {
    checked: usize,
    failed: usize,
    first: Vec<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failed += 1;
            if self.first.len() < 3 {
                self.first.push(what());
            }
        }
    }

    fn finish(self, unit: &str) -> Result<String, String> {
        let summary = format!("{} {unit}, {} failed", self.checked, self.failed);
        if self.failed == 0 {
            Ok(summary)
        } else {
            Err(format!("{summary}; first: {}", self.first.join(" | ")))
        }
    }
}

fn rows(g: &Graph) -> Vec<u64> {
    g.rows().to_vec()
}

fn family(h: &Hypergraph) -> BTreeSet<u64> {
    h.edge_masks().iter().copied().collect()
}

/// Whether the library finds a threshold witness; a witness it returns must
/// separate `fam` under the oracle.
fn threshold(h: &Hypergraph, n: usize, fam: &[u64]) -> Result<bool, String> {
    let Some(w) = h.threshold_witness() else {
        return Ok(false);
    };
    let (ws, t) = w.to_integers();
    let mut weights = vec![0i128; n];
    for (id, x) in w.vertices().iter().zip(&ws) {
        weights[*id as usize] = x.to_i128().ok_or("weight overflow")?;
    }
    let t = t.to_i128().ok_or("threshold overflow")?;
    if oracle::separates(n, fam, &weights, t) {
        Ok(true)
    } else {
        Err(format!("bad witness {weights:?} >= {t} for {fam:?}"))
    }
}

fn random_graph(r: &mut impl Rng, n: usize) -> Graph {
    let p: f64 = r.random_range(0.2..0.8);
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if r.random_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// Every labeled graph on at most six vertices, then 1000 seeded random
/// graphs on seven or eight.
fn small_graphs() -> Vec<Graph> {
    let mut out: Vec<Graph> = (0..=6).flat_map(common::all_graphs).collect();
    let mut r = rng(0xACCE);
    out.extend((0..1000).map(|_| {
        let n = r.random_range(7..=8);
        random_graph(&mut r, n)
    }));
    out
}

fn all_equal(values: &[bool]) -> bool {
    values.iter().all(|&v| v == values[0])
}

fn report_matches(
    report: &sperner::recognition::EquivalenceReport,
    expected: &[(&str, bool)],
) -> Result<(), String> {
    for (name, value) in expected {
        if report.get(name) != Some(*value) {
            return Err(format!("{name}: library {:?}, oracle {value}", report.get(name)));
        }
    }
    if !report.agrees() {
        return Err("library report disagrees".into());
    }
    Ok(())
}

fn threshold_equivalence(graphs: &[Graph]) -> Result<String, String> {
    let mut t = Tally::default();
    let mut positive = 0;
    for g in graphs {
        let adj = rows(g);
        let n = g.n();
        let vc = oracle::vertex_covers(&adj);
        let cl = oracle::maximal_cliques(&adj);
        let (lvc, lcl) = (g.vertex_cover_hypergraph(), g.clique_hypergraph());
        let vcv: Vec<u64> = vc.iter().copied().collect();
        let clv: Vec<u64> = cl.iter().copied().collect();
        let outcome = (|| -> Result<bool, String> {
            if family(&lvc) != vc || family(&lcl) != cl {
                return Err("derived hypergraphs differ".into());
            }
            let values = [
                ("graph {P4,C4,2K2}-free", !oracle::has_p4_c4_2k2(&adj)),
                ("vertex covers 1-Sperner", oracle::one_sperner(&vcv)),
                ("vertex covers threshold", threshold(&lvc, n, &vcv)?),
                ("vertex covers 2-asummable", oracle::two_asummable(n, &vcv)),
                ("cliques 1-Sperner", oracle::one_sperner(&clv)),
                ("cliques threshold", threshold(&lcl, n, &clv)?),
                ("cliques 2-asummable", oracle::two_asummable(n, &clv)),
            ];
            if !all_equal(&values.map(|(_, v)| v)) {
                return Err(format!("{values:?}"));
            }
            report_matches(&check_threshold_equivalences(g).map_err(|e| e.to_string())?, &values)?;
            Ok(values[0].1)
        })();
        positive += usize::from(outcome == Ok(true));
        t.check(outcome.is_ok(), || format!("{g:?}: {}", outcome.unwrap_err()));
    }
    t.finish(&format!("graphs ({positive} threshold)"))
}

fn domishold_equivalence(graphs: &[Graph]) -> Result<String, String> {
    let mut t = Tally::default();
    let mut positive = 0;
    for g in graphs {
        let adj = rows(g);
        let n = g.n();
        let nb = oracle::closed_neighborhoods(&adj);
        let dom = oracle::dominating_sets(&adj);
        let (lnb, ldom) = (g.closed_neighborhood_hypergraph(), g.dominating_set_hypergraph());
        let nbv: Vec<u64> = nb.iter().copied().collect();
        let domv: Vec<u64> = dom.iter().copied().collect();
        let outcome = (|| -> Result<bool, String> {
            if family(&lnb) != nb || family(&ldom) != dom {
                return Err("derived hypergraphs differ".into());
            }
            let values = [
                ("graph {P4,2K2,K33,K33+,co-2P3}-free", !oracle::has_domishold_obstruction(&adj)),
                ("closed neighborhoods 1-Sperner", oracle::one_sperner(&nbv)),
                ("closed neighborhoods threshold", threshold(&lnb, n, &nbv)?),
                ("closed neighborhoods 2-asummable", oracle::two_asummable(n, &nbv)),
                ("dominating sets threshold", threshold(&ldom, n, &domv)?),
                ("dominating sets 2-asummable", oracle::two_asummable(n, &domv)),
            ];
            if !all_equal(&values.map(|(_, v)| v)) {
                return Err(format!("{values:?}"));
            }
            report_matches(&check_domishold_equivalences(g).map_err(|e| e.to_string())?, &values)?;
            Ok(values[0].1)
        })();
        positive += usize::from(outcome == Ok(true));
        t.check(outcome.is_ok(), || format!("{g:?}: {}", outcome.unwrap_err()));
    }
    let c4 = Graph::cycle(4);
    let dom = c4.dominating_set_hypergraph();
    let domv: Vec<u64> = oracle::dominating_sets(&rows(&c4)).into_iter().collect();
    t.check(threshold(&dom, 4, &domv) == Ok(true), || "D(C4) is not threshold".into());
    t.check(!oracle::one_sperner(&domv) && !dom.is_1_sperner(), || "D(C4) is 1-Sperner".into());
    t.finish(&format!("graphs and D(C4) ({positive} domishold)"))
}

fn same(h: &Hypergraph, other: &Hypergraph) -> bool {
    h.vertices() == other.vertices() && family(h) == family(other)
}

/// Children of every node are 1-Sperner.
fn nodes_one_sperner(tree: &sperner::DecompositionTree) -> bool {
    match tree {
        sperner::DecompositionTree::Leaf(_) => true,
        sperner::DecompositionTree::Node { left, right, .. } => [left, right].iter().all(|c| {
            let fam: Vec<u64> = c.recompose().unwrap().edge_masks().to_vec();
            oracle::one_sperner(&fam) && nodes_one_sperner(c)
        }),
    }
}

/// Calls `f` on every antichain of subsets of `0..n` (`n <= 6`), given as
/// a bitmap over the `2^n` subsets.
fn antichains(n: usize, f: &mut impl FnMut(u64)) {
    let size = 1usize << n;
    let comparable: Vec<u64> = (0..size as u64)
        .map(|a| (0..size as u64).filter(|&b| a & b == a || a & b == b).fold(0, |acc, b| acc | 1 << b))
        .collect();
    fn go(start: usize, allowed: u64, fam: u64, comparable: &[u64], f: &mut impl FnMut(u64)) {
        f(fam);
        for j in members(allowed) {
            if j >= start {
                go(j + 1, allowed & !comparable[j] & !full(j + 1), fam | 1 << j, comparable, f);
            }
        }
    }
    go(0, full(size), 0, &comparable, f);
}

fn decomposition_round_trip() -> Result<String, String> {
    let mut t = Tally::default();
    let mut r = rng(0xDEC0);
    for _ in 0..1000 {
        let n = r.random_range(0..=14);
        let h = generate::one_sperner_hypergraph(&mut r, n);
        let fam: Vec<u64> = h.edge_masks().to_vec();
        let ok = oracle::one_sperner(&fam)
            && h.decompose().is_ok_and(|tree| tree.recompose().is_ok_and(|back| same(&back, &h)) && nodes_one_sperner(&tree));
        t.check(ok, || format!("generated {h}"));
    }
    for n in 0..=4 {
        for code in 0..1u64 << (1 << n) {
            let fam: Vec<u64> = members(code).map(|s| s as u64).collect();
            if !oracle::one_sperner(&fam) {
                continue;
            }
            let h = Hypergraph::from_masks(n, fam.iter().copied()).unwrap();
            let ok = h.decompose().is_ok_and(|tree| tree.recompose().is_ok_and(|back| same(&back, &h)));
            t.check(ok, || format!("all-small {h}"));
        }
    }
    for n in 0..=6 {
        antichains(n, &mut |code| {
            let fam: Vec<u64> = members(code).map(|s| s as u64).collect();
            let h = Hypergraph::from_masks(n, fam.iter().copied()).unwrap();
            let tr = h.transversal();
            let ok = same(&tr.transversal(), &h) && (n > 4 || family(&tr) == oracle::transversal(n, &fam));
            t.check(ok, || format!("transversal of {h}"));
        });
    }
    t.finish("hypergraphs")
}

/// Every family of at most `max_m` distinct subsets of `0..n`.
fn families(n: usize, max_m: usize, f: &mut impl FnMut(&[u64])) {
    fn go(next: u64, limit: u64, left: usize, cur: &mut Vec<u64>, f: &mut impl FnMut(&[u64])) {
        f(cur);
        if left == 0 {
            return;
        }
        for s in next..limit {
            cur.push(s);
            go(s + 1, limit, left - 1, cur, f);
            cur.pop();
        }
    }
    go(0, 1 << n, max_m, &mut Vec::new(), f);
}

fn incidence_translation() -> Result<String, String> {
    let mut t = Tally::default();
    let mut positive = 0;
    for n in 0..=5 {
        families(n, 5, &mut |fam| {
            let m = fam.len();
            let h = Hypergraph::from_masks(n, fam.iter().copied()).unwrap();
            let expected = oracle::one_sperner(fam);
            positive += usize::from(expected);
            let vside = full(n);
            let eside = full(n + m) & !vside;
            let incident = |adj: &[u64], clique: u64| {
                (0..n).all(|v| (0..m).all(|j| (adj[v] >> (n + j) & 1 == 1) == (fam[j] >> v & 1 == 1)))
                    && [vside, eside]
                        .iter()
                        .all(|&side| if side == clique { oracle::is_clique(adj, side) } else { oracle::is_independent(adj, side) })
            };
            let lb = h.bigraph_of();
            let vc = h.vertex_clique_split_of();
            let ec = h.edge_clique_split_of();
            let (ab, avc, aec) = (rows(lb.graph()), rows(vc.graph()), rows(ec.graph()));
            let shapes = incident(&ab, 0)
                && incident(&avc, vside)
                && incident(&aec, eside)
                && (lb.left(), lb.right()) == (vside, eside)
                && (vc.clique(), vc.independent()) == (vside, eside)
                && (ec.clique(), ec.independent()) == (eside, vside);
            let values = [
                expected,
                oracle::bigraph(&ab, vside, eside),
                oracle::split_h_bar(&avc, vside, eside),
                oracle::split_h(&aec, eside, vside),
                lb.is_right_sperner() && lb.find_2p3().is_none(),
                vc.is_independent_sperner() && vc.find_h_bar().is_none(),
                ec.is_clique_sperner() && ec.find_h().is_none(),
                h.is_1_sperner(),
            ];
            t.check(shapes && all_equal(&values), || format!("{h}: shapes {shapes}, {values:?}"));
        });
    }
    t.finish(&format!("hypergraphs ({positive} 1-Sperner)"))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Class {
    SplitH,
    SplitHBar,
    Bigraph,
    Cobigraph,
}

impl Class {
    const ALL: [Class; 4] = [Class::SplitH, Class::SplitHBar, Class::Bigraph, Class::Cobigraph];

    /// `(a, b)` of the matrix `M[a,b]`.
    fn matrix(self) -> (bool, bool) {
        match self {
            Class::SplitH => (false, true),
            Class::SplitHBar => (true, false),
            Class::Bigraph => (false, false),
            Class::Cobigraph => (true, true),
        }
    }

    /// Membership with `zside` holding the `z` vertices: `I` for H-free,
    /// `K` for H̄-free, `A` for the two bipartite classes.
    fn holds(self, adj: &[u64], zside: u64, other: u64) -> bool {
        match self {
            Class::SplitH => oracle::split_h(adj, other, zside),
            Class::SplitHBar => oracle::split_h_bar(adj, zside, other),
            Class::Bigraph => oracle::bigraph(adj, zside, other),
            Class::Cobigraph => oracle::cobigraph(adj, zside, other),
        }
    }
}

/// One instance of a class: graph, the `z` side, the other side.
struct Instance {
    class: Class,
    graph: Graph,
    zside: u64,
    other: u64,
}

fn instances(class: Class) -> Vec<Instance> {
    let mut out = Vec::new();
    let mut push = |graph: Graph, zside: u64, other: u64| {
        let adj = rows(&graph);
        let unlabeled = class != Class::Cobigraph || !oracle::has_2p3(&oracle::complement(&adj));
        if unlabeled && class.holds(&adj, zside, other) {
            out.push(Instance { class, graph, zside, other });
        }
    };
    for n in 1..=8 {
        match class {
            Class::SplitH => common::split_graphs(n).for_each(|ls| push(ls.graph().clone(), ls.independent(), ls.clique())),
            Class::SplitHBar => common::split_graphs(n).for_each(|ls| push(ls.graph().clone(), ls.clique(), ls.independent())),
            Class::Bigraph => common::bigraphs(n).for_each(|lb| push(lb.graph().clone(), lb.left(), lb.right())),
            Class::Cobigraph => common::bigraphs(n).for_each(|lb| push(lb.graph().complement(), lb.left(), lb.right())),
        }
    }
    let mut r = rng(0x600D + class as u64);
    for _ in 0..500 {
        let inst = match class {
            Class::SplitH => {
                let ls = generate::split_h_free(&mut r, 20);
                Instance { class, graph: ls.graph().clone(), zside: ls.independent(), other: ls.clique() }
            }
            Class::SplitHBar => {
                let ls = generate::split_h_bar_free(&mut r, 20);
                Instance { class, graph: ls.graph().clone(), zside: ls.clique(), other: ls.independent() }
            }
            Class::Bigraph => {
                let lb = generate::bigraph_2p3_free(&mut r, 20);
                Instance { class, graph: lb.graph().clone(), zside: lb.left(), other: lb.right() }
            }
            Class::Cobigraph => {
                let lb = generate::bigraph_2p3_free(&mut r, 20);
                Instance { class, graph: lb.graph().complement(), zside: lb.left(), other: lb.right() }
            }
        };
        out.push(inst);
    }
    out
}

fn entry(a: bool, b: bool, r: usize, c: usize) -> Option<bool> {
    const SHAPE: [[char; 5]; 5] = [
        ['a', 'a', 'a', '1', '0'],
        ['a', 'a', 'a', '*', '1'],
        ['a', 'a', 'a', '0', '*'],
        ['1', '*', '0', 'b', 'b'],
        ['0', '1', '*', 'b', 'b'],
    ];
    match SHAPE[r][c] {
        'a' => Some(a),
        'b' => Some(b),
        '1' => Some(true),
        '0' => Some(false),
        _ => None,
    }
}

fn valid_partition(adj: &[u64], parts: &[u64; 5], (a, b): (bool, bool)) -> bool {
    for r in 0..5 {
        for c in 0..5 {
            let Some(want) = entry(a, b, r, c) else { continue };
            for u in members(parts[r]) {
                for v in members(parts[c]) {
                    if u != v && (adj[u] >> v & 1 == 1) != want {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Checks a tree node by node against the oracle; `Err` names the problem.
fn check_tree(
    inst: &Instance,
    adj: &[u64],
    tree: &GraphDecompositionTree,
    support: u64,
    zside: u64,
    other: u64,
) -> Result<(), String> {
    match tree {
        GraphDecompositionTree::Leaf(m) => {
            if *m != support || m.count_ones() > 1 {
                return Err(format!("leaf {m:#b} for support {support:#b}"));
            }
        }
        GraphDecompositionTree::Node { partition, left, right, .. } => {
            let p = partition.parts;
            let union = p.iter().fold(0, |acc, x| acc | x);
            let total: u32 = p.iter().map(|x| x.count_ones()).sum();
            if union != support || total != support.count_ones() || p[0].count_ones() != 1 {
                return Err(format!("parts {p:?} do not partition {support:#b}"));
            }
            if (p[0] | p[1] | p[2]) & !zside != 0 || (p[3] | p[4]) & !other != 0 {
                return Err(format!("parts {p:?} cross the sides"));
            }
            let m = (partition.matrix.a, partition.matrix.b);
            if m != inst.class.matrix() || !valid_partition(adj, &p, m) {
                return Err(format!("parts {p:?} break M{m:?}"));
            }
            for (child, s) in [(left, p[1] | p[3]), (right, p[2] | p[4])] {
                let sub = sub_rows(adj, s);
                if s != 0 && !inst.class.holds(&sub, zside & s, other & s) {
                    return Err(format!("child on {s:#b} leaves the class"));
                }
                check_tree(inst, adj, child, s, zside & s, other & s)?;
            }
        }
    }
    Ok(())
}

/// Rows of the induced subgraph, keeping vertex numbers.
fn sub_rows(adj: &[u64], s: u64) -> Vec<u64> {
    adj.iter().enumerate().map(|(v, &r)| if s >> v & 1 == 1 { r & s } else { 0 }).collect()
}

fn decompose(inst: &Instance) -> Result<GraphDecompositionTree, String> {
    use sperner::decomposition::{LabeledBigraph, LabeledSplitGraph};
    let g = inst.graph.clone();
    let r = match inst.class {
        Class::SplitH => decompose_split_h_free(&LabeledSplitGraph::new(g, inst.other, inst.zside).unwrap()),
        Class::SplitHBar => decompose_split_h_bar_free(&LabeledSplitGraph::new(g, inst.zside, inst.other).unwrap()),
        Class::Bigraph => decompose_bigraph_2p3_free(&LabeledBigraph::new(g, inst.zside, inst.other).unwrap()),
        Class::Cobigraph => decompose_cobigraph(&g),
    };
    r.map_err(|e| e.to_string())
}

fn build(inst: &Instance) -> Result<KExpression, String> {
    use sperner::decomposition::{LabeledBigraph, LabeledSplitGraph};
    let g = inst.graph.clone();
    let r = match inst.class {
        Class::SplitH => build_split_h_free(&LabeledSplitGraph::new(g, inst.other, inst.zside).unwrap()),
        Class::SplitHBar => build_split_h_bar_free(&LabeledSplitGraph::new(g, inst.zside, inst.other).unwrap()),
        Class::Bigraph => build_bigraph_2p3_free(&LabeledBigraph::new(g, inst.zside, inst.other).unwrap()),
        Class::Cobigraph => build_cobigraph(&g),
    };
    r.map_err(|e| e.to_string())
}

fn graph_decompositions(sets: &[Vec<Instance>]) -> Result<String, String> {
    let mut t = Tally::default();
    for inst in sets.iter().flatten() {
        let adj = rows(&inst.graph);
        let outcome = decompose(inst).and_then(|tree| {
            // The cobigraph decomposition chooses the sides; read them off the root.
            let (zside, other) = match (&tree, inst.class) {
                (GraphDecompositionTree::Node { partition: p, .. }, Class::Cobigraph) => {
                    (p.parts[0] | p.parts[1] | p.parts[2], p.parts[3] | p.parts[4])
                }
                _ => (inst.zside, inst.other),
            };
            if !inst.class.holds(&adj, zside, other) {
                return Err("root sides leave the class".into());
            }
            check_tree(inst, &adj, &tree, full(adj.len()), zside, other)
        });
        t.check(outcome.is_ok(), || format!("{:?} {:?}: {}", inst.class, inst.graph, outcome.unwrap_err()));
    }
    let sizes: Vec<String> = sets.iter().map(|s| format!("{:?} {}", s[0].class, s.len())).collect();
    t.finish(&format!("graphs ({})", sizes.join(", ")))
}

fn p4_fixture() -> bool {
    let e = KExpression::p4_example();
    let ev = oracle::eval(e.root());
    let index = |name: &str| name.strip_prefix('v').and_then(|d| d.parse::<usize>().ok()).map(|d| d - 1);
    let edges: Option<BTreeSet<(usize, usize)>> = ev
        .edges
        .iter()
        .map(|&(u, v)| {
            let (a, b) = (index(&ev.vertices[u].0)?, index(&ev.vertices[v].0)?);
            Some((a.min(b), a.max(b)))
        })
        .collect();
    e.k() == 3 && ev.vertices.len() == 4 && edges == Some([(0, 1), (1, 2), (2, 3)].into_iter().collect())
}

/// Builder expressions that evaluated correctly, for the domination check.
type Built = Vec<(Vec<u64>, KExpression)>;

fn cwd_builders(sets: &[Vec<Instance>], keep: &mut Built) -> Result<String, String> {
    let mut t = Tally::default();
    for inst in sets.iter().flatten() {
        let adj = rows(&inst.graph);
        let n = adj.len();
        let outcome = build(inst).and_then(|e| {
            let ev = oracle::eval(e.root());
            let labels_ok = ev.vertices.iter().all(|&(_, l)| (1..=5).contains(&l)) && e.k() <= 5;
            let len = oracle::tokens(e.root());
            if oracle::rows_by_index(&ev).as_ref() != Some(&adj) {
                return Err("evaluates to another graph".into());
            }
            if !labels_ok || len > 60 * n {
                return Err(format!("labels ok {labels_ok}, length {len}"));
            }
            if n <= 14 {
                keep.push((adj.clone(), e));
            }
            Ok(())
        });
        t.check(outcome.is_ok(), || format!("{:?} {:?}: {}", inst.class, inst.graph, outcome.unwrap_err()));
    }
    t.check(p4_fixture(), || "P4 fixture".into());
    t.finish("expressions")
}

const KINDS: [(Kind, Variant); 3] = [
    (Kind::Dominating, Variant::Dominating),
    (Kind::Total, Variant::Total),
    (Kind::Connected, Variant::Connected),
];

fn h_free_split(g: &Graph) -> bool {
    !oracle::has_h(&rows(g))
}

/// `γ(G - u) = γ(G)` for every clique vertex `u` whose neighborhood in `I`
/// lies inside that of another clique vertex, over every split graph with
/// clique `0..k` on `n` vertices. Returns the number of graphs and the first
/// counterexample.
fn reduction_sweep(n: usize) -> (usize, Option<String>) {
    let order = oracle::by_size(n);
    let f = full(n);
    let mut count = 0;
    let mut dom = vec![0u64; 1 << n];
    for k in 0..=n {
        let cross = k * (n - k);
        let clique = full(k);
        let ind = f & !clique;
        for code in 0u64..1 << cross {
            count += 1;
            let mut adj: Vec<u64> = (0..n).map(|v| if v < k { clique & !(1 << v) } else { 0 }).collect();
            for (idx, (u, v)) in (0..k).flat_map(|u| (k..n).map(move |v| (u, v))).enumerate() {
                if code >> idx & 1 == 1 {
                    adj[u] |= 1 << v;
                    adj[v] |= 1 << u;
                }
            }
            let relevant: Vec<usize> = (0..k)
                .filter(|&u| (0..k).any(|v| v != u && (adj[u] & ind) & !(adj[v] & ind) == 0))
                .collect();
            if relevant.is_empty() {
                continue;
            }
            for s in 1usize..1 << n {
                let low = s.trailing_zeros() as usize;
                dom[s] = dom[s & (s - 1)] | adj[low] | 1 << low;
            }
            let mut gamma = None;
            let mut without: Vec<Option<u32>> = vec![None; n];
            for &s in &order {
                let size = s.count_ones();
                if gamma.is_some_and(|g| size > g) {
                    break;
                }
                let missing = f & !dom[s as usize];
                if missing == 0 && gamma.is_none() {
                    gamma = Some(size);
                }
                for &u in &relevant {
                    if s >> u & 1 == 0 && missing & !(1 << u) == 0 && without[u].is_none() {
                        without[u] = Some(size);
                    }
                }
            }
            if let Some(&u) = relevant.iter().find(|&&u| without[u] != gamma) {
                return (count, Some(format!("n={n} k={k} rows {adj:?} minus {u}")));
            }
        }
    }
    (count, None)
}

fn domination(built: &Built) -> Result<String, String> {
    let mut t = Tally::default();
    for (adj, e) in built {
        let own = oracle::gamma(adj, Kind::Dominating);
        let g = Graph::from_rows(adj);
        let dp = dp_dominating_set(e).map_err(|e| e.to_string());
        let ok = dp.as_ref().is_ok_and(|d| {
            d.size() == own
                && d.witness.is_some_and(|w| oracle::accepts(adj, Kind::Dominating, w))
                && brute_force(&g, Variant::Dominating).is_ok_and(|b| b.size() == own)
        });
        t.check(ok, || format!("dp on {e}: {dp:?}, oracle {own:?}"));
    }
    let pipeline = |g: &Graph, t: &mut Tally| {
        let adj = rows(g);
        for (kind, variant) in KINDS {
            let own = oracle::gamma(&adj, kind);
            let got = solve_h_free_split(g, variant);
            let ok = got
                .as_ref()
                .is_ok_and(|r| r.size() == own && r.witness.is_none_or(|w| oracle::accepts(&adj, kind, w)));
            t.check(ok, || format!("{variant} on {g:?}: {got:?}, oracle {own:?}"));
        }
    };
    for n in 1..=8 {
        for ls in common::split_graphs(n) {
            if h_free_split(ls.graph()) {
                pipeline(ls.graph(), &mut t);
            }
        }
    }
    let mut r = rng(0xD0D0);
    for _ in 0..500 {
        let g = generate::split_h_free(&mut r, 12).graph().clone();
        t.check(h_free_split(&g), || format!("generated {g:?} contains H"));
        pipeline(&g, &mut t);
    }
    for n in 2..=9 {
        let (count, bad) = reduction_sweep(n);
        t.checked += count - 1;
        t.check(bad.is_none(), || bad.unwrap());
    }
    t.finish("checks")
}

fn hyp(n: usize, edges: &[&[u32]]) -> Hypergraph {
    Hypergraph::new(0..n as u32, edges.iter().map(|e| e.to_vec())).unwrap()
}

fn fixtures() -> Result<String, String> {
    let mut t = Tally::default();
    let mut expect = |name: &str, h: &Hypergraph, checks: &[(&str, bool, bool)]| {
        let fam: Vec<u64> = h.edge_masks().to_vec();
        let n = h.n();
        for &(what, library, want) in checks {
            let own = match what {
                "1-Sperner" => Some(oracle::one_sperner(&fam)),
                "Sperner" => Some(oracle::sperner(&fam)),
                "dually Sperner" => Some(oracle::dually_sperner(&fam)),
                "2-Sperner" => Some(oracle::k_sperner(&fam, 2)),
                "conformal" => Some(oracle::conformal(n, &fam)),
                "2-asummable" => Some(oracle::two_asummable(n, &fam)),
                "threshold" => threshold(h, n, &fam).ok(),
                _ => None,
            };
            t.check(library == want && own == Some(want), || format!("{name} {what}: library {library}, oracle {own:?}"));
        }
    };
    let k3 = hyp(3, &[&[0, 1], &[0, 2], &[1, 2]]);
    expect("K3", &k3, &[("1-Sperner", k3.is_1_sperner(), true), ("conformal", k3.is_conformal(), false)]);
    let k4 = Graph::complete(4).edge_hypergraph();
    expect(
        "K4",
        &k4,
        &[
            ("threshold", k4.threshold_witness().is_some(), true),
            ("Sperner", k4.is_sperner(), true),
            ("dually Sperner", k4.is_dually_sperner(), false),
            ("conformal", k4.is_conformal(), false),
        ],
    );
    let p4 = hyp(4, &[&[0, 1], &[1, 2], &[2, 3]]);
    expect(
        "P4",
        &p4,
        &[
            ("conformal", p4.is_conformal(), true),
            ("Sperner", p4.is_sperner(), true),
            ("2-asummable", p4.is_k_asummable(2), false),
        ],
    );
    let e1 = hyp(1, &[&[], &[0]]);
    expect("{∅,{1}}", &e1, &[("dually Sperner", e1.is_dually_sperner(), true), ("Sperner", e1.is_sperner(), false)]);
    let two_k3 = Graph::from_edges(6, &[(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)]).unwrap().clique_hypergraph();
    expect(
        "C(2K3)",
        &two_k3,
        &[
            ("conformal", two_k3.is_conformal(), true),
            ("Sperner", two_k3.is_sperner(), true),
            ("2-Sperner", two_k3.is_k_sperner(2), false),
        ],
    );
    t.finish("fixture predicates")
}

fn run(id: usize, title: &str, f: impl FnOnce() -> Result<String, String>) -> bool {
    let start = Instant::now();
    let result = panic::catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
        let msg = p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()));
        Err(format!("panicked: {}", msg.unwrap_or_default()))
    });
    let secs = start.elapsed().as_secs_f64();
    match &result {
        Ok(s) => println!("PASS  {id}. {title}: {s} ({secs:.1}s)"),
        Err(s) => println!("FAIL  {id}. {title}: {s} ({secs:.1}s)"),
    }
    result.is_ok()
}

fn main() -> ExitCode {
    let graphs = small_graphs();
    let mut ok = Vec::new();
    ok.push(run(1, "threshold equivalence", || threshold_equivalence(&graphs)));
    ok.push(run(2, "domishold equivalence", || domishold_equivalence(&graphs)));
    ok.push(run(3, "hypergraph decomposition round trip", decomposition_round_trip));
    ok.push(run(4, "incidence translation", incidence_translation));
    let sets: Vec<Vec<Instance>> = Class::ALL.iter().map(|&c| instances(c)).collect();
    ok.push(run(5, "graph decomposition validity", || graph_decompositions(&sets)));
    let mut built = Built::new();
    ok.push(run(6, "clique-width builders", || cwd_builders(&sets, &mut built)));
    ok.push(run(7, "domination", || domination(&built)));
    ok.push(run(8, "counterexample fixtures", fixtures));
    let passed = ok.iter().filter(|&&b| b).count();
    println!("{passed}/{} criteria passed", ok.len());
    if passed == ok.len() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
