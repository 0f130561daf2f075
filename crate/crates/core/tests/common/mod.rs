#![allow(dead_code)]

use rand::Rng;
use sperner::bits;
use sperner::decomposition::{LabeledBigraph, LabeledSplitGraph};
use sperner::Graph;

/// Every labeled graph on `n` vertices.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    (0u64..1 << pairs.len()).map(move |code| {
        let edges: Vec<_> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| code >> i & 1 == 1)
            .map(|(_, e)| *e)
            .collect();
        Graph::from_edges(n, &edges).unwrap()
    })
}

/// Every graph whose first `k` vertices form a clique and whose remaining
/// vertices are independent. Up to relabeling this is every split graph.
pub fn split_graphs(n: usize) -> impl Iterator<Item = LabeledSplitGraph> {
    (0..=n).flat_map(move |k| {
        let cross = k * (n - k);
        (0u64..1 << cross).map(move |code| {
            let mut g = Graph::new(n);
            for u in 0..k {
                for v in u + 1..k {
                    g.add_edge(u, v);
                }
            }
            for (idx, (u, v)) in (0..k).flat_map(|u| (k..n).map(move |v| (u, v))).enumerate() {
                if code >> idx & 1 == 1 {
                    g.add_edge(u, v);
                }
            }
            LabeledSplitGraph::new(g, bits::full(k), bits::full(n) & !bits::full(k)).unwrap()
        })
    })
}

/// Every bigraph with sides `0..a` and `a..n`.
pub fn bigraphs(n: usize) -> impl Iterator<Item = LabeledBigraph> {
    (0..=n).flat_map(move |a| {
        let cross = a * (n - a);
        (0u64..1 << cross).map(move |code| {
            let mut g = Graph::new(n);
            for (idx, (u, v)) in (0..a).flat_map(|u| (a..n).map(move |v| (u, v))).enumerate() {
                if code >> idx & 1 == 1 {
                    g.add_edge(u, v);
                }
            }
            LabeledBigraph::new(g, bits::full(a), bits::full(n) & !bits::full(a)).unwrap()
        })
    })
}

/// A random split graph on `n` vertices with a random clique size, each
/// clique-independent pair joined with probability one half.
pub fn random_split(rng: &mut impl Rng, n: usize) -> LabeledSplitGraph {
    let k = rng.random_range(0..=n);
    let mut g = Graph::new(n);
    for u in 0..k {
        for v in u + 1..n {
            if v < k || rng.random_bool(0.5) {
                g.add_edge(u, v);
            }
        }
    }
    LabeledSplitGraph::new(g, bits::full(k), bits::full(n) & !bits::full(k)).unwrap()
}
