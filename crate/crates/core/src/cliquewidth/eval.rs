use std::collections::HashMap;

use super::{KExpression, Label, Term};
use crate::bits;
use crate::graph::Graph;

/// The graph produced by a k-expression, with the final label of every
/// vertex. Vertices are numbered by name: integer names first in numeric
/// order, then the others in string order. An expression whose leaves are
/// named `0..n` therefore evaluates to a graph on exactly those indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledGraph {
    pub names: Vec<String>,
    pub graph: Graph,
    pub labels: Vec<Label>,
}

impl LabeledGraph {
    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Vertices carrying `label`.
    pub fn class(&self, label: Label) -> u64 {
        bits::from_indices(self.labels.iter().enumerate().filter(|(_, &l)| l == label).map(|(v, _)| v))
    }
}

pub(crate) fn canonical_order<'a>(names: &[&'a str]) -> Vec<&'a str> {
    let mut sorted = names.to_vec();
    sorted.sort_by_key(|s| (s.parse::<u64>().map_err(|_| ()), *s));
    sorted
}

/// Vertex index of every leaf name under the canonical order.
pub(crate) fn index_map<'a>(t: &'a Term) -> HashMap<&'a str, usize> {
    canonical_order(&t.vertices()).into_iter().enumerate().map(|(i, s)| (s, i)).collect()
}

fn go(t: &Term, index: &HashMap<&str, usize>, g: &mut Graph, k: usize) -> Vec<u64> {
    match t {
        Term::Leaf { label, vertex } => {
            let mut classes = vec![0; k + 1];
            classes[*label as usize] = bits::bit(index[vertex.as_str()]);
            classes
        }
        Term::Union(a, b) => {
            let mut ca = go(a, index, g, k);
            for (x, y) in ca.iter_mut().zip(go(b, index, g, k)) {
                *x |= y;
            }
            ca
        }
        Term::Relabel { from, to, sub } => {
            let mut c = go(sub, index, g, k);
            c[*to as usize] |= c[*from as usize];
            c[*from as usize] = 0;
            c
        }
        Term::AddEdges { i, j, sub } => {
            let c = go(sub, index, g, k);
            for u in bits::iter(c[*i as usize]) {
                for v in bits::iter(c[*j as usize]) {
                    g.add_edge(u, v);
                }
            }
            c
        }
    }
}

impl KExpression {
    pub fn eval(&self) -> LabeledGraph {
        let index = index_map(self.root());
        let n = index.len();
        let mut graph = Graph::new(n);
        let classes = go(self.root(), &index, &mut graph, self.k() as usize);
        let mut labels = vec![0; n];
        for (label, &mask) in classes.iter().enumerate() {
            for v in bits::iter(mask) {
                labels[v] = label as Label;
            }
        }
        let names = canonical_order(&self.root().vertices()).into_iter().map(str::to_string).collect();
        LabeledGraph { names, graph, labels }
    }
}
