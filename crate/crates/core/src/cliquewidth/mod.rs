//! k-expressions: the operations `i(v)`, disjoint union, relabeling
//! `ρ_{i→j}` and edge addition `η_{i,j}`, written as s-expressions:
//!
//! ```text
//! expr := (leaf INT IDENT) | (union expr expr) | (rel INT INT expr) | (adde INT INT expr)
//! ```
//!
//! The builders turn M-partition decomposition trees into 5-expressions.

mod build;
pub(crate) mod eval;
mod parse;

use std::collections::HashSet;
use std::fmt;

use thiserror::Error;

pub use build::{
    build_bigraph, build_bigraph_2p3_free, build_cobigraph, build_split_graph_h_bar_free, build_split_graph_h_free, build_split_h_bar_free,
    build_split_h_free, expression_from_tree, BuildError, BUILDER_LABELS,
};
pub use eval::LabeledGraph;
pub use parse::ParseError;

pub type Label = u8;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Term {
    Leaf { label: Label, vertex: String },
    Union(Box<Term>, Box<Term>),
    /// `ρ_{from→to}`
    Relabel { from: Label, to: Label, sub: Box<Term> },
    /// `η_{i,j}`
    AddEdges { i: Label, j: Label, sub: Box<Term> },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExprError {
    #[error("label {label} is outside 1..={k}")]
    LabelOutOfRange { label: Label, k: Label },
    #[error("operation on label {0} with itself")]
    SameLabel(Label),
    #[error("vertex {0} appears in more than one leaf")]
    DuplicateVertex(String),
    #[error("expression has {0} vertices; at most 64 are supported")]
    TooManyVertices(usize),
    #[error("label bound must be positive")]
    ZeroBound,
}

impl Term {
    pub fn leaf(label: Label, vertex: impl Into<String>) -> Term {
        Term::Leaf { label, vertex: vertex.into() }
    }

    pub fn union(a: Term, b: Term) -> Term {
        Term::Union(Box::new(a), Box::new(b))
    }

    pub fn rel(from: Label, to: Label, sub: Term) -> Term {
        Term::Relabel { from, to, sub: Box::new(sub) }
    }

    pub fn adde(i: Label, j: Label, sub: Term) -> Term {
        Term::AddEdges { i, j, sub: Box::new(sub) }
    }

    /// Token count: every operator name, label and vertex is one symbol;
    /// parentheses are not counted.
    pub fn length(&self) -> usize {
        match self {
            Term::Leaf { .. } => 3,
            Term::Union(a, b) => 1 + a.length() + b.length(),
            Term::Relabel { sub, .. } | Term::AddEdges { sub, .. } => 3 + sub.length(),
        }
    }

    pub fn max_label(&self) -> Label {
        match self {
            Term::Leaf { label, .. } => *label,
            Term::Union(a, b) => a.max_label().max(b.max_label()),
            Term::Relabel { from: i, to: j, sub } | Term::AddEdges { i, j, sub } => (*i).max(*j).max(sub.max_label()),
        }
    }

    /// Vertex names in leaf order.
    pub fn vertices(&self) -> Vec<&str> {
        let mut out = Vec::new();
        self.collect_vertices(&mut out);
        out
    }

    fn collect_vertices<'a>(&'a self, out: &mut Vec<&'a str>) {
        match self {
            Term::Leaf { vertex, .. } => out.push(vertex),
            Term::Union(a, b) => {
                a.collect_vertices(out);
                b.collect_vertices(out);
            }
            Term::Relabel { sub, .. } | Term::AddEdges { sub, .. } => sub.collect_vertices(out),
        }
    }

    fn check(&self, k: Label) -> Result<(), ExprError> {
        let in_range = |label: Label| {
            if label == 0 || label > k {
                Err(ExprError::LabelOutOfRange { label, k })
            } else {
                Ok(())
            }
        };
        match self {
            Term::Leaf { label, .. } => in_range(*label),
            Term::Union(a, b) => {
                a.check(k)?;
                b.check(k)
            }
            Term::Relabel { from: i, to: j, sub } | Term::AddEdges { i, j, sub } => {
                in_range(*i)?;
                in_range(*j)?;
                if i == j {
                    return Err(ExprError::SameLabel(*i));
                }
                sub.check(k)
            }
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Leaf { label, vertex } => write!(f, "(leaf {label} {vertex})"),
            Term::Union(a, b) => write!(f, "(union {a} {b})"),
            Term::Relabel { from, to, sub } => write!(f, "(rel {from} {to} {sub})"),
            Term::AddEdges { i, j, sub } => write!(f, "(adde {i} {j} {sub})"),
        }
    }
}

/// A validated term together with its label bound `k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct KExpression {
    k: Label,
    root: Term,
}

impl KExpression {
    pub fn new(k: Label, root: Term) -> Result<Self, ExprError> {
        if k == 0 {
            return Err(ExprError::ZeroBound);
        }
        root.check(k)?;
        let names = root.vertices();
        if names.len() > crate::MAX_VERTICES {
            return Err(ExprError::TooManyVertices(names.len()));
        }
        let mut seen = HashSet::new();
        for v in names {
            if !seen.insert(v) {
                return Err(ExprError::DuplicateVertex(v.to_string()));
            }
        }
        Ok(KExpression { k, root })
    }

    /// Uses the largest label occurring in `root` as the bound.
    pub fn inferred(root: Term) -> Result<Self, ExprError> {
        KExpression::new(root.max_label(), root)
    }

    pub fn k(&self) -> Label {
        self.k
    }

    pub fn root(&self) -> &Term {
        &self.root
    }

    pub fn into_root(self) -> Term {
        self.root
    }

    pub fn length(&self) -> usize {
        self.root.length()
    }

    pub fn vertex_count(&self) -> usize {
        self.root.vertices().len()
    }

    /// The 3-expression of the path v1-v2-v3-v4:
    /// `η_{2,3}(ρ_{3→2}(ρ_{2→1}(η_{2,3}(η_{1,2}(1(v1) ⊕ 2(v2)) ⊕ 3(v3)))) ⊕ 3(v4))`.
    /// The last leaf is often misprinted as a second `3(v3)`.
    pub fn p4_example() -> KExpression {
        let inner = Term::adde(1, 2, Term::union(Term::leaf(1, "v1"), Term::leaf(2, "v2")));
        let three = Term::adde(2, 3, Term::union(inner, Term::leaf(3, "v3")));
        let root = Term::adde(2, 3, Term::union(Term::rel(3, 2, Term::rel(2, 1, three)), Term::leaf(3, "v4")));
        KExpression::new(3, root).expect("fixture is valid")
    }
}

impl fmt::Display for KExpression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.root.fmt(f)
    }
}

pub fn expression_length(e: &KExpression) -> usize {
    e.length()
}
