//! Separating weights for threshold hypergraphs, with an exact text form:
//!
//! ```text
//! threshold 2/1
//! weight 0 1/1
//! weight 1 1/1
//! ```
//!
//! Every number is written as a fraction `p/q` in lowest terms.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::bits;
use crate::hypergraph::{Hypergraph, VertexId};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThresholdWitness {
    vertices: Vec<VertexId>,
    weights: Vec<BigRational>,
    threshold: BigRational,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}: {message}")]
pub struct WitnessParseError {
    pub line: usize,
    pub message: String,
}

impl ThresholdWitness {
    /// # Panics
    /// If the lengths differ or a value is negative.
    pub fn new(vertices: Vec<VertexId>, weights: Vec<BigRational>, threshold: BigRational) -> Self {
        assert_eq!(vertices.len(), weights.len());
        assert!(!threshold.is_negative() && weights.iter().all(|w| !w.is_negative()));
        ThresholdWitness {
            vertices,
            weights,
            threshold,
        }
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn weights(&self) -> &[BigRational] {
        &self.weights
    }

    pub fn threshold(&self) -> &BigRational {
        &self.threshold
    }

    /// Total weight of a vertex set given as a bitset over vertex positions.
    pub fn weight_of(&self, mask: u64) -> BigRational {
        bits::iter(mask).map(|v| &self.weights[v]).sum()
    }

    fn reaches(&self, mask: u64) -> bool {
        self.weight_of(mask) >= self.threshold
    }

    fn matches(&self, h: &Hypergraph) -> bool {
        self.vertices == h.vertices()
    }

    /// Checks the minimal hyperedges and the maximal independent sets. By
    /// monotonicity of the weights this already implies exact separation.
    pub fn separates_extremal(&self, h: &Hypergraph) -> bool {
        self.matches(h)
            && h.minimal_edges().into_iter().all(|e| self.reaches(e))
            && h.maximal_independent_sets().into_iter().all(|s| !self.reaches(s))
    }

    /// Checks `w(X) ≥ t ⟺ X dependent` for every subset `X`.
    ///
    /// # Panics
    /// For hypergraphs with more than 24 vertices.
    pub fn verify_exhaustive(&self, h: &Hypergraph) -> bool {
        assert!(h.n() <= 24, "exhaustive verification is limited to 24 vertices");
        self.matches(h) && (0..1u64 << h.n()).all(|x| self.reaches(x) != h.is_independent_mask(x))
    }

    /// Exhaustive check up to 20 vertices, extremal check beyond.
    pub fn verify(&self, h: &Hypergraph) -> bool {
        if h.n() <= 20 {
            self.verify_exhaustive(h)
        } else {
            self.separates_extremal(h)
        }
    }

    /// The same separator scaled to integers by the common denominator.
    pub fn to_integers(&self) -> (Vec<BigInt>, BigInt) {
        let scale = self
            .weights
            .iter()
            .chain([&self.threshold])
            .fold(BigInt::from(1), |acc, q| acc.lcm(q.denom()));
        let scaled = |q: &BigRational| (q * BigRational::from_integer(scale.clone())).to_integer();
        (self.weights.iter().map(scaled).collect(), scaled(&self.threshold))
    }

    pub fn to_text(&self) -> String {
        self.to_string()
    }

    pub fn parse(text: &str) -> Result<Self, WitnessParseError> {
        let err = |line: usize, message: &str| WitnessParseError {
            line,
            message: message.to_string(),
        };
        let mut threshold = None;
        let mut pairs: Vec<(VertexId, BigRational)> = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let tokens: Vec<&str> = raw.split_whitespace().collect();
            match tokens[..] {
                [] => {}
                ["threshold", q] => {
                    if threshold.is_some() {
                        return Err(err(line, "threshold given twice"));
                    }
                    threshold = Some(parse_fraction(q).ok_or_else(|| err(line, "expected a fraction p/q"))?);
                }
                ["weight", v, q] => {
                    let v: VertexId = v.parse().map_err(|_| err(line, "expected a vertex id"))?;
                    if pairs.iter().any(|(u, _)| *u == v) {
                        return Err(err(line, "vertex weighted twice"));
                    }
                    pairs.push((v, parse_fraction(q).ok_or_else(|| err(line, "expected a fraction p/q"))?));
                }
                _ => return Err(err(line, "expected `threshold p/q` or `weight v p/q`")),
            }
        }
        let threshold = threshold.ok_or_else(|| err(1, "missing threshold line"))?;
        pairs.sort_by_key(|(v, _)| *v);
        if threshold.is_negative() || pairs.iter().any(|(_, w)| w.is_negative()) {
            return Err(err(1, "weights and threshold must be non-negative"));
        }
        let (vertices, weights) = pairs.into_iter().unzip();
        Ok(ThresholdWitness::new(vertices, weights, threshold))
    }
}

fn parse_fraction(s: &str) -> Option<BigRational> {
    let (p, q) = s.split_once('/')?;
    let q: BigInt = q.parse().ok()?;
    if q.is_zero() {
        return None;
    }
    Some(BigRational::new(p.parse().ok()?, q))
}

fn write_fraction(f: &mut fmt::Formatter<'_>, q: &BigRational) -> fmt::Result {
    write!(f, "{}/{}", q.numer(), q.denom())
}

impl fmt::Display for ThresholdWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("threshold ")?;
        write_fraction(f, &self.threshold)?;
        writeln!(f)?;
        for (v, w) in self.vertices.iter().zip(&self.weights) {
            write!(f, "weight {v} ")?;
            write_fraction(f, w)?;
            writeln!(f)?;
        }
        Ok(())
    }
}
