use std::fmt;

use crate::bits;
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StepKind {
    Isolated,
    Universal,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Step {
    pub kind: StepKind,
    pub vertex: usize,
}

/// Builds a threshold graph from the single vertex `start` by adding the
/// vertices of `steps` in order, each either isolated or universal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstructionSequence {
    pub start: Option<usize>,
    pub steps: Vec<Step>,
}

impl ConstructionSequence {
    /// Replays the steps on `n` vertices, keeping the original labels.
    pub fn replay(&self, n: usize) -> Graph {
        let mut g = Graph::new(n);
        let mut present = self.start.map_or(0, bits::bit);
        for step in &self.steps {
            if step.kind == StepKind::Universal {
                g.join_to(step.vertex, present);
            }
            present |= bits::bit(step.vertex);
        }
        g
    }
}

impl fmt::Display for ConstructionSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.start {
            Some(v) => writeln!(f, "start {v}")?,
            None => writeln!(f, "start none")?,
        }
        for s in &self.steps {
            let kind = match s.kind {
                StepKind::Isolated => "add-isolated",
                StepKind::Universal => "add-universal",
            };
            writeln!(f, "{kind} {}", s.vertex)?;
        }
        Ok(())
    }
}

/// Peels isolated or universal vertices (lowest index first, an isolated
/// reading preferred when a vertex is both) and reverses the peeling order.
/// `None` if at some point no such vertex exists.
pub fn threshold_construction(g: &Graph) -> Option<ConstructionSequence> {
    let mut rest = g.vertex_mask();
    let mut peeled = Vec::new();
    while rest.count_ones() > 1 {
        let step = bits::iter(rest).find_map(|v| {
            let nb = g.neighbors(v) & rest;
            if nb == 0 {
                Some(Step { kind: StepKind::Isolated, vertex: v })
            } else if nb == rest & !bits::bit(v) {
                Some(Step { kind: StepKind::Universal, vertex: v })
            } else {
                None
            }
        })?;
        rest &= !bits::bit(step.vertex);
        peeled.push(step);
    }
    peeled.reverse();
    Some(ConstructionSequence {
        start: bits::iter(rest).next(),
        steps: peeled,
    })
}
