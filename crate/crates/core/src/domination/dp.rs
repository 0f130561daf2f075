use std::collections::BTreeMap;

use super::{DominationError, DominationResult, Variant};
use crate::bits;
use crate::cliquewidth::eval::index_map;
use crate::cliquewidth::{KExpression, Term};

/// Largest label bound accepted by [`dp_dominating_set`].
pub const MAX_DP_LABELS: u8 = 6;

/// A state packs, for every label `l`, bit `l - 1` (some vertex with label
/// `l` is selected) and bit `k + l - 1` (every vertex with label `l` is
/// already dominated). An absent label reads as "nothing selected, all
/// dominated".
type State = u16;

/// Best partial solution per state: the selected set, compared by size and
/// then lexicographically.
type Table = BTreeMap<State, u64>;

fn offer(table: &mut Table, state: State, set: u64) {
    table
        .entry(state)
        .and_modify(|cur| {
            if bits::len(set).cmp(&bits::len(*cur)).then(bits::lex_cmp(set, *cur)).is_lt() {
                *cur = set;
            }
        })
        .or_insert(set);
}

struct Dp<'a> {
    k: u32,
    index: std::collections::HashMap<&'a str, usize>,
}

impl<'a> Dp<'a> {
    fn all_dominated(&self) -> State {
        (((1u32 << self.k) - 1) << self.k) as State
    }

    fn run(&self, t: &'a Term) -> Table {
        let k = self.k;
        let mut out = Table::new();
        match t {
            Term::Leaf { label, vertex } => {
                let l = *label as u32 - 1;
                let base = self.all_dominated();
                offer(&mut out, base | (1 << l), bits::bit(self.index[vertex.as_str()]));
                offer(&mut out, base & !(1 << (k + l)), 0);
            }
            Term::Union(a, b) => {
                let (ta, tb) = (self.run(a), self.run(b));
                let s_mask = ((1u32 << k) - 1) as State;
                for (&sa, &da) in &ta {
                    for (&sb, &db) in &tb {
                        let sel = (sa | sb) & s_mask;
                        let dom = (sa & sb) & !s_mask;
                        offer(&mut out, sel | dom, da | db);
                    }
                }
            }
            Term::Relabel { from, to, sub } => {
                let (i, j) = (*from as u32 - 1, *to as u32 - 1);
                for (s, d) in self.run(sub) {
                    let mut s = s;
                    if s & (1 << i) != 0 {
                        s |= 1 << j;
                    }
                    if s & (1 << (k + i)) == 0 {
                        s &= !(1 << (k + j));
                    }
                    s &= !(1 << i);
                    s |= 1 << (k + i);
                    offer(&mut out, s, d);
                }
            }
            Term::AddEdges { i, j, sub } => {
                let (i, j) = (*i as u32 - 1, *j as u32 - 1);
                for (s, d) in self.run(sub) {
                    let mut s = s;
                    if s & (1 << j) != 0 {
                        s |= 1 << (k + i);
                    }
                    if s & (1 << i) != 0 {
                        s |= 1 << (k + j);
                    }
                    offer(&mut out, s, d);
                }
            }
        }
        out
    }
}

/// Minimum dominating set of the graph `e` evaluates to. The witness uses
/// the vertex numbering of [`KExpression::eval`].
pub fn dp_dominating_set(e: &KExpression) -> Result<DominationResult, DominationError> {
    if e.k() > MAX_DP_LABELS {
        return Err(DominationError::TooManyLabels(e.k()));
    }
    let dp = Dp { k: e.k() as u32, index: index_map(e.root()) };
    let table = dp.run(e.root());
    let full = dp.all_dominated();
    let best = table
        .iter()
        .filter(|(&s, _)| s & full == full)
        .map(|(_, &d)| d)
        .min_by(|&a, &b| bits::len(a).cmp(&bits::len(b)).then(bits::lex_cmp(a, b)))
        .expect("selecting every vertex dominates");
    Ok(DominationResult::feasible(Variant::Dominating, best))
}
