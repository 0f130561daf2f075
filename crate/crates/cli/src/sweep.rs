use rand::Rng;
use serde_json::json;
use sperner::cliquewidth::KExpression;
use sperner::decomposition::GraphDecompositionTree;
use sperner::domination::{brute_force, solve_h_free_split, Variant};
use sperner::generate::{self, rng};
use sperner::recognition::{check_domishold_equivalences, check_threshold_equivalences, EquivalenceReport, ReportError};
use sperner::Graph;

use crate::args::{GraphClass, Suite};
use crate::commands::{build, describe, describe_hypergraph};
use crate::output::{item, CliError, Item, Outcome, Status};

/// Disagreements listed in full; the rest are only counted.
const SHOWN: usize = 5;

struct Tally {
    suite: &'static str,
    instances: usize,
    failures: Vec<String>,
}

impl Tally {
    fn new(suite: &'static str) -> Self {
        Tally { suite, instances: 0, failures: Vec::new() }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.instances += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn items(&self, seed: u64, max_n: usize) -> Vec<Item> {
        let mut out = vec![item(
            format!(
                "{}: {} instances, {} disagreements (seed {seed}, max-n {max_n})",
                self.suite,
                self.instances,
                self.failures.len()
            ),
            json!({
                "type": "suite",
                "suite": self.suite,
                "instances": self.instances,
                "disagreements": self.failures.len(),
                "seed": seed,
                "max_n": max_n,
                "examples": self.failures.iter().take(SHOWN).collect::<Vec<_>>(),
            }),
        )];
        for f in self.failures.iter().take(SHOWN) {
            out.push(item(format!("  disagreement: {f}"), json!({ "type": "disagreement", "suite": self.suite, "detail": f })));
        }
        out
    }
}

/// Every labeled graph on `n` vertices.
fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    (0u64..1 << pairs.len()).map(move |code| {
        let mut g = Graph::new(n);
        for (i, &(u, v)) in pairs.iter().enumerate() {
            if code >> i & 1 == 1 {
                g.add_edge(u, v);
            }
        }
        g
    })
}

fn random_graph(r: &mut impl Rng, n: usize) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if r.random_bool(0.5) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

fn equivalence(
    suite: &'static str,
    report: fn(&Graph) -> Result<EquivalenceReport, ReportError>,
    max_n: usize,
    samples: usize,
    seed: u64,
) -> Result<Tally, CliError> {
    let mut t = Tally::new(suite);
    let mut run = |g: &Graph| -> Result<(), CliError> {
        let rep = report(g)?;
        t.check(rep.agrees(), || format!("{} {}", describe(g), rep.title));
        Ok(())
    };
    for n in 0..=max_n {
        for g in all_graphs(n) {
            run(&g)?;
        }
    }
    let mut r = rng(seed);
    for i in 0..samples {
        let g = random_graph(&mut r, max_n + 1 + i % 2);
        run(&g)?;
    }
    Ok(t)
}

fn decomposition(max_n: usize, samples: usize, seed: u64) -> Tally {
    let mut t = Tally::new("decomposition");
    let mut r = rng(seed);
    for _ in 0..samples {
        let n = r.random_range(0..=max_n);
        let h = generate::one_sperner_hypergraph(&mut r, n);
        let ok = h.decompose().and_then(|tree| tree.recompose()).is_ok_and(|back| back == h);
        t.check(ok, || describe_hypergraph(&h));
    }
    t
}

fn instances(class: GraphClass, r: &mut rand_chacha::ChaCha8Rng, max_n: usize) -> Graph {
    match class {
        GraphClass::SplitH => generate::split_h_free(r, max_n).graph().clone(),
        GraphClass::SplitHbar => generate::split_h_bar_free(r, max_n).graph().clone(),
        GraphClass::Bigraph => generate::bigraph_2p3_free(r, max_n).graph().clone(),
        GraphClass::Cobigraph => generate::cobigraph(r, max_n),
    }
}

const CLASSES: [GraphClass; 4] = [GraphClass::SplitH, GraphClass::SplitHbar, GraphClass::Bigraph, GraphClass::Cobigraph];

fn tree(class: GraphClass, g: &Graph) -> Option<GraphDecompositionTree> {
    use sperner::decomposition::*;
    match class {
        GraphClass::SplitH => decompose_split_graph_h_free(g),
        GraphClass::SplitHbar => decompose_split_graph_h_bar_free(g),
        GraphClass::Bigraph => decompose_bigraph(g),
        GraphClass::Cobigraph => decompose_cobigraph(g),
    }
    .ok()
}

fn graph_decomposition(max_n: usize, samples: usize, seed: u64) -> Tally {
    let mut t = Tally::new("graph-decomposition");
    let mut r = rng(seed);
    for class in CLASSES {
        for _ in 0..samples {
            let g = instances(class, &mut r, max_n);
            let ok = tree(class, &g).is_some_and(|tr| tr.validate(&g).is_ok() && tr.recompose(g.n()) == g);
            t.check(ok, || format!("{class:?} {}", describe(&g)));
        }
    }
    t
}

fn cwd_roundtrip(max_n: usize, samples: usize, seed: u64) -> Tally {
    let mut t = Tally::new("cwd-roundtrip");
    let mut r = rng(seed);
    for class in CLASSES {
        for _ in 0..samples {
            let g = instances(class, &mut r, max_n);
            let ok = build(&g, class).is_ok_and(|e| {
                let lg = e.eval();
                lg.graph == g
                    && lg.labels.iter().all(|l| (1..=5).contains(l))
                    && e.length() <= 60 * g.n()
                    && KExpression::parse(&e.to_string(), Some(5)).as_ref() == Ok(&e)
            });
            t.check(ok, || format!("{class:?} {}", describe(&g)));
        }
    }
    t
}

fn domination(max_n: usize, samples: usize, seed: u64) -> Result<Tally, CliError> {
    let mut t = Tally::new("domination");
    let mut r = rng(seed);
    for _ in 0..samples {
        let g = generate::split_h_free(&mut r, max_n).graph().clone();
        for v in Variant::ALL {
            let fast = solve_h_free_split(&g, v)?;
            let slow = brute_force(&g, v)?;
            t.check(fast.verify(&g) && fast.size() == slow.size(), || format!("{v} {}", describe(&g)));
        }
    }
    Ok(t)
}

fn one(suite: Suite, max_n: Option<usize>, samples: usize, seed: u64) -> Result<(Tally, usize), CliError> {
    let cap = |default: usize| max_n.unwrap_or(default);
    Ok(match suite {
        Suite::ThresholdEquiv => {
            let n = cap(6).min(6);
            (equivalence("threshold-equiv", check_threshold_equivalences, n, samples, seed)?, n)
        }
        Suite::DomisholdEquiv => {
            let n = cap(6).min(6);
            let mut t = equivalence("domishold-equiv", check_domishold_equivalences, n, samples, seed)?;
            let c4 = Graph::cycle(4).dominating_set_hypergraph();
            t.check(c4.is_threshold() && !c4.is_1_sperner(), || "dominating sets of C4".into());
            (t, n)
        }
        Suite::Decomposition => (decomposition(cap(14), samples, seed), cap(14)),
        Suite::GraphDecomposition => (graph_decomposition(cap(20), samples, seed), cap(20)),
        Suite::CwdRoundtrip => (cwd_roundtrip(cap(12), samples, seed), cap(12)),
        Suite::Domination => (domination(cap(12).min(20), samples, seed)?, cap(12).min(20)),
        Suite::All => unreachable!(),
    })
}

/// The equivalence suites enumerate every graph up to `max-n` (at most 6)
/// and add random graphs on `max-n + 1` and `max-n + 2` vertices.
pub fn sweep(suite: Suite, max_n: Option<usize>, samples: usize, seed: u64) -> Result<Outcome, CliError> {
    let suites = match suite {
        Suite::All => vec![
            Suite::ThresholdEquiv,
            Suite::DomisholdEquiv,
            Suite::Decomposition,
            Suite::GraphDecomposition,
            Suite::CwdRoundtrip,
            Suite::Domination,
        ],
        s => vec![s],
    };
    let mut items = Vec::new();
    let mut status = Status::Ok;
    for s in suites {
        let (t, n) = one(s, max_n, samples, seed)?;
        if !t.failures.is_empty() {
            status = Status::Negative;
        }
        items.extend(t.items(seed, n));
    }
    Ok(Outcome { items, status })
}
