use std::fs;
use std::path::Path;

use serde_json::{json, Value};
use sperner::bits;
use sperner::cliquewidth::{
    build_bigraph, build_cobigraph, build_split_graph_h_bar_free, build_split_graph_h_free, BuildError, KExpression,
};
use sperner::decomposition::{
    decompose_bigraph, decompose_cobigraph, decompose_split_graph_h_bar_free, decompose_split_graph_h_free,
    GraphDecompositionTree,
};
use sperner::domination::{brute_force, dp_dominating_set, solve_h_free_split, DominationError, Variant};
use sperner::generate::{self, rng};
use sperner::graph::{find_induced, parse_graph, write_graph, Pattern};
use sperner::hypergraph::{parse_hypergraph, write_hypergraph, HypergraphError, VertexId};
use sperner::{Graph, Hypergraph};

use crate::args::{DecomposeKind, GenerateKind, GraphClass, Method, VariantArg};
use crate::output::{item, CliError, Item, Outcome};

pub fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError(format!("{}: {e}", path.display())))
}

fn with_path<E: std::fmt::Display>(path: &Path) -> impl Fn(E) -> CliError + '_ {
    move |e| CliError(format!("{}: {e}", path.display()))
}

pub fn load_graph(path: &Path) -> Result<Graph, CliError> {
    parse_graph(&read(path)?).map_err(with_path(path))
}

pub fn load_hypergraph(path: &Path) -> Result<Hypergraph, CliError> {
    parse_hypergraph(&read(path)?).map_err(with_path(path))
}

fn id_set(ids: &[VertexId]) -> String {
    let items: Vec<String> = ids.iter().map(|v| v.to_string()).collect();
    format!("{{{}}}", items.join(","))
}

fn predicate(name: &str, value: bool, witness: Option<String>) -> Item {
    let text = match &witness {
        Some(w) => format!("{name}: {value} ({w})"),
        None => format!("{name}: {value}"),
    };
    item(text, json!({ "type": "predicate", "name": name, "value": value, "witness": witness }))
}

pub fn hyp_check(h: &Hypergraph) -> Outcome {
    let pair = |p: Option<(u64, u64)>, sep: &str| p.map(|(e, f)| format!("{} {sep} {}", id_set(&h.ids_of(e)), id_set(&h.ids_of(f))));
    let sperner = pair(h.sperner_violation(), "inside");
    let dually = pair(h.dually_sperner_violation(), "and");
    let one = pair(h.one_sperner_violation(), "and");
    let conformal = h.conformality_violation().map(|c| format!("clique {} in no hyperedge", id_set(&h.ids_of(c))));
    let threshold = h.threshold_witness();
    let asum = h.asummability_witness(2);
    let mut items = vec![
        predicate("sperner", sperner.is_none(), sperner),
        predicate("dually-sperner", dually.is_none(), dually),
        predicate("1-sperner", one.is_none(), one),
        predicate("conformal", conformal.is_none(), conformal),
    ];
    let weights = threshold.as_ref().map(|w| w.to_text().trim_end().replace('\n', "; "));
    items.push(predicate("threshold", threshold.is_some(), weights));
    let asum_text = asum.as_ref().map(|w| {
        let (ind, dep) = w.to_ids(h);
        let sets = |s: &[Vec<VertexId>]| s.iter().map(|e| id_set(e)).collect::<Vec<_>>().join(" ");
        format!("independent {} vs dependent {}", sets(&ind), sets(&dep))
    });
    items.push(predicate("2-asummable", asum.is_none(), asum_text));
    Outcome::ok(items)
}

fn tree_items(kind: &str, text: String, nodes: usize) -> Vec<Item> {
    let record = json!({ "type": "tree", "kind": kind, "nodes": nodes, "text": text });
    vec![item(text, record)]
}

fn graph_tree(kind: &str, g: &Graph, t: Result<GraphDecompositionTree, sperner::decomposition::DecompositionError>) -> Outcome {
    match t {
        Ok(t) => {
            debug_assert_eq!(t.validate(g), Ok(()));
            Outcome::ok(tree_items(kind, t.to_string(), t.node_count()))
        }
        Err(e) => Outcome::negative(e),
    }
}

pub fn decompose(path: &Path, kind: DecomposeKind) -> Result<Outcome, CliError> {
    if kind == DecomposeKind::Hypergraph {
        let h = load_hypergraph(path)?;
        return Ok(match h.decompose() {
            Ok(t) => Outcome::ok(tree_items("hypergraph", t.to_string(), t.node_count())),
            Err(e @ (HypergraphError::NotOneSperner { .. } | HypergraphError::NotDecomposable(_))) => Outcome::negative(e),
            Err(e) => return Err(e.into()),
        });
    }
    let g = load_graph(path)?;
    Ok(match kind {
        DecomposeKind::SplitH => graph_tree("split-h", &g, decompose_split_graph_h_free(&g)),
        DecomposeKind::SplitHbar => graph_tree("split-hbar", &g, decompose_split_graph_h_bar_free(&g)),
        DecomposeKind::Bigraph => graph_tree("bigraph", &g, decompose_bigraph(&g)),
        DecomposeKind::Cobigraph => graph_tree("cobigraph", &g, decompose_cobigraph(&g)),
        DecomposeKind::Hypergraph => unreachable!(),
    })
}

pub fn build(g: &Graph, class: GraphClass) -> Result<KExpression, BuildError> {
    match class {
        GraphClass::SplitH => build_split_graph_h_free(g),
        GraphClass::SplitHbar => build_split_graph_h_bar_free(g),
        GraphClass::Bigraph => build_bigraph(g),
        GraphClass::Cobigraph => build_cobigraph(g),
    }
}

pub fn cwd(path: &Path, class: GraphClass) -> Result<Outcome, CliError> {
    let g = load_graph(path)?;
    Ok(match build(&g, class) {
        Ok(e) => {
            let text = e.to_string();
            let record = json!({ "type": "expression", "k": e.k(), "length": e.length(), "text": text });
            Outcome::ok(vec![item(text, record)])
        }
        Err(e) => Outcome::negative(e),
    })
}

pub fn load_expression(path: &Path, k: Option<u8>) -> Result<KExpression, CliError> {
    KExpression::parse(&read(path)?, k).map_err(with_path(path))
}

fn graph_record(g: &Graph) -> Value {
    json!({ "type": "graph", "n": g.n(), "edges": g.edges() })
}

pub fn eval(path: &Path, k: Option<u8>) -> Result<Outcome, CliError> {
    let e = load_expression(path, k)?;
    let lg = e.eval();
    let mut text = String::new();
    let canonical = lg.names.iter().enumerate().all(|(i, s)| *s == i.to_string());
    if !canonical {
        text += &format!("# names {}\n", lg.names.join(" "));
    }
    let labels: Vec<String> = lg.labels.iter().map(|l| l.to_string()).collect();
    text += &format!("# labels {}\n", labels.join(" "));
    text += &write_graph(&lg.graph);
    let mut record = graph_record(&lg.graph);
    record["names"] = json!(lg.names);
    record["labels"] = json!(lg.labels);
    Ok(Outcome::ok(vec![item(text, record)]))
}

fn variants(v: VariantArg) -> Vec<Variant> {
    match v {
        VariantArg::Dominating => vec![Variant::Dominating],
        VariantArg::Total => vec![Variant::Total],
        VariantArg::Connected => vec![Variant::Connected],
        VariantArg::All => Variant::ALL.to_vec(),
    }
}

fn domination_item(variant: Variant, witness: Option<u64>, names: &dyn Fn(usize) -> String, method: &str) -> Item {
    let members: Vec<String> = witness.map(|d| bits::iter(d).map(names).collect()).unwrap_or_default();
    let text = match witness {
        None => format!("{variant} infeasible"),
        Some(d) if d == 0 => format!("{variant} 0"),
        Some(_) => format!("{variant} {} {}", members.len(), members.join(" ")),
    };
    let record = json!({
        "type": "domination",
        "variant": variant.name(),
        "feasible": witness.is_some(),
        "size": witness.map(bits::len),
        "witness": members,
        "method": method,
    });
    item(text, record)
}

pub fn dominate(path: &Path, variant: VariantArg, method: Method, expression: bool) -> Result<Outcome, CliError> {
    let mut items = Vec::new();
    if expression {
        let e = load_expression(path, None)?;
        let lg = e.eval();
        let names = |v: usize| lg.names[v].clone();
        for v in variants(variant) {
            let (r, used) = match (method, v) {
                (Method::Brute, _) => (brute_force(&lg.graph, v)?, "brute"),
                (_, Variant::Dominating) => (dp_dominating_set(&e)?, "dp"),
                (Method::Auto, _) => (brute_force(&lg.graph, v)?, "brute"),
                (Method::Dp, _) => {
                    return Err(CliError(format!("the expression dynamic program computes dominating sets only, not {v}")))
                }
            };
            items.push(domination_item(v, r.witness, &names, used));
        }
        return Ok(Outcome::ok(items));
    }
    let g = load_graph(path)?;
    let in_class = || g.is_split() && find_induced(&g, &Pattern::H.graph()).ok().flatten().is_none();
    let use_dp = match method {
        Method::Brute => false,
        Method::Dp => true,
        Method::Auto => in_class(),
    };
    for v in variants(variant) {
        let r = if use_dp {
            match solve_h_free_split(&g, v) {
                Ok(r) => r,
                Err(e @ (DominationError::NotSplit | DominationError::ContainsH(_))) => return Ok(Outcome::negative(e)),
                Err(e) => return Err(e.into()),
            }
        } else {
            brute_force(&g, v)?
        };
        items.push(domination_item(v, r.witness, &|u| u.to_string(), if use_dp { "dp" } else { "brute" }));
    }
    Ok(Outcome::ok(items))
}

fn side_comment(name: &str, mask: u64) -> String {
    bits::iter(mask).fold(format!("# {name}"), |acc, v| format!("{acc} {v}")) + "\n"
}

pub fn generate(kind: GenerateKind, size: usize, seed: u64) -> Result<Outcome, CliError> {
    if size > sperner::MAX_VERTICES {
        return Err(CliError(format!("size {size} exceeds {}", sperner::MAX_VERTICES)));
    }
    let mut r = rng(seed);
    let hypergraph_out = |h: &Hypergraph| {
        let text = write_hypergraph(h);
        item(text.clone(), json!({ "type": "hypergraph", "n": h.n(), "edges": h.edges(), "text": text }))
    };
    let graph_out = |g: &Graph, sides: &[(&str, u64)]| {
        let mut text: String = sides.iter().map(|(n, m)| side_comment(n, *m)).collect();
        text += &write_graph(g);
        let mut record = graph_record(g);
        for (n, m) in sides {
            record[*n] = json!(bits::to_vec(*m));
        }
        item(text, record)
    };
    let it = match kind {
        GenerateKind::GlueTree => hypergraph_out(&generate::one_sperner_hypergraph(&mut r, size)),
        _ if size == 0 => graph_out(&Graph::new(0), &[]),
        GenerateKind::InClassSplit => {
            let ls = generate::split_h_free(&mut r, size);
            graph_out(ls.graph(), &[("clique", ls.clique()), ("independent", ls.independent())])
        }
        GenerateKind::InClassSplitBar => {
            let ls = generate::split_h_bar_free(&mut r, size);
            graph_out(ls.graph(), &[("clique", ls.clique()), ("independent", ls.independent())])
        }
        GenerateKind::InClassBigraph => {
            let lb = generate::bigraph_2p3_free(&mut r, size);
            graph_out(lb.graph(), &[("left", lb.left()), ("right", lb.right())])
        }
        GenerateKind::InClassCobigraph => graph_out(&generate::cobigraph(&mut r, size), &[]),
    };
    Ok(Outcome::ok(vec![it]))
}

pub fn describe(g: &Graph) -> String {
    let edges: Vec<String> = g.edges().iter().map(|(u, v)| format!("{u}-{v}")).collect();
    format!("n={} edges=[{}]", g.n(), edges.join(","))
}

pub fn describe_hypergraph(h: &Hypergraph) -> String {
    let edges: Vec<String> = h.edges().iter().map(|e| id_set(e)).collect();
    format!("n={} edges=[{}]", h.n(), edges.join(","))
}
