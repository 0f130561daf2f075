use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "sperner", version, about = "1-Sperner hypergraphs, graph decompositions, clique-width and domination")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug)]
pub struct Global {
    /// Seed for every random choice; recorded in the output header.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Size cap; each command documents its default.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..=64))]
    pub max_n: Option<u64>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    /// One JSON object per line.
    Records,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Runs every hypergraph predicate on a hypergraph file.
    HypCheck { path: PathBuf },
    /// Prints the decomposition tree of a hypergraph or graph file.
    Decompose {
        path: PathBuf,
        #[arg(long, value_enum)]
        kind: DecomposeKind,
    },
    /// Builds a 5-expression for a graph of one of the four classes.
    Cwd {
        path: PathBuf,
        #[arg(long, value_enum)]
        class: GraphClass,
    },
    /// Evaluates a k-expression file and prints the resulting graph.
    Eval {
        path: PathBuf,
        /// Label bound; defaults to the largest label used.
        #[arg(long)]
        k: Option<u8>,
    },
    /// Minimum dominating, total dominating or connected dominating sets.
    Dominate {
        path: PathBuf,
        #[arg(long, value_enum, default_value_t = VariantArg::All)]
        variant: VariantArg,
        #[arg(long, value_enum, default_value_t = Method::Auto)]
        method: Method,
        /// The input is a k-expression rather than a graph.
        #[arg(long)]
        expression: bool,
    },
    /// Writes a random instance.
    Generate {
        #[arg(long, value_enum)]
        kind: GenerateKind,
        /// Vertex count for glue-tree; vertex cap for the graph classes.
        #[arg(long)]
        size: usize,
    },
    /// Runs a consistency suite and reports disagreements.
    Sweep {
        #[arg(long, value_enum)]
        suite: Suite,
        /// Random instances per suite (per class for the class suites).
        #[arg(long, default_value_t = 100)]
        samples: usize,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::HypCheck { .. } => "hyp-check",
            Command::Decompose { .. } => "decompose",
            Command::Cwd { .. } => "cwd",
            Command::Eval { .. } => "eval",
            Command::Dominate { .. } => "dominate",
            Command::Generate { .. } => "generate",
            Command::Sweep { .. } => "sweep",
        }
    }

    pub fn inputs(&self) -> Vec<PathBuf> {
        match self {
            Command::HypCheck { path }
            | Command::Decompose { path, .. }
            | Command::Cwd { path, .. }
            | Command::Eval { path, .. }
            | Command::Dominate { path, .. } => vec![path.clone()],
            Command::Generate { .. } | Command::Sweep { .. } => Vec::new(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum DecomposeKind {
    Hypergraph,
    SplitH,
    SplitHbar,
    Bigraph,
    Cobigraph,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GraphClass {
    SplitH,
    SplitHbar,
    Bigraph,
    Cobigraph,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum VariantArg {
    Dominating,
    Total,
    Connected,
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    /// The clique-width pipeline on H-free split graphs, brute force otherwise.
    Auto,
    Brute,
    Dp,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GenerateKind {
    GlueTree,
    InClassSplit,
    InClassSplitBar,
    InClassBigraph,
    InClassCobigraph,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    ThresholdEquiv,
    DomisholdEquiv,
    Decomposition,
    GraphDecomposition,
    CwdRoundtrip,
    Domination,
    All,
}
