use std::fmt;
use std::path::PathBuf;

use serde_json::{json, Value};

use crate::args::Format;

/// What a run was asked to do; echoed at the top of every output.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub command: &'static str,
    pub inputs: Vec<PathBuf>,
    pub seed: u64,
    pub max_n: Option<usize>,
    pub format: Format,
}

impl RunConfig {
    fn header(&self) -> String {
        let mut s = format!("# sperner {} seed={}", self.command, self.seed);
        if let Some(n) = self.max_n {
            s += &format!(" max-n={n}");
        }
        for p in &self.inputs {
            s += &format!(" input={}", p.display());
        }
        s
    }

    fn record(&self) -> Value {
        json!({
            "type": "run",
            "command": self.command,
            "seed": self.seed,
            "max_n": self.max_n,
            "inputs": self.inputs.iter().map(|p| p.display().to_string()).collect::<Vec<_>>(),
        })
    }
}

/// Exit status 0: success or agreement; 1: a predicate failed or the input
/// is outside the requested class.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok = 0,
    Negative = 1,
}

/// One output unit, in both renderings.
pub struct Item {
    pub text: String,
    pub record: Value,
}

pub fn item(text: impl Into<String>, record: Value) -> Item {
    Item { text: text.into(), record }
}

pub struct Outcome {
    pub items: Vec<Item>,
    pub status: Status,
}

impl Outcome {
    pub fn ok(items: Vec<Item>) -> Self {
        Outcome { items, status: Status::Ok }
    }

    /// The input is outside the class the command needs.
    pub fn negative(message: impl fmt::Display) -> Self {
        let message = message.to_string();
        Outcome {
            items: vec![item(format!("not in class: {message}"), json!({ "type": "rejected", "reason": message }))],
            status: Status::Negative,
        }
    }

    pub fn render(&self, cfg: &RunConfig) -> String {
        let mut out = String::new();
        match cfg.format {
            Format::Text => {
                out += &cfg.header();
                out.push('\n');
                for it in &self.items {
                    out += &it.text;
                    if !it.text.ends_with('\n') {
                        out.push('\n');
                    }
                }
            }
            Format::Records => {
                out += &cfg.record().to_string();
                out.push('\n');
                for it in &self.items {
                    out += &it.record.to_string();
                    out.push('\n');
                }
            }
        }
        out
    }
}

/// Usage, input or parse problems; exit status 2.
#[derive(Debug)]
pub struct CliError(pub String);

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl<E: std::error::Error> From<E> for CliError {
    fn from(e: E) -> Self {
        CliError(e.to_string())
    }
}
