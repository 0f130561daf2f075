mod args;
mod commands;
mod output;
mod sweep;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};
use output::{CliError, Outcome, RunConfig};

fn run(cmd: &Command, cfg: &RunConfig) -> Result<Outcome, CliError> {
    match cmd {
        Command::HypCheck { path } => Ok(commands::hyp_check(&commands::load_hypergraph(path)?)),
        Command::Decompose { path, kind } => commands::decompose(path, *kind),
        Command::Cwd { path, class } => commands::cwd(path, *class),
        Command::Eval { path, k } => commands::eval(path, *k),
        Command::Dominate { path, variant, method, expression } => commands::dominate(path, *variant, *method, *expression),
        Command::Generate { kind, size } => commands::generate(*kind, *size, cfg.seed),
        Command::Sweep { suite, samples } => sweep::sweep(*suite, cfg.max_n, *samples, cfg.seed),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cfg = RunConfig {
        command: cli.command.name(),
        inputs: cli.command.inputs(),
        seed: cli.global.seed,
        max_n: cli.global.max_n.map(|n| n as usize),
        format: cli.global.format,
    };
    match run(&cli.command, &cfg) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(out.render(&cfg).as_bytes());
            ExitCode::from(out.status as u8)
        }
        Err(e) => {
            eprintln!("sperner: {e}");
            ExitCode::from(2)
        }
    }
}
