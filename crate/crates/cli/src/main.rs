mod args;
mod commands;

use std::io::Write;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::Parser;
use serde_json::json;

use args::{Cli, GuardArgs};
use lpp_cones::Limits;

const EXIT_USAGE: u8 = 1;
const EXIT_MISMATCH: u8 = 2;

fn limits(guards: &GuardArgs) -> Result<Limits> {
    let mut limits = Limits::from_env()?;
    if let Some(v) = guards.max_vertices {
        limits.max_vertices = v;
    }
    if let Some(v) = guards.max_extension_vertices {
        limits.max_extension_vertices = v;
    }
    if let Some(v) = guards.max_ideals {
        limits.max_ideals = v;
    }
    if let Some(v) = guards.max_items {
        limits.max_items = v;
    }
    Ok(limits)
}

fn execute(cli: &Cli) -> Result<bool> {
    let limits = limits(&cli.guards)?;
    let poset_args = cli.command.poset_args();
    let poset = commands::load_poset(&poset_args.poset, &limits)?;

    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(n) = cli.threads {
        pool = pool.num_threads(n.max(1));
    }
    let pool = pool.build().context("starting worker pool")?;
    let outcome = pool.install(|| commands::run(&cli.command, &poset, &limits))?;

    // Thread count is left out so serial and parallel runs produce the
    // same bytes.
    let report = json!({
        "tool": "lpp-cones",
        "version": lpp_cones::VERSION,
        "config": {
            "command": &cli.command,
            "limits": limits,
        },
        "result": outcome.result,
    });
    let text = serde_json::to_string_pretty(&report)? + "\n";
    match &poset_args.out {
        Some(path) => std::fs::write(path, &text).with_context(|| format!("writing {}", path.display()))?,
        None if !cli.table => std::io::stdout().write_all(text.as_bytes())?,
        None => {}
    }
    if cli.table {
        std::io::stdout().write_all(outcome.table.as_bytes())?;
    }
    Ok(!outcome.mismatch)
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_USAGE)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match execute(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(EXIT_MISMATCH),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}
