use std::fs;
use std::io::{self, Read};
use std::path::PathBuf;

use anyhow::{Context, Result};
use clap::{Parser, ValueEnum};
use mincut_core::sparsifier::Sparsifier;
use mincut_stream::{run, Config, Mode, StatsReport, Trace};

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SparsifierArg {
    Identity,
    Contract,
}

/// Replays an insertion/query trace against an incremental minimum cut structure.
#[derive(Debug, Parser)]
#[command(name = "mincut-stream", version)]
struct Args {
    #[arg(long, value_enum)]
    mode: Mode,
    /// Cap for limited mode.
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    epsilon: Option<f64>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, value_enum, default_value = "contract")]
    sparsifier: SparsifierArg,
    /// Replace the sample-size constant of the approximate modes.
    #[arg(long)]
    override_k: Option<usize>,
    /// Replace the initial sampling threshold of approx-single.
    #[arg(long)]
    override_p: Option<f64>,
    /// Write run statistics here as JSON.
    #[arg(long)]
    stats: Option<PathBuf>,
    /// Trace file; standard input when absent.
    input: Option<PathBuf>,
}

fn main() -> Result<()> {
    let args = Args::parse();
    let text = match &args.input {
        Some(path) => fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?,
        None => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s).context("reading standard input")?;
            s
        }
    };
    let trace = Trace::parse(&text)?;
    let config = Config {
        mode: args.mode,
        k: args.k,
        eps: args.epsilon,
        seed: args.seed,
        sparsifier: match args.sparsifier {
            SparsifierArg::Identity => Sparsifier::Identity,
            SparsifierArg::Contract => Sparsifier::Contract,
        },
        override_k: args.override_k,
        override_p: args.override_p,
    };
    let stats = run(&config, &trace, &mut io::stdout().lock())?;
    if let Some(path) = &args.stats {
        let report = StatsReport::new(args.mode.name(), stats);
        fs::write(path, report.to_json()).with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(())
}
