use std::io::{self, Write};

use mincut_core::approx::{ApproxParams, MultiSample, SingleSample};
use mincut_core::exact::ExactMinCut;
use mincut_core::limited::LimitedMinCut;
use mincut_core::sparsifier::Sparsifier;
use mincut_core::RunStats;
use thiserror::Error;

use crate::report::format_approx;
use crate::trace::{StreamOp, Trace};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Mode {
    Exact,
    Limited,
    ApproxMulti,
    ApproxSingle,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::Exact => "exact",
            Mode::Limited => "limited",
            Mode::ApproxMulti => "approx-multi",
            Mode::ApproxSingle => "approx-single",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Config {
    pub mode: Mode,
    pub k: Option<usize>,
    pub eps: Option<f64>,
    pub seed: Option<u64>,
    pub sparsifier: Sparsifier,
    pub override_k: Option<usize>,
    pub override_p: Option<f64>,
}

impl Config {
    pub fn new(mode: Mode) -> Self {
        Config {
            mode,
            k: None,
            eps: None,
            seed: None,
            sparsifier: Sparsifier::default(),
            override_k: None,
            override_p: None,
        }
    }

    fn approx_params(&self) -> Result<ApproxParams, RunError> {
        let eps = self.eps.ok_or(RunError::Missing("--epsilon"))?;
        let seed = self.seed.ok_or(RunError::Missing("--seed"))?;
        Ok(ApproxParams {
            eps,
            seed,
            override_k: self.override_k,
            override_p: self.override_p,
        })
    }
}

#[derive(Debug, Error)]
pub enum RunError {
    #[error("this mode requires {0}")]
    Missing(&'static str),
    #[error(transparent)]
    Core(#[from] mincut_core::Error),
    #[error(transparent)]
    Io(#[from] io::Error),
}

/// One of the four structures behind a common insert/query surface.
#[derive(Debug)]
pub enum Engine {
    Exact(Box<ExactMinCut>),
    Limited(Box<LimitedMinCut>),
    Multi(Box<MultiSample>),
    Single(Box<SingleSample>),
}

impl Engine {
    pub fn new(config: &Config, n: usize) -> Result<Engine, RunError> {
        Ok(match config.mode {
            Mode::Exact => Engine::Exact(Box::new(ExactMinCut::new(n, config.sparsifier)?)),
            Mode::Limited => {
                let k = config.k.ok_or(RunError::Missing("--k"))?;
                Engine::Limited(Box::new(LimitedMinCut::new(n, k)?))
            }
            Mode::ApproxMulti => Engine::Multi(Box::new(MultiSample::new(n, config.approx_params()?)?)),
            Mode::ApproxSingle => Engine::Single(Box::new(SingleSample::new(n, config.approx_params()?)?)),
        })
    }

    pub fn insert(&mut self, u: usize, v: usize) -> Result<(), RunError> {
        match self {
            Engine::Exact(s) => s.insert(u, v)?,
            Engine::Limited(s) => s.insert(u, v)?,
            Engine::Multi(s) => {
                s.insert(u, v)?;
            }
            Engine::Single(s) => s.insert(u, v)?,
        }
        Ok(())
    }

    /// The answer line for a query, without the newline.
    pub fn answer(&mut self) -> String {
        match self {
            Engine::Exact(s) => s.query().to_string(),
            Engine::Limited(s) => s.query().to_string(),
            Engine::Multi(s) => format_approx(s.query()),
            Engine::Single(s) => format_approx(s.query()),
        }
    }

    pub fn stats(&self) -> RunStats {
        match self {
            Engine::Exact(s) => s.stats(),
            Engine::Limited(s) => s.stats().clone(),
            Engine::Multi(s) => {
                let mut stats = s.stats().clone();
                stats.tracker_builds = s.levels().iter().map(|l| l.stats().tracker_builds).sum();
                stats
            }
            Engine::Single(s) => {
                let mut stats = s.stats().clone();
                stats.tracker_builds = s.limited().stats().tracker_builds;
                stats
            }
        }
    }
}

/// Replays `trace`, writing one line per query to `out` and flushing after
/// each.
pub fn run<W: Write>(config: &Config, trace: &Trace, out: &mut W) -> Result<RunStats, RunError> {
    let mut engine = Engine::new(config, trace.n)?;
    for op in &trace.ops {
        match *op {
            StreamOp::Insert(u, v) => engine.insert(u, v)?,
            StreamOp::Query => {
                writeln!(out, "{}", engine.answer())?;
                out.flush()?;
            }
        }
    }
    Ok(engine.stats())
}
