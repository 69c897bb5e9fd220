#![allow(dead_code)]

use std::fs;
use std::path::{Path, PathBuf};
use std::process::Command;

use mincut_core::oracle::static_min_cut;
use mincut_core::Multigraph;
use mincut_stream::{StreamOp, Trace};
use rand::seq::SliceRandom;
use rand::Rng;

pub fn data_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data")
}

pub fn binary() -> &'static str {
    env!("CARGO_BIN_EXE_mincut-stream")
}

#[derive(Clone, Debug)]
pub struct Case {
    pub name: String,
    pub trace: PathBuf,
    pub args: Vec<String>,
}

impl Case {
    pub fn mode(&self) -> &str {
        let i = self.args.iter().position(|a| a == "--mode").expect("case sets --mode");
        &self.args[i + 1]
    }

    pub fn k(&self) -> Option<usize> {
        let i = self.args.iter().position(|a| a == "--k")?;
        self.args[i + 1].parse().ok()
    }
}

pub fn cases() -> Vec<Case> {
    let dir = data_dir();
    fs::read_to_string(dir.join("cases.txt"))
        .expect("cases.txt")
        .lines()
        .filter(|l| !l.trim().is_empty() && !l.starts_with('#'))
        .map(|l| {
            let mut fields = l.split_whitespace().map(String::from);
            let name = fields.next().unwrap();
            let trace = dir.join(fields.next().expect("trace file"));
            Case {
                name,
                trace,
                args: fields.collect(),
            }
        })
        .collect()
}

/// Stdout and stats file of one binary run.
#[derive(Debug, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: Vec<u8>,
    pub stats: Vec<u8>,
}

pub fn run_case(case: &Case) -> Outcome {
    let dir = tempfile::tempdir().unwrap();
    let stats = dir.path().join("stats.json");
    let out = Command::new(binary())
        .args(&case.args)
        .arg("--stats")
        .arg(&stats)
        .arg(&case.trace)
        .output()
        .unwrap();
    assert!(out.status.success(), "{}: {}", case.name, String::from_utf8_lossy(&out.stderr));
    Outcome {
        stdout: out.stdout,
        stats: fs::read(&stats).unwrap(),
    }
}

fn golden_paths(case: &Case) -> (PathBuf, PathBuf) {
    let dir = data_dir().join("golden");
    (dir.join(format!("{}.out", case.name)), dir.join(format!("{}.json", case.name)))
}

/// Compares a fresh run with the stored golden files. With `MINCUT_BLESS`
/// set, rewrites them instead.
pub fn check_golden(case: &Case) -> Result<(), String> {
    let got = run_case(case);
    let (out_path, stats_path) = golden_paths(case);
    if std::env::var_os("MINCUT_BLESS").is_some() {
        fs::write(&out_path, &got.stdout).unwrap();
        fs::write(&stats_path, &got.stats).unwrap();
        return Ok(());
    }
    let want = Outcome {
        stdout: fs::read(&out_path).map_err(|e| format!("{}: {e}", out_path.display()))?,
        stats: fs::read(&stats_path).map_err(|e| format!("{}: {e}", stats_path.display()))?,
    };
    if got.stdout != want.stdout {
        return Err(format!("{}: answers differ from {}", case.name, out_path.display()));
    }
    if got.stats != want.stats {
        return Err(format!("{}: stats differ from {}", case.name, stats_path.display()));
    }
    Ok(())
}

/// Oracle answer at every query of `trace`.
pub fn oracle_answers(trace: &Trace) -> Vec<usize> {
    let mut g = Multigraph::new(trace.n);
    let mut answers = Vec::new();
    for op in &trace.ops {
        match *op {
            StreamOp::Insert(u, v) => {
                g.add_edge(u, v).unwrap();
            }
            StreamOp::Query => answers.push(static_min_cut(&g).unwrap().0),
        }
    }
    answers
}

/// `len` uniform vertex pairs without self-loops; without repeats when
/// `simple` (capped at the number of pairs).
pub fn random_stream<R: Rng>(rng: &mut R, n: usize, len: usize, simple: bool) -> Vec<(usize, usize)> {
    if simple {
        let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        pairs.shuffle(rng);
        pairs.truncate(len);
        for p in &mut pairs {
            if rng.random::<bool>() {
                *p = (p.1, p.0);
            }
        }
        return pairs;
    }
    let mut out = Vec::with_capacity(len);
    while out.len() < len {
        let (u, v) = (rng.random_range(0..n), rng.random_range(0..n));
        if u != v {
            out.push((u, v));
        }
    }
    out
}

/// All pairs of `K_n` in random order.
pub fn clique_stream<R: Rng>(rng: &mut R, n: usize) -> Vec<(usize, usize)> {
    random_stream(rng, n, n * (n - 1) / 2, true)
}

/// Random multigraph on `n` vertices with `m` edges; with `mult > 1` every
/// edge is repeated that many times.
pub fn random_graph<R: Rng>(rng: &mut R, n: usize, m: usize, mult: usize) -> Multigraph {
    let pairs = random_stream(rng, n, m, false);
    Multigraph::from_pairs(n, pairs.iter().flat_map(|&p| std::iter::repeat_n(p, mult))).unwrap()
}
