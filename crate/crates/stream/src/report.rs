//! Answer formatting and the JSON statistics document.

use mincut_core::RunStats;
use serde::{Deserialize, Serialize};

/// Formats `x` with six significant digits, like C's `%g`.
pub fn format_approx(x: f64) -> String {
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if x == 0.0 {
        return "0".into();
    }
    let sci = format!("{x:.5e}");
    let (mantissa, exp) = sci.split_once('e').expect("exponent in {:e} output");
    let exp: i32 = exp.parse().expect("integer exponent");
    if (-4..6).contains(&exp) {
        let fixed = format!("{:.*}", (5 - exp) as usize, x);
        trim_fraction(&fixed).to_string()
    } else {
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{}e{}{:02}", trim_fraction(mantissa), sign, exp.abs())
    }
}

fn trim_fraction(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

/// Serialized form of [`RunStats`]; field order is the document order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StatsReport {
    pub mode: String,
    pub full_rebuilds: usize,
    pub partial_rebuilds: usize,
    pub special_steps: usize,
    pub rebuild_steps: usize,
    pub max_stored_edges: usize,
    pub phase_insertions: Vec<usize>,
    pub sparsifier_sizes: Vec<(usize, usize)>,
    pub lambda_h_history: Vec<(usize, usize)>,
    pub lambda_star_history: Vec<usize>,
    pub tracker_builds: usize,
    pub top_level_fallbacks: usize,
}

impl StatsReport {
    pub fn new(mode: &str, s: RunStats) -> Self {
        StatsReport {
            mode: mode.to_string(),
            full_rebuilds: s.full_rebuilds,
            partial_rebuilds: s.partial_rebuilds,
            special_steps: s.special_steps,
            rebuild_steps: s.rebuild_steps,
            max_stored_edges: s.max_stored_edges,
            phase_insertions: s.phase_insertions,
            sparsifier_sizes: s.sparsifier_sizes,
            lambda_h_history: s.lambda_h_history,
            lambda_star_history: s.lambda_star_history,
            tracker_builds: s.tracker_builds,
            top_level_fallbacks: s.top_level_fallbacks,
        }
    }

    /// Pretty-printed JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("plain data serializes");
        s.push('\n');
        s
    }
}
