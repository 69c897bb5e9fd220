//! Trace replay for the incremental minimum cut structures in `mincut-core`.

pub mod report;
pub mod run;
pub mod trace;

pub use report::{format_approx, StatsReport};
pub use run::{run, Config, Engine, Mode, RunError};
pub use trace::{ParseError, StreamOp, Trace};
