//! Incremental minimum cut maintenance for unweighted multigraphs.
//!
//! Four maintenance modes share the same building blocks:
//!
//! * [`exact::ExactMinCut`] keeps `λ(G)` exactly, combining a contraction
//!   sparsifier, maximal spanning forest certificates, a minimum cut tracker and
//!   a degree heap for trivial cuts.
//! * [`limited::LimitedMinCut`] keeps `min(λ(G), k)` in `O(kn)` retained edges.
//! * [`approx::MultiSample`] and [`approx::SingleSample`] keep a `(1+ε)`
//!   estimate via edge sampling.
//!
//! The [`oracle`] module holds brute-force reference algorithms used by the
//! test suites. The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod approx;
pub mod cactus;
pub mod certificate;
mod error;
pub mod exact;
mod flow;
pub mod forests;
pub mod graph;
pub mod heap;
pub mod limited;
pub mod oracle;
pub mod sparsifier;
pub mod stats;
pub mod union_find;

pub use error::{Error, Result};
pub use graph::{ContractionMap, CutSpec, Edge, EdgeId, Multigraph, VertexId};
pub use stats::RunStats;
