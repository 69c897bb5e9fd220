//! Detects the insertion that raises the minimum cut value.

use alloc::vec::Vec;

use fixedbitset::FixedBitSet;

use super::family::min_cut_family;
use crate::graph::{CutSpec, Multigraph, VertexId};
use crate::union_find::UnionFind;
use crate::{Error, Result};

#[derive(Clone, Debug)]
enum Live {
    /// Minimum cuts of a connected graph not yet crossed by an insertion.
    Cuts(Vec<FixedBitSet>),
    /// Disconnected graph: value 0 until the components merge into one.
    Components { uf: UnionFind, count: usize },
}

/// Keeps the minimum cuts of a graph and drops each one as soon as an
/// inserted edge crosses it.
#[derive(Clone, Debug)]
pub struct MinCutTracker {
    n: usize,
    lambda: usize,
    live: Live,
    stale: bool,
}

impl MinCutTracker {
    pub fn new(g: &Multigraph) -> Result<Self> {
        let n = g.n();
        let (lambda, live) = match min_cut_family(g) {
            Ok(family) => (family.lambda(), Live::Cuts(family.into_sides())),
            Err(Error::Disconnected) => {
                let mut uf = UnionFind::new(n);
                for e in g.edges() {
                    uf.union(e.u, e.v);
                }
                let count = uf.labels().1;
                (0, Live::Components { uf, count })
            }
            Err(e) => return Err(e),
        };
        Ok(MinCutTracker {
            n,
            lambda,
            live,
            stale: false,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Minimum cut value of the graph the tracker was built on.
    pub fn lambda(&self) -> usize {
        self.lambda
    }

    pub fn is_stale(&self) -> bool {
        self.stale
    }

    /// Whether the tracked graph was disconnected when built.
    pub fn is_degenerate(&self) -> bool {
        matches!(self.live, Live::Components { .. })
    }

    /// Minimum cuts still of value `λ`; `None` in the disconnected case.
    pub fn live_cuts(&self) -> Option<impl Iterator<Item = CutSpec> + '_> {
        match &self.live {
            Live::Cuts(cuts) => Some(cuts.iter().cloned().map(CutSpec::from_bits)),
            Live::Components { .. } => None,
        }
    }

    /// Number of surviving minimum cuts, or of components when disconnected.
    pub fn live_len(&self) -> usize {
        match &self.live {
            Live::Cuts(cuts) => cuts.len(),
            Live::Components { count, .. } => *count,
        }
    }

    /// Records the edge `u - v`. Returns true when no minimum cut survives,
    /// i.e. the value is now `λ + 1`; the tracker must then be rebuilt.
    pub fn insert(&mut self, u: VertexId, v: VertexId) -> Result<bool> {
        if self.stale {
            return Err(Error::StaleTracker);
        }
        for x in [u, v] {
            if x >= self.n {
                return Err(Error::VertexOutOfRange { vertex: x, n: self.n });
            }
        }
        let exhausted = match &mut self.live {
            Live::Cuts(cuts) => {
                cuts.retain(|s| s.contains(u) == s.contains(v));
                cuts.is_empty()
            }
            Live::Components { uf, count } => {
                if uf.union(u, v) {
                    *count -= 1;
                }
                *count == 1
            }
        };
        self.stale = exhausted;
        Ok(exhausted)
    }
}
