//! Incremental forest hierarchies.
//!
//! [`KConnectivityForests`] routes each edge to the first of `k + 1`
//! union-find levels where it joins two trees. [`WeightedForestSet`] keeps
//! `k + 1` edge-disjoint minimum spanning forests under random edge weights.

mod link_cut;
mod weighted;

pub use link_cut::LinkCutForest;
pub use weighted::{greedy_decomposition, WEIGHT_BITS, EdgeWeight, MsfEvent, WeightedEdge, WeightedForest, WeightedForestSet};

use alloc::vec::Vec;

use crate::graph::{Edge, Multigraph, VertexId};
use crate::union_find::UnionFind;
use crate::{Error, Result};

/// `k + 1` edge-disjoint forests grown first-fit.
#[derive(Clone, Debug)]
pub struct KConnectivityForests {
    n: usize,
    k: usize,
    finds: Vec<UnionFind>,
    forests: Vec<Vec<Edge>>,
}

impl KConnectivityForests {
    pub fn new(n: usize, k: usize) -> Self {
        KConnectivityForests {
            n,
            k,
            finds: (0..=k).map(|_| UnionFind::new(n)).collect(),
            forests: (0..=k).map(|_| Vec::new()).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Inserts `e` into the first level whose forest does not yet connect its
    /// endpoints. Returns the 0-based level, or `None` when every level
    /// already connects them and the edge is discarded.
    pub fn insert(&mut self, e: Edge) -> Result<Option<usize>> {
        for v in [e.u, e.v] {
            if v >= self.n {
                return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
            }
        }
        if e.u == e.v {
            return Err(Error::SelfLoop(e.u));
        }
        for (level, uf) in self.finds.iter_mut().enumerate() {
            if uf.union(e.u, e.v) {
                self.forests[level].push(e);
                return Ok(Some(level));
            }
        }
        Ok(None)
    }

    pub fn forests(&self) -> &[Vec<Edge>] {
        &self.forests
    }

    pub fn connected_at(&mut self, level: usize, u: VertexId, v: VertexId) -> bool {
        self.finds[level].same(u, v)
    }

    /// Edges held across all levels.
    pub fn retained(&self) -> usize {
        self.forests.iter().map(Vec::len).sum()
    }

    /// The graph `F_1 ∪ ... ∪ F_j` (`j` clamped to `k + 1`).
    pub fn prefix_graph(&self, j: usize) -> Multigraph {
        let edges = self.forests.iter().take(j).flatten().copied();
        Multigraph::from_edges(self.n, edges).expect("forest edges are valid")
    }
}
