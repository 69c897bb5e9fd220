//! Minimum spanning forests under random edge weights.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::link_cut::LinkCutForest;
use crate::graph::{Edge, EdgeId, VertexId};
use crate::union_find::UnionFind;

/// Number of random bits in a weight.
pub const WEIGHT_BITS: u32 = 53;

/// A weight in `[0, 1]` with an insertion-order tie-break.
///
/// `bits / 2^53` is the real value. Two weights never compare equal unless
/// they share a sequence number.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeWeight {
    pub bits: u64,
    pub seq: u64,
}

impl EdgeWeight {
    pub const ONE: u64 = 1 << WEIGHT_BITS;

    pub fn new(bits: u64, seq: u64) -> Self {
        EdgeWeight { bits: bits.min(Self::ONE), seq }
    }

    /// Rounds `w` (clamped to `[0, 1]`) to the nearest representable weight.
    pub fn from_f64(w: f64, seq: u64) -> Self {
        let w = w.clamp(0.0, 1.0);
        EdgeWeight::new(libm::round(w * Self::ONE as f64) as u64, seq)
    }

    pub fn value(self) -> f64 {
        self.bits as f64 / Self::ONE as f64
    }

    /// Whether the weight is at most the real threshold `p`.
    pub fn at_most(self, p: f64) -> bool {
        self.value() <= p
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WeightedEdge {
    pub edge: Edge,
    pub weight: EdgeWeight,
}

/// Result of offering an edge to a forest or to the whole set.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MsfEvent {
    /// The offered edge is now stored.
    pub taken: bool,
    /// An edge that is not, or no longer, stored.
    pub evicted: Option<WeightedEdge>,
}

/// One minimum spanning forest over a fixed vertex set.
#[derive(Clone, Debug)]
pub struct WeightedForest {
    n: usize,
    lct: LinkCutForest<EdgeWeight>,
    // link-cut node of each stored edge, and the edge behind each node
    node_of: BTreeMap<EdgeId, usize>,
    edge_at: BTreeMap<usize, WeightedEdge>,
    free: Vec<usize>,
}

impl WeightedForest {
    pub fn new(n: usize) -> Self {
        WeightedForest {
            n,
            lct: LinkCutForest::new(n),
            node_of: BTreeMap::new(),
            edge_at: BTreeMap::new(),
            free: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.node_of.len()
    }

    pub fn is_empty(&self) -> bool {
        self.node_of.is_empty()
    }

    pub fn contains(&self, id: EdgeId) -> bool {
        self.node_of.contains_key(&id)
    }

    pub fn edges(&self) -> impl Iterator<Item = &WeightedEdge> {
        self.edge_at.values()
    }

    pub fn connected(&mut self, u: VertexId, v: VertexId) -> bool {
        self.lct.connected(u, v)
    }

    fn attach(&mut self, e: WeightedEdge) {
        let x = match self.free.pop() {
            Some(x) => {
                self.lct.reset_node(x, Some(e.weight));
                x
            }
            None => self.lct.push_node(Some(e.weight)),
        };
        self.lct.link(e.edge.u, x);
        self.lct.link(x, e.edge.v);
        self.node_of.insert(e.edge.id, x);
        self.edge_at.insert(x, e);
    }

    fn detach(&mut self, x: usize) -> WeightedEdge {
        let e = self.edge_at.remove(&x).expect("node holds an edge");
        self.node_of.remove(&e.edge.id);
        self.lct.cut(e.edge.u, x);
        self.lct.cut(x, e.edge.v);
        self.free.push(x);
        e
    }

    /// Offers `e`. Links it if its endpoints are in different trees; rejects
    /// it if it is heavier than every edge on the tree path; otherwise swaps
    /// it for the heaviest edge on that path.
    pub fn insert_msf(&mut self, e: WeightedEdge) -> MsfEvent {
        let (u, v) = (e.edge.u, e.edge.v);
        debug_assert!(u < self.n && v < self.n && u != v);
        match self.lct.path_max(u, v) {
            None => {
                self.attach(e);
                MsfEvent { taken: true, evicted: None }
            }
            Some(x) => {
                let heaviest = self.lct.key(x).expect("edge nodes carry weights");
                if e.weight > heaviest {
                    MsfEvent { taken: false, evicted: Some(e) }
                } else {
                    let out = self.detach(x);
                    self.attach(e);
                    MsfEvent { taken: true, evicted: Some(out) }
                }
            }
        }
    }
}

/// `k + 1` edge-disjoint minimum spanning forests with an eviction cascade.
#[derive(Clone, Debug)]
pub struct WeightedForestSet {
    n: usize,
    k: usize,
    forests: Vec<WeightedForest>,
    last_msf_calls: usize,
}

impl WeightedForestSet {
    pub fn new(n: usize, k: usize) -> Self {
        WeightedForestSet {
            n,
            k,
            forests: (0..=k).map(|_| WeightedForest::new(n)).collect(),
            last_msf_calls: 0,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn forests(&self) -> &[WeightedForest] {
        &self.forests
    }

    /// Edges stored across all forests.
    pub fn len(&self) -> usize {
        self.forests.iter().map(WeightedForest::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Forest calls made by the most recent [`insert_ni`](Self::insert_ni).
    pub fn last_msf_calls(&self) -> usize {
        self.last_msf_calls
    }

    /// Offers `e` to `F_1`, then pushes whatever falls out into `F_2`, and so
    /// on up to `F_{k+1}`.
    ///
    /// `taken` tells whether `e` ended up in some forest. `evicted` is an edge
    /// that dropped out of the last forest, if the cascade ran off the end
    /// with an edge other than `e`. An edge rejected by every forest yields
    /// `(false, None)` and is never stored.
    pub fn insert_ni(&mut self, e: WeightedEdge) -> MsfEvent {
        let mut taken = false;
        let mut carry = Some(e);
        let mut calls = 0;
        for forest in &mut self.forests {
            let Some(current) = carry else { break };
            let event = forest.insert_msf(current);
            calls += 1;
            if current.edge.id == e.edge.id {
                taken = event.taken;
            }
            carry = event.evicted;
        }
        self.last_msf_calls = calls;
        debug_assert!(calls <= self.k + 1);
        let evicted = carry.filter(|c| c.edge.id != e.edge.id);
        MsfEvent { taken, evicted }
    }
}

/// Offline reference: repeatedly peel a minimum spanning forest (Kruskal)
/// off the surviving edges, `levels` times. Each forest is sorted by edge id.
pub fn greedy_decomposition(n: usize, edges: &[WeightedEdge], levels: usize) -> Vec<Vec<WeightedEdge>> {
    let mut rest: Vec<WeightedEdge> = edges.to_vec();
    rest.sort_by_key(|e| e.weight);
    let mut out = Vec::with_capacity(levels);
    for _ in 0..levels {
        let mut uf = UnionFind::new(n);
        let mut forest = Vec::new();
        rest.retain(|e| {
            if uf.union(e.edge.u, e.edge.v) {
                forest.push(*e);
                false
            } else {
                true
            }
        });
        forest.sort_by_key(|e| e.edge.id);
        out.push(forest);
    }
    out
}
