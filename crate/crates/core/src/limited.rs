//! `min(λ(G), k)` in `O(kn)` space.
//!
//! Edges are routed through `k + 1` first-fit forests and everything past the
//! last forest is dropped. The tracker watches the minimum cuts of
//! `F_1 ∪ ... ∪ F_{λ+1}`, which are exactly the minimum cuts of `G` while
//! `λ < k`.

use crate::cactus::MinCutTracker;
use crate::forests::KConnectivityForests;
use crate::graph::{Edge, EdgeId, Multigraph, VertexId};
use crate::stats::RunStats;
use crate::{Error, Result};

#[derive(Clone, Debug)]
pub struct LimitedMinCut {
    k: usize,
    lambda: usize,
    forests: KConnectivityForests,
    // None once lambda has reached k
    tracker: Option<MinCutTracker>,
    next_id: usize,
    stats: RunStats,
}

impl LimitedMinCut {
    /// Empty graph on `n >= 2` vertices with cap `k >= 1`.
    pub fn new(n: usize, k: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::TooFewVertices { n, min: 2 });
        }
        if k == 0 {
            return Err(Error::InvalidParameter("k must be at least 1"));
        }
        let forests = KConnectivityForests::new(n, k);
        let tracker = Some(MinCutTracker::new(&forests.prefix_graph(1))?);
        Ok(LimitedMinCut {
            k,
            lambda: 0,
            forests,
            tracker,
            next_id: 0,
            stats: RunStats {
                tracker_builds: 1,
                ..RunStats::default()
            },
        })
    }

    /// Inserts the edges of `g` one by one into a fresh structure.
    pub fn from_graph(g: &Multigraph, k: usize) -> Result<Self> {
        let mut s = LimitedMinCut::new(g.n(), k)?;
        for e in g.edges() {
            s.insert(e.u, e.v)?;
        }
        Ok(s)
    }

    pub fn n(&self) -> usize {
        self.forests.n()
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// `min(λ(G), k)`.
    pub fn query(&self) -> usize {
        self.lambda
    }

    pub fn forests(&self) -> &KConnectivityForests {
        &self.forests
    }

    /// Edges held in the forests.
    pub fn retained(&self) -> usize {
        self.forests.retained()
    }

    pub fn stats(&self) -> &RunStats {
        &self.stats
    }

    pub fn insert(&mut self, u: VertexId, v: VertexId) -> Result<()> {
        let e = Edge {
            id: EdgeId(self.next_id),
            u,
            v,
        };
        let level = self.forests.insert(e)?;
        self.next_id += 1;
        self.stats.note_stored(self.forests.retained());
        if level.is_none() {
            return Ok(());
        }
        let Some(tracker) = self.tracker.as_mut() else {
            return Ok(());
        };
        if tracker.insert(u, v)? {
            self.lambda += 1;
            self.tracker = if self.lambda < self.k {
                self.stats.tracker_builds += 1;
                let t = MinCutTracker::new(&self.forests.prefix_graph(self.lambda + 1))?;
                debug_assert_eq!(t.lambda(), self.lambda);
                Some(t)
            } else {
                None
            };
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::static_min_cut;
    use alloc::vec;
    use alloc::vec::Vec;
    use proptest::prelude::*;

    fn complete(n: usize) -> Multigraph {
        let mut g = Multigraph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v).unwrap();
            }
        }
        g
    }

    const K4_ORDER: [(usize, usize); 6] = [(0, 1), (2, 3), (0, 2), (1, 3), (0, 3), (1, 2)];

    fn replay(k: usize) -> Vec<usize> {
        let mut s = LimitedMinCut::new(4, k).unwrap();
        K4_ORDER
            .iter()
            .map(|&(u, v)| {
                s.insert(u, v).unwrap();
                s.query()
            })
            .collect()
    }

    #[test]
    fn initialisation_examples() {
        assert_eq!(LimitedMinCut::from_graph(&Multigraph::new(3), 2).unwrap().query(), 0);
        assert_eq!(LimitedMinCut::from_graph(&complete(4), 2).unwrap().query(), 2);
        assert_eq!(LimitedMinCut::from_graph(&complete(4), 5).unwrap().query(), 3);
        assert!(LimitedMinCut::new(1, 2).is_err());
        assert!(LimitedMinCut::new(3, 0).is_err());
    }

    #[test]
    fn clique_stream() {
        // the third edge already makes a spanning path
        let mut g = Multigraph::new(4);
        let oracle: Vec<usize> = K4_ORDER
            .iter()
            .map(|&(u, v)| {
                g.add_edge(u, v).unwrap();
                static_min_cut(&g).unwrap().0
            })
            .collect();
        assert_eq!(oracle, vec![0, 0, 1, 2, 2, 3]);
        assert_eq!(replay(3), oracle);
        assert_eq!(replay(1), vec![0, 0, 1, 1, 1, 1]);
    }

    #[test]
    fn surplus_parallel_edge_is_dropped() {
        let mut s = LimitedMinCut::new(2, 1).unwrap();
        s.insert(0, 1).unwrap();
        s.insert(0, 1).unwrap();
        let before = s.retained();
        s.insert(0, 1).unwrap();
        assert_eq!((s.retained(), s.query()), (before, 1));
    }

    #[test]
    fn six_cycle_reaches_two() {
        let mut s = LimitedMinCut::new(6, 2).unwrap();
        for i in 0..6 {
            s.insert(i, (i + 1) % 6).unwrap();
        }
        assert_eq!(s.query(), 2);
    }

    proptest! {
        #[test]
        fn equals_capped_oracle(
            n in 2usize..=10,
            k in prop::sample::select(vec![1usize, 2, 3, 5]),
            pairs in prop::collection::vec((0usize..10, 0usize..10), 0..60),
        ) {
            let mut s = LimitedMinCut::new(n, k).unwrap();
            let mut g = Multigraph::new(n);
            for (u, v) in pairs {
                if u >= n || v >= n || u == v { continue; }
                s.insert(u, v).unwrap();
                g.add_edge(u, v).unwrap();
                let lambda = static_min_cut(&g).unwrap().0;
                prop_assert_eq!(s.query(), lambda.min(k));
                prop_assert!(s.retained() <= (k + 1) * (n - 1));
            }
            // the retained edges alone give the same capped answer
            let kept = s.forests().prefix_graph(k + 1);
            prop_assert_eq!(static_min_cut(&kept).unwrap().0.min(k), s.query());
        }
    }
}
