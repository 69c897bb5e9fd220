//! Exact incremental minimum cut.
//!
//! `λ(G)` is the smaller of the minimum degree and the minimum cut of a
//! contracted graph `H` that keeps every non-trivial cut up to `(3/2)λ*`,
//! where `λ*` is the value at the last full rebuild. `H` is tracked through a
//! sparse certificate and a [`MinCutTracker`]; each time the tracker reports
//! that every minimum cut of `H` was crossed, `λ_H` goes up by one and the
//! structure is rebuilt in one of three ways.

use alloc::vec::Vec;

use crate::cactus::MinCutTracker;
use crate::certificate::{build_damsfd, certificate, Msfd};
use crate::graph::{ContractionMap, Edge, EdgeId, Multigraph, VertexId};
use crate::heap::DegreeHeap;
use crate::oracle::static_min_cut;
use crate::sparsifier::{sparsify, Sparsifier};
use crate::stats::RunStats;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    /// `H`, its certificate and the tracker are maintained.
    Normal,
    /// `λ_H > (3/2)λ*` while some degree is still at most `(3/2)λ*`: only the
    /// degree heap is maintained.
    Special,
}

/// An insertion recorded in `N_h`, in `H`'s vertex names.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ImageEdge {
    pub edge: Edge,
    /// Both endpoints fell in the same part; the edge crosses no cut of `H`.
    pub is_loop: bool,
}

#[derive(Clone, Debug)]
pub struct ExactMinCut {
    strategy: Sparsifier,
    g: Multigraph,
    heap: DegreeHeap,
    map: ContractionMap,
    lambda_star: usize,
    // None while H has a single vertex and so no cut
    lambda_h: Option<usize>,
    msfd: Msfd,
    // msfd order for the superphase; every cut below it is kept exactly
    order: usize,
    tracker: Option<MinCutTracker>,
    nh: Vec<ImageEdge>,
    mode: Mode,
    superphase: usize,
    phase_len: usize,
    stats: RunStats,
}

fn exceeds_three_halves(x: usize, lambda_star: usize) -> bool {
    2 * x > 3 * lambda_star
}

impl ExactMinCut {
    /// Empty graph on `n >= 2` vertices.
    pub fn new(n: usize, strategy: Sparsifier) -> Result<Self> {
        Self::from_graph(Multigraph::new(n), strategy)
    }

    /// Starts from an existing graph, running the initial build on it.
    pub fn from_graph(g: Multigraph, strategy: Sparsifier) -> Result<Self> {
        let n = g.n();
        if n < 2 {
            return Err(Error::TooFewVertices { n, min: 2 });
        }
        let heap = DegreeHeap::from_degrees(g.degrees());
        let mut s = ExactMinCut {
            strategy,
            heap,
            map: ContractionMap::identity(n),
            lambda_star: 0,
            lambda_h: None,
            msfd: build_damsfd(&Multigraph::new(n), 0),
            order: 0,
            tracker: None,
            nh: Vec::new(),
            mode: Mode::Normal,
            superphase: 0,
            phase_len: 0,
            stats: RunStats::default(),
            g,
        };
        s.full_build()?;
        Ok(s)
    }

    pub fn n(&self) -> usize {
        self.g.n()
    }

    pub fn graph(&self) -> &Multigraph {
        &self.g
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn lambda_star(&self) -> usize {
        self.lambda_star
    }

    /// `λ_H`, or `None` when `H` is a single vertex.
    pub fn lambda_h(&self) -> Option<usize> {
        self.lambda_h
    }

    pub fn contraction(&self) -> &ContractionMap {
        &self.map
    }

    pub fn msfd(&self) -> &Msfd {
        &self.msfd
    }

    pub fn pending(&self) -> &[ImageEdge] {
        &self.nh
    }

    /// Counters so far; the running phase is reported as the last entry of
    /// `phase_insertions`.
    pub fn stats(&self) -> RunStats {
        let mut s = self.stats.clone();
        s.phase_insertions.push(self.phase_len);
        s
    }

    /// `λ(G)`.
    pub fn query(&self) -> usize {
        let degree = self.heap.min_degree();
        match (self.mode, self.lambda_h) {
            (Mode::Normal, Some(lh)) => lh.min(degree),
            _ => degree,
        }
    }

    pub fn insert(&mut self, u: VertexId, v: VertexId) -> Result<()> {
        let id = self.g.add_edge(u, v)?;
        self.heap.update_endpoints(u, v)?;
        self.phase_len += 1;
        match (self.mode, self.lambda_h) {
            (Mode::Special, _) | (_, None) => {
                if exceeds_three_halves(self.heap.min_degree(), self.lambda_star) {
                    self.full_rebuild()?;
                }
            }
            (Mode::Normal, Some(_)) => self.record(id, u, v)?,
        }
        self.note_stored();
        Ok(())
    }

    fn record(&mut self, id: EdgeId, u: VertexId, v: VertexId) -> Result<()> {
        let (a, b) = (self.map.apply(u), self.map.apply(v));
        self.nh.push(ImageEdge {
            edge: Edge { id, u: a, v: b },
            is_loop: a == b,
        });
        if a == b {
            return Ok(());
        }
        let tracker = self.tracker.as_mut().expect("normal mode keeps a tracker");
        if !tracker.insert(a, b)? {
            return Ok(());
        }
        let lh = self.lambda_h.expect("normal mode with a cut in H") + 1;
        self.lambda_h = Some(lh);
        if exceeds_three_halves(lh.min(self.heap.min_degree()), self.lambda_star) {
            self.full_rebuild()
        } else if !exceeds_three_halves(lh, self.lambda_star) {
            self.partial_rebuild(lh)
        } else {
            self.mode = Mode::Special;
            self.tracker = None;
            self.stats.special_steps += 1;
            Ok(())
        }
    }

    fn close_phase(&mut self) {
        self.stats.close_phase(self.phase_len);
        self.phase_len = 0;
    }

    fn full_rebuild(&mut self) -> Result<()> {
        self.close_phase();
        self.stats.full_rebuilds += 1;
        self.superphase += 1;
        self.full_build()
    }

    fn full_build(&mut self) -> Result<()> {
        self.lambda_star = static_min_cut(&self.g)?.0;
        let spars = sparsify(&self.g, self.lambda_star, self.strategy)?;
        let h = spars.graph;
        self.map = spars.map;
        self.stats.lambda_star_history.push(self.lambda_star);
        self.stats.sparsifier_sizes.push((h.n(), h.m()));
        self.nh.clear();
        self.mode = Mode::Normal;
        if h.n() < 2 {
            self.lambda_h = None;
            self.tracker = None;
            self.msfd = build_damsfd(&h, 0);
            return Ok(());
        }
        let lh = static_min_cut(&h)?.0;
        self.lambda_h = Some(lh);
        // λ_H only reaches 3λ*/2 + 1 before the superphase ends
        self.order = lh.max(3 * self.lambda_star / 2) + 2;
        self.msfd = build_damsfd(&h, self.order);
        self.rebuild_tracker(lh)
    }

    fn partial_rebuild(&mut self, lh: usize) -> Result<()> {
        self.close_phase();
        self.stats.partial_rebuilds += 1;
        debug_assert!(lh + 2 <= self.order);
        let nh_edges = self.nh.iter().filter(|e| !e.is_loop).map(|e| e.edge);
        let kept = self.msfd.prefix_edges(self.order);
        let base = Multigraph::from_edges(self.map.image_len(), kept.chain(nh_edges))?;
        self.msfd = build_damsfd(&base, self.order);
        self.nh.clear();
        self.rebuild_tracker(lh)
    }

    fn rebuild_tracker(&mut self, lh: usize) -> Result<()> {
        let cert = certificate(&self.msfd, lh + 1)?;
        let tracker = MinCutTracker::new(&cert)?;
        debug_assert_eq!(tracker.lambda(), lh);
        self.tracker = Some(tracker);
        self.stats.tracker_builds += 1;
        self.stats.lambda_h_history.push((self.superphase, lh));
        self.note_stored();
        Ok(())
    }

    fn note_stored(&mut self) {
        let held = self.msfd.prefix_edges(self.msfd.order()).count() + self.nh.len();
        self.stats.note_stored(held);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use proptest::prelude::*;

    fn replay(n: usize, pairs: &[(usize, usize)], strategy: Sparsifier) -> Vec<usize> {
        let mut s = ExactMinCut::new(n, strategy).unwrap();
        pairs
            .iter()
            .map(|&(u, v)| {
                s.insert(u, v).unwrap();
                s.query()
            })
            .collect()
    }

    #[test]
    fn fresh_state_answers_zero() {
        assert_eq!(ExactMinCut::new(4, Sparsifier::Contract).unwrap().query(), 0);
        assert_eq!(ExactMinCut::new(2, Sparsifier::Contract).unwrap().query(), 0);
        assert!(ExactMinCut::new(1, Sparsifier::Contract).is_err());
    }

    #[test]
    fn star_then_clique() {
        for strategy in [Sparsifier::Identity, Sparsifier::Contract] {
            let k4 = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
            assert_eq!(replay(4, &k4, strategy), vec![0, 0, 1, 1, 2, 3]);
        }
    }

    #[test]
    fn parallel_edges_count() {
        assert_eq!(replay(2, &[(0, 1); 4], Sparsifier::Contract), vec![1, 2, 3, 4]);
    }

    #[test]
    fn rejects_self_loops() {
        let mut s = ExactMinCut::new(3, Sparsifier::Contract).unwrap();
        assert_eq!(s.insert(1, 1), Err(Error::SelfLoop(1)));
        assert_eq!(s.query(), 0);
    }

    #[test]
    fn two_cliques_with_growing_bridge() {
        let mut pairs = Vec::new();
        for base in [0, 5] {
            for u in 0..5 {
                for v in u + 1..5 {
                    pairs.push((base + u, base + v));
                }
            }
        }
        pairs.extend([(4, 5); 6]);
        let mut s = ExactMinCut::new(10, Sparsifier::Contract).unwrap();
        let mut g = Multigraph::new(10);
        for (u, v) in pairs {
            s.insert(u, v).unwrap();
            g.add_edge(u, v).unwrap();
            assert_eq!(s.query(), static_min_cut(&g).unwrap().0);
        }
        assert_eq!(s.query(), 4);
    }

    proptest! {
        #[test]
        fn matches_oracle_on_every_prefix(
            n in 2usize..=12,
            identity in any::<bool>(),
            pairs in prop::collection::vec((0usize..12, 0usize..12), 0..60),
        ) {
            let strategy = if identity { Sparsifier::Identity } else { Sparsifier::Contract };
            let mut s = ExactMinCut::new(n, strategy).unwrap();
            let mut g = Multigraph::new(n);
            for (u, v) in pairs {
                if u >= n || v >= n || u == v { continue; }
                s.insert(u, v).unwrap();
                g.add_edge(u, v).unwrap();
                prop_assert_eq!(s.query(), static_min_cut(&g).unwrap().0);
            }
            let stats = s.stats();
            let superphases = stats.lambda_star_history.len();
            prop_assert_eq!(superphases, stats.full_rebuilds + 1);
            for &(j, lh) in &stats.lambda_h_history {
                prop_assert!(stats.lambda_star_history[j] <= lh);
            }
            prop_assert_eq!(
                stats.phase_insertions.iter().sum::<usize>(),
                s.graph().m()
            );
        }

        // long superphases with many partial rebuilds
        #[test]
        fn dense_streams_match_oracle(
            n in 10usize..=16,
            pairs in prop::collection::vec((0usize..16, 0usize..16), 100..220),
        ) {
            let mut s = ExactMinCut::new(n, Sparsifier::Contract).unwrap();
            let mut g = Multigraph::new(n);
            for (u, v) in pairs {
                let (u, v) = (u % n, v % n);
                if u == v { continue; }
                s.insert(u, v).unwrap();
                g.add_edge(u, v).unwrap();
                prop_assert_eq!(s.query(), static_min_cut(&g).unwrap().0);
            }
        }
    }

    #[test]
    fn clique_in_scrambled_order() {
        // pairs of K16 in a fixed pseudo-random order
        let mut pairs: Vec<(usize, usize)> = (0..16).flat_map(|u| (u + 1..16).map(move |v| (u, v))).collect();
        let mut x: u64 = 16;
        for i in (1..pairs.len()).rev() {
            x = x.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            pairs.swap(i, (x >> 33) as usize % (i + 1));
        }
        let mut s = ExactMinCut::new(16, Sparsifier::Contract).unwrap();
        let mut g = Multigraph::new(16);
        for (u, v) in pairs {
            s.insert(u, v).unwrap();
            g.add_edge(u, v).unwrap();
            assert_eq!(s.query(), static_min_cut(&g).unwrap().0);
        }
        assert_eq!(s.query(), 15);
    }
}
