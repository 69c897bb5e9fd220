//! `(1+ε)`-approximate minimum cut by edge sampling.
//!
//! [`MultiSample`] keeps nested sampled subgraphs `G_0 ⊇ G_1 ⊇ ...` where
//! `G_i` holds each edge with probability `2^-i`, each behind a
//! [`LimitedMinCut`]. [`SingleSample`] gives every edge a uniform weight,
//! keeps `k + 1` minimum spanning forests of the weighted graph, and feeds the
//! edges of weight at most `p` to a single [`LimitedMinCut`], halving `p`
//! whenever that structure saturates.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::forests::{EdgeWeight, WeightedEdge, WeightedForestSet, WEIGHT_BITS};
use crate::graph::{Edge, EdgeId, VertexId};
use crate::limited::LimitedMinCut;
use crate::stats::RunStats;
use crate::{Error, Result};

/// Seeded source of all random choices.
#[derive(Clone, Debug)]
pub struct SamplerRng {
    seed: u64,
    rng: ChaCha8Rng,
    draws: u64,
}

impl SamplerRng {
    pub fn new(seed: u64) -> Self {
        SamplerRng {
            seed,
            rng: ChaCha8Rng::seed_from_u64(seed),
            draws: 0,
        }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// Number of 64-bit words drawn so far.
    pub fn draws(&self) -> u64 {
        self.draws
    }

    pub fn next_u64(&mut self) -> u64 {
        self.draws += 1;
        self.rng.next_u64()
    }

    /// Uniform integer in `[0, 2^53)`.
    pub fn uniform_bits(&mut self) -> u64 {
        self.next_u64() >> (64 - WEIGHT_BITS)
    }

    /// Level `L` with `P(L >= i) = 2^-i`, capped at `max`.
    pub fn geometric_level(&mut self, max: usize) -> usize {
        (self.next_u64().trailing_zeros() as usize).min(max)
    }
}

/// Sampling parameters. The default constants apply unless overridden.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ApproxParams {
    pub eps: f64,
    pub seed: u64,
    pub override_k: Option<usize>,
    pub override_p: Option<f64>,
}

impl ApproxParams {
    pub fn new(eps: f64, seed: u64) -> Self {
        ApproxParams {
            eps,
            seed,
            override_k: None,
            override_p: None,
        }
    }

    fn check(&self) -> Result<()> {
        if !(self.eps > 0.0 && self.eps <= 1.0) {
            return Err(Error::EpsilonOutOfRange(self.eps));
        }
        if self.override_k == Some(0) {
            return Err(Error::InvalidParameter("k must be at least 1"));
        }
        if let Some(p) = self.override_p {
            if p.is_nan() || p <= 0.0 {
                return Err(Error::InvalidParameter("p must be positive"));
            }
        }
        Ok(())
    }

    /// `⌈48 ln n / ε²⌉`, or the override.
    pub fn k(&self, n: usize) -> usize {
        self.override_k
            .unwrap_or_else(|| libm::ceil(48.0 * libm::log(n as f64) / (self.eps * self.eps)) as usize)
            .max(1)
    }

    /// `12 ln n / ε²`, or the override.
    pub fn p(&self, n: usize) -> f64 {
        self.override_p
            .unwrap_or_else(|| 12.0 * libm::log(n as f64) / (self.eps * self.eps))
    }
}

/// `⌊log₂ n⌋ + 1`.
pub fn level_count(n: usize) -> usize {
    n.max(1).ilog2() as usize + 1
}

fn check_pair(n: usize, u: VertexId, v: VertexId) -> Result<()> {
    for x in [u, v] {
        if x >= n {
            return Err(Error::VertexOutOfRange { vertex: x, n });
        }
    }
    if u == v {
        return Err(Error::SelfLoop(u));
    }
    Ok(())
}

/// Nested sampled levels, each with its own capped exact structure.
#[derive(Clone, Debug)]
pub struct MultiSample {
    n: usize,
    eps: f64,
    k: usize,
    rng: SamplerRng,
    levels: Vec<LimitedMinCut>,
    stats: RunStats,
}

impl MultiSample {
    pub fn new(n: usize, params: ApproxParams) -> Result<Self> {
        params.check()?;
        if n < 2 {
            return Err(Error::TooFewVertices { n, min: 2 });
        }
        let k = params.k(n);
        let levels = (0..level_count(n))
            .map(|_| LimitedMinCut::new(n, k))
            .collect::<Result<Vec<_>>>()?;
        Ok(MultiSample {
            n,
            eps: params.eps,
            k,
            rng: SamplerRng::new(params.seed),
            levels,
            stats: RunStats::default(),
        })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn levels(&self) -> &[LimitedMinCut] {
        &self.levels
    }

    pub fn stats(&self) -> &RunStats {
        &self.stats
    }

    /// Adds `u - v` to levels `0..=L` for a geometric `L`; returns `L`.
    pub fn insert(&mut self, u: VertexId, v: VertexId) -> Result<usize> {
        check_pair(self.n, u, v)?;
        let top = self.rng.geometric_level(self.levels.len() - 1);
        for level in &mut self.levels[..=top] {
            level.insert(u, v)?;
        }
        let held = self.levels.iter().map(LimitedMinCut::retained).sum();
        self.stats.note_stored(held);
        Ok(top)
    }

    /// First level whose capped value is below `k`, with that value.
    pub fn qualifying_level(&self) -> Option<(usize, usize)> {
        self.levels
            .iter()
            .enumerate()
            .map(|(j, l)| (j, l.query()))
            .find(|&(_, q)| q < self.k)
    }

    /// `2^j λ(G_j) / (1 - ε)` for the first qualifying level `j`, falling back
    /// to the top level when none qualifies.
    pub fn query(&mut self) -> f64 {
        let (j, q) = match self.qualifying_level() {
            Some(found) => found,
            None => {
                self.stats.top_level_fallbacks += 1;
                let top = self.levels.len() - 1;
                (top, self.levels[top].query())
            }
        };
        if q == 0 {
            return 0.0;
        }
        libm::ldexp(q as f64, j as i32) / (1.0 - self.eps)
    }
}

/// Record of what the capped structure was fed since its last rebuild.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SparsifierInput {
    /// Forest edges of weight at most `p` taken at the last rebuild.
    pub base: Vec<Edge>,
    /// Later insertions of weight at most `p`.
    pub since: Vec<Edge>,
}

/// Weighted forests plus one capped structure over the light edges.
#[derive(Clone, Debug)]
pub struct SingleSample {
    n: usize,
    k: usize,
    p: f64,
    rng: SamplerRng,
    forests: WeightedForestSet,
    // F^w ordered by weight
    by_weight: BTreeMap<EdgeWeight, Edge>,
    lim: LimitedMinCut,
    next_id: usize,
    input: SparsifierInput,
    last_weight: Option<EdgeWeight>,
    stats: RunStats,
}

impl SingleSample {
    pub fn new(n: usize, params: ApproxParams) -> Result<Self> {
        params.check()?;
        if n < 2 {
            return Err(Error::TooFewVertices { n, min: 2 });
        }
        let k = params.k(n);
        Ok(SingleSample {
            n,
            k,
            p: params.p(n),
            rng: SamplerRng::new(params.seed),
            forests: WeightedForestSet::new(n, k),
            by_weight: BTreeMap::new(),
            lim: LimitedMinCut::new(n, k)?,
            next_id: 0,
            input: SparsifierInput::default(),
            last_weight: None,
            stats: RunStats::default(),
        })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Current sampling threshold.
    pub fn p(&self) -> f64 {
        self.p
    }

    pub fn forests(&self) -> &WeightedForestSet {
        &self.forests
    }

    /// `F^w` in ascending weight order.
    pub fn weighted_edges(&self) -> impl Iterator<Item = WeightedEdge> + '_ {
        self.by_weight.iter().map(|(&weight, &edge)| WeightedEdge { edge, weight })
    }

    pub fn limited(&self) -> &LimitedMinCut {
        &self.lim
    }

    pub fn sparsifier_input(&self) -> &SparsifierInput {
        &self.input
    }

    /// Weight drawn for the most recent insertion.
    pub fn last_weight(&self) -> Option<EdgeWeight> {
        self.last_weight
    }

    pub fn stats(&self) -> &RunStats {
        &self.stats
    }

    pub fn insert(&mut self, u: VertexId, v: VertexId) -> Result<()> {
        check_pair(self.n, u, v)?;
        let edge = Edge {
            id: EdgeId(self.next_id),
            u,
            v,
        };
        let weight = EdgeWeight::new(self.rng.uniform_bits(), self.next_id as u64);
        self.next_id += 1;
        self.last_weight = Some(weight);
        if weight.at_most(self.p) {
            self.lim.insert(u, v)?;
            self.input.since.push(edge);
        }
        let event = self.forests.insert_ni(WeightedEdge { edge, weight });
        if event.taken {
            self.by_weight.insert(weight, edge);
            if let Some(out) = event.evicted {
                self.by_weight.remove(&out.weight);
            }
        }
        debug_assert_eq!(self.by_weight.len(), self.forests.len());
        while self.lim.query() >= self.k {
            self.rebuild()?;
        }
        self.stats
            .note_stored(self.forests.len() + self.lim.retained());
        Ok(())
    }

    fn rebuild(&mut self) -> Result<()> {
        self.p /= 2.0;
        self.stats.rebuild_steps += 1;
        self.input.base = self
            .by_weight
            .iter()
            .take_while(|(w, _)| w.at_most(self.p))
            .map(|(_, &e)| e)
            .collect();
        self.input.since.clear();
        self.lim = LimitedMinCut::new(self.n, self.k)?;
        for e in &self.input.base {
            self.lim.insert(e.u, e.v)?;
        }
        Ok(())
    }

    /// `λ(H) / min(1, p)`.
    pub fn query(&self) -> f64 {
        self.lim.query() as f64 / self.p.min(1.0)
    }
}
