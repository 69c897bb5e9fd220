//! Static reference algorithms.
//!
//! Everything here recomputes from scratch and is written for clarity rather
//! than speed: Stoer–Wagner over a dense weight matrix, Edmonds–Karp over a
//! dense capacity matrix, and exhaustive enumeration of bipartitions. Test
//! suites compare the incremental structures against these.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{cut_value, CutSpec, Multigraph, VertexId};
use crate::{Error, Result};

/// Largest vertex count accepted by [`enumerate_min_cuts`].
pub const MAX_EXHAUSTIVE: usize = 24;

/// A set of distinct bipartitions, each stored with vertex 0 outside `S`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CutFamily {
    cuts: Vec<(CutSpec, usize)>,
}

impl CutFamily {
    pub fn new() -> Self {
        CutFamily::default()
    }

    /// Adds a cut unless its bipartition is already present.
    pub fn insert(&mut self, cut: CutSpec, value: usize) -> bool {
        let cut = cut.normalized();
        match self.cuts.binary_search_by(|(c, _)| c.cmp(&cut)) {
            Ok(_) => false,
            Err(at) => {
                self.cuts.insert(at, (cut, value));
                true
            }
        }
    }

    pub fn contains(&self, cut: &CutSpec) -> bool {
        let cut = cut.normalized();
        self.cuts.binary_search_by(|(c, _)| c.cmp(&cut)).is_ok()
    }

    pub fn len(&self) -> usize {
        self.cuts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cuts.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &(CutSpec, usize)> {
        self.cuts.iter()
    }

    pub fn min_value(&self) -> Option<usize> {
        self.cuts.iter().map(|&(_, v)| v).min()
    }
}

fn weight_matrix(g: &Multigraph) -> Vec<Vec<u64>> {
    let n = g.n();
    let mut w = vec![vec![0u64; n]; n];
    for e in g.edges() {
        w[e.u][e.v] += 1;
        w[e.v][e.u] += 1;
    }
    w
}

/// `λ(G)` together with one cut attaining it (Stoer–Wagner).
pub fn static_min_cut(g: &Multigraph) -> Result<(usize, CutSpec)> {
    let n = g.n();
    if n < 2 {
        return Err(Error::TooFewVertices { n, min: 2 });
    }
    let mut w = weight_matrix(g);
    let mut groups: Vec<Vec<VertexId>> = (0..n).map(|v| vec![v]).collect();
    let mut active: Vec<usize> = (0..n).collect();
    let mut best = u64::MAX;
    let mut best_side: Vec<VertexId> = Vec::new();

    while active.len() > 1 {
        let len = active.len();
        let mut attach = vec![0u64; len];
        let mut added = vec![false; len];
        let mut prev = usize::MAX;
        for step in 0..len {
            let mut sel = usize::MAX;
            for i in 0..len {
                if !added[i] && (sel == usize::MAX || attach[i] > attach[sel]) {
                    sel = i;
                }
            }
            added[sel] = true;
            if step == len - 1 {
                if attach[sel] < best {
                    best = attach[sel];
                    best_side = groups[active[sel]].clone();
                }
                let (s, t) = (active[prev], active[sel]);
                for &x in &active {
                    w[s][x] += w[t][x];
                    w[x][s] = w[s][x];
                }
                w[s][s] = 0;
                let moved = core::mem::take(&mut groups[t]);
                groups[s].extend(moved);
                active.remove(sel);
            } else {
                prev = sel;
                let row = active[sel];
                for i in 0..len {
                    if !added[i] {
                        attach[i] += w[row][active[i]];
                    }
                }
            }
        }
    }
    Ok((best as usize, CutSpec::new(n, &best_side)?))
}

/// Maximum number of edge-disjoint `x`–`y` paths (`λ(G, x, y)`).
pub fn local_connectivity(g: &Multigraph, x: VertexId, y: VertexId) -> Result<usize> {
    let n = g.n();
    for v in [x, y] {
        if v >= n {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
    }
    if x == y {
        return Err(Error::InvalidParameter("local connectivity needs x != y"));
    }
    let mut cap = weight_matrix(g);
    let mut flow = 0;
    loop {
        let mut pred = vec![usize::MAX; n];
        pred[x] = x;
        let mut queue = VecDeque::from([x]);
        while let Some(a) = queue.pop_front() {
            for b in 0..n {
                if pred[b] == usize::MAX && cap[a][b] > 0 {
                    pred[b] = a;
                    queue.push_back(b);
                }
            }
        }
        if pred[y] == usize::MAX {
            return Ok(flow);
        }
        let mut b = y;
        while b != x {
            let a = pred[b];
            cap[a][b] -= 1;
            cap[b][a] += 1;
            b = a;
        }
        flow += 1;
    }
}

/// Every minimum cut of `g`, by walking all `2^(n-1) - 1` bipartitions.
pub fn enumerate_min_cuts(g: &Multigraph) -> Result<CutFamily> {
    let n = g.n();
    if n < 2 {
        return Err(Error::TooFewVertices { n, min: 2 });
    }
    if n > MAX_EXHAUSTIVE {
        return Err(Error::TooLarge {
            n,
            max: MAX_EXHAUSTIVE,
        });
    }
    let w = weight_matrix(g);
    let mut best = u64::MAX;
    let mut masks: Vec<u64> = Vec::new();
    // Gray-code walk over subsets of {1..n-1}; S never holds vertex 0.
    let mut mask = 0u64;
    let mut value = 0u64;
    for i in 1u64..(1u64 << (n - 1)) {
        let v = i.trailing_zeros() as usize + 1;
        let entering = mask >> v & 1 == 0;
        let (mut inside, mut outside) = (0u64, 0u64);
        for (x, &c) in w[v].iter().enumerate() {
            if x != v {
                if mask >> x & 1 == 1 {
                    inside += c;
                } else {
                    outside += c;
                }
            }
        }
        // entering: edges to V \ S start crossing, edges into S stop; leaving reverses
        value = if entering {
            value + outside - inside
        } else {
            value + inside - outside
        };
        mask ^= 1 << v;
        if value < best {
            best = value;
            masks.clear();
        }
        if value == best {
            masks.push(mask);
        }
    }
    let mut family = CutFamily::new();
    for m in masks {
        family.insert(CutSpec::from_mask(n, m), best as usize);
    }
    Ok(family)
}

/// All proper cuts with their values; exhaustive, `n <= 20`.
pub fn all_cut_values(g: &Multigraph) -> Result<Vec<(CutSpec, usize)>> {
    let n = g.n();
    if n > 20 {
        return Err(Error::TooLarge { n, max: 20 });
    }
    if n < 2 {
        return Err(Error::TooFewVertices { n, min: 2 });
    }
    let mut out = Vec::new();
    for mask in 1u64..(1u64 << (n - 1)) {
        let s = CutSpec::from_mask(n, mask << 1);
        let v = cut_value(g, &s)?;
        out.push((s, v));
    }
    Ok(out)
}
