//! Multigraph storage, cuts and contraction.

use alloc::vec;
use alloc::vec::Vec;

use fixedbitset::FixedBitSet;

use crate::{Error, Result};

/// Dense vertex index in `0..n`.
pub type VertexId = usize;

/// Identifier of one edge record. Parallel edges get distinct ids.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeId(pub usize);

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub struct Edge {
    pub id: EdgeId,
    pub u: VertexId,
    pub v: VertexId,
}

impl Edge {
    pub fn new(id: usize, u: VertexId, v: VertexId) -> Self {
        Edge { id: EdgeId(id), u, v }
    }

    /// Endpoints with the smaller index first.
    pub fn key(&self) -> (VertexId, VertexId) {
        if self.u <= self.v {
            (self.u, self.v)
        } else {
            (self.v, self.u)
        }
    }
}

/// Undirected multigraph over a fixed vertex set `0..n`.
///
/// Self-loops are never stored. Edge ids are handed out sequentially by
/// [`Multigraph::add_edge`] and are never reused.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Multigraph {
    n: usize,
    edges: Vec<Edge>,
    degree: Vec<usize>,
    next_id: usize,
}

impl Multigraph {
    pub fn new(n: usize) -> Self {
        Multigraph {
            n,
            edges: Vec::new(),
            degree: vec![0; n],
            next_id: 0,
        }
    }

    /// Builds a graph from `(u, v)` pairs, numbering edges in iteration order.
    pub fn from_pairs<I>(n: usize, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let mut g = Multigraph::new(n);
        for (u, v) in pairs {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph that keeps the ids of existing edge records.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = Edge>,
    {
        let mut g = Multigraph::new(n);
        for e in edges {
            g.check_pair(e.u, e.v)?;
            g.push(e);
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.degree[v]
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degree
    }

    pub fn min_degree(&self) -> usize {
        self.degree.iter().copied().min().unwrap_or(0)
    }

    pub fn add_edge(&mut self, u: VertexId, v: VertexId) -> Result<EdgeId> {
        self.check_pair(u, v)?;
        let id = EdgeId(self.next_id);
        self.push(Edge { id, u, v });
        Ok(id)
    }

    fn check_pair(&self, u: VertexId, v: VertexId) -> Result<()> {
        for x in [u, v] {
            if x >= self.n {
                return Err(Error::VertexOutOfRange { vertex: x, n: self.n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        Ok(())
    }

    fn push(&mut self, e: Edge) {
        self.degree[e.u] += 1;
        self.degree[e.v] += 1;
        self.next_id = self.next_id.max(e.id.0 + 1);
        self.edges.push(e);
    }

    /// Labels every vertex with the index of its connected component.
    pub fn components(&self) -> (Vec<usize>, usize) {
        let mut uf = crate::union_find::UnionFind::new(self.n);
        for e in &self.edges {
            uf.union(e.u, e.v);
        }
        uf.labels()
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().1 == 1
    }
}

/// One side `S` of a bipartition `(S, V \ S)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CutSpec {
    side: FixedBitSet,
}

impl CutSpec {
    pub fn new(n: usize, members: &[VertexId]) -> Result<Self> {
        let mut side = FixedBitSet::with_capacity(n);
        for &v in members {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            side.insert(v);
        }
        Ok(CutSpec { side })
    }

    pub fn from_bits(side: FixedBitSet) -> Self {
        CutSpec { side }
    }

    /// Bit `i` of `mask` decides membership of vertex `i`. Requires `n <= 64`.
    pub fn from_mask(n: usize, mask: u64) -> Self {
        let mut side = FixedBitSet::with_capacity(n);
        for v in 0..n {
            if mask >> v & 1 == 1 {
                side.insert(v);
            }
        }
        CutSpec { side }
    }

    pub fn n(&self) -> usize {
        self.side.len()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.side.contains(v)
    }

    pub fn bits(&self) -> &FixedBitSet {
        &self.side
    }

    pub fn len(&self) -> usize {
        self.side.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.side.is_clear()
    }

    pub fn is_proper(&self) -> bool {
        let k = self.len();
        k > 0 && k < self.n()
    }

    pub fn separates(&self, u: VertexId, v: VertexId) -> bool {
        self.contains(u) != self.contains(v)
    }

    pub fn complement(&self) -> Self {
        let mut side = self.side.clone();
        side.toggle_range(..);
        CutSpec { side }
    }

    /// The same bipartition written with vertex 0 outside `S`.
    pub fn normalized(&self) -> Self {
        if self.n() > 0 && self.contains(0) {
            self.complement()
        } else {
            self.clone()
        }
    }

    pub fn members(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.side.ones()
    }
}

/// Number of edge records crossing `(S, V \ S)`, counting multiplicity.
pub fn cut_value(g: &Multigraph, s: &CutSpec) -> Result<usize> {
    if s.n() != g.n() {
        return Err(Error::CutSizeMismatch { got: s.n(), n: g.n() });
    }
    if !s.is_proper() {
        return Err(Error::EmptySide);
    }
    Ok(g.edges().iter().filter(|e| s.separates(e.u, e.v)).count())
}

/// The vertex mapping `h : V(G) -> V(H)` produced by a contraction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContractionMap {
    image: Vec<VertexId>,
    parts: usize,
}

impl ContractionMap {
    pub fn identity(n: usize) -> Self {
        ContractionMap {
            image: (0..n).collect(),
            parts: n,
        }
    }

    /// `labels[v]` names the part of `v`; labels must cover `0..parts` exactly.
    pub fn from_labels(labels: Vec<VertexId>) -> Result<Self> {
        let parts = labels.iter().map(|&l| l + 1).max().unwrap_or(0);
        let mut seen = vec![false; parts];
        for &l in &labels {
            seen[l] = true;
        }
        if seen.iter().any(|s| !s) {
            return Err(Error::IncompletePartition);
        }
        Ok(ContractionMap {
            image: labels,
            parts,
        })
    }

    pub fn apply(&self, v: VertexId) -> VertexId {
        self.image[v]
    }

    /// Image of an edge, or `None` when both endpoints share a part.
    pub fn image_pair(&self, u: VertexId, v: VertexId) -> Option<(VertexId, VertexId)> {
        let (a, b) = (self.image[u], self.image[v]);
        (a != b).then_some((a, b))
    }

    pub fn domain_len(&self) -> usize {
        self.image.len()
    }

    pub fn image_len(&self) -> usize {
        self.parts
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &h)| i == h)
    }

    pub fn labels(&self) -> &[VertexId] {
        &self.image
    }

    /// Pulls a cut of the contracted graph back to the original vertex set.
    pub fn preimage(&self, s: &CutSpec) -> CutSpec {
        let mut side = FixedBitSet::with_capacity(self.image.len());
        for (v, &h) in self.image.iter().enumerate() {
            if s.contains(h) {
                side.insert(v);
            }
        }
        CutSpec { side }
    }
}

/// Identifies every part of `parts` into a single vertex.
///
/// Part `i` becomes vertex `i` of the result. Edges inside a part are dropped;
/// the remaining edges keep their ids and multiplicity.
pub fn contract(g: &Multigraph, parts: &[Vec<VertexId>]) -> Result<(Multigraph, ContractionMap)> {
    let mut labels = vec![usize::MAX; g.n()];
    for (i, part) in parts.iter().enumerate() {
        if part.is_empty() {
            return Err(Error::IncompletePartition);
        }
        for &v in part {
            if v >= g.n() || labels[v] != usize::MAX {
                return Err(Error::IncompletePartition);
            }
            labels[v] = i;
        }
    }
    if labels.contains(&usize::MAX) {
        return Err(Error::IncompletePartition);
    }
    let map = ContractionMap {
        image: labels,
        parts: parts.len(),
    };
    let h = contract_with(g, &map);
    Ok((h, map))
}

pub(crate) fn contract_with(g: &Multigraph, map: &ContractionMap) -> Multigraph {
    let mut h = Multigraph::new(map.image_len());
    for e in g.edges() {
        if let Some((a, b)) = map.image_pair(e.u, e.v) {
            h.push(Edge { id: e.id, u: a, v: b });
        }
    }
    h.next_id = h.next_id.max(g.next_id);
    h
}
