//! Cactus representation of all minimum cuts, and the insertion tracker.
//!
//! The cactus is assembled from the explicit family of minimum cuts. Vertices
//! never separated by a minimum cut form atoms; crossing cuts group into
//! cycles whose parts are ordered by adjacency; the remaining laminar cuts
//! become tree edges.

mod family;
mod tracker;

pub use family::{min_cut_family, MinCutFamily};
pub use tracker::MinCutTracker;

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use fixedbitset::FixedBitSet;

use crate::graph::{CutSpec, Multigraph, VertexId};
use crate::oracle::{enumerate_min_cuts, local_connectivity, static_min_cut, CutFamily};
use crate::union_find::UnionFind;
use crate::{Error, Result};

/// Largest graph [`verify_cactus`] accepts.
pub const MAX_VERIFY: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CactusEdge {
    pub a: usize,
    pub b: usize,
    /// Twice the edge weight, so cycle edges of weight `λ/2` stay integral.
    pub doubled_weight: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CactusTree {
    lambda: usize,
    degenerate: bool,
    nodes: usize,
    phi: Vec<usize>,
    edges: Vec<CactusEdge>,
}

impl CactusTree {
    pub fn lambda(&self) -> usize {
        self.lambda
    }

    /// Set for a disconnected graph: one node per component and no edges.
    pub fn is_degenerate(&self) -> bool {
        self.degenerate
    }

    pub fn node_count(&self) -> usize {
        self.nodes
    }

    pub fn phi(&self, v: VertexId) -> usize {
        self.phi[v]
    }

    pub fn phi_map(&self) -> &[usize] {
        &self.phi
    }

    pub fn edges(&self) -> &[CactusEdge] {
        &self.edges
    }

    /// Graph vertices mapped to `node`.
    pub fn members(&self, node: usize) -> impl Iterator<Item = VertexId> + '_ {
        self.phi
            .iter()
            .enumerate()
            .filter(move |&(_, &x)| x == node)
            .map(|(v, _)| v)
    }
}

fn normalize(mut s: FixedBitSet) -> FixedBitSet {
    if s.contains(0) {
        s.toggle_range(..);
    }
    s
}

fn crosses(x: &FixedBitSet, y: &FixedBitSet) -> bool {
    !x.is_disjoint(y)
        && !x.is_subset(y)
        && !y.is_subset(x)
        && x.union_count(y) < x.len()
}

/// Groups `0..len` by membership across `sets`, numbering groups in order of
/// first appearance.
fn signature_classes(len: usize, sets: &[&FixedBitSet]) -> (Vec<usize>, usize) {
    let mut ids: BTreeMap<Vec<bool>, usize> = BTreeMap::new();
    let mut label = Vec::with_capacity(len);
    for x in 0..len {
        let sig: Vec<bool> = sets.iter().map(|s| s.contains(x)).collect();
        let next = ids.len();
        label.push(*ids.entry(sig).or_insert(next));
    }
    (label, ids.len())
}

/// Builds the cactus of all minimum cuts of `g`.
pub fn build_cactus(g: &Multigraph) -> Result<CactusTree> {
    let n = g.n();
    let family = match min_cut_family(g) {
        Ok(f) => f,
        Err(Error::Disconnected) => {
            let (phi, nodes) = g.components();
            return Ok(CactusTree {
                lambda: 0,
                degenerate: true,
                nodes,
                phi,
                edges: Vec::new(),
            });
        }
        Err(e) => return Err(e),
    };
    let lambda = family.lambda();

    let vertex_cuts: Vec<&FixedBitSet> = family.sides().iter().collect();
    let (atom_of, atoms) = signature_classes(n, &vertex_cuts);
    let mut rep = vec![usize::MAX; atoms];
    for v in (0..n).rev() {
        rep[atom_of[v]] = v;
    }
    let cuts: Vec<FixedBitSet> = family
        .sides()
        .iter()
        .map(|s| {
            let mut a = FixedBitSet::with_capacity(atoms);
            for (i, &v) in rep.iter().enumerate() {
                a.set(i, s.contains(v));
            }
            a
        })
        .collect();
    let known: BTreeSet<&FixedBitSet> = cuts.iter().collect();

    let mut groups = UnionFind::new(cuts.len());
    for i in 0..cuts.len() {
        for j in i + 1..cuts.len() {
            if crosses(&cuts[i], &cuts[j]) {
                groups.union(i, j);
            }
        }
    }
    let mut members: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for i in 0..cuts.len() {
        members.entry(groups.find(i)).or_default().push(i);
    }

    // each cycle as its parts in cyclic order, part 0 holding atom 0
    let mut cycles: Vec<Vec<FixedBitSet>> = Vec::new();
    let mut absorbed: BTreeSet<FixedBitSet> = BTreeSet::new();
    for group in members.values().filter(|m| m.len() > 1) {
        let sets: Vec<&FixedBitSet> = group.iter().map(|&i| &cuts[i]).collect();
        let (part_of, r) = signature_classes(atoms, &sets);
        let mut parts = vec![FixedBitSet::with_capacity(atoms); r];
        for (a, &p) in part_of.iter().enumerate() {
            parts[p].insert(a);
        }
        let adjacent = |i: usize, j: usize| {
            let mut u = parts[i].clone();
            u.union_with(&parts[j]);
            known.contains(&normalize(u))
        };
        let mut order = vec![0];
        let mut used = vec![false; r];
        used[0] = true;
        while order.len() < r {
            let last = *order.last().unwrap();
            let next = (0..r)
                .find(|&j| !used[j] && adjacent(last, j))
                .expect("crossing minimum cuts form a cycle");
            used[next] = true;
            order.push(next);
        }
        let ordered: Vec<FixedBitSet> = order.into_iter().map(|i| parts[i].clone()).collect();
        absorbed.extend(ordered[1..].iter().cloned());
        absorbed.insert(normalize(ordered[0].clone()));
        cycles.push(ordered);
    }

    // laminar sets that own a node: tree cuts, then non-root cycle parts
    let mut laminar: Vec<FixedBitSet> = members
        .values()
        .filter(|m| m.len() == 1)
        .map(|m| cuts[m[0]].clone())
        .filter(|c| !absorbed.contains(c))
        .collect();
    let tree_cuts = laminar.len();
    for parts in &cycles {
        laminar.extend(parts[1..].iter().cloned());
    }
    // node 0 is the root; laminar[i] owns node i + 1
    let mut by_size: Vec<usize> = (0..laminar.len()).collect();
    by_size.sort_by_key(|&i| laminar[i].count_ones(..));
    let smallest_superset = |x: &FixedBitSet, strict: bool| -> usize {
        by_size
            .iter()
            .find(|&&i| x.is_subset(&laminar[i]) && (!strict || laminar[i] != *x))
            .map_or(0, |&i| i + 1)
    };

    let mut edges = Vec::new();
    for x in &laminar[..tree_cuts] {
        let parent = smallest_superset(x, true);
        let node = smallest_superset(x, false);
        edges.push(CactusEdge {
            a: parent,
            b: node,
            doubled_weight: 2 * lambda,
        });
    }
    let mut next_part = tree_cuts;
    for parts in &cycles {
        let hanging = normalize(parts[0].clone());
        let mut ring = vec![smallest_superset(&hanging, false)];
        for _ in 1..parts.len() {
            next_part += 1;
            ring.push(next_part);
        }
        for i in 0..ring.len() {
            edges.push(CactusEdge {
                a: ring[i],
                b: ring[(i + 1) % ring.len()],
                doubled_weight: lambda,
            });
        }
    }

    let phi = (0..n)
        .map(|v| {
            let mut single = FixedBitSet::with_capacity(atoms);
            single.insert(atom_of[v]);
            smallest_superset(&single, false)
        })
        .collect();
    Ok(CactusTree {
        lambda,
        degenerate: false,
        nodes: laminar.len() + 1,
        phi,
        edges,
    })
}

/// Checks the four cactus properties of `c` against brute-force oracles:
/// `φ` is total; `φ(x) = φ(y)` exactly when `x` and `y` are
/// `(λ+1)`-edge-connected; cactus minimum cuts and graph minimum cuts
/// correspond; and the shape is a tree of weight-`λ` edges for odd `λ`, or
/// edge-disjoint cycles of weight `λ/2` joined by weight-`λ` bridges.
pub fn verify_cactus(c: &CactusTree, g: &Multigraph) -> Result<bool> {
    let n = g.n();
    if n > MAX_VERIFY {
        return Err(Error::TooLarge { n, max: MAX_VERIFY });
    }
    let lambda = static_min_cut(g)?.0;
    if c.lambda != lambda || c.phi.len() != n || c.phi.iter().any(|&x| x >= c.nodes) {
        return Ok(false);
    }
    for x in 0..n {
        for y in x + 1..n {
            let together = local_connectivity(g, x, y)? > lambda;
            if together != (c.phi[x] == c.phi[y]) {
                return Ok(false);
            }
        }
    }
    Ok(cuts_correspond(c, g)? && shape_is_valid(c))
}

fn cuts_correspond(c: &CactusTree, g: &Multigraph) -> Result<bool> {
    if c.nodes < 2 {
        return Ok(false);
    }
    let mut pairs = Vec::new();
    for e in &c.edges {
        if e.a == e.b || e.a >= c.nodes || e.b >= c.nodes {
            return Ok(false);
        }
        pairs.extend(core::iter::repeat_n((e.a, e.b), e.doubled_weight));
    }
    let cactus_graph = Multigraph::from_pairs(c.nodes, pairs)?;
    let cactus_cuts = enumerate_min_cuts(&cactus_graph)?;
    if cactus_cuts.min_value() != Some(2 * c.lambda) {
        return Ok(false);
    }
    let mut pulled = CutFamily::new();
    for (s, _) in cactus_cuts.iter() {
        let side: Vec<VertexId> = (0..g.n()).filter(|&v| s.contains(c.phi[v])).collect();
        let cut = CutSpec::new(g.n(), &side)?;
        if !cut.is_proper() {
            return Ok(false);
        }
        pulled.insert(cut, c.lambda);
    }
    Ok(pulled == enumerate_min_cuts(g)?)
}

fn shape_is_valid(c: &CactusTree) -> bool {
    if c.degenerate {
        return c.lambda == 0 && c.edges.is_empty();
    }
    let mut uf = UnionFind::new(c.nodes);
    for e in &c.edges {
        uf.union(e.a, e.b);
    }
    if uf.labels().1 != 1 {
        return false;
    }
    if c.lambda % 2 == 1 {
        return c.edges.len() + 1 == c.nodes && c.edges.iter().all(|e| e.doubled_weight == 2 * c.lambda);
    }
    for block in blocks(c.nodes, &c.edges) {
        if block.len() == 1 {
            if c.edges[block[0]].doubled_weight != 2 * c.lambda {
                return false;
            }
            continue;
        }
        let mut degree: BTreeMap<usize, usize> = BTreeMap::new();
        for &i in &block {
            *degree.entry(c.edges[i].a).or_default() += 1;
            *degree.entry(c.edges[i].b).or_default() += 1;
        }
        let simple_cycle = block.len() >= 3 && degree.len() == block.len() && degree.values().all(|&d| d == 2);
        if !simple_cycle || block.iter().any(|&i| c.edges[i].doubled_weight != c.lambda) {
            return false;
        }
    }
    true
}

/// Biconnected blocks as lists of edge indices.
fn blocks(nodes: usize, edges: &[CactusEdge]) -> Vec<Vec<usize>> {
    struct Walk {
        adj: Vec<Vec<(usize, usize)>>,
        disc: Vec<usize>,
        low: Vec<usize>,
        timer: usize,
        stack: Vec<usize>,
        out: Vec<Vec<usize>>,
    }
    impl Walk {
        fn visit(&mut self, v: usize, via: usize) {
            self.timer += 1;
            self.disc[v] = self.timer;
            self.low[v] = self.timer;
            for k in 0..self.adj[v].len() {
                let (w, i) = self.adj[v][k];
                if i == via {
                    continue;
                }
                if self.disc[w] == 0 {
                    self.stack.push(i);
                    self.visit(w, i);
                    self.low[v] = self.low[v].min(self.low[w]);
                    if self.low[w] >= self.disc[v] {
                        let mut block = Vec::new();
                        while let Some(j) = self.stack.pop() {
                            block.push(j);
                            if j == i {
                                break;
                            }
                        }
                        self.out.push(block);
                    }
                } else if self.disc[w] < self.disc[v] {
                    self.stack.push(i);
                    self.low[v] = self.low[v].min(self.disc[w]);
                }
            }
        }
    }
    let mut adj = vec![Vec::new(); nodes];
    for (i, e) in edges.iter().enumerate() {
        adj[e.a].push((e.b, i));
        adj[e.b].push((e.a, i));
    }
    let mut walk = Walk {
        adj,
        disc: vec![0; nodes],
        low: vec![0; nodes],
        timer: 0,
        stack: Vec::new(),
        out: Vec::new(),
    };
    for v in 0..nodes {
        if walk.disc[v] == 0 {
            walk.visit(v, usize::MAX);
        }
    }
    walk.out
}
