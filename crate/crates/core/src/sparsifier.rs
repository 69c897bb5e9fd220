//! Contraction sparsifiers that keep every cut up to `(3/2)λ`.

use alloc::vec;
use alloc::vec::Vec;

use crate::flow::FlowNetwork;
use crate::graph::{contract_with, ContractionMap, Multigraph};
use crate::union_find::UnionFind;
use crate::Result;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Sparsifier {
    /// `H = G`.
    Identity,
    /// Contract classes of vertices joined by more than `(3/2)λ` edge-disjoint
    /// paths.
    #[default]
    Contract,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sparsification {
    pub graph: Multigraph,
    pub map: ContractionMap,
    pub strategy: Sparsifier,
}

/// Contracts `g` so that every cut of value at most `(3/2)λ` survives.
///
/// `lambda` must be `λ(g)`. Contracting `x` and `y` only destroys cuts that
/// separate them, and each of those has value at least `λ(x, y)`, so pairs
/// with `2λ(x, y) > 3λ` are safe to merge.
pub fn sparsify(g: &Multigraph, lambda: usize, strategy: Sparsifier) -> Result<Sparsification> {
    let map = match strategy {
        Sparsifier::Identity => ContractionMap::identity(g.n()),
        Sparsifier::Contract => {
            let (parent, flow) = flow_tree(g);
            let mut uf = UnionFind::new(g.n());
            for v in 1..g.n() {
                if 2 * flow[v] > 3 * lambda as u64 {
                    uf.union(v, parent[v]);
                }
            }
            ContractionMap::from_labels(uf.labels().0)?
        }
    };
    let graph = if map.is_identity() { g.clone() } else { contract_with(g, &map) };
    Ok(Sparsification { graph, map, strategy })
}

/// Gusfield's equivalent flow tree: `λ(x, y)` is the smallest `flow` on the
/// tree path between `x` and `y`, where vertex `v > 0` hangs below
/// `parent[v]` with value `flow[v]`.
pub(crate) fn flow_tree(g: &Multigraph) -> (Vec<usize>, Vec<u64>) {
    let n = g.n();
    let mut parent = vec![0; n];
    let mut flow = vec![0; n];
    if n < 2 {
        return (parent, flow);
    }
    let mut net = FlowNetwork::new(g);
    for s in 1..n {
        let t = parent[s];
        let mut src = vec![false; n];
        src[s] = true;
        flow[s] = net.max_flow(&src, t, u64::MAX);
        let side = net.source_side(&src);
        for i in s + 1..n {
            if side[i] && parent[i] == t {
                parent[i] = s;
            }
        }
    }
    (parent, flow)
}
