//! Maximal spanning forest decompositions and sparse k-certificates.
//!
//! For a decomposition `F_1, ..., F_m` where each `F_i` is a maximal spanning
//! forest of `G - (F_1 ∪ ... ∪ F_{i-1})`, the union of the first `k` forests
//! keeps every cut of value below `k` exactly and every other cut at `k` or
//! more, with at most `k(n-1)` edges.

use alloc::vec::Vec;

use crate::graph::{Edge, Multigraph};
use crate::union_find::UnionFind;
use crate::{Error, Result};

/// Ordered edge-disjoint forests of one graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Msfd {
    n: usize,
    forests: Vec<Vec<Edge>>,
    dropped: usize,
}

impl Msfd {
    /// Wraps forests built elsewhere; nothing is checked.
    pub fn from_forests(n: usize, forests: Vec<Vec<Edge>>) -> Self {
        Msfd { n, forests, dropped: 0 }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of forests, counting trailing empty ones.
    pub fn order(&self) -> usize {
        self.forests.len()
    }

    pub fn forests(&self) -> &[Vec<Edge>] {
        &self.forests
    }

    pub fn forest(&self, i: usize) -> &[Edge] {
        &self.forests[i]
    }

    /// Edges that fell beyond the requested order and are not stored.
    pub fn dropped(&self) -> usize {
        self.dropped
    }

    /// Edges of `F_1 ∪ ... ∪ F_k` (`k` clamped to the order).
    pub fn prefix_edges(&self, k: usize) -> impl Iterator<Item = Edge> + '_ {
        self.forests.iter().take(k).flatten().copied()
    }
}

/// Splits `g` into an msfd of the given order.
///
/// Each edge goes to the first forest in which its endpoints are still in
/// different trees. Every edge left out of `F_i` therefore closes a cycle in
/// `F_i`, which is the maximality condition. Edges rejected by all `order`
/// forests are counted in [`Msfd::dropped`].
pub fn build_damsfd(g: &Multigraph, order: usize) -> Msfd {
    let n = g.n();
    let mut finds: Vec<UnionFind> = Vec::new();
    let mut forests: Vec<Vec<Edge>> = Vec::new();
    let mut dropped = 0;
    'edges: for e in g.edges() {
        for level in 0..order {
            if level == finds.len() {
                finds.push(UnionFind::new(n));
                forests.push(Vec::new());
            }
            if finds[level].union(e.u, e.v) {
                forests[level].push(*e);
                continue 'edges;
            }
        }
        dropped += 1;
    }
    forests.resize_with(order, Vec::new);
    Msfd { n, forests, dropped }
}

/// The sparse `k`-certificate `G_k = F_1 ∪ ... ∪ F_k`.
pub fn certificate(d: &Msfd, k: usize) -> Result<Multigraph> {
    if k == 0 || k > d.order() {
        return Err(Error::OrderOutOfRange { k, order: d.order() });
    }
    Multigraph::from_edges(d.n, d.prefix_edges(k))
}

/// Checks that `d` is an msfd of `g` restricted to the stored forests:
/// edges come from `g` and are used once, each forest is acyclic, and each
/// forest is maximal among the edges not in earlier forests.
pub fn is_msfd_of(d: &Msfd, g: &Multigraph) -> bool {
    if d.n != g.n() {
        return false;
    }
    let mut remaining: Vec<Edge> = g.edges().to_vec();
    remaining.sort_unstable_by_key(|e| e.id);
    for forest in &d.forests {
        let mut uf = UnionFind::new(d.n);
        for e in forest {
            let Ok(at) = remaining.binary_search_by_key(&e.id, |r| r.id) else {
                return false;
            };
            if remaining[at].key() != e.key() || !uf.union(e.u, e.v) {
                return false;
            }
            remaining.remove(at);
        }
        if remaining.iter().any(|e| !uf.same(e.u, e.v)) {
            return false;
        }
    }
    true
}

/// Number of edges `|G_k|` may hold: `k(n-1)`.
pub fn certificate_bound(n: usize, k: usize) -> usize {
    k * n.saturating_sub(1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{all_cut_values, local_connectivity, static_min_cut};
    use crate::graph::cut_value;
    use alloc::vec;
    use proptest::prelude::*;

    fn cycle(n: usize) -> Multigraph {
        Multigraph::from_pairs(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn complete(n: usize) -> Multigraph {
        let mut g = Multigraph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v).unwrap();
            }
        }
        g
    }

    fn arb_graph() -> impl Strategy<Value = Multigraph> {
        (2usize..=9).prop_flat_map(|n| {
            prop::collection::vec((0..n, 0..n), 0..40).prop_map(move |pairs| {
                Multigraph::from_pairs(n, pairs.into_iter().filter(|(u, v)| u != v)).unwrap()
            })
        })
    }

    #[test]
    fn cycle_decomposition() {
        let c4 = cycle(4);
        let d = build_damsfd(&c4, 4);
        let sizes: Vec<usize> = d.forests().iter().map(Vec::len).collect();
        assert_eq!(sizes, vec![3, 1, 0, 0]);
        assert!(is_msfd_of(&d, &c4));
        let g1 = certificate(&d, 1).unwrap();
        assert_eq!(g1.m(), 3);
        assert_eq!(static_min_cut(&g1).unwrap().0, 1);
        let g2 = certificate(&d, 2).unwrap();
        assert_eq!(static_min_cut(&g2).unwrap().0, 2);
        assert!(certificate(&d, 0).is_err());
        assert!(certificate(&d, 5).is_err());
    }

    #[test]
    fn complete_four_decomposition() {
        let k4 = complete(4);
        let d = build_damsfd(&k4, 6);
        assert!(is_msfd_of(&d, &k4));
        let sizes: Vec<usize> = d.forests().iter().map(Vec::len).collect();
        assert_eq!(sizes[0], 3);
        assert_eq!(sizes.iter().sum::<usize>(), 6);
        assert_eq!(d.dropped(), 0);
    }

    #[test]
    fn empty_graph_has_empty_forests() {
        let d = build_damsfd(&Multigraph::new(5), 3);
        assert!(d.forests().iter().all(Vec::is_empty));
    }

    #[test]
    fn truncated_order_drops_edges() {
        let g = Multigraph::from_pairs(2, [(0, 1); 5]).unwrap();
        let d = build_damsfd(&g, 2);
        assert_eq!(d.dropped(), 3);
        assert_eq!(d.forest(0).len(), 1);
    }

    #[test]
    fn certificate_can_exceed_its_order() {
        // every pair of a triangle joined twice: G_3 keeps all six edges
        let g = Multigraph::from_pairs(3, [(2, 0), (2, 1), (1, 2), (1, 0), (2, 0), (1, 0)]).unwrap();
        let d = build_damsfd(&g, 3);
        let g3 = certificate(&d, 3).unwrap();
        assert_eq!(g3.m(), 6);
        assert_eq!(static_min_cut(&g3).unwrap().0, 4);
    }

    #[test]
    fn checker_rejects_non_maximal_forests() {
        let c4 = cycle(4);
        let mut d = build_damsfd(&c4, 2);
        let moved = d.forests[0].pop().unwrap();
        d.forests[1].push(moved);
        assert!(!is_msfd_of(&d, &c4));
    }

    proptest! {
        #[test]
        fn certificate_keeps_small_cuts(g in arb_graph()) {
            let d = build_damsfd(&g, g.m().max(1));
            prop_assert!(is_msfd_of(&d, &g));
            let lambda = static_min_cut(&g).unwrap().0;
            let cuts = all_cut_values(&g).unwrap();
            for k in 1..=d.order().min(8) {
                let gk = certificate(&d, k).unwrap();
                prop_assert!(gk.m() <= certificate_bound(g.n(), k));
                for (s, full) in &cuts {
                    let sparse = cut_value(&gk, s).unwrap();
                    if *full < k {
                        prop_assert_eq!(sparse, *full);
                    } else {
                        prop_assert!(sparse >= k);
                    }
                }
                let sparse_lambda = static_min_cut(&gk).unwrap().0;
                prop_assert_eq!(sparse_lambda.min(k), lambda.min(k));
                prop_assert!(sparse_lambda <= lambda);
            }
        }

        #[test]
        fn forest_edges_are_well_connected(g in arb_graph()) {
            let d = build_damsfd(&g, g.m().max(1));
            for (j, forest) in d.forests().iter().enumerate() {
                for e in forest {
                    for i in 1..=j + 1 {
                        let prefix = certificate(&d, i).unwrap();
                        prop_assert!(local_connectivity(&prefix, e.u, e.v).unwrap() >= i);
                    }
                }
            }
        }
    }
}
