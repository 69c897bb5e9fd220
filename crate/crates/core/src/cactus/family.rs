//! Flow-based enumeration of all minimum cuts.

use alloc::vec;
use alloc::vec::Vec;

use fixedbitset::FixedBitSet;

use crate::flow::FlowNetwork;
use crate::graph::{CutSpec, Multigraph, VertexId};
use crate::{Error, Result};

/// All minimum cuts of a connected graph, each stored as the side without
/// vertex 0, in ascending order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinCutFamily {
    n: usize,
    lambda: usize,
    cuts: Vec<FixedBitSet>,
}

impl MinCutFamily {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn lambda(&self) -> usize {
        self.lambda
    }

    pub fn len(&self) -> usize {
        self.cuts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cuts.is_empty()
    }

    pub fn sides(&self) -> &[FixedBitSet] {
        &self.cuts
    }

    pub fn into_sides(self) -> Vec<FixedBitSet> {
        self.cuts
    }

    pub fn cuts(&self) -> impl Iterator<Item = CutSpec> + '_ {
        self.cuts.iter().cloned().map(CutSpec::from_bits)
    }
}

const FREE: u8 = 0;
const SOURCE: u8 = 1;
const SINK: u8 = 2;

/// Enumerates every minimum cut of `g`.
///
/// A minimum cut whose source side holds `0..t` but not `t` is a minimum
/// `{0..t}`-`t` cut, and each cut has exactly one such `t`. For each `t`
/// whose flow value equals `λ`, the source sides are the sets closed under
/// residual arcs that contain the sources and miss `t`; those are listed by
/// branching on one free vertex at a time.
pub fn min_cut_family(g: &Multigraph) -> Result<MinCutFamily> {
    let n = g.n();
    if n < 2 {
        return Err(Error::TooFewVertices { n, min: 2 });
    }
    let mut net = FlowNetwork::new(g);
    let mut lambda = u64::MAX;
    for t in 1..n {
        let src: Vec<bool> = (0..n).map(|v| v < t).collect();
        lambda = lambda.min(net.max_flow(&src, t, lambda));
    }
    if lambda == 0 {
        return Err(Error::Disconnected);
    }
    let mut cuts = Vec::new();
    for t in 1..n {
        let src: Vec<bool> = (0..n).map(|v| v < t).collect();
        if net.max_flow(&src, t, lambda + 1) != lambda {
            continue;
        }
        let mut state = vec![FREE; n];
        for v in 0..t {
            close(&net, &mut state, v, SOURCE);
        }
        let ok = close(&net, &mut state, t, SINK);
        debug_assert!(ok, "a maximum flow leaves the sink unreachable");
        branch(&net, state, &mut cuts);
    }
    cuts.sort_unstable();
    Ok(MinCutFamily {
        n,
        lambda: lambda as usize,
        cuts,
    })
}

/// Marks `v` and everything it forces with `mark`: residual successors for
/// the source side, residual predecessors for the sink side. Returns false if
/// that runs into the opposite side.
fn close(net: &FlowNetwork, state: &mut [u8], v: VertexId, mark: u8) -> bool {
    if state[v] == mark {
        return true;
    }
    if state[v] != FREE {
        return false;
    }
    state[v] = mark;
    let mut stack = vec![v];
    while let Some(a) = stack.pop() {
        let next: Vec<VertexId> = if mark == SOURCE {
            net.residual_out(a).collect()
        } else {
            net.residual_in(a).collect()
        };
        for b in next {
            if state[b] == FREE {
                state[b] = mark;
                stack.push(b);
            } else if state[b] != mark {
                return false;
            }
        }
    }
    true
}

fn branch(net: &FlowNetwork, state: Vec<u8>, out: &mut Vec<FixedBitSet>) {
    let Some(v) = state.iter().position(|&s| s == FREE) else {
        let mut side = FixedBitSet::with_capacity(state.len());
        for (x, &s) in state.iter().enumerate() {
            if s == SINK {
                side.insert(x);
            }
        }
        out.push(side);
        return;
    };
    for mark in [SOURCE, SINK] {
        let mut next = state.clone();
        if close(net, &mut next, v, mark) {
            branch(net, next, out);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::enumerate_min_cuts;
    use proptest::prelude::*;

    #[test]
    fn cycle_has_six_min_cuts() {
        let c4 = Multigraph::from_pairs(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let f = min_cut_family(&c4).unwrap();
        assert_eq!((f.lambda(), f.len()), (2, 6));
    }

    #[test]
    fn disconnected_graph_is_rejected() {
        let g = Multigraph::from_pairs(3, [(0, 1)]).unwrap();
        assert_eq!(min_cut_family(&g), Err(Error::Disconnected));
    }

    proptest! {
        #[test]
        fn matches_exhaustive_enumeration(
            n in 2usize..=10,
            pairs in prop::collection::vec((0usize..10, 0usize..10), 0..40),
        ) {
            let g = Multigraph::from_pairs(
                n,
                pairs.into_iter().filter(|&(u, v)| u != v && u < n && v < n),
            ).unwrap();
            let oracle = enumerate_min_cuts(&g).unwrap();
            match min_cut_family(&g) {
                Err(Error::Disconnected) => prop_assert_eq!(oracle.min_value(), Some(0)),
                Err(e) => prop_assert!(false, "unexpected error {e}"),
                Ok(f) => {
                    prop_assert_eq!(Some(f.lambda()), oracle.min_value());
                    prop_assert_eq!(f.len(), oracle.len());
                    for cut in f.cuts() {
                        prop_assert!(oracle.contains(&cut));
                    }
                }
            }
        }
    }
}
