//! Augmenting-path max flow on undirected multigraphs.
//!
//! Parallel edges collapse into one arc pair whose capacity is the
//! multiplicity. Flow can start from a set of source vertices, which is how
//! callers model contracting a vertex set into a single source.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{Multigraph, VertexId};

pub(crate) struct FlowNetwork {
    adj: Vec<Vec<usize>>,
    to: Vec<VertexId>,
    cap: Vec<u64>,
    res: Vec<u64>,
}

impl FlowNetwork {
    pub(crate) fn new(g: &Multigraph) -> Self {
        let n = g.n();
        let mut pairs: Vec<(VertexId, VertexId)> = g.edges().iter().map(|e| e.key()).collect();
        pairs.sort_unstable();
        let mut net = FlowNetwork {
            adj: vec![Vec::new(); n],
            to: Vec::new(),
            cap: Vec::new(),
            res: Vec::new(),
        };
        let mut i = 0;
        while i < pairs.len() {
            let mut j = i;
            while j < pairs.len() && pairs[j] == pairs[i] {
                j += 1;
            }
            let (a, b) = pairs[i];
            let c = (j - i) as u64;
            // arc 2k goes a -> b, arc 2k + 1 goes b -> a; each is the other's reverse
            let id = net.to.len();
            net.to.extend([b, a]);
            net.cap.extend([c, c]);
            net.adj[a].push(id);
            net.adj[b].push(id + 1);
            i = j;
        }
        net.res = net.cap.clone();
        net
    }

    pub(crate) fn n(&self) -> usize {
        self.adj.len()
    }

    fn reset(&mut self) {
        self.res.copy_from_slice(&self.cap);
    }

    /// Max flow from every vertex with `is_source[v]` to `sink`, stopping
    /// once `limit` units have been routed.
    pub(crate) fn max_flow(&mut self, is_source: &[bool], sink: VertexId, limit: u64) -> u64 {
        self.reset();
        let n = self.n();
        let mut total = 0;
        let mut pred_arc = vec![usize::MAX; n];
        let mut seen = vec![false; n];
        let mut queue = VecDeque::new();
        while total < limit {
            seen.iter_mut().for_each(|s| *s = false);
            queue.clear();
            for v in 0..n {
                if is_source[v] {
                    seen[v] = true;
                    queue.push_back(v);
                }
            }
            let mut reached = false;
            'bfs: while let Some(a) = queue.pop_front() {
                for &arc in &self.adj[a] {
                    let b = self.to[arc];
                    if !seen[b] && self.res[arc] > 0 {
                        seen[b] = true;
                        pred_arc[b] = arc;
                        if b == sink {
                            reached = true;
                            break 'bfs;
                        }
                        queue.push_back(b);
                    }
                }
            }
            if !reached {
                break;
            }
            let mut bottleneck = limit - total;
            let mut b = sink;
            while !is_source[b] {
                let arc = pred_arc[b];
                bottleneck = bottleneck.min(self.res[arc]);
                b = self.to[arc ^ 1];
            }
            let mut b = sink;
            while !is_source[b] {
                let arc = pred_arc[b];
                self.res[arc] -= bottleneck;
                self.res[arc ^ 1] += bottleneck;
                b = self.to[arc ^ 1];
            }
            total += bottleneck;
        }
        total
    }

    /// Vertices reachable from the sources in the residual network.
    pub(crate) fn source_side(&self, is_source: &[bool]) -> Vec<bool> {
        let n = self.n();
        let mut seen = is_source.to_vec();
        let mut stack: Vec<VertexId> = (0..n).filter(|&v| is_source[v]).collect();
        while let Some(a) = stack.pop() {
            for &arc in &self.adj[a] {
                let b = self.to[arc];
                if !seen[b] && self.res[arc] > 0 {
                    seen[b] = true;
                    stack.push(b);
                }
            }
        }
        seen
    }

    /// Residual successors of `a`.
    pub(crate) fn residual_out(&self, a: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.adj[a]
            .iter()
            .filter(|&&arc| self.res[arc] > 0)
            .map(|&arc| self.to[arc])
    }

    /// Residual predecessors of `b`: vertices `a` with residual arc `a -> b`.
    pub(crate) fn residual_in(&self, b: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        // the reverse of arc b -> a is a -> b
        self.adj[b]
            .iter()
            .filter(|&&arc| self.res[arc ^ 1] > 0)
            .map(|&arc| self.to[arc])
    }
}
