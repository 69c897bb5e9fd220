//! Indexed binary min-heap over vertex degrees.
//!
//! Keeps the minimum degree `δ` available in `O(1)`; the trivial cut of a
//! vertex is its degree, so `δ` is an upper bound on the minimum cut that the
//! exact algorithm needs at every query.

use alloc::vec::Vec;

use crate::graph::VertexId;
use crate::{Error, Result};

#[derive(Clone, Debug)]
pub struct DegreeHeap {
    heap: Vec<VertexId>,
    pos: Vec<usize>,
    key: Vec<usize>,
}

impl DegreeHeap {
    /// Heap over `n` vertices of degree zero.
    pub fn new(n: usize) -> Self {
        DegreeHeap {
            heap: (0..n).collect(),
            pos: (0..n).collect(),
            key: alloc::vec![0; n],
        }
    }

    /// Bottom-up heap construction in `O(n)`.
    pub fn from_degrees(degrees: &[usize]) -> Self {
        let n = degrees.len();
        let mut h = DegreeHeap {
            heap: (0..n).collect(),
            pos: (0..n).collect(),
            key: degrees.to_vec(),
        };
        for i in (0..n / 2).rev() {
            h.sift_down(i);
        }
        h
    }

    pub fn len(&self) -> usize {
        self.heap.len()
    }

    pub fn is_empty(&self) -> bool {
        self.heap.is_empty()
    }

    /// A vertex of minimum degree and that degree.
    ///
    /// # Panics
    /// On an empty heap; every structure in this crate has `n >= 1`.
    pub fn min(&self) -> (VertexId, usize) {
        let v = self.heap[0];
        (v, self.key[v])
    }

    pub fn min_degree(&self) -> usize {
        self.min().1
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.key[v]
    }

    /// Raises the keys of both endpoints of a newly inserted edge by one.
    pub fn update_endpoints(&mut self, u: VertexId, v: VertexId) -> Result<()> {
        let n = self.len();
        for x in [u, v] {
            if x >= n {
                return Err(Error::VertexOutOfRange { vertex: x, n });
            }
        }
        self.increment(u);
        self.increment(v);
        Ok(())
    }

    fn increment(&mut self, v: VertexId) {
        self.key[v] += 1;
        // keys only grow
        self.sift_down(self.pos[v]);
    }

    fn sift_down(&mut self, mut i: usize) {
        let n = self.heap.len();
        loop {
            let (l, r) = (2 * i + 1, 2 * i + 2);
            let mut best = i;
            if l < n && self.key[self.heap[l]] < self.key[self.heap[best]] {
                best = l;
            }
            if r < n && self.key[self.heap[r]] < self.key[self.heap[best]] {
                best = r;
            }
            if best == i {
                return;
            }
            self.swap(i, best);
            i = best;
        }
    }

    fn swap(&mut self, i: usize, j: usize) {
        self.heap.swap(i, j);
        self.pos[self.heap[i]] = i;
        self.pos[self.heap[j]] = j;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn minimum_of_small_graphs() {
        assert_eq!(DegreeHeap::new(3).min_degree(), 0);
        let star = DegreeHeap::from_degrees(&[3, 1, 1, 1]);
        let (v, d) = star.min();
        assert_eq!(d, 1);
        assert_ne!(v, 0);
        assert_eq!(DegreeHeap::from_degrees(&[3, 3, 3, 3]).min_degree(), 3);
    }

    #[test]
    fn update_endpoints_examples() {
        let mut h = DegreeHeap::new(2);
        h.update_endpoints(0, 1).unwrap();
        assert_eq!(h.min_degree(), 1);
        h.update_endpoints(0, 1).unwrap();
        assert_eq!(h.min_degree(), 2);

        let mut h = DegreeHeap::new(3);
        h.update_endpoints(0, 1).unwrap();
        assert_eq!(h.min(), (2, 0));
        assert!(h.update_endpoints(0, 3).is_err());
    }

    proptest! {
        #[test]
        fn min_tracks_recomputation(edges in prop::collection::vec((0usize..9, 0usize..9), 0..80)) {
            let mut h = DegreeHeap::new(9);
            let mut deg = [0usize; 9];
            for (u, v) in edges {
                if u == v { continue; }
                h.update_endpoints(u, v).unwrap();
                deg[u] += 1;
                deg[v] += 1;
                let (w, d) = h.min();
                prop_assert_eq!(d, *deg.iter().min().unwrap());
                prop_assert_eq!(deg[w], d);
            }
        }
    }
}
