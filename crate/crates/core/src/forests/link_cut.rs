//! Splay-based link-cut trees with path-maximum queries.
//!
//! Tree edges are nodes of their own, so a path aggregate over nodes is an
//! aggregate over edges. Vertex nodes carry no key.

use alloc::vec::Vec;

const NIL: usize = usize::MAX;

#[derive(Clone, Debug)]
struct Node<K> {
    ch: [usize; 2],
    parent: usize,
    rev: bool,
    key: Option<K>,
    // node holding the largest key in this splay subtree, NIL if none
    best: usize,
}

#[derive(Clone, Debug)]
pub struct LinkCutForest<K> {
    nodes: Vec<Node<K>>,
}

impl<K: Ord + Copy> LinkCutForest<K> {
    /// A forest of `n` isolated keyless nodes.
    pub fn new(n: usize) -> Self {
        let mut f = LinkCutForest { nodes: Vec::with_capacity(2 * n) };
        for _ in 0..n {
            f.push_node(None);
        }
        f
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Adds an isolated node and returns its index.
    pub fn push_node(&mut self, key: Option<K>) -> usize {
        let id = self.nodes.len();
        self.nodes.push(Node {
            ch: [NIL, NIL],
            parent: NIL,
            rev: false,
            key,
            best: if key.is_some() { id } else { NIL },
        });
        id
    }

    /// Resets an isolated node for reuse.
    pub fn reset_node(&mut self, x: usize, key: Option<K>) {
        let node = &mut self.nodes[x];
        debug_assert!(node.parent == NIL && node.ch == [NIL, NIL]);
        node.rev = false;
        node.key = key;
        node.best = if key.is_some() { x } else { NIL };
    }

    pub fn key(&self, x: usize) -> Option<K> {
        self.nodes[x].key
    }

    fn is_root(&self, x: usize) -> bool {
        let p = self.nodes[x].parent;
        p == NIL || (self.nodes[p].ch[0] != x && self.nodes[p].ch[1] != x)
    }

    fn better(&self, a: usize, b: usize) -> usize {
        match (a, b) {
            (NIL, _) => b,
            (_, NIL) => a,
            _ => {
                if self.nodes[a].key >= self.nodes[b].key {
                    a
                } else {
                    b
                }
            }
        }
    }

    fn pull(&mut self, x: usize) {
        let [l, r] = self.nodes[x].ch;
        let own = if self.nodes[x].key.is_some() { x } else { NIL };
        let mut best = own;
        if l != NIL {
            best = self.better(self.nodes[l].best, best);
        }
        if r != NIL {
            best = self.better(best, self.nodes[r].best);
        }
        self.nodes[x].best = best;
    }

    fn push(&mut self, x: usize) {
        if self.nodes[x].rev {
            self.nodes[x].rev = false;
            self.nodes[x].ch.swap(0, 1);
            for c in self.nodes[x].ch {
                if c != NIL {
                    self.nodes[c].rev ^= true;
                }
            }
        }
    }

    fn rotate(&mut self, x: usize) {
        let p = self.nodes[x].parent;
        let g = self.nodes[p].parent;
        let dir = usize::from(self.nodes[p].ch[1] == x);
        let inner = self.nodes[x].ch[dir ^ 1];
        if !self.is_root(p) {
            let slot = usize::from(self.nodes[g].ch[1] == p);
            self.nodes[g].ch[slot] = x;
        }
        self.nodes[x].parent = g;
        self.nodes[x].ch[dir ^ 1] = p;
        self.nodes[p].parent = x;
        self.nodes[p].ch[dir] = inner;
        if inner != NIL {
            self.nodes[inner].parent = p;
        }
        self.pull(p);
        self.pull(x);
    }

    fn splay(&mut self, x: usize) {
        let mut path = Vec::new();
        let mut y = x;
        path.push(y);
        while !self.is_root(y) {
            y = self.nodes[y].parent;
            path.push(y);
        }
        for &z in path.iter().rev() {
            self.push(z);
        }
        while !self.is_root(x) {
            let p = self.nodes[x].parent;
            if !self.is_root(p) {
                let g = self.nodes[p].parent;
                let zigzig = (self.nodes[g].ch[0] == p) == (self.nodes[p].ch[0] == x);
                self.rotate(if zigzig { p } else { x });
            }
            self.rotate(x);
        }
    }

    fn access(&mut self, x: usize) {
        let mut last = NIL;
        let mut y = x;
        while y != NIL {
            self.splay(y);
            self.nodes[y].ch[1] = last;
            self.pull(y);
            last = y;
            y = self.nodes[y].parent;
        }
        self.splay(x);
    }

    fn make_root(&mut self, x: usize) {
        self.access(x);
        self.nodes[x].rev ^= true;
        self.push(x);
    }

    fn find_root(&mut self, x: usize) -> usize {
        self.access(x);
        let mut r = x;
        loop {
            self.push(r);
            let l = self.nodes[r].ch[0];
            if l == NIL {
                break;
            }
            r = l;
        }
        self.splay(r);
        r
    }

    pub fn connected(&mut self, a: usize, b: usize) -> bool {
        a == b || self.find_root(a) == self.find_root(b)
    }

    /// Joins the trees of `a` and `b` with a tree edge `a - b`.
    /// The two nodes must lie in different trees.
    pub fn link(&mut self, a: usize, b: usize) {
        self.make_root(a);
        debug_assert!(self.find_root(b) != a);
        self.make_root(a);
        self.nodes[a].parent = b;
    }

    /// Removes the tree edge `a - b`, which must exist.
    pub fn cut(&mut self, a: usize, b: usize) {
        self.make_root(a);
        self.access(b);
        // b's splay tree now holds exactly the path a..b, so a is b's left child
        debug_assert_eq!(self.nodes[b].ch[0], a);
        self.nodes[b].ch[0] = NIL;
        self.nodes[a].parent = NIL;
        self.pull(b);
    }

    /// Node with the largest key on the tree path `a .. b`, if connected.
    pub fn path_max(&mut self, a: usize, b: usize) -> Option<usize> {
        if !self.connected(a, b) {
            return None;
        }
        self.make_root(a);
        self.access(b);
        let best = self.nodes[b].best;
        (best != NIL).then_some(best)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use proptest::prelude::*;

    // Naive forest over the same operations: adjacency lists and DFS.
    struct Naive {
        adj: Vec<Vec<(usize, u32)>>,
    }

    impl Naive {
        fn path_max(&self, a: usize, b: usize) -> Option<Option<u32>> {
            let n = self.adj.len();
            let mut best = vec![None; n];
            let mut seen = vec![false; n];
            let mut stack = vec![(a, None::<u32>)];
            seen[a] = true;
            while let Some((x, m)) = stack.pop() {
                best[x] = Some(m);
                for &(y, w) in &self.adj[x] {
                    if !seen[y] {
                        seen[y] = true;
                        stack.push((y, m.max(Some(w))));
                    }
                }
            }
            best[b]
        }
    }

    proptest! {
        #[test]
        fn path_max_matches_naive_walk(ops in prop::collection::vec((0usize..10, 0usize..10, 0u32..1000, any::<bool>()), 1..120)) {
            let n = 10;
            let mut lct: LinkCutForest<u32> = LinkCutForest::new(n);
            let mut naive = Naive { adj: vec![Vec::new(); n] };
            let mut tree_edges: Vec<(usize, usize, usize, u32)> = Vec::new();
            for (a, b, w, remove) in ops {
                if remove && !tree_edges.is_empty() {
                    let (x, y, node, key) = tree_edges.remove(w as usize % tree_edges.len());
                    lct.cut(x, node);
                    lct.cut(node, y);
                    naive.adj[x].retain(|&(z, k)| !(z == y && k == key));
                    naive.adj[y].retain(|&(z, k)| !(z == x && k == key));
                    continue;
                }
                if a == b {
                    continue;
                }
                let expected = naive.path_max(a, b);
                let got = lct.path_max(a, b).map(|x| lct.key(x));
                prop_assert_eq!(got.is_some(), expected.is_some());
                prop_assert_eq!(lct.connected(a, b), expected.is_some());
                if let (Some(g), Some(e)) = (got, expected) {
                    prop_assert_eq!(g, e);
                } else {
                    let node = lct.push_node(Some(w));
                    lct.link(a, node);
                    lct.link(node, b);
                    naive.adj[a].push((b, w));
                    naive.adj[b].push((a, w));
                    tree_edges.push((a, b, node, w));
                }
            }
        }
    }
}
