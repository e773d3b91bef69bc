//! Exact maximum matching in general simple graphs via augmenting paths with
//! blossom contraction (O(V^3)).
//!
//! Determinism: vertices are scanned in ascending id order, neighbor lists
//! are sorted, and a greedy pass seeds the matching before augmentation, so
//! identical inputs always produce identical matchings.

use crate::error::{Error, Result};
use crate::intersection::IntersectionGraph;
use std::collections::VecDeque;

const NONE: usize = usize::MAX;

/// A matching: vertex-disjoint pairs plus the exposed (unmatched) vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matching {
    pairs: Vec<(usize, usize)>,
    exposed: Vec<usize>,
}

impl Matching {
    /// Matched pairs `(u, v)` with `u < v`, ascending.
    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn exposed(&self) -> &[usize] {
        &self.exposed
    }

    pub fn size(&self) -> usize {
        self.pairs.len()
    }

    /// Checks the matching against its host graph: every pair is an edge, no
    /// vertex repeats, and `exposed` is exactly the complement.
    pub fn validate(&self, g: &IntersectionGraph) -> Result<()> {
        let n = g.vertex_count();
        let mut seen = vec![false; n];
        for &(u, v) in &self.pairs {
            if u >= n || v >= n || !g.is_adjacent(u, v) {
                return Err(Error::TheoryViolation(format!(
                    "pair ({u},{v}) is not an edge of the host graph"
                )));
            }
            if seen[u] || seen[v] {
                return Err(Error::TheoryViolation(format!(
                    "vertex reused by pair ({u},{v})"
                )));
            }
            seen[u] = true;
            seen[v] = true;
        }
        let expect: Vec<usize> = (0..n).filter(|&v| !seen[v]).collect();
        if expect != self.exposed {
            return Err(Error::TheoryViolation("exposed set inconsistent".into()));
        }
        Ok(())
    }
}

struct Blossom<'a> {
    g: &'a IntersectionGraph,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    in_queue: Vec<bool>,
}

impl<'a> Blossom<'a> {
    fn new(g: &'a IntersectionGraph) -> Self {
        let n = g.vertex_count();
        Blossom {
            g,
            mate: vec![NONE; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            in_queue: vec![false; n],
        }
    }

    fn greedy_seed(&mut self) {
        for v in 0..self.g.vertex_count() {
            if self.mate[v] == NONE {
                for &u in self.g.neighbors(v) {
                    if self.mate[u] == NONE {
                        self.mate[v] = u;
                        self.mate[u] = v;
                        break;
                    }
                }
            }
        }
    }

    /// Base of the blossom: least common ancestor of `a` and `b` in the
    /// alternating forest, walking via contracted bases.
    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut used = vec![false; self.g.vertex_count()];
        loop {
            a = self.base[a];
            used[a] = true;
            if self.mate[a] == NONE {
                break; // reached the root
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if used[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize, blossom: &mut [bool]) {
        while self.base[v] != b {
            blossom[self.base[v]] = true;
            blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    /// BFS for an augmenting path from `root`; returns its exposed endpoint.
    fn find_path(&mut self, root: usize) -> Option<usize> {
        let n = self.g.vertex_count();
        self.parent.iter_mut().for_each(|p| *p = NONE);
        self.in_queue.iter_mut().for_each(|q| *q = false);
        for (v, b) in self.base.iter_mut().enumerate() {
            *b = v;
        }
        let mut queue = VecDeque::from([root]);
        self.in_queue[root] = true;
        while let Some(v) = queue.pop_front() {
            for &to in self.g.neighbors(v) {
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    // odd cycle: contract the blossom
                    let b = self.lca(v, to);
                    let mut blossom = vec![false; n];
                    self.mark_path(v, b, to, &mut blossom);
                    self.mark_path(to, b, v, &mut blossom);
                    for i in 0..n {
                        if blossom[self.base[i]] {
                            self.base[i] = b;
                            if !self.in_queue[i] {
                                self.in_queue[i] = true;
                                queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    self.in_queue[self.mate[to]] = true;
                    queue.push_back(self.mate[to]);
                }
            }
        }
        None
    }

    fn augment(&mut self, mut v: usize) {
        while v != NONE {
            let pv = self.parent[v];
            let next = self.mate[pv];
            self.mate[v] = pv;
            self.mate[pv] = v;
            v = next;
        }
    }

    fn run(mut self) -> Matching {
        self.greedy_seed();
        for root in 0..self.g.vertex_count() {
            if self.mate[root] == NONE {
                if let Some(leaf) = self.find_path(root) {
                    self.augment(leaf);
                }
            }
        }
        let mut pairs = Vec::new();
        let mut exposed = Vec::new();
        for v in 0..self.g.vertex_count() {
            match self.mate[v] {
                NONE => exposed.push(v),
                u if v < u => pairs.push((v, u)),
                _ => {}
            }
        }
        Matching { pairs, exposed }
    }
}

/// Maximum-cardinality matching, computed exactly.
pub fn max_matching(g: &IntersectionGraph) -> Matching {
    Blossom::new(g).run()
}

/// A matching missing at most one vertex, which connected vertex-transitive
/// graphs always have. Errors with [`Error::TheoryViolation`] when the
/// maximum matching leaves two or more vertices exposed.
pub fn near_perfect_matching(g: &IntersectionGraph) -> Result<Matching> {
    let m = max_matching(g);
    if m.exposed().len() > 1 {
        return Err(Error::TheoryViolation(format!(
            "expected a near-perfect matching, found {} exposed vertices on {} vertices",
            m.exposed().len(),
            g.vertex_count()
        )));
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::REdge;
    use crate::hypergraph::Hypergraph;

    fn edge(vs: &[usize]) -> REdge {
        REdge::new(vs.to_vec()).unwrap()
    }

    /// Independent exact maximum matching by edge recursion with a
    /// free-vertex bound; only for small instances.
    pub(crate) fn brute_force_matching_size(n: usize, edges: &[(usize, usize)]) -> usize {
        fn rec(
            edges: &[(usize, usize)],
            idx: usize,
            used: &mut [bool],
            free: usize,
            cur: usize,
            best: &mut usize,
        ) {
            *best = (*best).max(cur);
            if idx == edges.len() || cur + free / 2 <= *best {
                return;
            }
            let (u, v) = edges[idx];
            if !used[u] && !used[v] {
                used[u] = true;
                used[v] = true;
                rec(edges, idx + 1, used, free - 2, cur + 1, best);
                used[u] = false;
                used[v] = false;
            }
            rec(edges, idx + 1, used, free, cur, best);
        }
        let mut used = vec![false; n];
        let mut best = 0;
        rec(edges, 0, &mut used, n, 0, &mut best);
        best
    }

    fn graph_edges(g: &IntersectionGraph) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..g.vertex_count() {
            for &v in g.neighbors(u) {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    #[test]
    fn triangle_leaves_one_exposed() {
        // J(3,2,1) is the triangle
        let g = IntersectionGraph::johnson(3, 2, 1).unwrap();
        let m = max_matching(&g);
        assert_eq!(m.size(), 1);
        assert_eq!(m.exposed().len(), 1);
        m.validate(&g).unwrap();
    }

    #[test]
    fn petersen_has_perfect_matching() {
        let g = IntersectionGraph::johnson(5, 2, 0).unwrap();
        let m = max_matching(&g);
        assert_eq!(m.size(), 5);
        assert!(m.exposed().is_empty());
        m.validate(&g).unwrap();
    }

    #[test]
    fn johnson_631_matches_brute_force() {
        let g = IntersectionGraph::johnson(6, 3, 1).unwrap();
        let m = max_matching(&g);
        assert_eq!(m.size(), 10);
        assert_eq!(m.size(), brute_force_matching_size(20, &graph_edges(&g)));
    }

    #[test]
    fn odd_johnson_leaves_one_exposed() {
        let g = IntersectionGraph::johnson(7, 3, 1).unwrap();
        let m = near_perfect_matching(&g).unwrap();
        assert_eq!(m.size(), 17);
        assert_eq!(m.exposed().len(), 1);
    }

    #[test]
    fn near_perfect_on_even_johnson() {
        for (n, r, k) in [(5, 3, 1), (5, 2, 1)] {
            let g = IntersectionGraph::johnson(n, r, k).unwrap();
            let m = near_perfect_matching(&g).unwrap();
            assert_eq!(m.size(), g.vertex_count() / 2);
            assert!(m.exposed().is_empty());
        }
    }

    #[test]
    fn theory_violation_on_scattered_graph() {
        let g = Hypergraph::new(4, 3, vec![edge(&[0, 1, 2]), edge(&[0, 1, 3])]).unwrap();
        let d = IntersectionGraph::disjointness(&g);
        assert!(matches!(
            near_perfect_matching(&d),
            Err(Error::TheoryViolation(_))
        ));
    }

    #[test]
    fn blossom_handles_odd_cycles() {
        // odd cycle C_5 forced through two triangles sharing structure:
        // build a 5-cycle as a disjointness graph is awkward, use Petersen
        // minus checks instead: exercised via the random comparison below.
        let grids = [
            (4, 2, 1),
            (5, 2, 1),
            (5, 2, 0),
            (6, 2, 1),
            (6, 3, 2),
            (7, 3, 2),
            (7, 2, 1),
            (7, 2, 0),
        ];
        for (n, r, k) in grids {
            let g = IntersectionGraph::johnson(n, r, k).unwrap();
            if g.vertex_count() > 22 {
                continue;
            }
            let m = max_matching(&g);
            m.validate(&g).unwrap();
            assert_eq!(
                m.size(),
                brute_force_matching_size(g.vertex_count(), &graph_edges(&g)),
                "mismatch on J({n},{r},{k})"
            );
        }
    }

    #[test]
    fn determinism() {
        let g = IntersectionGraph::johnson(7, 3, 1).unwrap();
        let a = max_matching(&g);
        let b = max_matching(&g);
        assert_eq!(a, b);
    }
}
