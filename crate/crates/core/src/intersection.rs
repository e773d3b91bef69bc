//! Intersection graphs over edge identifiers: the generalized Johnson graph
//! J(n, r, k) (vertices are all r-subsets of [0, n), adjacency = intersection
//! of size exactly k) and the disjointness graph of an arbitrary hypergraph.
//!
//! Vertices carry their r-subset labels; for graphs built over the complete
//! r-graph the vertex index equals the colexicographic rank of the label.

use crate::combinatorics::REdge;
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use serde::Serialize;
use std::collections::VecDeque;
use std::fmt::Write as _;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GraphKind {
    Johnson { n: usize, r: usize, k: usize },
    Disjointness,
    IntersectionK { k: usize },
}

/// A simple graph over edge identifiers with sorted adjacency lists and an
/// id -> r-subset label table. Immutable once built.
#[derive(Clone, Debug, PartialEq)]
pub struct IntersectionGraph {
    kind: GraphKind,
    labels: Vec<REdge>,
    adjacency: Vec<Vec<usize>>,
}

fn build_adjacency(labels: &[REdge], target: usize) -> Vec<Vec<usize>> {
    let m = labels.len();
    let mut adjacency = vec![Vec::new(); m];
    for u in 0..m {
        for v in u + 1..m {
            if labels[u].intersection_size(&labels[v]) == target {
                adjacency[u].push(v);
                adjacency[v].push(u);
            }
        }
    }
    // upper/lower sweep already emits each list in ascending order
    adjacency
}

impl IntersectionGraph {
    /// The generalized Johnson graph J(n, r, k). Self-intersections are not
    /// edges, so k = r yields the edgeless graph on C(n, r) vertices.
    pub fn johnson(n: usize, r: usize, k: usize) -> Result<Self> {
        if r == 0 || r > n || k > r {
            return Err(Error::InvalidParameter(format!(
                "J(n,r,k) needs 1 <= r <= n and 0 <= k <= r, got n={n} r={r} k={k}"
            )));
        }
        let host = Hypergraph::complete(n, r)?;
        let labels = host.edges().to_vec();
        let adjacency = build_adjacency(&labels, k);
        Ok(IntersectionGraph { kind: GraphKind::Johnson { n, r, k }, labels, adjacency })
    }

    /// The disjointness graph: vertex set E(G), adjacency = empty
    /// intersection. For the complete r-graph this equals J(n, r, 0).
    pub fn disjointness(g: &Hypergraph) -> Self {
        let labels = g.edges().to_vec();
        let adjacency = build_adjacency(&labels, 0);
        IntersectionGraph { kind: GraphKind::Disjointness, labels, adjacency }
    }

    /// Graph on E(G) with adjacency "intersection has size exactly k".
    pub fn intersection_k(g: &Hypergraph, k: usize) -> Self {
        let labels = g.edges().to_vec();
        let adjacency = build_adjacency(&labels, k);
        IntersectionGraph { kind: GraphKind::IntersectionK { k }, labels, adjacency }
    }

    pub fn kind(&self) -> GraphKind {
        self.kind
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn min_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn is_adjacent(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    pub fn label(&self, v: usize) -> &REdge {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[REdge] {
        &self.labels
    }

    /// Vertex id of a label, by binary search in colexicographic order.
    pub fn vertex_of(&self, e: &REdge) -> Option<usize> {
        self.labels.binary_search(e).ok()
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        if n <= 1 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = queue.pop_front() {
            for &u in &self.adjacency[v] {
                if !seen[u] {
                    seen[u] = true;
                    count += 1;
                    queue.push_back(u);
                }
            }
        }
        count == n
    }

    /// Shortest path between two vertices (inclusive of endpoints), by
    /// breadth-first search. The walk-construction fallback.
    pub fn shortest_path(&self, from: usize, to: usize) -> Option<Vec<usize>> {
        if from == to {
            return Some(vec![from]);
        }
        let n = self.vertex_count();
        let mut parent = vec![usize::MAX; n];
        let mut queue = VecDeque::from([from]);
        parent[from] = from;
        while let Some(v) = queue.pop_front() {
            for &u in &self.adjacency[v] {
                if parent[u] == usize::MAX {
                    parent[u] = v;
                    if u == to {
                        let mut path = vec![to];
                        let mut cur = to;
                        while cur != from {
                            cur = parent[cur];
                            path.push(cur);
                        }
                        path.reverse();
                        return Some(path);
                    }
                    queue.push_back(u);
                }
            }
        }
        None
    }

    /// Solver-friendly text export: `p edge <N> <M>` then one `e <u> <v>`
    /// line per edge, 1-based.
    pub fn to_dimacs(&self) -> String {
        let mut out = String::new();
        writeln!(out, "p edge {} {}", self.vertex_count(), self.edge_count()).unwrap();
        for u in 0..self.vertex_count() {
            for &v in &self.adjacency[u] {
                if u < v {
                    writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
                }
            }
        }
        out
    }

    pub fn to_json_string(&self) -> String {
        #[derive(Serialize)]
        struct GraphJson<'a> {
            kind: &'a GraphKind,
            vertex_count: usize,
            labels: &'a [REdge],
            adjacency: &'a [Vec<usize>],
        }
        serde_json::to_string(&GraphJson {
            kind: &self.kind,
            vertex_count: self.vertex_count(),
            labels: &self.labels,
            adjacency: &self.adjacency,
        })
        .expect("graph serializes infallibly")
    }
}

/// Lowest `count` labels of `[0, n)` avoiding `exclude` (sorted).
fn fresh_labels(n: usize, exclude: &[usize], count: usize, needed_hint: usize) -> Result<Vec<usize>> {
    let mut out = Vec::with_capacity(count);
    let mut ex = exclude.iter().peekable();
    let mut v = 0;
    while out.len() < count && v < n {
        match ex.peek() {
            Some(&&e) if e == v => {
                ex.next();
            }
            Some(&&e) if e < v => {
                ex.next();
                continue;
            }
            _ => out.push(v),
        }
        v += 1;
    }
    if out.len() < count {
        return Err(Error::ConstructionOutOfRange { needed: needed_hint, n });
    }
    Ok(out)
}

fn sorted_edge(mut vs: Vec<usize>) -> REdge {
    vs.sort_unstable();
    REdge::new(vs).expect("constructed labels are distinct")
}

/// A walk from `e` to `f` in J(n, r, k): consecutive edges intersect in
/// exactly `k` vertices.
///
/// Built by downward induction on i = |e meet f|. At i = r-1 the bridge keeps
/// the k lowest common labels and takes r-k fresh labels outside the union;
/// at i < r-1 the walk routes through an intermediate edge made of the common
/// part, one label private to `e`, and r-i-1 labels private to `f`. Fresh
/// labels are always the lowest available, so the output is deterministic.
///
/// Fails with [`Error::ConstructionOutOfRange`] when a bridge would need a
/// label beyond `n` (possible at the boundary n = 2r-k with k >= 1); callers
/// fall back to [`IntersectionGraph::shortest_path`].
pub fn connecting_walk(e: &REdge, f: &REdge, n: usize, r: usize, k: usize) -> Result<Vec<REdge>> {
    for g in [e, f] {
        if g.uniformity() != r {
            return Err(Error::MalformedEdge(format!("{g} is not {r}-uniform")));
        }
        if g.max_label() >= n {
            return Err(Error::MalformedEdge(format!("{g} uses a label >= n={n}")));
        }
    }
    if e == f {
        return Ok(vec![e.clone()]);
    }
    if k >= r {
        return Err(Error::InvalidParameter(format!(
            "walks need k < r for distinct endpoints, got r={r} k={k}"
        )));
    }
    walk_rec(e, f, n, k)
}

fn walk_rec(e: &REdge, f: &REdge, n: usize, k: usize) -> Result<Vec<REdge>> {
    let r = e.uniformity();
    let common = e.intersection(f);
    let i = common.len();
    if i == r {
        return Ok(vec![e.clone()]);
    }
    if i == r - 1 {
        let union = e.union(f); // r + 1 labels
        let fresh = fresh_labels(n, &union, r - k, 2 * r + 1 - k)?;
        let mut h = common[..k].to_vec();
        h.extend(fresh);
        return Ok(vec![e.clone(), sorted_edge(h), f.clone()]);
    }
    // i < r-1: intermediate edge with |e meet h| = i+1 and |f meet h| = r-1
    let e_only: Vec<usize> = e
        .vertices()
        .iter()
        .filter(|v| !f.contains(**v))
        .copied()
        .collect();
    let f_only: Vec<usize> = f
        .vertices()
        .iter()
        .filter(|v| !e.contains(**v))
        .copied()
        .collect();
    let mut h = common.clone();
    h.push(e_only[0]);
    h.extend_from_slice(&f_only[..r - i - 1]);
    let h = sorted_edge(h);

    let mut walk = walk_rec(e, &h, n, k)?;
    let tail = walk_rec(&h, f, n, k)?;
    walk.extend(tail.into_iter().skip(1));
    Ok(walk)
}

/// The complementation map proving J(n, r, k) isomorphic to
/// J(n, n-r, n-2r+k): position `u` holds the vertex of the target graph whose
/// label is the complement of label `u`. Adjacency preservation is verified
/// on the two constructed graphs before returning.
pub fn complement_isomorphism(n: usize, r: usize, k: usize) -> Result<Vec<usize>> {
    if r == 0 || r >= n || k > r || 2 * r > n + k {
        return Err(Error::InvalidParameter(format!(
            "complement map needs 1 <= r < n, k <= r, n-2r+k >= 0; got n={n} r={r} k={k}"
        )));
    }
    let source = IntersectionGraph::johnson(n, r, k)?;
    let target = IntersectionGraph::johnson(n, n - r, n + k - 2 * r)?;
    let mut map = Vec::with_capacity(source.vertex_count());
    for u in 0..source.vertex_count() {
        let label = source.label(u);
        let complement: Vec<usize> = (0..n).filter(|v| !label.contains(*v)).collect();
        let image = target
            .vertex_of(&REdge::new(complement).expect("complement is sorted"))
            .expect("complement is a valid (n-r)-subset");
        map.push(image);
    }
    for u in 0..source.vertex_count() {
        for v in u + 1..source.vertex_count() {
            if source.is_adjacent(u, v) != target.is_adjacent(map[u], map[v]) {
                return Err(Error::TheoryViolation(format!(
                    "complement map fails to preserve adjacency at ({u},{v}) for J({n},{r},{k})"
                )));
            }
        }
    }
    Ok(map)
}
