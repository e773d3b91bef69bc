//! r-uniform hypergraphs on labeled vertices, the complete generator, and the
//! canonical near-complete family used by the extremal results.

use crate::combinatorics::{binomial, binomial_usize, unrank_edge, EdgeId, REdge};
use crate::error::{Error, Result};
use num::traits::ToPrimitive;
use serde::ser::SerializeStruct;
use serde::{Deserialize, Serialize, Serializer};

/// An r-uniform hypergraph on `n` labeled vertices.
///
/// The edge list is kept sorted colexicographically and free of duplicates,
/// so equal hypergraphs compare equal and every serialization is canonical.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Hypergraph {
    n: usize,
    r: usize,
    edges: Vec<REdge>,
}

impl Hypergraph {
    /// Builds a hypergraph from an arbitrary edge list. The list is sorted
    /// into canonical order; duplicate or out-of-range edges are rejected.
    pub fn new(n: usize, r: usize, mut edges: Vec<REdge>) -> Result<Self> {
        if r == 0 {
            return Err(Error::InvalidParameter("uniformity r must be >= 1".into()));
        }
        for e in &edges {
            if e.uniformity() != r {
                return Err(Error::MalformedEdge(format!(
                    "edge {e} has {} vertices, expected {r}",
                    e.uniformity()
                )));
            }
            if e.max_label() >= n {
                return Err(Error::MalformedEdge(format!(
                    "edge {e} uses a label >= n={n}"
                )));
            }
        }
        edges.sort_unstable();
        if edges.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::MalformedEdge("duplicate edge".into()));
        }
        Ok(Hypergraph { n, r, edges })
    }

    pub fn empty(n: usize, r: usize) -> Result<Self> {
        Self::new(n, r, Vec::new())
    }

    /// The complete r-graph: all C(n, r) edges in colexicographic order.
    pub fn complete(n: usize, r: usize) -> Result<Self> {
        if r == 0 || n < r {
            return Err(Error::InvalidParameter(format!(
                "complete r-graph needs n >= r >= 1, got n={n} r={r}"
            )));
        }
        let total = binomial_usize(n, r)
            .ok_or_else(|| Error::InvalidParameter(format!("C({n},{r}) overflows usize")))?;
        let edges = (0..total)
            .map(|id| unrank_edge(EdgeId(id), n, r))
            .collect::<Result<Vec<_>>>()?;
        Ok(Hypergraph { n, r, edges })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn uniformity(&self) -> usize {
        self.r
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in colexicographic order.
    pub fn edges(&self) -> &[REdge] {
        &self.edges
    }

    pub fn is_edge(&self, e: &REdge) -> bool {
        self.edges.binary_search(e).is_ok()
    }

    /// Position of `e` in the canonical edge order.
    pub fn edge_index(&self, e: &REdge) -> Option<usize> {
        self.edges.binary_search(e).ok()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|e| e.contains(v)).count()
    }

    /// Minimum degree over all `n` vertices (isolated vertices count).
    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// Removes the given edges; every deletion must be present exactly once.
    pub fn remove_edges(&self, deletions: &[REdge]) -> Result<Self> {
        let mut del = deletions.to_vec();
        del.sort_unstable();
        if del.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidParameter("duplicate deletion".into()));
        }
        for e in &del {
            if !self.is_edge(e) {
                return Err(Error::InvalidParameter(format!("edge {e} not present")));
            }
        }
        let edges = self
            .edges
            .iter()
            .filter(|e| del.binary_search(e).is_err())
            .cloned()
            .collect();
        Ok(Hypergraph { n: self.n, r: self.r, edges })
    }

    /// Drops the `count` colexicographically largest edges.
    pub fn without_colex_largest(&self, count: usize) -> Result<Self> {
        if count > self.edges.len() {
            return Err(Error::InvalidParameter(format!(
                "cannot delete {count} of {} edges",
                self.edges.len()
            )));
        }
        let mut edges = self.edges.clone();
        edges.truncate(self.edges.len() - count);
        Ok(Hypergraph { n: self.n, r: self.r, edges })
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(self).expect("hypergraph serializes infallibly")
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }
}

impl Serialize for Hypergraph {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("Hypergraph", 3)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("r", &self.r)?;
        st.serialize_field("edges", &self.edges)?;
        st.end()
    }
}

#[derive(Deserialize)]
struct HypergraphRaw {
    n: usize,
    r: usize,
    edges: Vec<REdge>,
}

impl<'de> Deserialize<'de> for Hypergraph {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        let raw = HypergraphRaw::deserialize(deserializer)?;
        Hypergraph::new(raw.n, raw.r, raw.edges).map_err(serde::de::Error::custom)
    }
}

/// The unique l in [0, k-1] with C(n,r) - l = k-1 (mod k).
pub fn ell_value(n: usize, r: usize, k: usize) -> Result<usize> {
    if k == 0 {
        return Err(Error::InvalidParameter("k must be >= 1".into()));
    }
    let c_mod = (binomial(n, r) % k)
        .to_usize()
        .expect("residue fits usize");
    Ok((c_mod + 1) % k)
}

/// Canonical member of the near-complete family: the complete r-graph minus
/// its l colex-largest edges, where l = [`ell_value`]`(n, r, k)`. The edge
/// count is k-1 (mod k) by construction.
pub fn extremal_candidate(n: usize, r: usize, k: usize) -> Result<Hypergraph> {
    let ell = ell_value(n, r, k)?;
    Hypergraph::complete(n, r)?.without_colex_largest(ell)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::rank_edge;

    fn edge(vs: &[usize]) -> REdge {
        REdge::new(vs.to_vec()).unwrap()
    }

    #[test]
    fn complete_edge_counts() {
        assert_eq!(Hypergraph::complete(4, 2).unwrap().edge_count(), 6);
        assert_eq!(Hypergraph::complete(5, 3).unwrap().edge_count(), 10);
        assert_eq!(Hypergraph::complete(11, 2).unwrap().edge_count(), 55);
    }

    #[test]
    fn complete_rejects_n_below_r() {
        assert!(Hypergraph::complete(2, 3).is_err());
    }

    #[test]
    fn complete_edge_order_matches_ranks() {
        let g = Hypergraph::complete(6, 3).unwrap();
        for (i, e) in g.edges().iter().enumerate() {
            assert_eq!(rank_edge(e, 6).unwrap().0, i);
        }
    }

    #[test]
    fn degrees_of_complete_graph() {
        let g = Hypergraph::complete(7, 3).unwrap();
        // every vertex lies in C(6,2) = 15 edges
        for v in 0..7 {
            assert_eq!(g.degree(v), 15);
        }
        assert_eq!(g.min_degree(), 15);
    }

    #[test]
    fn ell_values() {
        assert_eq!(ell_value(11, 2, 2).unwrap(), 0); // 55 = 1 (mod 2)
        assert_eq!(ell_value(21, 2, 3).unwrap(), 1); // 210 = 0, need 2 (mod 3)
        for n in 2..10 {
            assert_eq!(ell_value(n, 2, 1).unwrap(), 0);
        }
        assert!(ell_value(5, 2, 0).is_err());
    }

    #[test]
    fn extremal_candidate_examples() {
        let g = extremal_candidate(11, 2, 2).unwrap();
        assert_eq!(g.edge_count(), 55); // l = 0: the complete graph itself
        let g = extremal_candidate(21, 2, 3).unwrap();
        assert_eq!(g.edge_count(), 209);
    }

    #[test]
    fn extremal_candidate_congruence_grid() {
        for r in 1..=4usize {
            for n in r..=12 {
                for k in 1..=4usize {
                    match extremal_candidate(n, r, k) {
                        Ok(g) => assert_eq!(
                            g.edge_count() % k,
                            (k - 1) % k,
                            "congruence fails at ({n},{r},{k})"
                        ),
                        // family can be empty when C(n,r) < l
                        Err(_) => assert!(binomial_usize(n, r).unwrap() < k),
                    }
                }
            }
        }
    }

    #[test]
    fn duplicate_and_invalid_edges_rejected() {
        let e = edge(&[0, 1]);
        assert!(Hypergraph::new(3, 2, vec![e.clone(), e.clone()]).is_err());
        assert!(Hypergraph::new(3, 2, vec![edge(&[0, 1, 2])]).is_err());
        assert!(Hypergraph::new(2, 2, vec![edge(&[1, 2])]).is_err());
    }

    #[test]
    fn remove_edges_strictness() {
        let g = Hypergraph::complete(4, 2).unwrap();
        let removed = g.remove_edges(&[edge(&[0, 1])]).unwrap();
        assert_eq!(removed.edge_count(), 5);
        assert!(removed.remove_edges(&[edge(&[0, 1])]).is_err());
    }

    #[test]
    fn json_roundtrip_and_rejection() {
        let g = Hypergraph::complete(5, 3).unwrap();
        let s = g.to_json_string();
        assert_eq!(Hypergraph::from_json_str(&s).unwrap(), g);

        // readers reject unsorted vertex lists and duplicate edges
        assert!(Hypergraph::from_json_str(r#"{"n":3,"r":2,"edges":[[1,0]]}"#).is_err());
        assert!(
            Hypergraph::from_json_str(r#"{"n":3,"r":2,"edges":[[0,1],[0,1]]}"#).is_err()
        );
        let ok = Hypergraph::from_json_str(r#"{"n":3,"r":2,"edges":[[0,2],[0,1]]}"#).unwrap();
        assert_eq!(ok.edge_count(), 2);
    }
}
