//! The three target patterns: two edges meeting in exactly `k` vertices,
//! `k` pairwise-disjoint edges, and `k` edges whose pairwise intersections
//! all equal one common `i`-set.

use crate::combinatorics::REdge;
use crate::error::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PatternKind {
    /// Exactly two edges with intersection of size `k` (0 <= k <= r-1).
    TwoEdgeIntersect { k: usize },
    /// Exactly `k >= 1` pairwise-disjoint edges.
    IndependentEdges { k: usize },
    /// Exactly `k >= 1` edges whose pairwise intersections all equal one
    /// common set of size `i` (0 <= i <= r-1).
    CommonIntersection { k: usize, i: usize },
}

/// A target subhypergraph description together with its uniformity.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct PatternH {
    kind: PatternKind,
    r: usize,
}

impl PatternH {
    pub fn two_edge(r: usize, k: usize) -> Result<Self> {
        if r == 0 || k + 1 > r {
            return Err(Error::InvalidParameter(format!(
                "two-edge pattern needs 0 <= k <= r-1, got r={r} k={k}"
            )));
        }
        Ok(PatternH { kind: PatternKind::TwoEdgeIntersect { k }, r })
    }

    pub fn independent_edges(r: usize, k: usize) -> Result<Self> {
        if r == 0 || k == 0 {
            return Err(Error::InvalidParameter(format!(
                "independent-edges pattern needs r >= 1, k >= 1, got r={r} k={k}"
            )));
        }
        Ok(PatternH { kind: PatternKind::IndependentEdges { k }, r })
    }

    pub fn common_intersection(r: usize, k: usize, i: usize) -> Result<Self> {
        if r == 0 || k == 0 || i + 1 > r {
            return Err(Error::InvalidParameter(format!(
                "common-intersection pattern needs k >= 1 and 0 <= i <= r-1, got r={r} k={k} i={i}"
            )));
        }
        Ok(PatternH { kind: PatternKind::CommonIntersection { k, i }, r })
    }

    pub fn kind(&self) -> PatternKind {
        self.kind
    }

    pub fn uniformity(&self) -> usize {
        self.r
    }

    /// Number of edges in a copy.
    pub fn edge_count(&self) -> usize {
        match self.kind {
            PatternKind::TwoEdgeIntersect { .. } => 2,
            PatternKind::IndependentEdges { k } => k,
            PatternKind::CommonIntersection { k, .. } => k,
        }
    }

    /// Number of vertices a copy spans.
    pub fn span(&self) -> usize {
        match self.kind {
            PatternKind::TwoEdgeIntersect { k } => 2 * self.r - k,
            PatternKind::IndependentEdges { k } => k * self.r,
            PatternKind::CommonIntersection { k, i } => i + k * (self.r - i),
        }
    }

    /// For patterns with exactly two edges, the required intersection size of
    /// the pair; `None` otherwise.
    pub fn pair_intersection(&self) -> Option<usize> {
        match self.kind {
            PatternKind::TwoEdgeIntersect { k } => Some(k),
            PatternKind::IndependentEdges { k: 2 } => Some(0),
            PatternKind::CommonIntersection { k: 2, i } => Some(i),
            _ => None,
        }
    }

    /// Stable label used in reports and CLI output.
    pub fn label(&self) -> String {
        match self.kind {
            PatternKind::TwoEdgeIntersect { k } => format!("two-edge(r={},k={k})", self.r),
            PatternKind::IndependentEdges { k } => format!("k-matching(r={},k={k})", self.r),
            PatternKind::CommonIntersection { k, i } => {
                format!("common-i(r={},k={k},i={i})", self.r)
            }
        }
    }

    /// Whether `edges` realizes the pattern exactly.
    pub fn is_copy_of(&self, edges: &[REdge]) -> bool {
        if edges.iter().any(|e| e.uniformity() != self.r) {
            return false;
        }
        // all edges distinct
        for a in 0..edges.len() {
            for b in a + 1..edges.len() {
                if edges[a] == edges[b] {
                    return false;
                }
            }
        }
        match self.kind {
            PatternKind::TwoEdgeIntersect { k } => {
                edges.len() == 2 && edges[0].intersection_size(&edges[1]) == k
            }
            PatternKind::IndependentEdges { k } => {
                edges.len() == k
                    && pairs(edges.len()).all(|(a, b)| edges[a].is_disjoint_from(&edges[b]))
            }
            PatternKind::CommonIntersection { k, i } => {
                if edges.len() != k {
                    return false;
                }
                if k == 1 {
                    return true; // no pairs to constrain
                }
                let core = edges[0].intersection(&edges[1]);
                core.len() == i
                    && pairs(edges.len()).all(|(a, b)| edges[a].intersection(&edges[b]) == core)
            }
        }
    }
}

fn pairs(len: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..len).flat_map(move |a| (a + 1..len).map(move |b| (a, b)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn edge(vs: &[usize]) -> REdge {
        REdge::new(vs.to_vec()).unwrap()
    }

    #[test]
    fn two_edge_copy() {
        let p = PatternH::two_edge(3, 1).unwrap();
        assert!(p.is_copy_of(&[edge(&[0, 1, 2]), edge(&[2, 3, 4])]));
        assert!(!p.is_copy_of(&[edge(&[0, 1, 2]), edge(&[1, 2, 3])]));
        assert!(!p.is_copy_of(&[edge(&[0, 1, 2])]));
    }

    #[test]
    fn independent_edges_copy() {
        let p = PatternH::independent_edges(2, 2).unwrap();
        assert!(p.is_copy_of(&[edge(&[0, 1]), edge(&[2, 3])]));
        assert!(!p.is_copy_of(&[edge(&[0, 1]), edge(&[1, 2])]));
    }

    #[test]
    fn common_intersection_rejects_unequal_cores() {
        let p = PatternH::common_intersection(3, 3, 2).unwrap();
        // pairwise intersections {0,1}, {0,2}, {0,3} differ
        assert!(!p.is_copy_of(&[edge(&[0, 1, 2]), edge(&[0, 1, 3]), edge(&[0, 2, 3])]));
        // sunflower with core {0,1}
        assert!(p.is_copy_of(&[edge(&[0, 1, 2]), edge(&[0, 1, 3]), edge(&[0, 1, 4])]));
    }

    #[test]
    fn common_intersection_i_zero_is_disjointness() {
        let a = PatternH::common_intersection(3, 3, 0).unwrap();
        let b = PatternH::independent_edges(3, 3).unwrap();
        let copy = [edge(&[0, 1, 2]), edge(&[3, 4, 5]), edge(&[6, 7, 8])];
        assert!(a.is_copy_of(&copy));
        assert!(b.is_copy_of(&copy));
    }

    #[test]
    fn span_values() {
        assert_eq!(PatternH::two_edge(3, 1).unwrap().span(), 5);
        assert_eq!(PatternH::independent_edges(3, 2).unwrap().span(), 6);
        assert_eq!(PatternH::common_intersection(3, 2, 2).unwrap().span(), 4);
    }

    #[test]
    fn parameter_ranges() {
        assert!(PatternH::two_edge(3, 3).is_err());
        assert!(PatternH::independent_edges(3, 0).is_err());
        assert!(PatternH::common_intersection(3, 2, 3).is_err());
    }

    #[test]
    fn pair_intersection_values() {
        assert_eq!(PatternH::two_edge(3, 1).unwrap().pair_intersection(), Some(1));
        assert_eq!(
            PatternH::independent_edges(3, 2).unwrap().pair_intersection(),
            Some(0)
        );
        assert_eq!(
            PatternH::common_intersection(3, 2, 2).unwrap().pair_intersection(),
            Some(2)
        );
        assert_eq!(
            PatternH::independent_edges(3, 3).unwrap().pair_intersection(),
            None
        );
    }
}
