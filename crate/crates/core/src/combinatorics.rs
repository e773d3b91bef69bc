//! Exact integer combinatorics and the canonical colexicographic encoding of
//! r-subsets.
//!
//! Every edge of an r-uniform hypergraph on `n` labeled vertices is a strictly
//! increasing sequence of labels in `[0, n)`. Edges are ordered
//! colexicographically (compare largest elements first), which is stable under
//! growing `n`; [`rank_edge`] / [`unrank_edge`] realize the order as a
//! bijection with `[0, C(n,r))`.

use crate::error::{Error, Result};
use num::traits::{One, Zero};
use num::BigUint;
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};
use std::cmp::Ordering;
use std::fmt;

/// Exact binomial coefficient C(n, r). Zero when r > n.
pub fn binomial(n: usize, r: usize) -> BigUint {
    if r > n {
        return BigUint::zero();
    }
    let r = r.min(n - r);
    let mut acc = BigUint::one();
    for i in 1..=r {
        // exact at every step: i consecutive integers contain a multiple of i
        acc = acc * (n - r + i) / i;
    }
    acc
}

/// C(n, r) in machine precision; `None` on overflow.
pub fn binomial_usize(n: usize, r: usize) -> Option<usize> {
    if r > n {
        return Some(0);
    }
    let r = r.min(n - r);
    let mut acc: u128 = 1;
    for i in 1..=r {
        acc = acc.checked_mul((n - r + i) as u128)? / i as u128;
    }
    usize::try_from(acc).ok()
}

/// Colexicographic rank of an r-subset, the vertex identifier inside
/// intersection graphs.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct EdgeId(pub usize);

/// An edge of an r-uniform hypergraph: strictly increasing vertex labels.
///
/// Ordering is colexicographic, so sorting a `Vec<REdge>` matches the
/// [`rank_edge`] order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct REdge(Vec<usize>);

impl REdge {
    pub fn new(vertices: Vec<usize>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::MalformedEdge("edge has no vertices".into()));
        }
        if !vertices.windows(2).all(|w| w[0] < w[1]) {
            return Err(Error::MalformedEdge(format!(
                "vertex labels must be strictly increasing: {vertices:?}"
            )));
        }
        Ok(REdge(vertices))
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn uniformity(&self) -> usize {
        self.0.len()
    }

    pub fn max_label(&self) -> usize {
        *self.0.last().expect("edge is nonempty")
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    /// Sorted intersection of two edges.
    pub fn intersection(&self, other: &REdge) -> Vec<usize> {
        let mut out = Vec::new();
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].cmp(&other.0[j]) {
                Ordering::Less => i += 1,
                Ordering::Greater => j += 1,
                Ordering::Equal => {
                    out.push(self.0[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
        out
    }

    pub fn intersection_size(&self, other: &REdge) -> usize {
        let (mut i, mut j, mut count) = (0, 0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].cmp(&other.0[j]) {
                Ordering::Less => i += 1,
                Ordering::Greater => j += 1,
                Ordering::Equal => {
                    count += 1;
                    i += 1;
                    j += 1;
                }
            }
        }
        count
    }

    pub fn is_disjoint_from(&self, other: &REdge) -> bool {
        self.intersection_size(other) == 0
    }

    /// Sorted union of two edges.
    pub fn union(&self, other: &REdge) -> Vec<usize> {
        let mut out: Vec<usize> = self.0.iter().chain(other.0.iter()).copied().collect();
        out.sort_unstable();
        out.dedup();
        out
    }
}

impl Ord for REdge {
    /// Colexicographic: compare largest elements first.
    fn cmp(&self, other: &Self) -> Ordering {
        let mut a = self.0.iter().rev();
        let mut b = other.0.iter().rev();
        loop {
            match (a.next(), b.next()) {
                (Some(x), Some(y)) if x == y => continue,
                (Some(x), Some(y)) => return x.cmp(y),
                (None, None) => return Ordering::Equal,
                (None, Some(_)) => return Ordering::Less,
                (Some(_), None) => return Ordering::Greater,
            }
        }
    }
}

impl PartialOrd for REdge {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for REdge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Display for REdge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl Serialize for REdge {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.0.iter())
    }
}

impl<'de> Deserialize<'de> for REdge {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<usize>::deserialize(deserializer)?;
        REdge::new(v).map_err(de::Error::custom)
    }
}

/// Colexicographic rank of `e` among the r-subsets of `[0, n)`.
pub fn rank_edge(e: &REdge, n: usize) -> Result<EdgeId> {
    if e.max_label() >= n {
        return Err(Error::MalformedEdge(format!(
            "label {} out of range for n={n}",
            e.max_label()
        )));
    }
    let mut rank = 0usize;
    for (j, &v) in e.vertices().iter().enumerate() {
        let term = binomial_usize(v, j + 1)
            .ok_or_else(|| Error::InvalidParameter(format!("rank of {e} overflows usize")))?;
        rank = rank
            .checked_add(term)
            .ok_or_else(|| Error::InvalidParameter(format!("rank of {e} overflows usize")))?;
    }
    Ok(EdgeId(rank))
}

/// Inverse of [`rank_edge`].
pub fn unrank_edge(id: EdgeId, n: usize, r: usize) -> Result<REdge> {
    if r == 0 || r > n {
        return Err(Error::InvalidParameter(format!(
            "unrank needs 1 <= r <= n, got n={n} r={r}"
        )));
    }
    let total = binomial_usize(n, r)
        .ok_or_else(|| Error::InvalidParameter(format!("C({n},{r}) overflows usize")))?;
    if id.0 >= total {
        return Err(Error::RankOutOfRange { rank: id.0, n, r });
    }
    let mut rem = id.0;
    let mut out = vec![0usize; r];
    let mut upper = n;
    for j in (0..r).rev() {
        // largest x < upper with C(x, j+1) <= rem; C(j, j+1) = 0 bounds the scan
        let mut x = upper - 1;
        while binomial_usize(x, j + 1).is_none_or(|c| c > rem) {
            x -= 1;
        }
        out[j] = x;
        rem -= binomial_usize(x, j + 1).expect("checked in scan");
        upper = x;
    }
    REdge::new(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::traits::ToPrimitive;

    fn edge(vs: &[usize]) -> REdge {
        REdge::new(vs.to_vec()).unwrap()
    }

    #[test]
    fn binomial_small_values() {
        assert_eq!(binomial(5, 3).to_usize(), Some(10));
        assert_eq!(binomial(11, 2).to_usize(), Some(55));
        assert_eq!(binomial(0, 0).to_usize(), Some(1));
        assert_eq!(binomial(7, 0).to_usize(), Some(1));
        assert_eq!(binomial(3, 5).to_usize(), Some(0));
    }

    #[test]
    fn binomial_matches_usize_variant() {
        for n in 0..30 {
            for r in 0..=n {
                assert_eq!(binomial(n, r).to_usize(), binomial_usize(n, r));
            }
        }
    }

    #[test]
    fn pascal_rule_grid() {
        for n in 1..40 {
            for r in 1..=n {
                assert_eq!(
                    binomial(n, r),
                    binomial(n - 1, r - 1) + binomial(n - 1, r),
                    "Pascal fails at ({n},{r})"
                );
            }
        }
    }

    #[test]
    fn binomial_large_exact() {
        // C(1000, 3) = 1000*999*998/6
        assert_eq!(binomial(1000, 3), BigUint::from(166_167_000u64));
    }

    #[test]
    fn rank_colex_minimum_and_maximum() {
        assert_eq!(rank_edge(&edge(&[0, 1, 2]), 6).unwrap(), EdgeId(0));
        let n = 7;
        let r = 3;
        let last = binomial_usize(n, r).unwrap() - 1;
        assert_eq!(unrank_edge(EdgeId(last), n, r).unwrap(), edge(&[4, 5, 6]));
    }

    #[test]
    fn rank_unrank_roundtrip_exhaustive() {
        for n in 1..=10usize {
            for r in 1..=n {
                let total = binomial_usize(n, r).unwrap();
                let mut prev: Option<REdge> = None;
                for id in 0..total {
                    let e = unrank_edge(EdgeId(id), n, r).unwrap();
                    assert_eq!(rank_edge(&e, n).unwrap(), EdgeId(id));
                    if let Some(p) = &prev {
                        assert!(p < &e, "colex order must match rank order");
                    }
                    prev = Some(e);
                }
            }
        }
    }

    #[test]
    fn rank_rejects_out_of_range_labels() {
        assert!(rank_edge(&edge(&[0, 1, 6]), 6).is_err());
    }

    #[test]
    fn unrank_rejects_bad_rank() {
        assert!(matches!(
            unrank_edge(EdgeId(20), 6, 3),
            Err(Error::RankOutOfRange { rank: 20, n: 6, r: 3 })
        ));
    }

    #[test]
    fn malformed_edges_rejected() {
        assert!(REdge::new(vec![]).is_err());
        assert!(REdge::new(vec![2, 1]).is_err());
        assert!(REdge::new(vec![1, 1, 3]).is_err());
    }

    #[test]
    fn intersection_and_union() {
        let a = edge(&[0, 1, 2]);
        let b = edge(&[2, 3, 4]);
        assert_eq!(a.intersection(&b), vec![2]);
        assert_eq!(a.intersection_size(&b), 1);
        assert!(!a.is_disjoint_from(&b));
        assert_eq!(a.union(&b), vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn edge_json_shape() {
        let e = edge(&[0, 2, 5]);
        assert_eq!(serde_json::to_string(&e).unwrap(), "[0,2,5]");
        let back: REdge = serde_json::from_str("[0,2,5]").unwrap();
        assert_eq!(back, e);
        assert!(serde_json::from_str::<REdge>("[2,0,5]").is_err());
    }
}
