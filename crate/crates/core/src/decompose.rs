//! Minimum decompositions of E(G) into singles and pattern copies, the
//! closed-form values, and the constructive routes that realize them.
//!
//! Route selection: patterns with one edge are trivial, patterns with two
//! edges reduce to exact maximum matching on the graph whose adjacency is
//! "this pair forms a copy" (polynomial, always optimal), and larger patterns
//! go through the budgeted exact packing search. For k independent edges on
//! dense hosts there is additionally the clique-factor route on the
//! disjointness graph.

use crate::combinatorics::{binomial, REdge};
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::intersection::IntersectionGraph;
use crate::matching::{max_matching, near_perfect_matching};
use crate::packing::{
    kk_factor, max_edge_disjoint_copies, FactorStatus, PackingCertificate, SearchBudget,
};
use crate::pattern::PatternH;
use num::traits::ToPrimitive;
use num::BigUint;
use serde::{Deserialize, Serialize};

/// One part of a decomposition: a lone edge or a pattern copy.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum Part {
    Single { edge: REdge },
    Copy { edges: Vec<REdge> },
}

/// How a decomposition (or a bare value) was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Source {
    Constructive,
    Formula,
    Oracle,
}

/// A partition of E(G) into singles and pattern copies.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub parts: Vec<Part>,
    pub source: Source,
}

impl Decomposition {
    pub fn size(&self) -> usize {
        self.parts.len()
    }

    pub fn copy_count(&self) -> usize {
        self.parts
            .iter()
            .filter(|p| matches!(p, Part::Copy { .. }))
            .count()
    }

    pub fn single_count(&self) -> usize {
        self.parts.len() - self.copy_count()
    }

    pub fn from_certificate(cert: &PackingCertificate, source: Source) -> Self {
        let mut parts: Vec<Part> = cert
            .copies
            .iter()
            .map(|c| Part::Copy { edges: c.clone() })
            .collect();
        parts.extend(
            cert.leftover
                .iter()
                .map(|e| Part::Single { edge: e.clone() }),
        );
        Decomposition { parts, source }
    }

    /// Independent consistency check: the parts partition E(g) exactly,
    /// every copy realizes the pattern, and the size identity
    /// |parts| = e(G) - (e(H)-1) * #copies holds.
    pub fn validate(&self, g: &Hypergraph, pattern: &PatternH) -> Result<()> {
        let mut covered: Vec<REdge> = Vec::new();
        for part in &self.parts {
            match part {
                Part::Single { edge } => covered.push(edge.clone()),
                Part::Copy { edges } => {
                    if !pattern.is_copy_of(edges) {
                        return Err(Error::TheoryViolation(format!(
                            "part {edges:?} does not realize the pattern"
                        )));
                    }
                    covered.extend(edges.iter().cloned());
                }
            }
        }
        covered.sort_unstable();
        if covered.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::TheoryViolation("parts overlap".into()));
        }
        if covered != g.edges() {
            return Err(Error::TheoryViolation("parts do not partition E(G)".into()));
        }
        let identity =
            g.edge_count() - (pattern.edge_count() - 1) * self.copy_count();
        if self.size() != identity {
            return Err(Error::TheoryViolation(format!(
                "size identity fails: {} parts vs e - (e_H - 1)*copies = {identity}",
                self.size()
            )));
        }
        Ok(())
    }

    pub fn to_json_string(&self) -> String {
        let json = DecompositionJson {
            phi: self.size(),
            source: self.source,
            parts: self.parts.clone(),
        };
        serde_json::to_string(&json).expect("decomposition serializes infallibly")
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let json: DecompositionJson = serde_json::from_str(s)?;
        let d = Decomposition { parts: json.parts, source: json.source };
        if json.phi != d.size() {
            return Err(Error::InvalidParameter(format!(
                "phi field {} disagrees with {} parts",
                json.phi,
                d.size()
            )));
        }
        Ok(d)
    }
}

#[derive(Serialize, Deserialize)]
struct DecompositionJson {
    phi: usize,
    source: Source,
    parts: Vec<Part>,
}

/// A computed decomposition number with its witness.
#[derive(Clone, Debug)]
pub struct PhiResult {
    pub value: usize,
    pub decomposition: Decomposition,
    /// False only when a budgeted search returned without proving
    /// optimality; the value is then an upper bound.
    pub optimal: bool,
}

/// Minimum number of parts in a pattern decomposition of `g`, with an
/// explicit decomposition realizing it.
pub fn phi(g: &Hypergraph, pattern: &PatternH, budget: SearchBudget) -> Result<PhiResult> {
    if pattern.uniformity() != g.uniformity() {
        return Err(Error::InvalidParameter(format!(
            "pattern uniformity {} does not match graph uniformity {}",
            pattern.uniformity(),
            g.uniformity()
        )));
    }
    let copy_size = pattern.edge_count();
    if copy_size == 1 {
        // degenerate: every edge is its own part
        let parts = g
            .edges()
            .iter()
            .map(|e| Part::Single { edge: e.clone() })
            .collect();
        return Ok(PhiResult {
            value: g.edge_count(),
            decomposition: Decomposition { parts, source: Source::Formula },
            optimal: true,
        });
    }
    if let Some(required) = pattern.pair_intersection() {
        // two-edge patterns: maximum matching on the pair-copy graph is the
        // exact maximum packing
        let pair_graph = IntersectionGraph::intersection_k(g, required);
        let matching = max_matching(&pair_graph);
        let mut parts: Vec<Part> = matching
            .pairs()
            .iter()
            .map(|&(u, v)| Part::Copy {
                edges: vec![pair_graph.label(u).clone(), pair_graph.label(v).clone()],
            })
            .collect();
        parts.extend(matching.exposed().iter().map(|&v| Part::Single {
            edge: pair_graph.label(v).clone(),
        }));
        let decomposition = Decomposition { parts, source: Source::Constructive };
        return Ok(PhiResult { value: decomposition.size(), decomposition, optimal: true });
    }
    let cert = max_edge_disjoint_copies(g, pattern, budget)?;
    let decomposition = Decomposition::from_certificate(&cert, Source::Constructive);
    Ok(PhiResult {
        value: decomposition.size(),
        decomposition,
        optimal: cert.optimal,
    })
}

/// The two-edge decomposition number of the complete r-graph, built
/// constructively: a near-perfect matching of J(n, r, k) pairs edges into
/// copies and leaves at most one single. Requires n >= 2r - k.
pub fn phi_two_edge_constructive(n: usize, r: usize, k: usize) -> Result<PhiResult> {
    if n + k < 2 * r {
        return Err(Error::InvalidParameter(format!(
            "constructive route needs n >= 2r-k, got n={n} r={r} k={k}"
        )));
    }
    let j = IntersectionGraph::johnson(n, r, k)?;
    let matching = near_perfect_matching(&j)?;
    let mut parts: Vec<Part> = matching
        .pairs()
        .iter()
        .map(|&(u, v)| Part::Copy { edges: vec![j.label(u).clone(), j.label(v).clone()] })
        .collect();
    parts.extend(
        matching
            .exposed()
            .iter()
            .map(|&v| Part::Single { edge: j.label(v).clone() }),
    );
    let decomposition = Decomposition { parts, source: Source::Constructive };
    Ok(PhiResult { value: decomposition.size(), decomposition, optimal: true })
}

/// Closed-form decomposition number for k independent edges on the complete
/// r-graph: floor(C(n,r)/k) + k-1 when C(n,r) = k-1 (mod k), else + k-2.
/// Proven for n >= [`crate::bounds::n_zero`]; callers warn below that.
pub fn phi_matching_formula(n: usize, r: usize, k: usize) -> BigUint {
    assert!(k >= 1, "pattern needs k >= 1");
    let c = binomial(n, r);
    let quotient = &c / k;
    let residue = (&c % k).to_usize().expect("residue fits usize");
    if residue == (k - 1) % k {
        quotient + (k - 1)
    } else {
        quotient + (k - 2)
    }
}

/// Decomposition number via the clique-factor route on the disjointness
/// graph, for the k-independent-edges pattern on edge-rich hosts.
#[derive(Clone, Debug)]
pub struct KFactorPhi {
    pub status: FactorStatus,
    /// Set when the factor was found or certified: e(G) - (k-1) * floor(e/k).
    pub value: Option<usize>,
    /// Explicit decomposition, only when the factor was constructed.
    pub decomposition: Option<Decomposition>,
}

pub fn phi_via_kfactor(
    g: &Hypergraph,
    k: usize,
    budget: SearchBudget,
) -> Result<KFactorPhi> {
    if k == 0 {
        return Err(Error::InvalidParameter("k must be >= 1".into()));
    }
    let m = g.edge_count();
    let disjointness = IntersectionGraph::disjointness(g);
    let factor = kk_factor(&disjointness, k, budget)?;
    let packing = m / k;
    let value = m - (k - 1) * packing;
    match factor.status {
        FactorStatus::Found => {
            let mut covered = vec![false; m];
            let mut parts = Vec::with_capacity(value);
            for clique in &factor.cliques {
                let edges: Vec<REdge> = clique
                    .iter()
                    .map(|&v| disjointness.label(v).clone())
                    .collect();
                for &v in clique {
                    covered[v] = true;
                }
                parts.push(Part::Copy { edges });
            }
            for (v, done) in covered.iter().enumerate() {
                if !done {
                    parts.push(Part::Single { edge: disjointness.label(v).clone() });
                }
            }
            let decomposition = Decomposition { parts, source: Source::Constructive };
            debug_assert_eq!(decomposition.size(), value);
            Ok(KFactorPhi {
                status: FactorStatus::Found,
                value: Some(value),
                decomposition: Some(decomposition),
            })
        }
        FactorStatus::CertifiedExistsNotConstructed => Ok(KFactorPhi {
            status: factor.status,
            value: Some(value),
            decomposition: None,
        }),
        FactorStatus::NotFoundWithinBudget => {
            Ok(KFactorPhi { status: factor.status, value: None, decomposition: None })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::phi_oracle;

    fn edge(vs: &[usize]) -> REdge {
        REdge::new(vs.to_vec()).unwrap()
    }

    #[test]
    fn phi_of_a_single_copy() {
        let g = Hypergraph::new(5, 3, vec![edge(&[0, 1, 2]), edge(&[2, 3, 4])]).unwrap();
        let p = PatternH::two_edge(3, 1).unwrap();
        let res = phi(&g, &p, SearchBudget::default()).unwrap();
        assert_eq!(res.value, 1);
        res.decomposition.validate(&g, &p).unwrap();
    }

    #[test]
    fn phi_of_copy_free_graph() {
        let g = Hypergraph::new(
            5,
            2,
            vec![edge(&[0, 1]), edge(&[0, 2]), edge(&[0, 3]), edge(&[0, 4])],
        )
        .unwrap();
        let p = PatternH::independent_edges(2, 2).unwrap();
        let res = phi(&g, &p, SearchBudget::default()).unwrap();
        assert_eq!(res.value, 4);
        assert_eq!(res.decomposition.copy_count(), 0);
    }

    #[test]
    fn phi_matches_oracle_on_k53() {
        let g = Hypergraph::complete(5, 3).unwrap();
        let p = PatternH::two_edge(3, 1).unwrap();
        let res = phi(&g, &p, SearchBudget::default()).unwrap();
        assert_eq!(res.value, 5);
        assert_eq!(phi_oracle(&g, &p), Some(5));
        res.decomposition.validate(&g, &p).unwrap();
    }

    #[test]
    fn phi_single_edge_pattern_degenerates() {
        let g = Hypergraph::complete(4, 2).unwrap();
        let p = PatternH::independent_edges(2, 1).unwrap();
        let res = phi(&g, &p, SearchBudget::default()).unwrap();
        assert_eq!(res.value, 6);
        assert_eq!(res.decomposition.copy_count(), 0);
    }

    #[test]
    fn constructive_examples() {
        let res = phi_two_edge_constructive(5, 3, 1).unwrap();
        assert_eq!(res.value, 5);
        assert_eq!(res.decomposition.single_count(), 0);

        let res = phi_two_edge_constructive(7, 3, 2).unwrap();
        assert_eq!(res.value, 18); // ceil(35/2)
        assert_eq!(res.decomposition.single_count(), 1);

        let res = phi_two_edge_constructive(6, 3, 0).unwrap();
        assert_eq!(res.value, 10);
        assert_eq!(res.decomposition.single_count(), 0);

        assert!(phi_two_edge_constructive(4, 3, 1).is_err()); // n < 2r-k
    }

    #[test]
    fn constructive_matches_host_partition() {
        let res = phi_two_edge_constructive(6, 3, 1).unwrap();
        let g = Hypergraph::complete(6, 3).unwrap();
        let p = PatternH::two_edge(3, 1).unwrap();
        res.decomposition.validate(&g, &p).unwrap();
    }

    #[test]
    fn formula_examples() {
        assert_eq!(phi_matching_formula(11, 2, 2).to_usize(), Some(28));
        assert_eq!(phi_matching_formula(12, 2, 2).to_usize(), Some(33));
        assert_eq!(phi_matching_formula(21, 2, 3).to_usize(), Some(71));
        // k = 1 collapses to C(n,r)
        for n in 3..8 {
            assert_eq!(
                phi_matching_formula(n, 2, 1),
                binomial(n, 2),
                "k=1 reading at n={n}"
            );
        }
    }

    #[test]
    fn kfactor_route_on_complete_pairs() {
        let g = Hypergraph::complete(11, 2).unwrap();
        let out = phi_via_kfactor(&g, 2, SearchBudget::default()).unwrap();
        assert_eq!(out.status, FactorStatus::Found);
        assert_eq!(out.value, Some(28));
        let d = out.decomposition.unwrap();
        d.validate(&g, &PatternH::independent_edges(2, 2).unwrap())
            .unwrap();
    }

    #[test]
    fn decomposition_json_roundtrip() {
        let res = phi_two_edge_constructive(5, 3, 1).unwrap();
        let s = res.decomposition.to_json_string();
        assert!(s.starts_with("{\"phi\":5,\"source\":\"constructive\""));
        let back = Decomposition::from_json_str(&s).unwrap();
        assert_eq!(back, res.decomposition);
        // phi field is checked against the parts
        assert!(Decomposition::from_json_str(
            &s.replacen("{\"phi\":5", "{\"phi\":4", 1)
        )
        .is_err());
    }

    #[test]
    fn phi_rejects_uniformity_mismatch() {
        let g = Hypergraph::complete(5, 2).unwrap();
        let p = PatternH::two_edge(3, 1).unwrap();
        assert!(phi(&g, &p, SearchBudget::default()).is_err());
    }
}
