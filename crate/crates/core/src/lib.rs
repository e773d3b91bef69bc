//! Exact decomposition numbers of r-uniform hypergraphs for two pattern
//! families: two edges meeting in a fixed number of vertices, and k pairwise
//! disjoint edges (plus a common-intersection generalization probed at desk
//! scale).
//!
//! The crate provides:
//!
//! * exact combinatorics and a canonical colexicographic edge encoding
//!   ([`combinatorics`], [`hypergraph`], [`pattern`]);
//! * generalized Johnson graphs, disjointness graphs, connectivity walks and
//!   the complementation isomorphism ([`intersection`]);
//! * exact maximum matching with blossom contraction ([`matching`]);
//! * budgeted exact packing, clique factors, the hypergraph matching number,
//!   and all closed-form bounds in exact arithmetic ([`packing`], [`bounds`]);
//! * decomposition values with explicit witnesses, closed-form values, and
//!   verification grids with JSON-line reports ([`decompose`], [`verify`]);
//! * an exhaustive subset-DP oracle used to cross-check every other route
//!   ([`oracle`]).
//!
//! All verdicts are exact integer or rational comparisons. Every search is
//! deterministic for a fixed input, and randomized property suites are fully
//! determined by an explicit seed.

pub mod bounds;
pub mod combinatorics;
pub mod decompose;
pub mod error;
pub mod hypergraph;
pub mod intersection;
pub mod matching;
pub mod oracle;
pub mod packing;
pub mod pattern;
pub mod verify;

pub use bounds::{
    degree_condition_inequality, frankl_bound, lower_bound_e, n_zero, ratio_inequality_check,
    FranklBound,
};
pub use combinatorics::{binomial, binomial_usize, rank_edge, unrank_edge, EdgeId, REdge};
pub use decompose::{
    phi, phi_matching_formula, phi_two_edge_constructive, phi_via_kfactor, Decomposition,
    KFactorPhi, Part, PhiResult, Source,
};
pub use error::{Error, Result};
pub use hypergraph::{ell_value, extremal_candidate, Hypergraph};
pub use intersection::{complement_isomorphism, connecting_walk, GraphKind, IntersectionGraph};
pub use matching::{max_matching, near_perfect_matching, Matching};
pub use oracle::{packing_oracle, phi_oracle, ORACLE_EDGE_CAP};
pub use packing::{
    hajnal_szemeredi_certificate, kk_factor, matching_number, max_edge_disjoint_copies,
    residual_check, FactorResult, FactorStatus, PackingCertificate, SearchBudget,
};
pub use pattern::{PatternH, PatternKind};
pub use verify::{
    conjecture_probe, extremal_search, monotonicity_suite, random_subgraph,
    sweep_degree_condition, sweep_ratio_inequality, theorem1_grid, verify_theorem1,
    verify_theorem2, ExtremalSearchOutcome, SearchFamily, VerificationReport,
};
