//! Property-based invariants: canonical encoding bijectivity, relabeling
//! invariance of copy recognition, matching validity against an independent
//! brute force, and packing/decomposition consistency with the exhaustive
//! oracle.

use hdecomp::{
    binomial_usize, max_edge_disjoint_copies, max_matching, packing_oracle, phi, phi_oracle,
    rank_edge, unrank_edge, EdgeId, Hypergraph, IntersectionGraph, PatternH, REdge, SearchBudget,
};
use proptest::prelude::*;
use proptest::strategy::ValueTree;

fn arb_host() -> impl Strategy<Value = (usize, usize)> {
    (2usize..=8).prop_flat_map(|n| (Just(n), 1usize..=n.min(4)))
}

fn arb_subgraph(max_edges: usize) -> impl Strategy<Value = Hypergraph> {
    arb_host().prop_flat_map(move |(n, r)| {
        let m = binomial_usize(n, r).unwrap();
        proptest::collection::vec(any::<bool>(), m).prop_map(move |keep| {
            let host = Hypergraph::complete(n, r).unwrap();
            let edges: Vec<REdge> = host
                .edges()
                .iter()
                .zip(keep)
                .filter(|&(_, take)| take)
                .map(|(e, _)| e.clone())
                .take(max_edges)
                .collect();
            Hypergraph::new(n, r, edges).unwrap()
        })
    })
}

fn arb_pattern(r: usize) -> impl Strategy<Value = PatternH> {
    prop_oneof![
        (0..r).prop_map(move |k| PatternH::two_edge(r, k).unwrap()),
        (1usize..=3).prop_map(move |k| PatternH::independent_edges(r, k).unwrap()),
        ((1usize..=3), 0..r)
            .prop_map(move |(k, i)| PatternH::common_intersection(r, k, i).unwrap()),
    ]
}

/// Independent maximum matching by edge recursion with a free-vertex bound.
fn brute_force_matching_size(n: usize, edges: &[(usize, usize)]) -> usize {
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

fn graph_edge_list(g: &IntersectionGraph) -> Vec<(usize, usize)> {
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

proptest! {
    #[test]
    fn rank_unrank_bijective((n, r) in arb_host(), seed in any::<u64>()) {
        let total = binomial_usize(n, r).unwrap();
        let rank = (seed as usize) % total;
        let e = unrank_edge(EdgeId(rank), n, r).unwrap();
        prop_assert_eq!(rank_edge(&e, n).unwrap(), EdgeId(rank));
        prop_assert!(e.vertices().windows(2).all(|w| w[0] < w[1]));
        prop_assert!(e.max_label() < n);
    }

    #[test]
    fn copy_recognition_is_relabeling_invariant(
        g in arb_subgraph(12),
        perm_seed in any::<u64>(),
        pick_seed in any::<u64>(),
    ) {
        let r = g.uniformity();
        let n = g.vertex_count();
        prop_assume!(g.edge_count() >= 2);
        // deterministic permutation of [0, n) from the seed
        let mut perm: Vec<usize> = (0..n).collect();
        let mut state = perm_seed | 1;
        for i in (1..n).rev() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (state >> 33) as usize % (i + 1));
        }
        // pick a small edge subset
        let count = 2 + (pick_seed as usize) % 2;
        let mut idx: Vec<usize> = (0..g.edge_count()).collect();
        let mut state = pick_seed | 1;
        for i in (1..idx.len()).rev() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            idx.swap(i, (state >> 33) as usize % (i + 1));
        }
        let chosen: Vec<REdge> = idx
            .into_iter()
            .take(count.min(g.edge_count()))
            .map(|i| g.edges()[i].clone())
            .collect();
        let relabeled: Vec<REdge> = chosen
            .iter()
            .map(|e| {
                let mut vs: Vec<usize> = e.vertices().iter().map(|&v| perm[v]).collect();
                vs.sort_unstable();
                REdge::new(vs).unwrap()
            })
            .collect();
        for k in 0..r {
            let p = PatternH::two_edge(r, k).unwrap();
            prop_assert_eq!(p.is_copy_of(&chosen), p.is_copy_of(&relabeled));
        }
        for k in 1..=3usize {
            let p = PatternH::independent_edges(r, k).unwrap();
            prop_assert_eq!(p.is_copy_of(&chosen), p.is_copy_of(&relabeled));
            for i in 0..r {
                let p = PatternH::common_intersection(r, k, i).unwrap();
                prop_assert_eq!(p.is_copy_of(&chosen), p.is_copy_of(&relabeled));
            }
        }
    }

    #[test]
    fn matching_valid_and_maximum(g in arb_subgraph(24), k_pick in any::<usize>()) {
        let k = k_pick % g.uniformity(); // adjacency = intersection of size k
        let graph = IntersectionGraph::intersection_k(&g, k);
        prop_assume!(graph.vertex_count() <= 16);
        let m = max_matching(&graph);
        m.validate(&graph).unwrap();
        let brute = brute_force_matching_size(graph.vertex_count(), &graph_edge_list(&graph));
        prop_assert_eq!(m.size(), brute);
    }

    #[test]
    fn packing_matches_oracle(g in arb_subgraph(12), pattern_pick in any::<u64>()) {
        let r = g.uniformity();
        let choices: Vec<PatternH> = {
            let mut v = Vec::new();
            for k in 0..r {
                v.push(PatternH::two_edge(r, k).unwrap());
            }
            for k in 2..=3usize {
                v.push(PatternH::independent_edges(r, k).unwrap());
                for i in 0..r {
                    v.push(PatternH::common_intersection(r, k, i).unwrap());
                }
            }
            v
        };
        let pattern = choices[(pattern_pick as usize) % choices.len()];
        let cert = max_edge_disjoint_copies(&g, &pattern, SearchBudget::default()).unwrap();
        prop_assert!(cert.optimal);
        cert.validate(&g, &pattern).unwrap();
        prop_assert_eq!(Some(cert.value()), packing_oracle(&g, &pattern));
    }

    #[test]
    fn phi_partitions_and_matches_oracle(g in arb_subgraph(12), k_pick in any::<usize>()) {
        let r = g.uniformity();
        let k = k_pick % r;
        let pattern = PatternH::two_edge(r, k).unwrap();
        let res = phi(&g, &pattern, SearchBudget::default()).unwrap();
        prop_assert!(res.optimal);
        res.decomposition.validate(&g, &pattern).unwrap();
        prop_assert_eq!(Some(res.value), phi_oracle(&g, &pattern));
        // size identity
        prop_assert_eq!(
            res.value,
            g.edge_count() - res.decomposition.copy_count()
        );
    }

    #[test]
    fn hypergraph_json_roundtrip(g in arb_subgraph(64)) {
        let s = g.to_json_string();
        let back = Hypergraph::from_json_str(&s).unwrap();
        prop_assert_eq!(back, g);
    }
}

#[test]
fn arbitrary_pattern_strategy_is_exercised() {
    // keep the generator honest: every branch of arb_pattern builds
    let mut runner = proptest::test_runner::TestRunner::deterministic();
    for _ in 0..32 {
        let tree = arb_pattern(3).new_tree(&mut runner).unwrap();
        let p = tree.current();
        assert!(p.edge_count() >= 1);
    }
}
