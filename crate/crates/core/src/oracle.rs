//! Exhaustive minimum-part partition values by dynamic programming over edge
//! subsets.
//!
//! This is the independent cross-check for both the matching route and the
//! branch-and-bound packing search: copies are enumerated by filtering all
//! edge combinations through [`PatternH::is_copy_of`], and the recursion
//! assigns the lowest remaining edge either to a single part or to some copy
//! containing it. Memoized over bitmasks, so it is limited to
//! [`ORACLE_EDGE_CAP`] edges.

use crate::hypergraph::Hypergraph;
use crate::pattern::PatternH;

/// Largest edge count the oracle accepts (mask DP memory bound).
pub const ORACLE_EDGE_CAP: usize = 22;

const UNSET: u16 = u16::MAX;

fn next_combination(pick: &mut [usize], m: usize) -> bool {
    let size = pick.len();
    let mut pos = size;
    while pos > 0 {
        pos -= 1;
        if pick[pos] < m - (size - pos) {
            pick[pos] += 1;
            for later in pos + 1..size {
                pick[later] = pick[later - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// All copies of the pattern in `g`, as bitmasks over canonical edge indices.
fn all_copy_masks(g: &Hypergraph, pattern: &PatternH) -> Vec<u32> {
    let m = g.edge_count();
    let size = pattern.edge_count();
    let mut out = Vec::new();
    if size == 0 || size > m {
        return out;
    }
    let mut pick: Vec<usize> = (0..size).collect();
    loop {
        let chosen: Vec<_> = pick.iter().map(|&i| g.edges()[i].clone()).collect();
        if pattern.is_copy_of(&chosen) {
            out.push(pick.iter().fold(0u32, |acc, &i| acc | (1 << i)));
        }
        if !next_combination(&mut pick, m) {
            return out;
        }
    }
}

fn solve(mask: u32, memo: &mut [u16], copies_by_edge: &[Vec<u32>]) -> u16 {
    if mask == 0 {
        return 0;
    }
    if memo[mask as usize] != UNSET {
        return memo[mask as usize];
    }
    let lowest = mask.trailing_zeros() as usize;
    // the lowest edge is a single part...
    let mut best = 1 + solve(mask & !(1 << lowest), memo, copies_by_edge);
    // ...or belongs to some copy inside the mask
    for &copy in &copies_by_edge[lowest] {
        if copy & mask == copy {
            best = best.min(1 + solve(mask & !copy, memo, copies_by_edge));
        }
    }
    memo[mask as usize] = best;
    best
}

/// Minimum number of parts over all partitions of E(g) into singles and
/// pattern copies. `None` when `g` has more than [`ORACLE_EDGE_CAP`] edges.
pub fn phi_oracle(g: &Hypergraph, pattern: &PatternH) -> Option<usize> {
    assert_eq!(
        g.uniformity(),
        pattern.uniformity(),
        "pattern uniformity must match the host graph"
    );
    let m = g.edge_count();
    if m > ORACLE_EDGE_CAP {
        return None;
    }
    if m == 0 {
        return Some(0);
    }
    let copies = all_copy_masks(g, pattern);
    let mut copies_by_edge = vec![Vec::new(); m];
    for &c in &copies {
        for (e, list) in copies_by_edge.iter_mut().enumerate() {
            if c & (1 << e) != 0 {
                list.push(c);
            }
        }
    }
    let mut memo = vec![UNSET; 1usize << m];
    let full = if m == 32 { u32::MAX } else { (1u32 << m) - 1 };
    Some(solve(full, &mut memo, &copies_by_edge) as usize)
}

/// Maximum number of pairwise edge-disjoint copies, derived from the same
/// exhaustive partition value: every copy converts pattern-size edges into
/// one part.
pub fn packing_oracle(g: &Hypergraph, pattern: &PatternH) -> Option<usize> {
    let parts = phi_oracle(g, pattern)?;
    let per_copy = pattern.edge_count();
    if per_copy < 2 {
        return Some(g.edge_count()); // every edge alone is a copy
    }
    Some((g.edge_count() - parts) / (per_copy - 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::REdge;

    fn edge(vs: &[usize]) -> REdge {
        REdge::new(vs.to_vec()).unwrap()
    }

    #[test]
    fn single_copy_graph() {
        let g = Hypergraph::new(5, 3, vec![edge(&[0, 1, 2]), edge(&[2, 3, 4])]).unwrap();
        let p = PatternH::two_edge(3, 1).unwrap();
        assert_eq!(phi_oracle(&g, &p), Some(1));
        assert_eq!(packing_oracle(&g, &p), Some(1));
    }

    #[test]
    fn copy_free_graph_counts_edges() {
        // star: every pair of edges meets, no two disjoint edges
        let g = Hypergraph::new(
            5,
            2,
            vec![edge(&[0, 1]), edge(&[0, 2]), edge(&[0, 3]), edge(&[0, 4])],
        )
        .unwrap();
        let p = PatternH::independent_edges(2, 2).unwrap();
        assert_eq!(phi_oracle(&g, &p), Some(4));
        assert_eq!(packing_oracle(&g, &p), Some(0));
    }

    #[test]
    fn complete_small_two_edge() {
        // phi of the complete 3-graph on 5 vertices = ceil(10/2) = 5
        let g = Hypergraph::complete(5, 3).unwrap();
        let p = PatternH::two_edge(3, 1).unwrap();
        assert_eq!(phi_oracle(&g, &p), Some(5));
    }

    #[test]
    fn empty_graph() {
        let g = Hypergraph::empty(4, 2).unwrap();
        let p = PatternH::two_edge(2, 0).unwrap();
        assert_eq!(phi_oracle(&g, &p), Some(0));
    }

    #[test]
    fn cap_respected() {
        let g = Hypergraph::complete(7, 2).unwrap(); // 21 edges: ok
        let p = PatternH::two_edge(2, 0).unwrap();
        assert!(phi_oracle(&g, &p).is_some());
        let g = Hypergraph::complete(7, 3).unwrap(); // 35 edges: over the cap
        let p = PatternH::two_edge(3, 0).unwrap();
        assert!(phi_oracle(&g, &p).is_none());
    }

    #[test]
    fn single_edge_pattern_degenerates() {
        let g = Hypergraph::complete(4, 2).unwrap();
        let p = PatternH::independent_edges(2, 1).unwrap();
        // every part is a one-edge copy or a single: either way 6 parts
        assert_eq!(phi_oracle(&g, &p), Some(6));
    }
}
