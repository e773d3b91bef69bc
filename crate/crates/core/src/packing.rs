//! Maximum edge-disjoint pattern packing, clique factors in disjointness
//! graphs, and the hypergraph matching number.
//!
//! The packing search is an exact branch-and-bound over canonical edge order:
//! the lowest uncovered edge is either covered by some copy containing it or
//! declared leftover. Copies are tried before the leftover branch so the
//! first descent is greedy; the bound `copies + remaining/pattern_size`
//! prunes, and for matchable patterns a branch whose declared leftover
//! already contains a copy is cut (a sibling branch dominates it).

use crate::combinatorics::REdge;
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::intersection::IntersectionGraph;
use crate::matching::max_matching;
use crate::pattern::{PatternH, PatternKind};
use serde::ser::SerializeStruct;
use serde::{Deserialize, Serialize, Serializer};
use std::time::Instant;

/// Limits for the exhaustive searches. Node budgets are deterministic; the
/// optional wall-clock limit is only consulted when set, since a triggered
/// time limit makes the best-found result timing-dependent.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SearchBudget {
    pub max_nodes: u64,
    pub max_seconds: Option<f64>,
}

impl SearchBudget {
    pub fn nodes(max_nodes: u64) -> Self {
        assert!(max_nodes > 0, "budget must be positive");
        SearchBudget { max_nodes, max_seconds: None }
    }

    pub fn with_seconds(mut self, seconds: f64) -> Self {
        assert!(seconds > 0.0, "budget must be positive");
        self.max_seconds = Some(seconds);
        self
    }
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget::nodes(10_000_000)
    }
}

/// An edge-disjoint packing: the copies found, the uncovered leftover, and
/// whether the search proved optimality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PackingCertificate {
    pub copies: Vec<Vec<REdge>>,
    pub leftover: Vec<REdge>,
    pub optimal: bool,
}

impl PackingCertificate {
    pub fn value(&self) -> usize {
        self.copies.len()
    }

    /// Independent consistency check: copies are pattern copies, pairwise
    /// edge-disjoint, and together with the leftover partition E(g).
    pub fn validate(&self, g: &Hypergraph, pattern: &PatternH) -> Result<()> {
        let mut covered: Vec<REdge> = Vec::new();
        for copy in &self.copies {
            if !pattern.is_copy_of(copy) {
                return Err(Error::TheoryViolation(format!(
                    "certificate copy {copy:?} does not realize the pattern"
                )));
            }
            covered.extend(copy.iter().cloned());
        }
        covered.extend(self.leftover.iter().cloned());
        covered.sort_unstable();
        if covered.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::TheoryViolation("copies/leftover overlap".into()));
        }
        if covered != g.edges() {
            return Err(Error::TheoryViolation(
                "copies and leftover do not partition E(G)".into(),
            ));
        }
        Ok(())
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(self).expect("certificate serializes infallibly")
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }
}

impl Serialize for PackingCertificate {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("PackingCertificate", 4)?;
        st.serialize_field("value", &self.value())?;
        st.serialize_field("copies", &self.copies)?;
        st.serialize_field("leftover", &self.leftover)?;
        st.serialize_field("optimal", &self.optimal)?;
        st.end()
    }
}

#[derive(Deserialize)]
struct PackingCertificateRaw {
    value: usize,
    copies: Vec<Vec<REdge>>,
    leftover: Vec<REdge>,
    optimal: bool,
}

impl<'de> Deserialize<'de> for PackingCertificate {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        let raw = PackingCertificateRaw::deserialize(deserializer)?;
        if raw.value != raw.copies.len() {
            return Err(serde::de::Error::custom(format!(
                "value field {} disagrees with {} copies",
                raw.value,
                raw.copies.len()
            )));
        }
        Ok(PackingCertificate {
            copies: raw.copies,
            leftover: raw.leftover,
            optimal: raw.optimal,
        })
    }
}

struct PackSearch<'a> {
    edges: &'a [REdge],
    pattern: &'a PatternH,
    copy_size: usize,
    available: Vec<bool>,
    available_count: usize,
    current: Vec<Vec<usize>>,
    leftover: Vec<usize>,
    best: Option<Vec<Vec<usize>>>,
    nodes: u64,
    budget: SearchBudget,
    start: Instant,
    truncated: bool,
}

impl<'a> PackSearch<'a> {
    fn budget_exhausted(&mut self) -> bool {
        if self.truncated {
            return true;
        }
        self.nodes += 1;
        if self.nodes > self.budget.max_nodes {
            self.truncated = true;
        } else if let Some(limit) = self.budget.max_seconds {
            if self.nodes.is_multiple_of(1024) && self.start.elapsed().as_secs_f64() > limit {
                self.truncated = true;
            }
        }
        self.truncated
    }

    /// All copies containing `lowest` among the still-available edges,
    /// as ascending index lists starting with `lowest`.
    fn copies_containing(&self, lowest: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        match self.pattern.kind() {
            PatternKind::TwoEdgeIntersect { k } => {
                for f in lowest + 1..self.edges.len() {
                    if self.available[f]
                        && self.edges[lowest].intersection_size(&self.edges[f]) == k
                    {
                        out.push(vec![lowest, f]);
                    }
                }
            }
            PatternKind::IndependentEdges { k } => {
                let mut chosen = vec![lowest];
                self.grow_disjoint(&mut chosen, lowest + 1, k, &mut out);
            }
            PatternKind::CommonIntersection { k, i } => {
                if k == 1 {
                    out.push(vec![lowest]);
                    return out;
                }
                // the common core is a size-i subset of the lowest edge
                let base = &self.edges[lowest];
                let mut core_pick: Vec<usize> = (0..i).collect();
                loop {
                    let core: Vec<usize> =
                        core_pick.iter().map(|&p| base.vertices()[p]).collect();
                    let mut chosen = vec![lowest];
                    self.grow_common(&mut chosen, lowest + 1, k, &core, &mut out);
                    if i == 0 || !step_combination(&mut core_pick, base.uniformity()) {
                        break;
                    }
                }
            }
        }
        out
    }

    fn grow_disjoint(
        &self,
        chosen: &mut Vec<usize>,
        start: usize,
        k: usize,
        out: &mut Vec<Vec<usize>>,
    ) {
        if chosen.len() == k {
            out.push(chosen.clone());
            return;
        }
        for f in start..self.edges.len() {
            if self.available[f]
                && chosen
                    .iter()
                    .all(|&c| self.edges[c].is_disjoint_from(&self.edges[f]))
            {
                chosen.push(f);
                self.grow_disjoint(chosen, f + 1, k, out);
                chosen.pop();
            }
        }
    }

    fn grow_common(
        &self,
        chosen: &mut Vec<usize>,
        start: usize,
        k: usize,
        core: &[usize],
        out: &mut Vec<Vec<usize>>,
    ) {
        if chosen.len() == k {
            out.push(chosen.clone());
            return;
        }
        for f in start..self.edges.len() {
            if !self.available[f] {
                continue;
            }
            let fe = &self.edges[f];
            if chosen
                .iter()
                .all(|&c| self.edges[c].intersection(fe) == core)
            {
                chosen.push(f);
                self.grow_common(chosen, f + 1, k, core, out);
                chosen.pop();
            }
        }
    }

    /// Would declaring `idx` leftover complete a pattern copy inside the
    /// leftover set? Such branches are dominated by the sibling that covers
    /// the copy instead.
    fn leftover_would_contain_copy(&self, idx: usize) -> bool {
        match self.pattern.kind() {
            PatternKind::TwoEdgeIntersect { k } => self
                .leftover
                .iter()
                .any(|&l| self.edges[l].intersection_size(&self.edges[idx]) == k),
            PatternKind::IndependentEdges { k } => {
                if k == 2 {
                    return self
                        .leftover
                        .iter()
                        .any(|&l| self.edges[l].is_disjoint_from(&self.edges[idx]));
                }
                // exact: k-1 pairwise disjoint leftover edges avoiding idx
                fn extend(
                    edges: &[REdge],
                    pool: &[usize],
                    from: usize,
                    picked: &mut Vec<usize>,
                    need: usize,
                    anchor: &REdge,
                ) -> bool {
                    if picked.len() == need {
                        return true;
                    }
                    for p in from..pool.len() {
                        let cand = &edges[pool[p]];
                        if cand.is_disjoint_from(anchor)
                            && picked.iter().all(|&q| edges[q].is_disjoint_from(cand))
                        {
                            picked.push(pool[p]);
                            if extend(edges, pool, p + 1, picked, need, anchor) {
                                return true;
                            }
                            picked.pop();
                        }
                    }
                    false
                }
                extend(
                    self.edges,
                    &self.leftover,
                    0,
                    &mut Vec::new(),
                    k - 1,
                    &self.edges[idx],
                )
            }
            PatternKind::CommonIntersection { .. } => false,
        }
    }

    fn dfs(&mut self, from: usize) {
        if self.budget_exhausted() {
            return;
        }
        let lowest = match (from..self.edges.len()).find(|&i| self.available[i]) {
            Some(i) => i,
            None => {
                let better = self
                    .best
                    .as_ref()
                    .is_none_or(|b| self.current.len() > b.len());
                if better {
                    self.best = Some(self.current.clone());
                }
                return;
            }
        };
        if let Some(best) = &self.best {
            if self.current.len() + self.available_count / self.copy_size <= best.len() {
                return;
            }
        }
        for copy in self.copies_containing(lowest) {
            for &idx in &copy {
                self.available[idx] = false;
            }
            self.available_count -= copy.len();
            self.current.push(copy.clone());
            self.dfs(lowest + 1);
            self.current.pop();
            self.available_count += copy.len();
            for &idx in &copy {
                self.available[idx] = true;
            }
            if self.truncated {
                return;
            }
        }
        if !self.leftover_would_contain_copy(lowest) {
            self.available[lowest] = false;
            self.available_count -= 1;
            self.leftover.push(lowest);
            self.dfs(lowest + 1);
            self.leftover.pop();
            self.available_count += 1;
            self.available[lowest] = true;
        }
    }
}

fn step_combination(pick: &mut [usize], m: usize) -> bool {
    let size = pick.len();
    if size == 0 {
        return false;
    }
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

/// Maximum number of pairwise edge-disjoint copies of the pattern in `g`,
/// with an explicit certificate. Exact (and flagged `optimal`) when the
/// branch-and-bound completes within the budget, otherwise best-found.
pub fn max_edge_disjoint_copies(
    g: &Hypergraph,
    pattern: &PatternH,
    budget: SearchBudget,
) -> Result<PackingCertificate> {
    if pattern.uniformity() != g.uniformity() {
        return Err(Error::InvalidParameter(format!(
            "pattern uniformity {} does not match graph uniformity {}",
            pattern.uniformity(),
            g.uniformity()
        )));
    }
    let mut search = PackSearch {
        edges: g.edges(),
        pattern,
        copy_size: pattern.edge_count().max(1),
        available: vec![true; g.edge_count()],
        available_count: g.edge_count(),
        current: Vec::new(),
        leftover: Vec::new(),
        best: None,
        nodes: 0,
        budget,
        start: Instant::now(),
        truncated: false,
    };
    search.dfs(0);
    let best = search.best.unwrap_or_default();
    let copies: Vec<Vec<REdge>> = best
        .iter()
        .map(|copy| copy.iter().map(|&i| g.edges()[i].clone()).collect())
        .collect();
    let mut covered = vec![false; g.edge_count()];
    for copy in &best {
        for &i in copy {
            covered[i] = true;
        }
    }
    let leftover = (0..g.edge_count())
        .filter(|&i| !covered[i])
        .map(|i| g.edges()[i].clone())
        .collect();
    Ok(PackingCertificate { copies, leftover, optimal: !search.truncated })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FactorStatus {
    /// The vertex-disjoint cliques were constructed.
    Found,
    /// Construction ran out of budget but the degree condition certifies
    /// that a factor exists.
    CertifiedExistsNotConstructed,
    NotFoundWithinBudget,
}

/// Result of a K_k-factor search: vertex-disjoint k-cliques covering
/// `floor(|V|/k) * k` vertices when found.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorResult {
    pub cliques: Vec<Vec<usize>>,
    pub status: FactorStatus,
}

/// True iff the minimum degree satisfies k*delta >= (k-1)*|V|, which
/// certifies a K_k-factor. Sufficient, not necessary.
pub fn hajnal_szemeredi_certificate(g: &IntersectionGraph, k: usize) -> bool {
    assert!(k >= 1, "factor order must be positive");
    k * g.min_degree() >= (k - 1) * g.vertex_count()
}

struct FactorSearch<'a> {
    g: &'a IntersectionGraph,
    rows: Vec<Vec<u64>>,
    used: Vec<bool>,
    /// Unused neighbors per vertex, kept incrementally; branching on the
    /// most constrained vertex keeps the endgame from stranding.
    remaining: Vec<usize>,
    cliques: Vec<Vec<usize>>,
    target: usize,
    skips_left: usize,
    k: usize,
    nodes: u64,
    budget: SearchBudget,
    start: Instant,
    truncated: bool,
}

impl<'a> FactorSearch<'a> {
    fn adjacent(&self, u: usize, v: usize) -> bool {
        self.rows[u][v / 64] & (1 << (v % 64)) != 0
    }

    fn tick(&mut self) -> bool {
        self.nodes += 1;
        if self.nodes > self.budget.max_nodes {
            self.truncated = true;
        } else if let Some(limit) = self.budget.max_seconds {
            if self.nodes.is_multiple_of(1024) && self.start.elapsed().as_secs_f64() > limit {
                self.truncated = true;
            }
        }
        self.truncated
    }

    fn mark(&mut self, v: usize) {
        self.used[v] = true;
        for &u in self.g.neighbors(v) {
            self.remaining[u] -= 1;
        }
    }

    fn unmark(&mut self, v: usize) {
        self.used[v] = false;
        for &u in self.g.neighbors(v) {
            self.remaining[u] += 1;
        }
    }

    fn most_constrained(&self) -> Option<usize> {
        (0..self.g.vertex_count())
            .filter(|&v| !self.used[v])
            .min_by_key(|&v| (self.remaining[v], v))
    }

    fn dfs(&mut self) -> bool {
        if self.cliques.len() == self.target {
            return true;
        }
        if self.tick() {
            return false;
        }
        let v = match self.most_constrained() {
            Some(v) => v,
            None => return false, // ran out of vertices before reaching target
        };
        let mut clique = vec![v];
        self.mark(v);
        if self.grow(&mut clique, 0) {
            return true;
        }
        self.unmark(v);
        if self.truncated {
            return false;
        }
        if self.skips_left > 0 {
            self.skips_left -= 1;
            self.mark(v);
            if self.dfs() {
                return true;
            }
            self.unmark(v);
            self.skips_left += 1;
        }
        false
    }

    fn grow(&mut self, clique: &mut Vec<usize>, from: usize) -> bool {
        if clique.len() == self.k {
            self.cliques.push(clique.clone());
            if self.dfs() {
                return true;
            }
            self.cliques.pop();
            return false;
        }
        if self.tick() {
            return false;
        }
        for u in from..self.g.vertex_count() {
            if self.used[u] || !clique.iter().all(|&c| self.adjacent(c, u)) {
                continue;
            }
            self.mark(u);
            clique.push(u);
            if self.grow(clique, u + 1) {
                return true;
            }
            clique.pop();
            self.unmark(u);
            if self.truncated {
                return false;
            }
        }
        false
    }

    /// Lexicographically first k-clique containing `v` among unused
    /// vertices, by complete search over the candidates.
    fn first_clique_containing(&mut self, v: usize) -> Option<Vec<usize>> {
        fn extend(s: &mut FactorSearch, clique: &mut Vec<usize>, from: usize) -> bool {
            if clique.len() == s.k {
                return true;
            }
            if s.tick() {
                return false;
            }
            for u in from..s.g.vertex_count() {
                if s.used[u] || clique.contains(&u) {
                    continue;
                }
                if clique.iter().all(|&c| s.adjacent(c, u)) {
                    clique.push(u);
                    if extend(s, clique, u + 1) {
                        return true;
                    }
                    clique.pop();
                }
            }
            false
        }
        let mut clique = vec![v];
        extend(self, &mut clique, 0).then_some(clique)
    }

    /// Straight greedy descent without backtracking: repeatedly take the
    /// most constrained vertex, remove the first clique through it, and set
    /// aside vertices that no longer extend. Returns the set-aside vertices.
    fn greedy_descent(&mut self) -> Vec<usize> {
        let mut leftover = Vec::new();
        while let Some(v) = self.most_constrained() {
            if self.truncated {
                break;
            }
            match self.first_clique_containing(v) {
                Some(clique) => {
                    for &u in &clique {
                        self.mark(u);
                    }
                    self.cliques.push(clique);
                }
                None => {
                    self.mark(v);
                    leftover.push(v);
                }
            }
        }
        leftover
    }

    /// Exact micro-search: `need` vertex-disjoint k-cliques inside `pool`
    /// (sorted, small: a couple of cliques plus the leftover). Anchors on
    /// the lowest vertex, which may itself stay uncovered when the pool has
    /// slack.
    fn micro_tile(&mut self, pool: &[usize], need: usize) -> Option<Vec<Vec<usize>>> {
        if need == 0 {
            return Some(Vec::new());
        }
        if pool.len() < need * self.k {
            return None;
        }
        if self.tick() {
            return None;
        }
        let anchor = pool[0];
        let rest: Vec<usize> = pool[1..].to_vec();
        let mut pick: Vec<usize> = (0..self.k - 1).collect();
        loop {
            let candidate: Vec<usize> = std::iter::once(anchor)
                .chain(pick.iter().map(|&i| rest[i]))
                .collect();
            let is_clique = (0..candidate.len()).all(|a| {
                (a + 1..candidate.len()).all(|b| self.adjacent(candidate[a], candidate[b]))
            });
            if is_clique {
                let remaining: Vec<usize> = rest
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| !pick.contains(i))
                    .map(|(_, &v)| v)
                    .collect();
                if let Some(mut tiles) = self.micro_tile(&remaining, need - 1) {
                    tiles.insert(0, candidate);
                    return Some(tiles);
                }
            }
            if !step_combination(&mut pick, rest.len()) {
                break;
            }
        }
        // the anchor can stay uncovered when the pool exceeds need * k
        if pool.len() > need * self.k {
            return self.micro_tile(&rest, need);
        }
        None
    }

    /// Exchange repair: re-tile one or two placed cliques together with the
    /// leftover so that strictly more vertices are covered. Runs until the
    /// leftover fits the parity bound or no exchange applies.
    fn repair(&mut self, leftover: &mut Vec<usize>) {
        leftover.sort_unstable();
        let allowed = self.g.vertex_count() % self.k;
        'outer: while leftover.len() > allowed && leftover.len() <= 3 * self.k && !self.truncated
        {
            // leftover alone
            if leftover.len() >= self.k {
                let pool = leftover.clone();
                let need = pool.len() / self.k;
                if let Some(tiles) = self.micro_tile(&pool, need) {
                    self.apply_tiles(None, None, tiles, leftover, &pool);
                    continue 'outer;
                }
            }
            // one clique plus the leftover
            for ci in 0..self.cliques.len() {
                let mut pool = self.cliques[ci].clone();
                pool.extend_from_slice(leftover);
                pool.sort_unstable();
                let need = pool.len() / self.k;
                if need < 2 {
                    break;
                }
                if let Some(tiles) = self.micro_tile(&pool, need) {
                    self.apply_tiles(Some(ci), None, tiles, leftover, &pool);
                    continue 'outer;
                }
                if self.truncated {
                    return;
                }
            }
            // two cliques plus the leftover
            for ci in 0..self.cliques.len() {
                for cj in ci + 1..self.cliques.len() {
                    let mut pool = self.cliques[ci].clone();
                    pool.extend_from_slice(&self.cliques[cj]);
                    pool.extend_from_slice(leftover);
                    pool.sort_unstable();
                    let need = pool.len() / self.k;
                    if need < 3 {
                        break 'outer;
                    }
                    if let Some(tiles) = self.micro_tile(&pool, need) {
                        self.apply_tiles(Some(ci), Some(cj), tiles, leftover, &pool);
                        continue 'outer;
                    }
                    if self.truncated {
                        return;
                    }
                }
            }
            return; // no exchange applies
        }
    }

    fn apply_tiles(
        &mut self,
        drop_a: Option<usize>,
        drop_b: Option<usize>,
        tiles: Vec<Vec<usize>>,
        leftover: &mut Vec<usize>,
        pool: &[usize],
    ) {
        let mut drops: Vec<usize> = drop_a.into_iter().chain(drop_b).collect();
        drops.sort_unstable_by(|a, b| b.cmp(a));
        for idx in drops {
            self.cliques.swap_remove(idx);
        }
        let mut covered: Vec<usize> = tiles.iter().flatten().copied().collect();
        covered.sort_unstable();
        leftover.retain(|v| !pool.contains(v));
        leftover.extend(pool.iter().filter(|v| covered.binary_search(v).is_err()));
        leftover.sort_unstable();
        self.cliques.extend(tiles);
    }
}

fn adjacency_rows(g: &IntersectionGraph) -> Vec<Vec<u64>> {
    let n = g.vertex_count();
    let words = n.div_ceil(64);
    let mut rows = vec![vec![0u64; words]; n];
    for (v, row) in rows.iter_mut().enumerate() {
        for &u in g.neighbors(v) {
            row[u / 64] |= 1 << (u % 64);
        }
    }
    rows
}

fn fresh_factor_search<'a>(
    g: &'a IntersectionGraph,
    k: usize,
    budget: SearchBudget,
) -> FactorSearch<'a> {
    let n = g.vertex_count();
    FactorSearch {
        g,
        rows: adjacency_rows(g),
        used: vec![false; n],
        remaining: (0..n).map(|v| g.degree(v)).collect(),
        cliques: Vec::new(),
        target: n / k,
        skips_left: n % k,
        k,
        nodes: 0,
        budget,
        start: Instant::now(),
        truncated: false,
    }
}

/// Partitions `floor(|V|/k) * k` vertices into k-cliques.
///
/// `k = 2` delegates to the exact matching engine and always resolves. For
/// `k >= 3` the pipeline is: greedy clique removal (most constrained vertex
/// first), then exchange repair re-tiling one or two placed cliques with the
/// leftover, then full budgeted exact backtracking; when the budget runs out
/// the degree-condition certificate still decides existence.
pub fn kk_factor(g: &IntersectionGraph, k: usize, budget: SearchBudget) -> Result<FactorResult> {
    if k == 0 {
        return Err(Error::InvalidParameter("factor order must be >= 1".into()));
    }
    let n = g.vertex_count();
    if k == 1 {
        return Ok(FactorResult {
            cliques: (0..n).map(|v| vec![v]).collect(),
            status: FactorStatus::Found,
        });
    }
    if k == 2 {
        let m = max_matching(g);
        let status = if m.size() == n / 2 {
            FactorStatus::Found
        } else {
            // maximum matching is exact: no K_2-factor exists
            FactorStatus::NotFoundWithinBudget
        };
        return Ok(FactorResult {
            cliques: m.pairs().iter().map(|&(u, v)| vec![u, v]).collect(),
            status,
        });
    }

    // phase 1+2: greedy descent, then exchange repair
    let mut search = fresh_factor_search(g, k, budget);
    let mut leftover = search.greedy_descent();
    if !search.truncated && leftover.len() > n % k {
        search.repair(&mut leftover);
    }
    if !search.truncated && leftover.len() <= n % k {
        debug_assert_eq!(search.cliques.len(), n / k);
        return Ok(FactorResult { cliques: search.cliques, status: FactorStatus::Found });
    }
    let spent = search.nodes;

    // phase 3: complete backtracking on what remains of the budget
    if !search.truncated {
        let mut rest_budget = budget;
        rest_budget.max_nodes = budget.max_nodes.saturating_sub(spent).max(1);
        let mut full = fresh_factor_search(g, k, rest_budget);
        if full.dfs() {
            return Ok(FactorResult { cliques: full.cliques, status: FactorStatus::Found });
        }
        if !full.truncated {
            // the exhaustive search proved no factor exists
            return Ok(FactorResult {
                cliques: Vec::new(),
                status: FactorStatus::NotFoundWithinBudget,
            });
        }
    }
    if hajnal_szemeredi_certificate(g, k) {
        return Ok(FactorResult {
            cliques: Vec::new(),
            status: FactorStatus::CertifiedExistsNotConstructed,
        });
    }
    Ok(FactorResult { cliques: Vec::new(), status: FactorStatus::NotFoundWithinBudget })
}

/// Exact hypergraph matching number by branch-and-bound on the lowest edge.
pub fn matching_number(g: &Hypergraph) -> usize {
    fn rec(
        edges: &[REdge],
        idx: usize,
        used: &mut [bool],
        free: usize,
        cur: usize,
        best: &mut usize,
        r: usize,
    ) {
        *best = (*best).max(cur);
        if idx == edges.len() {
            return;
        }
        let bound = cur + (edges.len() - idx).min(free / r);
        if bound <= *best {
            return;
        }
        let e = &edges[idx];
        if e.vertices().iter().all(|&v| !used[v]) {
            for &v in e.vertices() {
                used[v] = true;
            }
            rec(edges, idx + 1, used, free - r, cur + 1, best, r);
            for &v in e.vertices() {
                used[v] = false;
            }
        }
        rec(edges, idx + 1, used, free, cur, best, r);
    }
    let mut used = vec![false; g.vertex_count()];
    let mut best = 0;
    rec(
        g.edges(),
        0,
        &mut used,
        g.vertex_count(),
        0,
        &mut best,
        g.uniformity(),
    );
    best
}

/// Residual condition on an optimal k-matching packing: the leftover must
/// have matching number at most k-1 and, when n >= (2k-1)r - (k-1), at most
/// C(n,r) - C(n-k+1,r) edges.
pub fn residual_check(g: &Hypergraph, cert: &PackingCertificate, k: usize) -> bool {
    assert!(k >= 1);
    let leftover = match Hypergraph::new(g.vertex_count(), g.uniformity(), cert.leftover.clone()) {
        Ok(h) => h,
        Err(_) => return false,
    };
    if matching_number(&leftover) > k - 1 {
        return false;
    }
    let n = g.vertex_count();
    let r = g.uniformity();
    if n + (k - 1) >= (2 * k - 1) * r {
        let bound = crate::bounds::frankl_bound(n, r, k - 1).value;
        if num::BigUint::from(cert.leftover.len()) > bound {
            return false;
        }
    }
    true
}
