//! Decycling sets, decycling partitions and the decycling-number test for
//! upper-embeddability of connected cubic graphs.
//!
//! Counting edges pins the size of `S` in each partition type: with `S`
//! independent and `G[R]` a tree, `3n/2 = (|R| - 1) + 3|S|` forces
//! `|S| = (n + 2)/4`; the near independent / tree and independent /
//! two-component cases both force `|S| = (n + 4)/4`. The searches therefore
//! only enumerate sets of that one size and need only a connectivity or
//! component count on `R`.

use serde::{Deserialize, Serialize};

use crate::budget::{Budget, Ticker};
use crate::error::{Error, Result};
use crate::graph::{classify_degrees, Graph};
use crate::set::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SetClass {
    Independent,
    NearIndependent,
    Other,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ForestClass {
    Tree,
    ForestTwoComponents,
    Other,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TwoFaceClause {
    /// `G[R]` a tree and `S` near independent.
    TreeNearIndependent,
    /// `G[R]` a forest with two components and `S` independent.
    ForestIndependent,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecyclingPartition {
    pub r: VertexSet,
    pub s: VertexSet,
    pub s_class: SetClass,
    pub r_class: ForestClass,
}

impl DecyclingPartition {
    pub fn classify(g: &Graph, s: VertexSet) -> Result<Self> {
        let r = g.vertices() - s;
        if !s.is_subset(g.vertices()) || !g.is_acyclic_within(r) {
            return Err(Error::precondition(format!("{s} is not a decycling set")));
        }
        let s_class = match g.edge_count_within(s) {
            0 => SetClass::Independent,
            1 => SetClass::NearIndependent,
            _ => SetClass::Other,
        };
        let r_class = match g.components_within(r).len() {
            1 => ForestClass::Tree,
            2 => ForestClass::ForestTwoComponents,
            _ => ForestClass::Other,
        };
        Ok(DecyclingPartition { r, s, s_class, r_class })
    }

    pub fn is_one_face(&self) -> bool {
        self.s_class == SetClass::Independent && self.r_class == ForestClass::Tree
    }

    pub fn two_face_clause(&self) -> Option<TwoFaceClause> {
        match (self.s_class, self.r_class) {
            (SetClass::NearIndependent, ForestClass::Tree) => Some(TwoFaceClause::TreeNearIndependent),
            (SetClass::Independent, ForestClass::ForestTwoComponents) => Some(TwoFaceClause::ForestIndependent),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EmbeddabilityReport {
    pub phi: usize,
    pub phi_witness: VertexSet,
    pub max_genus: usize,
    pub upper_embeddable: bool,
    pub one_face: bool,
    pub two_face: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub one_face_partition: Option<DecyclingPartition>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub two_face_partition: Option<DecyclingPartition>,
}

pub fn is_decycling_set(g: &Graph, s: VertexSet) -> bool {
    g.is_acyclic_within(g.vertices() - s)
}

/// Minimum decycling set by iterative deepening. Each node branches on the
/// vertices of a shortest cycle left in `G - S`; the `i`-th branch excludes
/// the earlier cycle vertices from ever joining `S`.
pub fn decycling_number(g: &Graph) -> (usize, VertexSet) {
    decycling_number_with_budget(g, &Budget::unlimited()).expect("unlimited budget")
}

pub fn decycling_number_with_budget(g: &Graph, budget: &Budget) -> Result<(usize, VertexSet)> {
    let mut ticker = budget.ticker("decycling");
    for k in 0..=g.n() {
        if let Some(s) = decycle(g, VertexSet::EMPTY, VertexSet::EMPTY, k, &mut ticker)? {
            return Ok((s.len(), s));
        }
    }
    unreachable!("removing every vertex leaves no cycle")
}

fn decycle(
    g: &Graph,
    chosen: VertexSet,
    excluded: VertexSet,
    left: usize,
    ticker: &mut Ticker,
) -> Result<Option<VertexSet>> {
    ticker.tick()?;
    let rest = g.vertices() - chosen;
    let Some(cycle) = shortest_cycle_within(g, rest) else {
        return Ok(Some(chosen));
    };
    if left == 0 {
        return Ok(None);
    }
    // Deleting a vertex of degree d lowers the cycle rank by at most d - 1.
    let rank = g.edge_count_within(rest) + g.components_within(rest).len() - rest.len();
    let max_drop = rest.iter().map(|v| g.degree_within(v, rest).saturating_sub(1)).max().unwrap_or(0);
    if left * max_drop < rank {
        return Ok(None);
    }
    let mut earlier = VertexSet::EMPTY;
    for v in (cycle - excluded).iter() {
        if let Some(s) = decycle(g, chosen.with(v), excluded | earlier, left - 1, ticker)? {
            return Ok(Some(s));
        }
        earlier.insert(v);
    }
    Ok(None)
}

/// Vertex set of a shortest cycle of `G[mask]`, found by a breadth-first
/// search between the ends of every edge with that edge removed.
fn shortest_cycle_within(g: &Graph, mask: VertexSet) -> Option<VertexSet> {
    // Only the 2-core can carry cycles.
    let mut core = mask;
    while let Some(v) = core.iter().find(|&v| g.degree_within(v, core) <= 1) {
        core.remove(v);
    }
    let mut best: Option<VertexSet> = None;
    for u in core.iter() {
        for w in (g.neighbors(u) & core).iter().filter(|&w| w > u) {
            if let Some(p) = bfs_path(g, core, u, w, best.map_or(usize::MAX, |b| b.len())) {
                best = Some(p);
                if p.len() == 3 {
                    return best;
                }
            }
        }
    }
    best
}

/// Vertices of a shortest `u`-`w` path in `G[mask]` avoiding the edge `uw`,
/// if it has fewer than `limit` vertices.
fn bfs_path(g: &Graph, mask: VertexSet, u: usize, w: usize, limit: usize) -> Option<VertexSet> {
    let mut parent = vec![usize::MAX; g.n()];
    let mut seen = VertexSet::singleton(u);
    let mut frontier = vec![u];
    let mut depth = 1;
    while !frontier.is_empty() && depth < limit {
        let mut next = Vec::new();
        for &x in &frontier {
            for y in (g.neighbors(x) & mask).iter() {
                if seen.contains(y) || (x == u && y == w) {
                    continue;
                }
                seen.insert(y);
                parent[y] = x;
                if y == w {
                    let mut path = VertexSet::singleton(w);
                    let mut at = w;
                    while at != u {
                        at = parent[at];
                        path.insert(at);
                    }
                    return (path.len() < limit).then_some(path);
                }
                next.push(y);
            }
        }
        frontier = next;
        depth += 1;
    }
    None
}

fn require_connected_cubic(g: &Graph) -> Result<()> {
    if !classify_degrees(g).is_cubic || !g.is_connected() {
        return Err(Error::precondition("graph must be connected and cubic"));
    }
    Ok(())
}

/// Visits every `k`-subset of `V` inducing at most `max_edges` edges, in
/// lexicographic order, until `visit` returns true. With `connected_rest`,
/// subsets that isolate an outside vertex are skipped.
fn sparse_subsets(
    g: &Graph,
    k: usize,
    max_edges: usize,
    connected_rest: bool,
    ticker: &mut Ticker,
    visit: &mut dyn FnMut(VertexSet) -> bool,
) -> Result<Option<VertexSet>> {
    #[allow(clippy::too_many_arguments)]
    fn rec(
        g: &Graph,
        start: usize,
        cur: VertexSet,
        edges: usize,
        k: usize,
        max_edges: usize,
        connected_rest: bool,
        ticker: &mut Ticker,
        visit: &mut dyn FnMut(VertexSet) -> bool,
    ) -> Result<Option<VertexSet>> {
        ticker.tick()?;
        if cur.len() == k {
            return Ok(visit(cur).then_some(cur));
        }
        let need = k - cur.len();
        for v in start..g.n() {
            if g.n() - v < need {
                break;
            }
            let e = edges + (g.neighbors(v) & cur).len();
            if e > max_edges {
                continue;
            }
            let next = cur.with(v);
            // A vertex outside S with all neighbors in S would be isolated in R.
            if connected_rest && g.neighbors(v).iter().any(|u| !next.contains(u) && g.neighbors(u).is_subset(next)) {
                continue;
            }
            if let Some(s) = rec(g, v + 1, next, e, k, max_edges, connected_rest, ticker, visit)? {
                return Ok(Some(s));
            }
        }
        Ok(None)
    }
    rec(g, 0, VertexSet::EMPTY, 0, k, max_edges, connected_rest, ticker, visit)
}

/// A partition with `S` independent and `G[R]` a tree, or `None` when the
/// exhaustive search shows there is none.
pub fn find_partition_one_face(g: &Graph) -> Result<Option<DecyclingPartition>> {
    find_partition_one_face_with_budget(g, &Budget::unlimited())
}

pub fn find_partition_one_face_with_budget(g: &Graph, budget: &Budget) -> Result<Option<DecyclingPartition>> {
    require_connected_cubic(g)?;
    let n = g.n();
    if n % 4 != 2 {
        return Ok(None);
    }
    let mut ticker = budget.ticker("one-face partition");
    let full = g.vertices();
    let found = sparse_subsets(g, (n + 2) / 4, 0, true, &mut ticker, &mut |s| g.reach_within((full - s).first().unwrap(), full - s) == full - s)?;
    found.map(|s| DecyclingPartition::classify(g, s)).transpose()
}

/// A partition matching either two-face clause (tree with near independent
/// `S` is tried first), or `None` when neither exists.
pub fn find_partition_two_face(g: &Graph) -> Result<Option<DecyclingPartition>> {
    find_partition_two_face_with_budget(g, &Budget::unlimited())
}

pub fn find_partition_two_face_with_budget(g: &Graph, budget: &Budget) -> Result<Option<DecyclingPartition>> {
    require_connected_cubic(g)?;
    let n = g.n();
    if !n.is_multiple_of(4) {
        return Ok(None);
    }
    let k = (n + 4) / 4;
    let mut ticker = budget.ticker("two-face partition");
    let full = g.vertices();
    let tree = sparse_subsets(g, k, 1, true, &mut ticker, &mut |s| {
        g.edge_count_within(s) == 1 && g.reach_within((full - s).first().unwrap(), full - s) == full - s
    })?;
    let found = match tree {
        Some(s) => Some(s),
        None => sparse_subsets(g, k, 0, false, &mut ticker, &mut |s| g.components_within(full - s).len() == 2)?,
    };
    found.map(|s| DecyclingPartition::classify(g, s)).transpose()
}

/// Decycling number, the maximum genus it determines, and the partition
/// searches. Upper-embeddable means `phi = ceil((n + 2) / 4)`.
pub fn embeddability_report(g: &Graph) -> Result<EmbeddabilityReport> {
    embeddability_report_with_budget(g, &Budget::unlimited())
}

pub fn embeddability_report_with_budget(g: &Graph, budget: &Budget) -> Result<EmbeddabilityReport> {
    require_connected_cubic(g)?;
    let n = g.n();
    let (phi, phi_witness) = decycling_number_with_budget(g, budget)?;
    let one = find_partition_one_face_with_budget(g, budget)?;
    let two = find_partition_two_face_with_budget(g, budget)?;
    Ok(EmbeddabilityReport {
        phi,
        phi_witness,
        max_genus: n / 2 + 1 - phi,
        upper_embeddable: phi == (n + 2).div_ceil(4),
        one_face: one.is_some(),
        two_face: two.is_some(),
        one_face_partition: one,
        two_face_partition: two,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    fn naive_phi(g: &Graph) -> usize {
        (0u64..1 << g.n())
            .map(VertexSet::from_bits)
            .filter(|&s| is_decycling_set(g, s))
            .map(|s| s.len())
            .min()
            .unwrap()
    }

    /// Every connected cubic graph on up to 10 vertices used here.
    fn small_cubic() -> Vec<Graph> {
        vec![complete(4), complete_bipartite(3, 3), prism(3), prism(4), mobius_ladder(4), petersen(), prism(5)]
    }

    fn mobius_ladder(k: usize) -> Graph {
        let n = 2 * k;
        let mut edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        edges.extend((0..k).map(|i| (i, i + k)));
        Graph::from_edges(n, edges).unwrap()
    }

    #[test]
    fn decycling_examples() {
        assert_eq!(decycling_number(&path(5)).0, 0);
        assert_eq!(decycling_number(&complete(4)).0, 2);
        assert_eq!(decycling_number(&petersen()).0, 3);
        assert_eq!(decycling_number(&complete_bipartite(3, 3)).0, 2);
        for g in small_cubic() {
            let (phi, s) = decycling_number(&g);
            assert_eq!(phi, naive_phi(&g));
            assert!(is_decycling_set(&g, s));
        }
    }

    #[test]
    fn partitions_by_brute_force() {
        for g in small_cubic() {
            let full = g.vertices();
            let all = (0u64..1 << g.n()).map(VertexSet::from_bits).filter(|&s| is_decycling_set(&g, s));
            let parts: Vec<DecyclingPartition> = all.map(|s| DecyclingPartition::classify(&g, s).unwrap()).collect();
            let one = find_partition_one_face(&g).unwrap();
            assert_eq!(one.is_some(), parts.iter().any(|p| p.is_one_face()), "{g:?}");
            if let Some(p) = one {
                assert!(p.is_one_face() && p.r | p.s == full);
            }
            let two = find_partition_two_face(&g).unwrap();
            assert_eq!(two.is_some(), parts.iter().any(|p| p.two_face_clause().is_some()), "{g:?}");
            if let Some(p) = two {
                assert!(p.two_face_clause().is_some());
            }
        }
    }

    #[test]
    fn embeddability_examples() {
        let k4 = embeddability_report(&complete(4)).unwrap();
        assert!(k4.upper_embeddable && k4.two_face && !k4.one_face);
        assert_eq!(
            k4.two_face_partition.unwrap().two_face_clause(),
            Some(TwoFaceClause::TreeNearIndependent)
        );
        for g in small_cubic() {
            let r = embeddability_report(&g).unwrap();
            assert_eq!(r.max_genus + r.phi, g.n() / 2 + 1);
            assert!(r.phi <= (g.n() + 2).div_ceil(4));
            assert_eq!(r.upper_embeddable, r.one_face || r.two_face, "{g:?}");
        }
        assert!(embeddability_report(&petersen()).unwrap().upper_embeddable);
        assert!(embeddability_report(&cycle(4)).is_err());
    }
}
