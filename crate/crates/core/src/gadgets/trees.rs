use std::collections::{BTreeMap, HashSet};

use serde::Serialize;

use super::{replace_vertices, GadgetMap, GadgetSpec};
use crate::bounds::path_cover_forest;
use crate::budget::Budget;
use crate::canon::canonical_form;
use crate::error::{Error, Result};
use crate::forcing::{is_zero_forcing_set, zero_forcing_number, Force, ForcingRecord};
use crate::graph::{is_acyclic, Graph};
use crate::independence::maximum_independent_set_with_budget;
use crate::set::VertexSet;

/// Replaces a leaf of a 3-1 tree: `K4` with a subdivided edge, the
/// subdivision vertex `l'` being the port.
pub const LEAF_GADGET: GadgetSpec = GadgetSpec {
    name: "leaf_diamond",
    labels: &["l'", "a", "b", "c", "d"],
    // l'b bd ad cd al' ca cb
    edges: &[(0, 2), (2, 4), (1, 4), (3, 4), (1, 0), (3, 1), (3, 2)],
    ports: &[0],
};

/// A tree whose degrees are all 1 or 3.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThreeOneTree {
    pub tree: Graph,
    pub leaves: VertexSet,
    pub internal: VertexSet,
}

impl ThreeOneTree {
    pub fn new(tree: Graph) -> Result<Self> {
        let n = tree.n();
        if n < 2 || !tree.is_connected() || !is_acyclic(&tree) {
            return Err(Error::precondition("a 3-1 tree must be a tree on at least 2 vertices"));
        }
        if let Some(v) = (0..n).find(|&v| !matches!(tree.degree(v), 1 | 3)) {
            return Err(Error::precondition(format!("vertex {v} has degree {}", tree.degree(v))));
        }
        let leaves: VertexSet = (0..n).filter(|&v| tree.degree(v) == 1).collect();
        debug_assert_eq!(leaves.len(), (n + 2) / 2);
        Ok(ThreeOneTree { internal: tree.vertices() - leaves, leaves, tree })
    }
}

/// All 3-1 trees on `n` vertices up to isomorphism, grown from `K_{1,3}` by
/// giving a leaf two new leaf children. Trees are returned in order of
/// their canonical forms.
pub fn generate_31_trees(n: usize) -> Result<Vec<ThreeOneTree>> {
    if n < 4 || !n.is_multiple_of(2) {
        return Err(Error::precondition(format!("3-1 trees need an even vertex count of at least 4, got {n}")));
    }
    if n > crate::graph::MAX_VERTICES {
        return Err(Error::TooManyVertices { n, max: crate::graph::MAX_VERTICES });
    }
    let mut level: Vec<Graph> = vec![crate::graph::named::star(3)];
    for m in (4..n).step_by(2) {
        let mut next: BTreeMap<_, Graph> = BTreeMap::new();
        for t in &level {
            for leaf in (0..m).filter(|&v| t.degree(v) == 1) {
                let grown = Graph::from_edges(m + 2, t.edges().chain([(leaf, m), (leaf, m + 1)]))?;
                next.entry(canonical_form(&grown)).or_insert(grown);
            }
        }
        level = next.into_values().collect();
    }
    let mut keyed: Vec<_> = level.into_iter().map(|t| (canonical_form(&t), t)).collect();
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    keyed.into_iter().map(|(_, t)| ThreeOneTree::new(t)).collect()
}

/// `G_T`: every leaf of `T` replaced by the leaf gadget.
pub fn build_gt(t: &ThreeOneTree) -> Result<GadgetMap> {
    let reps: Vec<(usize, &GadgetSpec)> = t.leaves.iter().map(|l| (l, &LEAF_GADGET)).collect();
    replace_vertices(&t.tree, &reps)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TightFamilyReport {
    pub tree_n: usize,
    pub leaves: usize,
    pub z_tree: usize,
    pub gt_n: usize,
    pub z_gt: usize,
    pub alpha_gt: usize,
    /// `Z(G_T) = Z(T) + n + 2`.
    pub z_identity: bool,
    /// `Z(G_T) = alpha(G_T) + 1`.
    pub alpha_identity: bool,
}

impl TightFamilyReport {
    pub fn holds(&self) -> bool {
        self.z_identity && self.alpha_identity
    }
}

/// Builds `G_T` and compares its exact invariants with the tree's path
/// cover number. Budget exhaustion is returned as an error.
pub fn verify_tight_family(t: &ThreeOneTree, budget: &Budget) -> Result<TightFamilyReport> {
    let n = t.tree.n();
    let z_tree = path_cover_forest(&t.tree)?.len();
    let gt = build_gt(t)?.result;
    let z_gt = crate::forcing::zero_forcing_number_with_budget(&gt, budget)?.z;
    let alpha_gt = maximum_independent_set_with_budget(&gt, budget)?.alpha;
    Ok(TightFamilyReport {
        tree_n: n,
        leaves: t.leaves.len(),
        z_tree,
        gt_n: gt.n(),
        z_gt,
        alpha_gt,
        z_identity: z_gt == z_tree + n + 2,
        alpha_identity: z_gt == alpha_gt + 1,
    })
}

/// A minimum zero forcing set of a 3-1 tree with a chronological list of
/// forces in which every leaf of the set performs a force. Minimum sets are
/// tried in lexicographic order; for each, force orders are searched
/// depth-first with each blue-set state visited once.
pub fn leaf_forcing_zfset(t: &Graph) -> Result<(VertexSet, ForcingRecord)> {
    let tree = ThreeOneTree::new(t.clone())?;
    let n = t.n();
    if n < 5 {
        return Err(Error::precondition("needs a 3-1 tree on at least 5 vertices"));
    }
    let z = zero_forcing_number(t).z;
    let mut found = None;
    for_each_subset(n, z, &mut |b| {
        if !is_zero_forcing_set(t, b) {
            return false;
        }
        let mut steps = Vec::new();
        let mut seen = HashSet::new();
        if leaf_orders(t, tree.leaves & b, b, &mut steps, &mut seen) {
            found = Some((b, steps.clone()));
            true
        } else {
            false
        }
    });
    let (b, steps) = found.ok_or_else(|| {
        Error::SearchFailed("no minimum zero forcing set lets every member leaf force".into())
    })?;
    Ok((b, ForcingRecord::from_steps(t, b, steps)?))
}

/// Depth-first search over force orders where the neighbor of each leaf in
/// `set_leaves` may only be forced by that leaf.
fn leaf_orders(
    t: &Graph,
    set_leaves: VertexSet,
    blue: VertexSet,
    steps: &mut Vec<Force>,
    seen: &mut HashSet<VertexSet>,
) -> bool {
    if blue == t.vertices() {
        return true;
    }
    if !seen.insert(blue) {
        return false;
    }
    for forcer in blue.iter() {
        let white = t.neighbors(forcer) - blue;
        if white.len() != 1 {
            continue;
        }
        let forced = white.first().unwrap();
        let reserved = (t.neighbors(forced) & set_leaves).first();
        if reserved.is_some_and(|l| l != forcer) {
            continue;
        }
        steps.push(Force { forcer, forced });
        if leaf_orders(t, set_leaves, blue.with(forced), steps, seen) {
            return true;
        }
        steps.pop();
    }
    false
}

/// Calls `visit` on every `k`-subset of `0..n` in lexicographic order until it returns true.
fn for_each_subset(n: usize, k: usize, visit: &mut dyn FnMut(VertexSet) -> bool) {
    fn rec(n: usize, k: usize, start: usize, cur: VertexSet, visit: &mut dyn FnMut(VertexSet) -> bool) -> bool {
        if cur.len() == k {
            return visit(cur);
        }
        (start..=n - (k - cur.len())).any(|v| rec(n, k, v + 1, cur.with(v), visit))
    }
    if k <= n {
        rec(n, k, 0, VertexSet::EMPTY, visit);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forcing::{is_fort, zero_forcing_number};
    use crate::graph::classify_degrees;
    use crate::graph::named::star;
    use crate::independence::maximum_independent_set;

    #[test]
    fn counts() {
        for (n, count) in [(4, 1), (6, 1), (8, 1), (10, 2), (12, 2), (14, 4)] {
            assert_eq!(generate_31_trees(n).unwrap().len(), count, "n = {n}");
        }
        assert!(generate_31_trees(5).is_err());
        assert!(generate_31_trees(2).is_err());
    }

    #[test]
    fn gt_of_claw() {
        let t = ThreeOneTree::new(star(3)).unwrap();
        let gt = build_gt(&t).unwrap().result;
        assert_eq!(gt.n(), 16);
        assert!(classify_degrees(&gt).is_cubic);
        assert_eq!(zero_forcing_number(&gt).z, 8);
        assert_eq!(maximum_independent_set(&gt).alpha, 7);
    }

    #[test]
    fn gt_structure() {
        for n in [4, 6, 8] {
            for t in generate_31_trees(n).unwrap() {
                let map = build_gt(&t).unwrap();
                let l = t.leaves.len();
                assert_eq!(map.result.n(), n - l + 5 * l);
                assert!(classify_degrees(&map.result).is_cubic);
                for gadget in &map.gadgets {
                    let pair = |x: &str, y: &str| VertexSet::singleton(gadget.vertex(x).unwrap()).with(gadget.vertex(y).unwrap());
                    assert!(is_fort(&map.result, pair("a", "b")).unwrap());
                    assert!(is_fort(&map.result, pair("c", "d")).unwrap());
                }
            }
        }
    }

    #[test]
    fn tight_family_small() {
        for n in [4, 6] {
            for t in generate_31_trees(n).unwrap() {
                let r = verify_tight_family(&t, &Budget::unlimited()).unwrap();
                assert!(r.holds(), "{r:?}");
            }
        }
    }

    #[test]
    fn leaf_forcing_sets() {
        for n in [6, 8, 10] {
            for t in generate_31_trees(n).unwrap() {
                let (b, rec) = leaf_forcing_zfset(&t.tree).unwrap();
                assert_eq!(b.len(), zero_forcing_number(&t.tree).z);
                assert!(rec.replay_valid(&t.tree) && rec.is_complete(&t.tree));
                let forcers = rec.forcers();
                assert!((b & t.leaves).iter().all(|l| forcers.contains(l)));
            }
        }
        assert!(leaf_forcing_zfset(&star(3)).is_err());
    }
}
