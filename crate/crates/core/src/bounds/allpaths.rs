//! A maximum independent set of a cubic graph whose complement induces only paths.
//!
//! Starting from any maximum independent set `A`, every component of `G - A`
//! is a path or a cycle. While a cycle remains, an alternating path
//! `c0 a0 c1 a1 ... ck ak` is grown from a cycle vertex `c0` and its neighbor
//! `a0` in `A`: each later `ci` is an end of a distinct path component whose
//! other end is also adjacent to `a(i-1)`. Swapping the `a`s for the `c`s (or,
//! when `ak` has a degree-2 neighbor `x` adjacent to some `ci`, the shorter
//! swap ending in `x`) yields a maximum independent set with fewer cycles.

use crate::error::{Error, Result};
use crate::graph::{classify_degrees, Graph};
use crate::independence::{is_independent, maximum_independent_set};
use crate::set::VertexSet;

/// Number of components of `G - a` that contain a cycle.
pub fn cycle_count_outside(g: &Graph, a: VertexSet) -> usize {
    let rest = g.vertices() - a;
    g.components_within(rest).into_iter().filter(|&c| g.edge_count_within(c) >= c.len()).count()
}

pub fn allpaths_mis(g: &Graph) -> Result<VertexSet> {
    if !classify_degrees(g).is_cubic {
        return Err(Error::precondition("graph must be cubic"));
    }
    if g.components_within(g.vertices()).iter().any(|&c| c.len() == 4 && g.is_clique(c)) {
        return Err(Error::precondition("graph has a component isomorphic to K4"));
    }
    let mut a = maximum_independent_set(g).witness;
    loop {
        let cycles = cycle_count_outside(g, a);
        if cycles == 0 {
            return Ok(a);
        }
        let next = Swap::new(g, a, cycles).find().ok_or_else(|| {
            Error::SearchFailed(format!("no cycle-reducing swap for independent set {a}"))
        })?;
        debug_assert!(cycle_count_outside(g, next) < cycles);
        a = next;
    }
}

struct Swap<'a> {
    g: &'a Graph,
    a: VertexSet,
    rest: VertexSet,
    comp_of: Vec<usize>,
    comps: Vec<VertexSet>,
    cycles: usize,
}

impl<'a> Swap<'a> {
    fn new(g: &'a Graph, a: VertexSet, cycles: usize) -> Self {
        let rest = g.vertices() - a;
        let comps = g.components_within(rest);
        let mut comp_of = vec![usize::MAX; g.n()];
        for (i, c) in comps.iter().enumerate() {
            for v in c.iter() {
                comp_of[v] = i;
            }
        }
        Swap { g, a, rest, comp_of, comps, cycles }
    }

    fn deg_h(&self, v: usize) -> usize {
        self.g.degree_within(v, self.rest)
    }

    fn improves(&self, cand: VertexSet) -> bool {
        cand.len() == self.a.len() && is_independent(self.g, cand) && cycle_count_outside(self.g, cand) < self.cycles
    }

    fn find(&self) -> Option<VertexSet> {
        for (i, &comp) in self.comps.iter().enumerate() {
            if self.g.edge_count_within(comp) < comp.len() {
                continue;
            }
            for c0 in comp.iter() {
                let a_nbrs = self.g.neighbors(c0) & self.a;
                for a0 in a_nbrs.iter() {
                    let mut cs = vec![c0];
                    let mut as_ = vec![a0];
                    let used = VertexSet::singleton(i);
                    if let Some(found) = self.extend(&mut cs, &mut as_, used) {
                        return Some(found);
                    }
                }
            }
        }
        None
    }

    /// `used` holds component indices (all below 64 since components are disjoint vertex sets).
    fn extend(&self, cs: &mut Vec<usize>, as_: &mut Vec<usize>, used: VertexSet) -> Option<VertexSet> {
        let k = cs.len() - 1;
        let ak = as_[k];
        let swapped: VertexSet = (self.a - as_.iter().copied().collect()) | cs.iter().copied().collect();
        if self.improves(swapped) {
            return Some(swapped);
        }
        for x in (self.g.neighbors(ak) & self.rest).iter() {
            if x == cs[k] || self.deg_h(x) != 2 {
                continue;
            }
            for i in 0..=k {
                if !self.g.has_edge(cs[i], x) {
                    continue;
                }
                let drop: VertexSet = as_[..i].iter().copied().chain([ak]).collect();
                let add: VertexSet = cs[..i].iter().copied().chain([x]).collect();
                let cand = (self.a - drop) | add;
                if self.improves(cand) {
                    return Some(cand);
                }
            }
        }
        for c in (self.g.neighbors(ak) & self.rest).iter() {
            let ci = self.comp_of[c];
            if self.deg_h(c) != 1 || used.contains(ci) {
                continue;
            }
            let Some(other) = (self.comps[ci].without(c)).iter().find(|&e| self.deg_h(e) == 1) else {
                continue;
            };
            if !self.g.has_edge(ak, other) {
                continue;
            }
            let Some(next_a) = (self.g.neighbors(c) & self.a).without(ak).first() else {
                continue;
            };
            if as_.contains(&next_a) {
                continue;
            }
            cs.push(c);
            as_.push(next_a);
            let found = self.extend(cs, as_, used.with(ci));
            cs.pop();
            as_.pop();
            if found.is_some() {
                return found;
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;
    use crate::independence::maximum_independent_set;

    fn check(g: &Graph) {
        let a = allpaths_mis(g).unwrap();
        assert!(is_independent(g, a));
        assert_eq!(a.len(), maximum_independent_set(g).alpha);
        let rest = g.vertices() - a;
        assert!(g.is_acyclic_within(rest));
        assert!(rest.iter().all(|v| g.degree_within(v, rest) <= 2));
    }

    #[test]
    fn named_cubic_graphs() {
        for g in [complete_bipartite(3, 3), petersen(), prism(3), prism(4), prism(5), mobius_kantor()] {
            check(&g);
        }
    }

    #[test]
    fn rejects_bad_input() {
        assert!(allpaths_mis(&complete(4)).is_err());
        assert!(allpaths_mis(&cycle(5)).is_err());
    }
}
