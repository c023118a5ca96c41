//! Exact zero forcing number.
//!
//! Every zero forcing set hits every fort, so the search is an implicit
//! hitting-set problem over a lazily grown fort cache. For each target size
//! `k`, starting at a lower bound, a depth-first search branches on the
//! vertices of the unhit cached fort with the fewest admissible vertices.
//! When a candidate hits every cached fort but still stalls, the white set
//! of its closure is a new fort; it is minimized and cached.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use super::{closure_set, is_fort_unchecked};
use crate::budget::{Budget, Ticker};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::set::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZeroForcing {
    pub z: usize,
    pub witness: VertexSet,
}

pub fn zero_forcing_number(g: &Graph) -> ZeroForcing {
    zero_forcing_number_with_budget(g, &Budget::unlimited()).expect("unlimited budget")
}

pub fn zero_forcing_number_with_budget(g: &Graph, budget: &Budget) -> Result<ZeroForcing> {
    let witness = Solver::new(g, VertexSet::EMPTY, budget)
        .solve()?
        .expect("the full vertex set always forces");
    Ok(ZeroForcing { z: witness.len(), witness })
}

/// A minimum zero forcing set that leaves out `v`.
pub fn min_zfset_avoiding(g: &Graph, v: usize) -> Result<VertexSet> {
    if v >= g.n() {
        return Err(Error::VertexOutOfRange { v, n: g.n() });
    }
    if g.n() < 2 || !g.is_connected() {
        return Err(Error::precondition("graph must be connected with at least two vertices"));
    }
    let z = zero_forcing_number(g).z;
    let budget = Budget::unlimited();
    let found = Solver::new(g, VertexSet::singleton(v), &budget).solve()?;
    match found {
        Some(s) if s.len() == z => Ok(s),
        Some(s) => Err(Error::SearchFailed(format!(
            "every forcing set avoiding {v} has more than {z} vertices (best {})",
            s.len()
        ))),
        None => Err(Error::SearchFailed(format!("no forcing set avoids {v}"))),
    }
}

/// Shrinks a fort to an inclusion-minimal one. For each member `x`, the
/// closure of `(V - F) + x` leaves a white set inside `F - x`; if that set is
/// nonempty it is a smaller fort.
pub fn minimize_fort(g: &Graph, fort: VertexSet) -> VertexSet {
    debug_assert!(!fort.is_empty() && is_fort_unchecked(g, fort));
    let full = g.vertices();
    let mut f = fort;
    'shrink: loop {
        for x in f.iter() {
            let rest = full - closure_set(g, (full - f).with(x));
            if !rest.is_empty() {
                f = rest;
                continue 'shrink;
            }
        }
        return f;
    }
}

struct Solver<'a> {
    g: &'a Graph,
    full: VertexSet,
    allowed: VertexSet,
    forts: Vec<VertexSet>,
    seen: HashSet<VertexSet>,
    ticker: Ticker,
}

impl<'a> Solver<'a> {
    fn new(g: &'a Graph, forbidden: VertexSet, budget: &Budget) -> Self {
        Solver {
            g,
            full: g.vertices(),
            allowed: g.vertices() - forbidden,
            forts: Vec::new(),
            seen: HashSet::new(),
            ticker: budget.ticker("zero forcing"),
        }
    }

    fn add_fort(&mut self, white: VertexSet) {
        let f = minimize_fort(self.g, white);
        if self.seen.insert(f) {
            self.forts.push(f);
        }
    }

    /// Grow a forcing set by the vertex with the largest closure gain, then
    /// drop redundant members. Caches the fort seen at every stall.
    fn greedy(&mut self) -> Option<VertexSet> {
        let mut s = VertexSet::EMPTY;
        let mut blue = closure_set(self.g, s);
        while blue != self.full {
            self.add_fort(self.full - blue);
            let candidates = self.allowed - blue;
            let v = candidates
                .iter()
                .max_by_key(|&v| (closure_set(self.g, s.with(v)).len(), std::cmp::Reverse(v)))?;
            s.insert(v);
            blue = closure_set(self.g, s);
        }
        for v in s.to_vec().into_iter().rev() {
            if closure_set(self.g, s.without(v)) == self.full {
                s.remove(v);
            }
        }
        Some(s)
    }

    /// Greedy packing of pairwise disjoint admissible parts of unhit forts.
    fn packing_bound(&self, chosen: VertexSet, avail: VertexSet) -> Option<usize> {
        let mut parts: Vec<VertexSet> = Vec::new();
        for &f in &self.forts {
            if f.intersects(chosen) {
                continue;
            }
            let a = f & avail;
            if a.is_empty() {
                return None;
            }
            parts.push(a);
        }
        parts.sort_by_key(|p| p.len());
        let mut used = VertexSet::EMPTY;
        let mut count = 0;
        for p in parts {
            if !p.intersects(used) {
                used |= p;
                count += 1;
            }
        }
        Some(count)
    }

    fn solve(&mut self) -> Result<Option<VertexSet>> {
        if self.g.n() == 0 {
            return Ok(Some(VertexSet::EMPTY));
        }
        if closure_set(self.g, self.allowed) != self.full {
            return Ok(None);
        }
        let upper = self.greedy().expect("allowed set forces");
        let lower = self
            .packing_bound(VertexSet::EMPTY, self.allowed)
            .unwrap_or(0)
            .max(self.g.min_degree())
            .max(1);
        for k in lower..upper.len() {
            if let Some(s) = self.search(VertexSet::EMPTY, VertexSet::EMPTY, k)? {
                return Ok(Some(s));
            }
        }
        Ok(Some(upper))
    }

    fn search(&mut self, chosen: VertexSet, excluded: VertexSet, left: usize) -> Result<Option<VertexSet>> {
        self.ticker.tick()?;
        let avail = self.allowed - excluded - chosen;
        let branch = loop {
            let mut best: Option<VertexSet> = None;
            for &f in &self.forts {
                if f.intersects(chosen) {
                    continue;
                }
                let a = f & avail;
                if a.is_empty() {
                    return Ok(None);
                }
                if best.is_none_or(|b| a.len() < b.len()) {
                    best = Some(a);
                }
            }
            match best {
                Some(b) => break b,
                None => {
                    let blue = closure_set(self.g, chosen);
                    if blue == self.full {
                        return Ok(Some(chosen));
                    }
                    self.add_fort(self.full - blue);
                }
            }
        };
        if left == 0 {
            return Ok(None);
        }
        match self.packing_bound(chosen, avail) {
            Some(p) if p <= left => {}
            _ => return Ok(None),
        }
        let mut earlier = VertexSet::EMPTY;
        for v in branch.iter() {
            if let Some(s) = self.search(chosen.with(v), excluded | earlier, left - 1)? {
                return Ok(Some(s));
            }
            earlier.insert(v);
        }
        Ok(None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forcing::is_zero_forcing_set;
    use crate::graph::named::*;

    /// Smallest forcing set by scanning all subsets in ascending size.
    fn naive_z(g: &Graph) -> usize {
        let n = g.n();
        (0..=n)
            .find(|&k| {
                (0u64..1 << n)
                    .filter(|m| m.count_ones() as usize == k)
                    .any(|m| is_zero_forcing_set(g, VertexSet::from_bits(m)))
            })
            .unwrap()
    }

    #[test]
    fn frozen_values() {
        assert_eq!(zero_forcing_number(&complete(4)).z, 3);
        assert_eq!(naive_z(&petersen()), 5);
        assert_eq!(zero_forcing_number(&petersen()).z, 5);
        assert_eq!(zero_forcing_number(&path(7)).z, 1);
        assert_eq!(zero_forcing_number(&cycle(7)).z, 2);
        assert_eq!(zero_forcing_number(&Graph::empty(0).unwrap()).z, 0);
        assert_eq!(zero_forcing_number(&Graph::empty(3).unwrap()).z, 3);
    }

    #[test]
    fn witness_forces() {
        for g in [petersen(), prism(3), complete_bipartite(3, 3), mobius_kantor(), wheel(5)] {
            let r = zero_forcing_number(&g);
            assert!(is_zero_forcing_set(&g, r.witness));
            assert_eq!(r.witness.len(), r.z);
        }
    }

    #[test]
    fn agrees_with_naive_on_small_named_graphs() {
        for g in [path(6), cycle(6), star(4), complete(5), prism(3), complete_bipartite(2, 4), wheel(6)] {
            assert_eq!(zero_forcing_number(&g).z, naive_z(&g), "{g:?}");
        }
    }

    #[test]
    fn minimized_forts_are_minimal() {
        for g in [petersen(), prism(3), cycle(6)] {
            let f = minimize_fort(&g, g.vertices());
            assert!(is_fort_unchecked(&g, f));
            // every proper nonempty submask of f fails the fort test
            let bits = f.bits();
            let mut sub = (bits - 1) & bits;
            while sub != 0 {
                assert!(!is_fort_unchecked(&g, VertexSet::from_bits(sub)), "{g:?}");
                sub = (sub - 1) & bits;
            }
        }
    }

    #[test]
    fn avoiding_examples() {
        let p3 = path(3);
        let s = min_zfset_avoiding(&p3, 1).unwrap();
        assert!(s == VertexSet::singleton(0) || s == VertexSet::singleton(2));

        let c5 = cycle(5);
        for v in 0..5 {
            let s = min_zfset_avoiding(&c5, v).unwrap();
            let pair = s.to_vec();
            assert_eq!(pair.len(), 2);
            assert!(!s.contains(v));
            assert!(c5.has_edge(pair[0], pair[1]));
        }

        let k4 = complete(4);
        assert_eq!(min_zfset_avoiding(&k4, 0).unwrap(), [1, 2, 3].into_iter().collect());

        assert!(min_zfset_avoiding(&Graph::empty(1).unwrap(), 0).is_err());
        let two = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert!(min_zfset_avoiding(&two, 0).is_err());
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        let g = mobius_kantor();
        let r = zero_forcing_number_with_budget(&g, &Budget::new(std::time::Duration::ZERO));
        // Either it finished within the first tick window or it reported the budget.
        match r {
            Ok(z) => assert!(is_zero_forcing_set(&g, z.witness)),
            Err(e) => assert_eq!(e, Error::BudgetExceeded { solver: "zero forcing" }),
        }
    }
}
