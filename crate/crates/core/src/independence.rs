//! Maximum independent sets and their complements, minimum vertex covers.

use serde::{Deserialize, Serialize};

use crate::budget::{Budget, Ticker};
use crate::error::Result;
use crate::graph::Graph;
use crate::set::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndependenceCertificate {
    pub alpha: usize,
    pub witness: VertexSet,
    /// Vertex cover number, `n - alpha`.
    pub beta: usize,
    pub cover_witness: VertexSet,
}

pub fn maximum_independent_set(g: &Graph) -> IndependenceCertificate {
    maximum_independent_set_with_budget(g, &Budget::unlimited()).expect("unlimited budget")
}

pub fn maximum_independent_set_with_budget(g: &Graph, budget: &Budget) -> Result<IndependenceCertificate> {
    let witness = max_independent_within(g, g.vertices(), budget)?;
    Ok(IndependenceCertificate {
        alpha: witness.len(),
        witness,
        beta: g.n() - witness.len(),
        cover_witness: g.vertices() - witness,
    })
}

/// A maximum independent set of `G[mask]`.
pub fn max_independent_within(g: &Graph, mask: VertexSet, budget: &Budget) -> Result<VertexSet> {
    let mut search = Search { g, best: VertexSet::EMPTY, ticker: budget.ticker("independence") };
    search.run(mask, VertexSet::EMPTY)?;
    Ok(search.best)
}

/// `alpha(G[mask])` without a budget.
pub fn independence_number_within(g: &Graph, mask: VertexSet) -> usize {
    max_independent_within(g, mask, &Budget::unlimited()).expect("unlimited budget").len()
}

/// `beta(G[s])`: the fewest vertices of `s` covering every edge inside `s`.
pub fn vertex_cover_number_within(g: &Graph, s: VertexSet) -> usize {
    s.len() - independence_number_within(g, s)
}

pub fn is_independent(g: &Graph, s: VertexSet) -> bool {
    g.edge_count_within(s) == 0
}

/// Induces exactly one edge.
pub fn is_near_independent(g: &Graph, s: VertexSet) -> bool {
    g.edge_count_within(s) == 1
}

struct Search<'a> {
    g: &'a Graph,
    best: VertexSet,
    ticker: Ticker,
}

impl Search<'_> {
    fn run(&mut self, cand: VertexSet, current: VertexSet) -> Result<()> {
        self.ticker.tick()?;
        if cand.is_empty() {
            if current.len() > self.best.len() {
                self.best = current;
            }
            return Ok(());
        }
        if current.len() + self.clique_cover(cand) <= self.best.len() {
            return Ok(());
        }
        // A vertex of degree <= 1 in G[cand] belongs to some maximum independent set.
        if let Some(u) = cand.iter().find(|&u| self.g.degree_within(u, cand) <= 1) {
            return self.run(cand - self.g.neighbors(u) - VertexSet::singleton(u), current.with(u));
        }
        let v = cand
            .iter()
            .max_by_key(|&v| (self.g.degree_within(v, cand), std::cmp::Reverse(v)))
            .unwrap();
        self.run(cand - self.g.neighbors(v) - VertexSet::singleton(v), current.with(v))?;
        self.run(cand.without(v), current)
    }

    /// Number of cliques in a greedy clique cover of `G[cand]`; bounds alpha from above.
    fn clique_cover(&self, cand: VertexSet) -> usize {
        let mut rest = cand;
        let mut count = 0;
        while let Some(u) = rest.first() {
            let mut clique_cands = self.g.neighbors(u) & rest;
            rest.remove(u);
            while let Some(w) = clique_cands.first() {
                rest.remove(w);
                clique_cands = clique_cands.without(w) & self.g.neighbors(w);
            }
            count += 1;
        }
        count
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    fn naive_alpha(g: &Graph) -> usize {
        (0u64..1 << g.n())
            .map(VertexSet::from_bits)
            .filter(|&s| is_independent(g, s))
            .map(|s| s.len())
            .max()
            .unwrap()
    }

    #[test]
    fn alpha_examples() {
        assert_eq!(maximum_independent_set(&complete(4)).alpha, 1);
        assert_eq!(maximum_independent_set(&cycle(5)).alpha, 2);
        assert_eq!(maximum_independent_set(&petersen()).alpha, 4);
        assert_eq!(maximum_independent_set(&Graph::empty(0).unwrap()).alpha, 0);
    }

    #[test]
    fn certificate_is_consistent() {
        for g in [petersen(), mobius_kantor(), prism(4), wheel(7), complete_bipartite(3, 5)] {
            let c = maximum_independent_set(&g);
            assert!(is_independent(&g, c.witness));
            assert_eq!(c.alpha + c.beta, g.n());
            assert_eq!(c.cover_witness, g.vertices() - c.witness);
            assert!(g.edges().all(|(u, v)| c.cover_witness.contains(u) || c.cover_witness.contains(v)));
        }
    }

    #[test]
    fn agrees_with_naive() {
        for g in [petersen(), prism(5), wheel(8), cycle(9), star(5)] {
            assert_eq!(maximum_independent_set(&g).alpha, naive_alpha(&g), "{g:?}");
        }
    }

    #[test]
    fn predicates() {
        let c4 = cycle(4);
        let s = |v: &[usize]| v.iter().copied().collect::<VertexSet>();
        assert!(is_independent(&c4, s(&[0, 2])));
        assert!(!is_independent(&c4, s(&[0, 1])));
        assert!(is_independent(&c4, VertexSet::EMPTY));
        assert!(is_near_independent(&c4, s(&[0, 1])));
        assert!(!is_near_independent(&c4, s(&[0, 2])));
        assert!(!is_near_independent(&complete(3), s(&[0, 1, 2])));
        assert_eq!(vertex_cover_number_within(&complete(4), s(&[0, 1, 2])), 2);
    }
}
