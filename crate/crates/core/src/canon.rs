//! Canonical labeling by individualization and refinement.
//!
//! The canonical form is the lexicographically smallest relabeled adjacency
//! matrix over all leaves of the search tree. Refinement and target-cell
//! choice depend only on the coloring, so the set of leaves (and thus the
//! minimum) is the same for every labeling of the graph.

use crate::graph::Graph;
use crate::set::VertexSet;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    n: usize,
    rows: Vec<u64>,
}

impl CanonicalForm {
    pub fn to_graph(&self) -> Graph {
        Graph::from_adjacency(self.rows.iter().map(|&r| VertexSet::from_bits(r)).collect())
            .expect("canonical rows describe a simple graph")
    }
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    let n = g.n();
    let mut best: Option<Vec<u64>> = None;
    let colors = refine(g, vec![0; n]);
    search(g, colors, &mut best);
    CanonicalForm { n, rows: best.unwrap_or_default() }
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    g.n() == h.n() && g.edge_count() == h.edge_count() && canonical_form(g) == canonical_form(h)
}

fn search(g: &Graph, colors: Vec<usize>, best: &mut Option<Vec<u64>>) {
    let n = g.n();
    let k = colors.iter().max().map_or(0, |&m| m + 1);
    if k == n {
        let rows = relabeled_rows(g, &colors);
        if best.as_ref().is_none_or(|b| rows < *b) {
            *best = Some(rows);
        }
        return;
    }
    // First smallest non-singleton cell.
    let mut sizes = vec![0usize; k];
    for &c in &colors {
        sizes[c] += 1;
    }
    let target = (0..k)
        .filter(|&c| sizes[c] > 1)
        .min_by_key(|&c| (sizes[c], c))
        .expect("non-discrete coloring has a non-singleton cell");
    for v in (0..n).filter(|&v| colors[v] == target) {
        let split: Vec<usize> = colors
            .iter()
            .enumerate()
            .map(|(w, &c)| match c.cmp(&target) {
                std::cmp::Ordering::Greater => c + 1,
                std::cmp::Ordering::Equal if w != v => c + 1,
                _ => c,
            })
            .collect();
        search(g, refine(g, split), best);
    }
}

fn relabeled_rows(g: &Graph, perm: &[usize]) -> Vec<u64> {
    let mut rows = vec![0u64; g.n()];
    for u in 0..g.n() {
        rows[perm[u]] = g.neighbors(u).iter().fold(0u64, |acc, v| acc | 1u64 << perm[v]);
    }
    rows
}

/// Color refinement to the coarsest equitable partition finer than `colors`.
/// New colors are ranks of `(old color, neighbor color counts)`, so cell order is invariant.
fn refine(g: &Graph, mut colors: Vec<usize>) -> Vec<usize> {
    let n = g.n();
    let mut k = colors.iter().max().map_or(0, |&m| m + 1);
    loop {
        let mut sigs: Vec<(Vec<usize>, usize)> = (0..n)
            .map(|v| {
                let mut sig = vec![0usize; k + 1];
                sig[0] = colors[v];
                for w in g.neighbors(v).iter() {
                    sig[colors[w] + 1] += 1;
                }
                (sig, v)
            })
            .collect();
        sigs.sort();
        let mut next = vec![0usize; n];
        let mut rank = 0;
        for i in 0..n {
            if i > 0 && sigs[i].0 != sigs[i - 1].0 {
                rank += 1;
            }
            next[sigs[i].1] = rank;
        }
        let new_k = if n == 0 { 0 } else { rank + 1 };
        colors = next;
        if new_k == k {
            return colors;
        }
        k = new_k;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;
    use proptest::prelude::*;

    fn brute_force_isomorphic(g: &Graph, h: &Graph) -> bool {
        fn rec(g: &Graph, h: &Graph, perm: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
            let i = perm.len();
            if i == g.n() {
                return true;
            }
            for t in 0..g.n() {
                if used[t] || g.degree(i) != h.degree(t) {
                    continue;
                }
                if (0..i).all(|j| g.has_edge(i, j) == h.has_edge(t, perm[j])) {
                    perm.push(t);
                    used[t] = true;
                    if rec(g, h, perm, used) {
                        return true;
                    }
                    used[t] = false;
                    perm.pop();
                }
            }
            false
        }
        g.n() == h.n() && rec(g, h, &mut Vec::new(), &mut vec![false; g.n()])
    }

    #[test]
    fn distinguishes_cubic_graphs_on_six_vertices() {
        assert!(!are_isomorphic(&prism(3), &complete_bipartite(3, 3)));
        assert!(are_isomorphic(&generalized_petersen(5, 2), &petersen()));
        assert!(!are_isomorphic(&mobius_kantor(), &prism(8)));
    }

    #[test]
    fn canonical_graph_is_isomorphic() {
        let g = mobius_kantor();
        assert!(brute_force_isomorphic(&g, &canonical_form(&g).to_graph()) || g.n() > 12);
        let p = petersen();
        assert!(brute_force_isomorphic(&p, &canonical_form(&p).to_graph()));
    }

    fn random_graph(n: usize, bits: u64) -> Graph {
        let mut edges = Vec::new();
        let mut b = 0;
        for u in 0..n {
            for v in u + 1..n {
                if bits >> (b % 64) & 1 == 1 {
                    edges.push((u, v));
                }
                b += 1;
            }
        }
        Graph::from_edges(n, edges).unwrap()
    }

    proptest! {
        #[test]
        fn invariant_under_relabeling(n in 1usize..10, bits in any::<u64>(), seed in any::<u64>()) {
            let g = random_graph(n, bits);
            let mut perm: Vec<usize> = (0..n).collect();
            let mut s = seed;
            for i in (1..n).rev() {
                s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                perm.swap(i, (s >> 33) as usize % (i + 1));
            }
            prop_assert_eq!(canonical_form(&g), canonical_form(&g.permuted(&perm)));
        }

        #[test]
        fn agrees_with_brute_force(n in 1usize..7, a in any::<u64>(), b in any::<u64>()) {
            let g = random_graph(n, a);
            let h = random_graph(n, b);
            prop_assert_eq!(are_isomorphic(&g, &h), brute_force_isomorphic(&g, &h));
        }
    }
}
