//! Connected cubic graphs up to isomorphism.
//!
//! Labeled graphs are grown in breadth-first order: vertex `i` is filled to
//! degree 3 with edges to higher vertices in increasing order, each either
//! already touched or the next fresh label. Every labeling produced this
//! way is connected, and every graph has such a labeling rooted at any
//! vertex with its fresh children in any order. Completed labelings are kept
//! only when the root maximizes a vertex invariant and sibling fresh
//! vertices appear in non-increasing invariant order; the survivors are
//! deduplicated by canonical form.

use std::collections::BTreeMap;

use crate::canon::{canonical_form, CanonicalForm};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::set::VertexSet;

pub const MAX_ENUMERATION_N: usize = 12;

/// All connected cubic graphs on `n` vertices, in canonical-form order.
pub fn enumerate_connected_cubic(n: usize) -> Result<Vec<Graph>> {
    if !n.is_multiple_of(2) || !(4..=MAX_ENUMERATION_N).contains(&n) {
        return Err(Error::precondition(format!(
            "built-in enumeration needs an even n with 4 <= n <= {MAX_ENUMERATION_N}, got {n}"
        )));
    }
    let mut gen = Generator {
        n,
        adj: vec![VertexSet::EMPTY; n],
        parent: vec![usize::MAX; n],
        next_fresh: 1,
        found: BTreeMap::new(),
    };
    gen.fill(0, 1);
    Ok(gen.found.into_values().collect())
}

struct Generator {
    n: usize,
    adj: Vec<VertexSet>,
    parent: Vec<usize>,
    next_fresh: usize,
    found: BTreeMap<CanonicalForm, Graph>,
}

impl Generator {
    fn fill(&mut self, i: usize, min_j: usize) {
        if i == self.n {
            self.leaf();
            return;
        }
        if self.adj[i].len() == 3 {
            self.fill(i + 1, i + 2);
            return;
        }
        if i >= self.next_fresh {
            return;
        }
        let need = 3 - self.adj[i].len();
        let hi = self.next_fresh.min(self.n - 1);
        let open = (min_j..=hi).filter(|&j| self.adj[j].len() < 3).count() + (self.n - 1 - hi);
        if open < need {
            return;
        }
        for j in min_j..=hi {
            if self.adj[j].len() >= 3 || self.adj[i].contains(j) {
                continue;
            }
            let fresh = j == self.next_fresh;
            self.adj[i].insert(j);
            self.adj[j].insert(i);
            if fresh {
                self.next_fresh += 1;
                self.parent[j] = i;
            }
            self.fill(i, j + 1);
            if fresh {
                self.next_fresh -= 1;
                self.parent[j] = usize::MAX;
            }
            self.adj[i].remove(j);
            self.adj[j].remove(i);
        }
    }

    fn leaf(&mut self) {
        let g = Graph::from_adjacency(self.adj.clone()).expect("generator keeps adjacency symmetric");
        let inv: Vec<_> = (0..self.n).map(|v| invariant(&g, v)).collect();
        if inv.iter().any(|x| *x > inv[0]) {
            return;
        }
        for j in 1..self.n - 1 {
            if self.parent[j] == self.parent[j + 1] && inv[j] < inv[j + 1] {
                return;
            }
        }
        self.found.entry(canonical_form(&g)).or_insert(g);
    }
}

/// Triangles through `v` followed by the sizes of its distance layers.
fn invariant(g: &Graph, v: usize) -> Vec<usize> {
    let nb = g.neighbors(v);
    let triangles = nb.iter().map(|u| (g.neighbors(u) & nb).len()).sum::<usize>() / 2;
    let mut out = vec![triangles];
    let mut seen = VertexSet::singleton(v);
    let mut layer = VertexSet::singleton(v);
    while !layer.is_empty() {
        let next = layer.iter().fold(VertexSet::EMPTY, |acc, u| acc | g.neighbors(u)) - seen;
        seen |= next;
        out.push(next.len());
        layer = next;
    }
    out
}
