//! Immutable simple undirected graphs on at most 64 vertices.
//!
//! Adjacency rows are [`VertexSet`] words, so most structural queries are a
//! handful of bit operations. Operations that act on an induced subgraph
//! `G[mask]` take the mask directly instead of materializing a relabeled copy.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::set::VertexSet;

pub const MAX_VERTICES: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeClass {
    pub max_degree: usize,
    pub is_cubic: bool,
    pub is_subcubic: bool,
}

impl Graph {
    pub fn empty(n: usize) -> Result<Graph> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices { n, max: MAX_VERTICES });
        }
        Ok(Graph { n, adj: vec![VertexSet::EMPTY; n] })
    }

    /// Builds a graph from an edge list. Repeated edges collapse.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph from adjacency rows, checking symmetry and irreflexivity.
    pub fn from_adjacency(rows: Vec<VertexSet>) -> Result<Graph> {
        let n = rows.len();
        Graph::empty(n)?;
        let full = VertexSet::full(n);
        for (u, row) in rows.iter().enumerate() {
            if !row.is_subset(full) {
                let v = (*row - full).first().unwrap_or(n);
                return Err(Error::VertexOutOfRange { v, n });
            }
            if row.contains(u) {
                return Err(Error::SelfLoop(u));
            }
            for v in row.iter() {
                if !rows[v].contains(u) {
                    return Err(Error::precondition(format!(
                        "adjacency is not symmetric between {u} and {v}"
                    )));
                }
            }
        }
        Ok(Graph { n, adj: rows })
    }

    fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        for w in [u, v] {
            if w >= self.n {
                return Err(Error::VertexOutOfRange { v: w, n: self.n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.len()).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.adj[u].iter().filter(move |&v| v > u).map(move |v| (u, v))
        })
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn degree_within(&self, v: usize, mask: VertexSet) -> usize {
        (self.adj[v] & mask).len()
    }

    /// Number of edges of `G[mask]`.
    pub fn edge_count_within(&self, mask: VertexSet) -> usize {
        mask.iter().map(|v| (self.adj[v] & mask).len()).sum::<usize>() / 2
    }

    /// Connected components of `G[mask]`, ordered by smallest member.
    pub fn components_within(&self, mask: VertexSet) -> Vec<VertexSet> {
        let mut rest = mask;
        let mut out = Vec::new();
        while let Some(start) = rest.first() {
            let comp = self.reach_within(start, mask);
            rest -= comp;
            out.push(comp);
        }
        out
    }

    /// Vertices reachable from `start` inside `G[mask]`.
    pub fn reach_within(&self, start: usize, mask: VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier.iter() {
                next |= self.adj[v];
            }
            next &= mask - seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    pub fn is_acyclic_within(&self, mask: VertexSet) -> bool {
        self.edge_count_within(mask) + self.components_within(mask).len() == mask.len()
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.reach_within(0, self.vertices()).len() == self.n
    }

    /// `G[keep]` relabeled to `0..|keep|` in ascending order, together with
    /// the map from new labels back to old ones.
    pub fn induced(&self, keep: VertexSet) -> (Graph, Vec<usize>) {
        let old: Vec<usize> = keep.iter().collect();
        let mut new_of = vec![usize::MAX; self.n];
        for (i, &v) in old.iter().enumerate() {
            new_of[v] = i;
        }
        let rows = old
            .iter()
            .map(|&v| (self.adj[v] & keep).iter().map(|w| new_of[w]).collect())
            .collect();
        (Graph { n: old.len(), adj: rows }, old)
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut rows = vec![VertexSet::EMPTY; self.n];
        for u in 0..self.n {
            rows[perm[u]] = self.adj[u].iter().map(|v| perm[v]).collect();
        }
        Graph { n: self.n, adj: rows }
    }

    pub fn is_complete(&self) -> bool {
        (0..self.n).all(|v| self.degree(v) + 1 == self.n)
    }

    pub fn is_clique(&self, s: VertexSet) -> bool {
        s.iter().all(|v| (s - self.adj[v]).len() == 1)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}

pub fn connected_components(g: &Graph) -> Vec<VertexSet> {
    g.components_within(g.vertices())
}

/// True iff `|E| = n - (number of components)`.
pub fn is_acyclic(g: &Graph) -> bool {
    g.is_acyclic_within(g.vertices())
}

pub fn classify_degrees(g: &Graph) -> DegreeClass {
    let max_degree = g.max_degree();
    DegreeClass {
        max_degree,
        is_cubic: g.n() > 0 && (0..g.n()).all(|v| g.degree(v) == 3),
        is_subcubic: max_degree <= 3,
    }
}

/// Vertices with three pairwise nonadjacent neighbors.
pub fn claw_centers(g: &Graph) -> VertexSet {
    (0..g.n()).filter(|&v| has_independent_triple(g, g.neighbors(v))).collect()
}

fn has_independent_triple(g: &Graph, nbrs: VertexSet) -> bool {
    for a in nbrs.iter() {
        let after_a = nbrs - g.neighbors(a) - VertexSet::full(a + 1);
        for b in after_a.iter() {
            let after_b = after_a - g.neighbors(b) - VertexSet::full(b + 1);
            if !after_b.is_empty() {
                return true;
            }
        }
    }
    false
}

/// Standard small graphs used by tests, examples and the CLI.
pub mod named {
    use super::Graph;

    pub fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("valid path")
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3);
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("valid cycle")
    }

    pub fn complete(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
            .expect("valid complete graph")
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        Graph::from_edges(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))))
            .expect("valid complete bipartite graph")
    }

    /// `K_{1,k}` with center 0.
    pub fn star(k: usize) -> Graph {
        complete_bipartite(1, k)
    }

    /// `C_k □ K_2`: outer cycle `0..k`, inner cycle `k..2k`, spokes `i - (i+k)`.
    pub fn prism(k: usize) -> Graph {
        let mut edges = Vec::new();
        for i in 0..k {
            edges.push((i, (i + 1) % k));
            edges.push((k + i, k + (i + 1) % k));
            edges.push((i, k + i));
        }
        Graph::from_edges(2 * k, edges).expect("valid prism")
    }

    pub fn petersen() -> Graph {
        generalized_petersen(5, 2)
    }

    pub fn mobius_kantor() -> Graph {
        generalized_petersen(8, 3)
    }

    pub fn generalized_petersen(k: usize, step: usize) -> Graph {
        let mut edges = Vec::new();
        for i in 0..k {
            edges.push((i, (i + 1) % k));
            edges.push((i, k + i));
            edges.push((k + i, k + (i + step) % k));
        }
        Graph::from_edges(2 * k, edges).expect("valid generalized Petersen graph")
    }

    /// Hub 0 joined to a rim cycle on `1..=k`.
    pub fn wheel(k: usize) -> Graph {
        let mut edges: Vec<_> = (1..=k).map(|i| (0, i)).collect();
        edges.extend((1..=k).map(|i| (i, i % k + 1)));
        Graph::from_edges(k + 1, edges).expect("valid wheel")
    }

    /// Center 0 with `legs.len()` paths of the given lengths.
    pub fn spider(legs: &[usize]) -> Graph {
        let n = 1 + legs.iter().sum::<usize>();
        let mut edges = Vec::new();
        let mut next = 1;
        for &len in legs {
            let mut prev = 0;
            for _ in 0..len {
                edges.push((prev, next));
                prev = next;
                next += 1;
            }
        }
        Graph::from_edges(n, edges).expect("valid spider")
    }
}
