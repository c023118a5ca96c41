//! Seeded random graph families and brute-force oracles shared by the
//! integration tests.
#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use zfw::{Graph, VertexSet};

pub fn rng(seed: u64) -> ChaCha8Rng {
    rand::SeedableRng::seed_from_u64(seed)
}

/// Erdos-Renyi `G(n, p)`.
pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

/// Connected graph with maximum degree at most `cap`: a random tree with
/// the degree cap followed by `extra` attempts at adding capped edges.
pub fn random_connected_capped(rng: &mut ChaCha8Rng, n: usize, cap: usize, extra: usize) -> Graph {
    assert!(cap >= 2 || n <= 2);
    let mut adj = vec![VertexSet::EMPTY; n];
    let join = |adj: &mut Vec<VertexSet>, u: usize, v: usize| {
        adj[u].insert(v);
        adj[v].insert(u);
    };
    for v in 1..n {
        let open: Vec<usize> = (0..v).filter(|&u| adj[u].len() < cap).collect();
        let u = *open.choose(rng).expect("a capped tree can always grow when cap >= 2");
        join(&mut adj, u, v);
    }
    for _ in 0..extra {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u != v && adj[u].len() < cap && adj[v].len() < cap && !adj[u].contains(v) {
            join(&mut adj, u, v);
        }
    }
    Graph::from_adjacency(adj).unwrap()
}

/// Connected subcubic graph on `n` vertices.
pub fn random_connected_subcubic(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    let extra = rng.gen_range(0..=n);
    random_connected_capped(rng, n, 3, extra)
}

/// Forest: each vertex joins a random earlier vertex with probability `p`.
pub fn random_forest(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for v in 1..n {
        if rng.gen_bool(p) {
            edges.push((rng.gen_range(0..v), v));
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

/// Bipartite graph on parts `0..a` and `a..a+b` with no isolated vertex.
pub fn random_bipartite(rng: &mut ChaCha8Rng, a: usize, b: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..a {
        for v in a..a + b {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    let mut g = Graph::from_edges(a + b, edges.clone()).unwrap();
    for v in 0..a + b {
        if g.degree(v) == 0 {
            let w = if v < a { rng.gen_range(a..a + b) } else { rng.gen_range(0..a) };
            edges.push((v.min(w), v.max(w)));
            g = Graph::from_edges(a + b, edges.clone()).unwrap();
        }
    }
    g
}

/// Smallest zero forcing set size by trying every subset, smallest first.
pub fn naive_zero_forcing_number(g: &Graph) -> usize {
    let n = g.n();
    (0..=n)
        .find(|&k| subsets(n).filter(|s| s.len() == k).any(|s| simulate(g, s) == g.vertices()))
        .unwrap()
}

/// Largest independent set size by trying every subset.
pub fn naive_independence_number(g: &Graph) -> usize {
    subsets(g.n())
        .filter(|&s| s.iter().all(|v| !g.neighbors(v).intersects(s)))
        .map(|s| s.len())
        .max()
        .unwrap_or(0)
}

/// Color change rule applied one force at a time until nothing changes.
pub fn simulate(g: &Graph, b: VertexSet) -> VertexSet {
    let mut blue = b;
    loop {
        let step = blue.iter().find_map(|v| {
            let white = g.neighbors(v) - blue;
            (white.len() == 1).then(|| white.first().unwrap())
        });
        match step {
            Some(w) => {
                blue.insert(w);
            }
            None => return blue,
        }
    }
}

pub fn subsets(n: usize) -> impl Iterator<Item = VertexSet> {
    assert!(n < 64);
    (0u64..1 << n).map(VertexSet::from_bits)
}
