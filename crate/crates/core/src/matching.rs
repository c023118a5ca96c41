//! Bipartite matching and edge covers.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::set::{EdgeSet, VertexSet};

/// Proper 2-coloring (`true` = side B), or the vertex where an odd cycle closed.
pub fn two_coloring(g: &Graph) -> Result<Vec<bool>> {
    let mut side = vec![None; g.n()];
    for root in 0..g.n() {
        if side[root].is_some() {
            continue;
        }
        side[root] = Some(false);
        let mut stack = vec![root];
        while let Some(u) = stack.pop() {
            let su = side[u].unwrap();
            for w in g.neighbors(u).iter() {
                match side[w] {
                    None => {
                        side[w] = Some(!su);
                        stack.push(w);
                    }
                    Some(sw) if sw == su => return Err(Error::NotBipartite(w)),
                    Some(_) => {}
                }
            }
        }
    }
    Ok(side.into_iter().map(|s| s.unwrap()).collect())
}

/// Maximum matching by repeated augmenting-path search from each left vertex.
pub fn maximum_matching_bipartite(g: &Graph) -> Result<EdgeSet> {
    let side = two_coloring(g)?;
    let mut mate: Vec<Option<usize>> = vec![None; g.n()];
    for u in (0..g.n()).filter(|&u| !side[u]) {
        let mut visited = VertexSet::EMPTY;
        augment(g, u, &mut mate, &mut visited);
    }
    Ok((0..g.n())
        .filter(|&u| !side[u])
        .filter_map(|u| mate[u].map(|v| (u, v)))
        .collect())
}

fn augment(g: &Graph, u: usize, mate: &mut [Option<usize>], visited: &mut VertexSet) -> bool {
    for v in g.neighbors(u).iter() {
        if !visited.insert(v) {
            continue;
        }
        let free = match mate[v] {
            None => true,
            Some(w) => augment(g, w, mate, visited),
        };
        if free {
            mate[v] = Some(u);
            mate[u] = Some(v);
            return true;
        }
    }
    false
}

/// Minimum edge cover: a maximum matching plus, for each unmatched vertex,
/// its edge to the lowest-index neighbor. Size is `n - |matching|`.
pub fn minimum_edge_cover(g: &Graph) -> Result<EdgeSet> {
    if let Some(v) = (0..g.n()).find(|&v| g.degree(v) == 0) {
        return Err(Error::IsolatedVertex(v));
    }
    let mut cover = maximum_matching_bipartite(g)?;
    let matched = cover.covered();
    for v in g.vertices() - matched {
        let w = g.neighbors(v).first().expect("no isolated vertices");
        cover.insert(v, w);
    }
    Ok(cover)
}
