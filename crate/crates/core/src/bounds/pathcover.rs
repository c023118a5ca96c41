use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{is_acyclic, Graph};
use crate::set::{EdgeSet, VertexSet};

/// Vertex-disjoint induced paths covering every vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathCover {
    pub paths: Vec<Vec<usize>>,
}

impl PathCover {
    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }

    /// The paths formed by `kept` (edges inside `mask`, inducing paths) on the vertices of `mask`.
    /// Each path starts at its lower-index end; paths are ordered by that end.
    pub(crate) fn from_kept_edges(mask: VertexSet, kept: &EdgeSet) -> Self {
        let n = mask.last().map_or(0, |m| m + 1);
        let mut adj = vec![VertexSet::EMPTY; n];
        for (u, v) in kept.iter() {
            adj[u].insert(v);
            adj[v].insert(u);
        }
        let mut seen = VertexSet::EMPTY;
        let mut paths = Vec::new();
        for start in mask.iter() {
            if seen.contains(start) || adj[start].len() > 1 {
                continue;
            }
            let mut path = vec![start];
            seen.insert(start);
            let mut at = start;
            while let Some(next) = (adj[at] - seen).first() {
                path.push(next);
                seen.insert(next);
                at = next;
            }
            paths.push(path);
        }
        debug_assert_eq!(seen, mask, "kept edges must form paths");
        PathCover { paths }
    }

    pub fn is_valid_for(&self, g: &Graph) -> bool {
        let mut seen = VertexSet::EMPTY;
        for p in &self.paths {
            let members: VertexSet = p.iter().copied().collect();
            if members.len() != p.len() || members.intersects(seen) {
                return false;
            }
            seen |= members;
            if p.windows(2).any(|w| !g.has_edge(w[0], w[1])) || g.edge_count_within(members) + 1 != p.len() {
                return false;
            }
        }
        seen == g.vertices()
    }
}

/// Minimum path cover of a forest. Every vertex, processed leaves-first,
/// links to at most two children whose paths still end at the child; a
/// vertex that linked fewer than two children stays open to its parent.
pub fn path_cover_forest(f: &Graph) -> Result<PathCover> {
    if !is_acyclic(f) {
        return Err(Error::precondition("path_cover_forest needs an acyclic graph"));
    }
    let n = f.n();
    let mut parent = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    let mut seen = VertexSet::EMPTY;
    for root in 0..n {
        if seen.contains(root) {
            continue;
        }
        seen.insert(root);
        let mut stack = vec![root];
        while let Some(u) = stack.pop() {
            order.push(u);
            for w in (f.neighbors(u) - seen).iter() {
                seen.insert(w);
                parent[w] = u;
                stack.push(w);
            }
        }
    }
    let mut open_children = vec![0usize; n];
    let mut kept = EdgeSet::new();
    for &u in order.iter().rev() {
        let links = open_children[u];
        debug_assert!(links <= 2);
        if links < 2 && parent[u] != usize::MAX && open_children[parent[u]] < 2 {
            open_children[parent[u]] += 1;
            kept.insert(u, parent[u]);
        }
    }
    Ok(PathCover::from_kept_edges(f.vertices(), &kept))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forcing::zero_forcing_number;
    use crate::graph::named::*;

    #[test]
    fn examples() {
        assert_eq!(path_cover_forest(&path(7)).unwrap().len(), 1);
        assert_eq!(path_cover_forest(&star(3)).unwrap().len(), 2);
        assert_eq!(path_cover_forest(&spider(&[2, 2, 2])).unwrap().len(), 2);
        assert_eq!(path_cover_forest(&Graph::empty(3).unwrap()).unwrap().len(), 3);
        assert!(path_cover_forest(&cycle(4)).is_err());
    }

    #[test]
    fn matches_zero_forcing_on_trees() {
        for g in [star(5), spider(&[1, 2, 3, 1]), spider(&[3, 3]), path(1)] {
            let pc = path_cover_forest(&g).unwrap();
            assert!(pc.is_valid_for(&g));
            assert_eq!(pc.len(), zero_forcing_number(&g).z, "{g:?}");
        }
    }
}
