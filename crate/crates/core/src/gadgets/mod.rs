//! Vertex replacements that move a graph toward cubic while tracking the
//! zero forcing and independence numbers, the 3-1 trees, and the tight
//! family built from them.
//!
//! A replacement deletes a vertex `v` of degree `d` and inserts a small
//! gadget with `d` attachment vertices ("ports"), matched to the former
//! neighbors of `v` in ascending index order. In the result, surviving
//! vertices keep their relative order and come first; gadget vertices
//! follow, one gadget after another in ascending order of the replaced
//! vertex.

mod trees;

use serde::{Serialize, Serializer};

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::forcing::zero_forcing_number_with_budget;
use crate::graph::{classify_degrees, Graph};
use crate::graph6::write_graph6;
use crate::independence::maximum_independent_set_with_budget;

pub use trees::{
    build_gt, generate_31_trees, leaf_forcing_zfset, verify_tight_family, ThreeOneTree, TightFamilyReport,
    LEAF_GADGET,
};

/// A gadget: labeled vertices, internal edges between label indices, and
/// the label indices that receive the former neighbors.
#[derive(Debug)]
pub struct GadgetSpec {
    pub name: &'static str,
    pub labels: &'static [&'static str],
    pub edges: &'static [(usize, usize)],
    pub ports: &'static [usize],
}

/// Replaces a degree-1 vertex: `K4 - e` with a degree-2 vertex replaced by
/// another `K4 - e`. Port `v'`.
pub const DEGREE_ONE_GADGET: GadgetSpec = GadgetSpec {
    name: "h1",
    labels: &["v'", "a", "b", "c", "d", "e", "f"],
    // v'a v'b ab ae bf ce cd fd cf ed
    edges: &[(0, 1), (0, 2), (1, 2), (1, 5), (2, 6), (3, 5), (3, 4), (6, 4), (3, 6), (5, 4)],
    ports: &[0],
};

/// Replaces a degree-2 vertex: `K4 - e` missing `v1 v2`. Ports `v1`, `v2`.
pub const DEGREE_TWO_GADGET: GadgetSpec = GadgetSpec {
    name: "k4_minus_e",
    labels: &["v1", "v2", "a", "b"],
    edges: &[(0, 2), (0, 3), (1, 2), (1, 3), (2, 3)],
    ports: &[0, 1],
};

/// Replaces a degree-3 vertex by a triangle. Ports `v1`, `v2`, `v3`.
pub const TRIANGLE_GADGET: GadgetSpec = GadgetSpec {
    name: "triangle",
    labels: &["v1", "v2", "v3"],
    edges: &[(0, 1), (0, 2), (1, 2)],
    ports: &[0, 1, 2],
};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Gadget {
    pub replaced: usize,
    pub kind: &'static str,
    /// `(label, result vertex)` in label order.
    pub vertices: Vec<(&'static str, usize)>,
}

impl Gadget {
    pub fn vertex(&self, label: &str) -> Option<usize> {
        self.vertices.iter().find(|(l, _)| *l == label).map(|&(_, v)| v)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GadgetMap {
    #[serde(serialize_with = "as_graph6")]
    pub source: Graph,
    #[serde(serialize_with = "as_graph6")]
    pub result: Graph,
    /// Source vertex to result vertex; `None` for replaced vertices.
    pub vertex_map: Vec<Option<usize>>,
    pub gadgets: Vec<Gadget>,
}

fn as_graph6<S: Serializer>(g: &Graph, s: S) -> std::result::Result<S::Ok, S::Error> {
    let text = write_graph6(g).map_err(serde::ser::Error::custom)?;
    s.serialize_str(&text)
}

impl GadgetMap {
    pub fn replaced(&self) -> Vec<usize> {
        self.gadgets.iter().map(|g| g.replaced).collect()
    }
}

/// Replaces every listed vertex by its gadget at once.
pub fn replace_vertices(g: &Graph, reps: &[(usize, &GadgetSpec)]) -> Result<GadgetMap> {
    let n = g.n();
    let mut reps: Vec<(usize, &GadgetSpec)> = reps.to_vec();
    reps.sort_by_key(|&(v, _)| v);
    let mut spec_of: Vec<Option<&GadgetSpec>> = vec![None; n];
    for &(v, spec) in &reps {
        if v >= n {
            return Err(Error::VertexOutOfRange { v, n });
        }
        if spec_of[v].is_some() {
            return Err(Error::precondition(format!("vertex {v} is replaced twice")));
        }
        if g.degree(v) != spec.ports.len() {
            return Err(Error::precondition(format!(
                "vertex {v} has degree {}, the {} gadget needs degree {}",
                g.degree(v),
                spec.name,
                spec.ports.len()
            )));
        }
        spec_of[v] = Some(spec);
    }
    let mut vertex_map = vec![None; n];
    let mut next = 0;
    for v in 0..n {
        if spec_of[v].is_none() {
            vertex_map[v] = Some(next);
            next += 1;
        }
    }
    let mut base = vec![usize::MAX; n];
    let mut gadgets = Vec::with_capacity(reps.len());
    for &(v, spec) in &reps {
        base[v] = next;
        gadgets.push(Gadget {
            replaced: v,
            kind: spec.name,
            vertices: spec.labels.iter().enumerate().map(|(i, &l)| (l, next + i)).collect(),
        });
        next += spec.labels.len();
    }
    let port = |u: usize, w: usize| -> usize {
        match spec_of[u] {
            None => vertex_map[u].unwrap(),
            Some(spec) => {
                let rank = g.neighbors(u).iter().position(|x| x == w).unwrap();
                base[u] + spec.ports[rank]
            }
        }
    };
    let mut edges: Vec<(usize, usize)> = g.edges().map(|(u, w)| (port(u, w), port(w, u))).collect();
    for &(v, spec) in &reps {
        edges.extend(spec.edges.iter().map(|&(a, b)| (base[v] + a, base[v] + b)));
    }
    let result = Graph::from_edges(next, edges)?;
    Ok(GadgetMap { source: g.clone(), result, vertex_map, gadgets })
}

pub fn replace_deg1(g: &Graph, v: usize) -> Result<GadgetMap> {
    replace_vertices(g, &[(v, &DEGREE_ONE_GADGET)])
}

pub fn replace_deg2(g: &Graph, v: usize) -> Result<GadgetMap> {
    replace_vertices(g, &[(v, &DEGREE_TWO_GADGET)])
}

pub fn replace_claw_center(g: &Graph, v: usize) -> Result<GadgetMap> {
    replace_vertices(g, &[(v, &TRIANGLE_GADGET)])
}

/// Replaces every degree-1 vertex by the degree-one gadget and every
/// degree-2 vertex by `K4 - e`, giving a connected cubic graph.
pub fn cubify(g: &Graph) -> Result<GadgetMap> {
    if g.n() < 2 || !g.is_connected() || !classify_degrees(g).is_subcubic {
        return Err(Error::precondition("cubify needs a connected subcubic graph on at least 2 vertices"));
    }
    let reps: Vec<(usize, &GadgetSpec)> = (0..g.n())
        .filter_map(|v| match g.degree(v) {
            1 => Some((v, &DEGREE_ONE_GADGET)),
            2 => Some((v, &DEGREE_TWO_GADGET)),
            _ => None,
        })
        .collect();
    let map = replace_vertices(g, &reps)?;
    debug_assert!(classify_degrees(&map.result).is_cubic && map.result.is_connected());
    Ok(map)
}

/// Exact `alpha` and `Z` before and after a replacement.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Deltas {
    pub alpha_before: usize,
    pub alpha_after: usize,
    pub z_before: usize,
    pub z_after: usize,
}

impl Deltas {
    pub fn alpha_delta(&self) -> i64 {
        self.alpha_after as i64 - self.alpha_before as i64
    }

    pub fn z_delta(&self) -> i64 {
        self.z_after as i64 - self.z_before as i64
    }
}

pub fn replacement_deltas(map: &GadgetMap, budget: &Budget) -> Result<Deltas> {
    Ok(Deltas {
        alpha_before: maximum_independent_set_with_budget(&map.source, budget)?.alpha,
        alpha_after: maximum_independent_set_with_budget(&map.result, budget)?.alpha,
        z_before: zero_forcing_number_with_budget(&map.source, budget)?.z,
        z_after: zero_forcing_number_with_budget(&map.result, budget)?.z,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    fn deltas(map: &GadgetMap) -> (i64, i64) {
        let d = replacement_deltas(map, &Budget::unlimited()).unwrap();
        (d.alpha_delta(), d.z_delta())
    }

    #[test]
    fn gadget_specs_have_the_right_degrees() {
        for spec in [&DEGREE_ONE_GADGET, &DEGREE_TWO_GADGET, &TRIANGLE_GADGET] {
            let g = Graph::from_edges(spec.labels.len(), spec.edges.iter().copied()).unwrap();
            for v in 0..g.n() {
                let expected = if spec.ports.contains(&v) { 2 } else { 3 };
                assert_eq!(g.degree(v), expected, "{} {}", spec.name, spec.labels[v]);
            }
        }
    }

    #[test]
    fn degree_one_examples() {
        let m = replace_deg1(&path(2), 1).unwrap();
        assert_eq!(m.result.n(), 8);
        assert_eq!(deltas(&m), (2, 2));
        let m = replace_deg1(&star(3), 1).unwrap();
        assert_eq!(m.result.max_degree(), 3);
        assert_eq!(deltas(&m), (2, 2));
        assert_eq!(deltas(&replace_deg1(&path(3), 0).unwrap()), (2, 2));
        assert!(replace_deg1(&path(3), 1).is_err());
    }

    #[test]
    fn degree_two_examples() {
        let m = replace_deg2(&path(3), 1).unwrap();
        assert_eq!(m.result.n(), 6);
        assert_eq!(deltas(&m), (1, 1));
        assert_eq!(deltas(&replace_deg2(&cycle(4), 2).unwrap()), (1, 1));
        assert_eq!(deltas(&replace_deg2(&cycle(3), 0).unwrap()), (1, 1));
        let m = replace_deg2(&path(3), 1).unwrap();
        let g = &m.gadgets[0];
        assert!(m.result.has_edge(m.vertex_map[0].unwrap(), g.vertex("v1").unwrap()));
        assert!(m.result.has_edge(m.vertex_map[2].unwrap(), g.vertex("v2").unwrap()));
        assert!(!m.result.has_edge(g.vertex("v1").unwrap(), g.vertex("v2").unwrap()));
    }

    #[test]
    fn triangle_examples() {
        for (g, v) in [(star(3), 0), (complete(4), 1), (petersen(), 3)] {
            let d = replacement_deltas(&replace_claw_center(&g, v).unwrap(), &Budget::unlimited()).unwrap();
            assert!(d.alpha_after <= d.alpha_before + 1);
            assert!(d.z_before <= d.z_after);
        }
    }

    #[test]
    fn cubify_examples() {
        for g in [path(3), cycle(5), star(3)] {
            let m = cubify(&g).unwrap();
            assert!(classify_degrees(&m.result).is_cubic);
            assert!(m.result.is_connected());
            let d = replacement_deltas(&m, &Budget::unlimited()).unwrap();
            assert_eq!(d.alpha_before as i64 - d.z_before as i64, d.alpha_after as i64 - d.z_after as i64);
        }
        assert!(cubify(&Graph::empty(1).unwrap()).is_err());
        assert!(cubify(&star(4)).is_err());
    }
}
