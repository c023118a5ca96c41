//! Forcing sets from a set `S` whose removal leaves a forest.
//!
//! With `F = G - S`, let `H` be the subgraph induced by the vertices of
//! degree 3 in `F`, with a fresh pendant neighbor added to each isolated
//! vertex. `H` is a forest, so it has a minimum edge cover `E_H` whose size
//! equals `alpha(H)`. Edges of `E_H` that leave `F` (the pendant ones) are
//! swapped for an `F`-edge at the same degree-3 vertex. Deleting the result
//! from `F` leaves only paths, and `S` together with one end of every path
//! forces `G`.

use super::allpaths::allpaths_mis;
use super::pathcover::PathCover;
use super::BoundReport;
use crate::error::{Error, Result};
use crate::forcing::zero_forcing_number;
use crate::graph::{classify_degrees, Graph};
use crate::independence::{maximum_independent_set, vertex_cover_number_within};
use crate::matching::minimum_edge_cover;
use crate::set::{EdgeSet, VertexSet};

pub const ACYCLIC_REMAINDER: &str = "acyclic_remainder";
pub const THREE_ALPHA: &str = "z_le_3alpha_minus_half_n";

/// Checks that `|B| <= alpha(G) + beta(G[S]) + c` for the constructed set `B`,
/// where `c` counts the components of `G - S`.
pub fn acyclic_remainder_forcing_set(g: &Graph, s: VertexSet) -> Result<BoundReport> {
    let alpha = maximum_independent_set(g).alpha;
    remainder_report(g, s, alpha)
}

pub(crate) fn remainder_report(g: &Graph, s: VertexSet, alpha: usize) -> Result<BoundReport> {
    let (b, c) = construct(g, s)?;
    let bound = alpha + vertex_cover_number_within(g, s) + c;
    Ok(BoundReport::construction(ACYCLIC_REMAINDER, g, b, bound as i64))
}

/// The constructed forcing set and the number of components of `G - S`.
pub(crate) fn construct(g: &Graph, s: VertexSet) -> Result<(VertexSet, usize)> {
    if !classify_degrees(g).is_cubic {
        return Err(Error::precondition("graph must be cubic"));
    }
    if !s.is_subset(g.vertices()) {
        return Err(Error::precondition(format!("{s} is not a subset of the vertices")));
    }
    let f = g.vertices() - s;
    if !g.is_acyclic_within(f) {
        return Err(Error::precondition(format!("removing {s} leaves a cycle")));
    }
    let c = g.components_within(f).len();
    let deg3: VertexSet = f.iter().filter(|&v| g.degree_within(v, f) == 3).collect();
    let (core, old) = g.induced(deg3);
    let mut edges: Vec<(usize, usize)> = core.edges().collect();
    let mut fresh = core.n();
    for v in 0..core.n() {
        if core.degree(v) == 0 {
            edges.push((v, fresh));
            fresh += 1;
        }
    }
    let h = Graph::from_edges(fresh, edges)?;
    let cover = minimum_edge_cover(&h)?;

    let mut removed = EdgeSet::new();
    for (x, y) in cover.iter() {
        if y < core.n() {
            removed.insert(old[x], old[y]);
        } else {
            let v = old[x];
            let w = (g.neighbors(v) & f).first().expect("degree 3 in F");
            removed.insert(v, w);
        }
    }
    let mut kept = EdgeSet::new();
    for (u, v) in g.edges() {
        if f.contains(u) && f.contains(v) && !removed.contains(u, v) {
            kept.insert(u, v);
        }
    }
    let cover = PathCover::from_kept_edges(f, &kept);
    debug_assert_eq!(cover.len(), removed.len() + c);
    let ends: VertexSet = cover.paths.iter().map(|p| p[0]).collect();
    Ok((s | ends, c))
}

/// `Z <= 3 alpha - n/2` for cubic graphs without a K4 component. The
/// witness comes from the construction above with `S` a maximum
/// independent set whose complement induces paths, so `beta(G[S]) = 0` and
/// `G - S` has `2 alpha - n/2` components.
pub fn three_alpha_bound_check(g: &Graph) -> Result<BoundReport> {
    let z = zero_forcing_number(g).z;
    let alpha = maximum_independent_set(g).alpha;
    three_alpha_report(g, z, alpha)
}

pub(crate) fn three_alpha_report(g: &Graph, z: usize, alpha: usize) -> Result<BoundReport> {
    let a = allpaths_mis(g)?;
    let bound = 3 * alpha as i64 - g.n() as i64 / 2;
    let mut report = BoundReport::compare(THREE_ALPHA, z as i64, bound);
    let (b, _) = construct(g, a)?;
    let built = BoundReport::construction(THREE_ALPHA, g, b, bound);
    report.witness = built.witness;
    report.detail = built.detail;
    Ok(report)
}
