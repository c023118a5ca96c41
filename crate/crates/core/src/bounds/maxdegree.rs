//! A forcing set of size at most `(Delta - 1) alpha` for connected,
//! non-complete graphs with maximum degree at least 3, built by induction
//! on the maximum degree.
//!
//! Degree 3: with `A` a maximum independent set, add one end of every path
//! of `G - A` and, for each cycle of `G - A` with an edge whose ends share a
//! neighbor in `A`, one end of such an edge. A vertex of `A` seeing two
//! white cycle vertices cannot force, so one of them must start blue; a
//! triangle lying inside the cycle does not help. Higher degree `r + 1`: take `A` and, for every
//! component `C` of `G - A`, a forcing set of `C` (recursively); a component
//! isomorphic to `K_{r+1}` instead contributes all but two vertices with no
//! common neighbor in `A`.
//!
//! Components outside the induction (paths, cycles and smaller complete
//! graphs) contribute a minimum forcing set of their own: one path end, two
//! adjacent cycle vertices, all but one vertex of a clique, or the single
//! vertex of `K_1`.

use super::BoundReport;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::independence::{max_independent_within, maximum_independent_set};
use crate::set::VertexSet;
use crate::Budget;

pub const MAX_DEGREE: &str = "z_le_delta_minus_1_alpha";

pub fn max_degree_forcing_set(g: &Graph) -> Result<BoundReport> {
    let alpha = maximum_independent_set(g).alpha;
    max_degree_report(g, alpha)
}

pub(crate) fn max_degree_report(g: &Graph, alpha: usize) -> Result<BoundReport> {
    let delta = g.max_degree();
    if delta < 3 {
        return Err(Error::precondition("maximum degree must be at least 3"));
    }
    if g.is_complete() {
        return Err(Error::precondition("graph must not be complete"));
    }
    if !g.is_connected() {
        return Err(Error::precondition("graph must be connected"));
    }
    let b = construct(g, g.vertices())?;
    Ok(BoundReport::construction(MAX_DEGREE, g, b, ((delta - 1) * alpha) as i64))
}

/// Forcing set of the connected subgraph `G[mask]`.
fn construct(g: &Graph, mask: VertexSet) -> Result<VertexSet> {
    let delta = mask.iter().map(|v| g.degree_within(v, mask)).max().unwrap_or(0);
    if delta <= 2 || g.is_clique(mask) {
        return Ok(floor_case(g, mask));
    }
    let a = max_independent_within(g, mask, &Budget::unlimited())?;
    let rest = mask - a;
    let mut b = a;
    for comp in g.components_within(rest) {
        if delta == 3 {
            let is_path = g.edge_count_within(comp) < comp.len();
            if is_path {
                b.insert(path_end(g, comp));
            } else if let Some(v) = comp.iter().find(|&v| shares_neighbor_in(g, v, comp, a)) {
                b.insert(v);
            }
        } else if comp.len() == delta && g.is_clique(comp) {
            let (x, y) = split_pair(g, comp, a).ok_or_else(|| {
                Error::SearchFailed(format!("every pair of {comp} shares a neighbor in the independent set"))
            })?;
            b |= comp.without(x).without(y);
        } else {
            b |= construct(g, comp)?;
        }
    }
    Ok(b)
}

fn floor_case(g: &Graph, comp: VertexSet) -> VertexSet {
    if g.is_clique(comp) && comp.len() > 1 {
        return comp.without(comp.last().expect("nonempty component"));
    }
    if g.edge_count_within(comp) < comp.len() {
        return VertexSet::singleton(path_end(g, comp));
    }
    let v = comp.first().expect("nonempty component");
    let w = (g.neighbors(v) & comp).first().expect("cycle vertex has neighbors");
    VertexSet::singleton(v).with(w)
}

fn path_end(g: &Graph, comp: VertexSet) -> usize {
    comp.iter().find(|&v| g.degree_within(v, comp) <= 1).expect("a path has an end")
}

/// Whether `v` has a neighbor in `comp` with which it shares a neighbor in `a`.
fn shares_neighbor_in(g: &Graph, v: usize, comp: VertexSet, a: VertexSet) -> bool {
    (g.neighbors(v) & a).iter().any(|x| g.neighbors(x).intersects(g.neighbors(v) & comp))
}

fn split_pair(g: &Graph, comp: VertexSet, a: VertexSet) -> Option<(usize, usize)> {
    for x in comp.iter() {
        for y in comp.iter().filter(|&y| y > x) {
            if !(g.neighbors(x) & g.neighbors(y) & a).is_empty() {
                continue;
            }
            return Some((x, y));
        }
    }
    None
}
