use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::forcing::{chronological_forces, ForcingRecord};
use crate::graph::Graph;
use crate::set::VertexSet;

/// The canonical chronological list of forces from a zero forcing set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ForcingTrace {
    pub record: ForcingRecord,
}

/// Fails with [`Error::NotForcingSet`] carrying the stalled closure.
pub fn trace_forcing(g: &Graph, b: VertexSet) -> Result<ForcingTrace> {
    if let Some(v) = b.iter().find(|&v| v >= g.n()) {
        return Err(Error::VertexOutOfRange { v, n: g.n() });
    }
    Ok(ForcingTrace { record: chronological_forces(g, b)? })
}

impl ForcingTrace {
    /// `"0→1, 1→2"`; empty when the initial set is already everything.
    pub fn text(&self) -> String {
        let steps: Vec<String> = self.record.steps.iter().map(|f| format!("{}→{}", f.forcer, f.forced)).collect();
        steps.join(", ")
    }

    /// Graphviz rendering: initial vertices filled dark, forced vertices
    /// light, force edges drawn bold with their step number.
    pub fn dot(&self, g: &Graph) -> String {
        let mut out = String::from("graph forcing {\n  node [shape=circle, style=filled];\n");
        for v in 0..g.n() {
            let color = if self.record.initial.contains(v) { "dodgerblue" } else { "lightblue" };
            let _ = writeln!(out, "  {v} [fillcolor={color}];");
        }
        let step_of = |u: usize, w: usize| {
            self.record.steps.iter().position(|f| (f.forcer, f.forced) == (u, w) || (f.forcer, f.forced) == (w, u))
        };
        for (u, w) in g.edges() {
            match step_of(u, w) {
                Some(i) => {
                    let f = self.record.steps[i];
                    let _ = writeln!(
                        out,
                        "  {} -- {} [penwidth=3, color=blue, dir=forward, label=\"{}\"];",
                        f.forcer,
                        f.forced,
                        i + 1
                    );
                }
                None => {
                    let _ = writeln!(out, "  {u} -- {w} [color=gray];");
                }
            }
        }
        out.push_str("}\n");
        out
    }
}
