//! Constructive upper bounds on the zero forcing number and the decycling
//! machinery they rely on.

mod allpaths;
mod decycling;
mod maxdegree;
mod pathcover;
mod remainder;

use serde::{Deserialize, Serialize};

use crate::forcing::is_zero_forcing_set;
use crate::graph::Graph;
use crate::set::VertexSet;

pub use allpaths::{allpaths_mis, cycle_count_outside};
pub use decycling::{
    decycling_number, decycling_number_with_budget, embeddability_report, embeddability_report_with_budget,
    find_partition_one_face, find_partition_one_face_with_budget, find_partition_two_face,
    find_partition_two_face_with_budget, is_decycling_set, DecyclingPartition, EmbeddabilityReport, ForestClass,
    SetClass, TwoFaceClause,
};
pub use maxdegree::{max_degree_forcing_set, MAX_DEGREE};
pub(crate) use maxdegree::max_degree_report;
pub use pathcover::{path_cover_forest, PathCover};
pub use remainder::{acyclic_remainder_forcing_set, three_alpha_bound_check, ACYCLIC_REMAINDER, THREE_ALPHA};
pub(crate) use remainder::{remainder_report, three_alpha_report};

/// One inequality `value <= bound`, optionally backed by a constructed
/// forcing set. A witness is only attached once it has been verified to
/// force the graph and to fit within the bound.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    pub name: String,
    pub value: i64,
    pub bound: i64,
    pub holds: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<VertexSet>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl BoundReport {
    pub fn compare(name: &str, value: i64, bound: i64) -> Self {
        BoundReport { name: name.to_string(), value, bound, holds: value <= bound, witness: None, detail: None }
    }

    /// A report on a constructed set `b`: it must force `g` and have at most `bound` vertices.
    pub fn construction(name: &str, g: &Graph, b: VertexSet, bound: i64) -> Self {
        let forces = is_zero_forcing_set(g, b);
        let value = b.len() as i64;
        let fits = value <= bound;
        let detail = match (forces, fits) {
            (true, true) => None,
            (false, _) => Some(format!("constructed set {b} does not force the graph")),
            (true, false) => Some(format!("constructed set {b} exceeds the bound")),
        };
        BoundReport {
            name: name.to_string(),
            value,
            bound,
            holds: forces && fits,
            witness: (forces && fits).then_some(b),
            detail,
        }
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }
}

pub const RATIO: &str = "n_over_z_plus_1_le_alpha";
pub const SQRT_N: &str = "sqrt_n_z_le_alpha";

/// `ceil(n / (z + 1)) <= alpha`, and `z <= alpha` whenever `z * z <= n`.
/// The second report is `None` when its hypothesis fails.
pub fn chromatic_free_checks(n: usize, z: usize, alpha: usize) -> (BoundReport, Option<BoundReport>) {
    let ratio = BoundReport::compare(RATIO, n.div_ceil(z + 1) as i64, alpha as i64);
    let small = (z * z <= n).then(|| BoundReport::compare(SQRT_N, z as i64, alpha as i64));
    (ratio, small)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chromatic_free_examples() {
        // P9: Z = 1, alpha = 5
        let (r, s) = chromatic_free_checks(9, 1, 5);
        assert_eq!((r.value, r.holds), (5, true));
        assert!(s.unwrap().holds);
        // K4: Z = 3, alpha = 1; 9 > 4 so the second check does not apply
        let (r, s) = chromatic_free_checks(4, 3, 1);
        assert_eq!((r.value, r.holds), (1, true));
        assert!(s.is_none());
        // Petersen
        let (r, _) = chromatic_free_checks(10, 5, 4);
        assert_eq!((r.value, r.holds), (2, true));
    }
}
