//! Exact solvers and constructive checks for zero forcing versus independence
//! in cubic and subcubic graphs.

pub mod bounds;
pub mod budget;
pub mod canon;
pub mod error;
pub mod forcing;
pub mod gadgets;
pub mod graph;
pub mod graph6;
pub mod harness;
pub mod independence;
pub mod matching;
pub mod set;

pub use budget::Budget;
pub use error::{Error, Graph6Error, Result};
pub use graph::{named, Graph};
pub use set::{EdgeSet, VertexSet};
