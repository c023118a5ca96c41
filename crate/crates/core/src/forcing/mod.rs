//! Zero forcing: the color change rule, chronological force records, forts,
//! and the exact zero forcing number.

mod exact;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::set::VertexSet;

pub use exact::{min_zfset_avoiding, minimize_fort, zero_forcing_number, zero_forcing_number_with_budget, ZeroForcing};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ColorState {
    pub blue: VertexSet,
}

impl ColorState {
    pub fn white(&self, g: &Graph) -> VertexSet {
        g.vertices() - self.blue
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Force {
    pub forcer: usize,
    pub forced: usize,
}

/// A chronological list of forces from an initial blue set, with the forcing
/// chains it induces. Chains start at initial vertices, in ascending order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ForcingRecord {
    pub initial: VertexSet,
    pub steps: Vec<Force>,
    pub chains: Vec<Vec<usize>>,
}

impl ForcingRecord {
    /// Replays `steps` against the color change rule and derives chains.
    pub fn from_steps(g: &Graph, initial: VertexSet, steps: Vec<Force>) -> Result<Self> {
        let mut blue = initial;
        for (i, f) in steps.iter().enumerate() {
            if !legal_force(g, blue, *f) {
                return Err(Error::precondition(format!(
                    "step {i} ({} -> {}) violates the color change rule",
                    f.forcer, f.forced
                )));
            }
            blue.insert(f.forced);
        }
        let mut next = vec![None; g.n()];
        for f in &steps {
            next[f.forcer] = Some(f.forced);
        }
        let chains = initial
            .iter()
            .map(|start| {
                let mut chain = vec![start];
                let mut at = start;
                while let Some(w) = next[at] {
                    chain.push(w);
                    at = w;
                }
                chain
            })
            .collect();
        Ok(ForcingRecord { initial, steps, chains })
    }

    pub fn replay_valid(&self, g: &Graph) -> bool {
        let mut blue = self.initial;
        for f in &self.steps {
            if !legal_force(g, blue, *f) {
                return false;
            }
            blue.insert(f.forced);
        }
        true
    }

    pub fn final_blue(&self) -> VertexSet {
        self.initial | self.steps.iter().map(|f| f.forced).collect()
    }

    pub fn is_complete(&self, g: &Graph) -> bool {
        self.final_blue() == g.vertices()
    }

    pub fn forcers(&self) -> VertexSet {
        self.steps.iter().map(|f| f.forcer).collect()
    }
}

fn legal_force(g: &Graph, blue: VertexSet, f: Force) -> bool {
    f.forcer < g.n()
        && f.forced < g.n()
        && blue.contains(f.forcer)
        && g.neighbors(f.forcer) - blue == VertexSet::singleton(f.forced)
}

/// Fixpoint of the color change rule. The result does not depend on the
/// order in which forces are applied.
pub fn closure(g: &Graph, b: VertexSet) -> ColorState {
    ColorState { blue: closure_set(g, b) }
}

pub(crate) fn closure_set(g: &Graph, b: VertexSet) -> VertexSet {
    let mut blue = b & g.vertices();
    // Vertices that might still force; a vertex with no white neighbor is done for good.
    let mut active = blue;
    loop {
        let mut changed = false;
        for v in active.iter() {
            let white = g.neighbors(v) - blue;
            if white.is_empty() {
                active.remove(v);
            } else if white.len() == 1 {
                blue |= white;
                active.remove(v);
                active |= white;
                changed = true;
            }
        }
        if !changed {
            return blue;
        }
    }
}

pub fn is_zero_forcing_set(g: &Graph, b: VertexSet) -> bool {
    closure_set(g, b) == g.vertices()
}

/// Forces applied one at a time, always by the lowest-index blue vertex that
/// has exactly one white neighbor. Stops when the closure stalls.
pub fn canonical_forces(g: &Graph, b: VertexSet) -> ForcingRecord {
    let initial = b & g.vertices();
    let mut blue = initial;
    let mut steps = Vec::new();
    loop {
        let next = blue.iter().find_map(|v| {
            let white = g.neighbors(v) - blue;
            (white.len() == 1).then(|| Force { forcer: v, forced: white.first().unwrap() })
        });
        match next {
            Some(f) => {
                blue.insert(f.forced);
                steps.push(f);
            }
            None => break,
        }
    }
    ForcingRecord::from_steps(g, initial, steps).expect("canonical forces are legal")
}

pub fn chronological_forces(g: &Graph, b: VertexSet) -> Result<ForcingRecord> {
    let record = canonical_forces(g, b);
    if !record.is_complete(g) {
        return Err(Error::NotForcingSet { blue: record.final_blue() });
    }
    Ok(record)
}

/// A nonempty set that no outside vertex sees exactly once.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Fort {
    pub members: VertexSet,
}

pub fn is_fort(g: &Graph, f: VertexSet) -> Result<bool> {
    if f.is_empty() {
        return Err(Error::EmptySet);
    }
    Ok(is_fort_unchecked(g, f))
}

pub(crate) fn is_fort_unchecked(g: &Graph, f: VertexSet) -> bool {
    (g.vertices() - f).iter().all(|u| (g.neighbors(u) & f).len() != 1)
}

/// Up to `cap` inclusion-minimal forts, by subset search in ascending size
/// (lexicographic within a size).
pub fn enumerate_minimal_forts(g: &Graph, cap: usize) -> Vec<Fort> {
    let n = g.n();
    let mut found: Vec<Fort> = Vec::new();
    for k in 1..=n {
        let mut idx: Vec<usize> = (0..k).collect();
        loop {
            if found.len() >= cap {
                return found;
            }
            let s: VertexSet = idx.iter().copied().collect();
            if !found.iter().any(|f| f.members.is_subset(s)) && is_fort_unchecked(g, s) {
                found.push(Fort { members: s });
            }
            // next k-combination of 0..n
            let mut i = k;
            while i > 0 && idx[i - 1] == n - k + i - 1 {
                i -= 1;
            }
            if i == 0 {
                break;
            }
            idx[i - 1] += 1;
            for j in i..k {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }
    found
}
