use std::time::{Duration, Instant};

use crate::error::{Error, Result};

/// Wall-clock allowance for one solver call.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    deadline: Option<Instant>,
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget { deadline: None }
    }

    pub fn new(limit: Duration) -> Self {
        Budget { deadline: Instant::now().checked_add(limit) }
    }

    pub fn is_exhausted(&self) -> bool {
        self.deadline.is_some_and(|d| Instant::now() >= d)
    }

    pub(crate) fn ticker(&self, solver: &'static str) -> Ticker {
        Ticker { budget: *self, solver, count: 0 }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::unlimited()
    }
}

/// Amortizes clock reads across search nodes.
pub(crate) struct Ticker {
    budget: Budget,
    solver: &'static str,
    count: u32,
}

impl Ticker {
    const INTERVAL: u32 = 1024;

    pub(crate) fn tick(&mut self) -> Result<()> {
        self.count += 1;
        if self.count >= Self::INTERVAL {
            self.count = 0;
            if self.budget.is_exhausted() {
                return Err(Error::BudgetExceeded { solver: self.solver });
            }
        }
        Ok(())
    }
}
