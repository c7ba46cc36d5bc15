//! Node budgets for exponential searches.

use crate::error::{Error, Result};

/// Counts search nodes against an optional limit.
///
/// A budget is threaded by `&mut` through nested searches so that callers
/// composing several searches share a single limit.
#[derive(Debug, Clone)]
pub struct Budget {
    limit: Option<u64>,
    used: u64,
}

impl Budget {
    pub fn new(limit: u64) -> Self {
        Budget {
            limit: Some(limit),
            used: 0,
        }
    }

    pub fn unlimited() -> Self {
        Budget {
            limit: None,
            used: 0,
        }
    }

    pub fn limit(&self) -> Option<u64> {
        self.limit
    }

    pub fn used(&self) -> u64 {
        self.used
    }

    /// Charge one node.
    #[inline]
    pub fn tick(&mut self) -> Result<()> {
        self.used += 1;
        match self.limit {
            Some(limit) if self.used > limit => Err(Error::BudgetExhausted { limit }),
            _ => Ok(()),
        }
    }
}

impl Budget {
    /// Nodes left before exhaustion, if limited.
    pub fn remaining(&self) -> Option<u64> {
        self.limit.map(|l| l.saturating_sub(self.used))
    }

    /// Charge `nodes` at once, e.g. after a search that kept its own count.
    pub fn charge(&mut self, nodes: u64) -> Result<()> {
        self.used = self.used.saturating_add(nodes);
        match self.limit {
            Some(limit) if self.used > limit => Err(Error::BudgetExhausted { limit }),
            _ => Ok(()),
        }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::unlimited()
    }
}
