//! Node budgets for the exhaustive searches.

use crate::error::{Error, Result};

pub const DEFAULT_LIMIT: u64 = 20_000_000;
pub const ENV_VAR: &str = "HP_BUDGET";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub limit: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { limit: DEFAULT_LIMIT }
    }
}

impl Budget {
    pub fn new(limit: u64) -> Self {
        Budget { limit }
    }

    /// Reads `HP_BUDGET`, falling back to the default when unset.
    pub fn from_env() -> Result<Self> {
        match std::env::var(ENV_VAR) {
            Ok(s) => s
                .trim()
                .parse::<u64>()
                .map(Budget::new)
                .map_err(|_| Error::Config(format!("{ENV_VAR} must be a nonnegative integer, got {s:?}"))),
            Err(_) => Ok(Budget::default()),
        }
    }

    pub fn counter(&self, what: &str) -> Counter {
        Counter { used: 0, limit: self.limit, what: what.to_string() }
    }
}

/// Running count of visited nodes for one search.
#[derive(Debug)]
pub struct Counter {
    used: u64,
    limit: u64,
    what: String,
}

impl Counter {
    #[inline]
    pub fn tick(&mut self) -> Result<()> {
        self.used += 1;
        if self.used > self.limit {
            Err(Error::Budget { what: self.what.clone(), limit: self.limit })
        } else {
            Ok(())
        }
    }

    pub fn used(&self) -> u64 {
        self.used
    }
}
