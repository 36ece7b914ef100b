//! Process-wide size caps.
//!
//! Every construction that can blow up combinatorially consults these caps and
//! fails with [`Error::DimensionCap`](crate::Error::DimensionCap),
//! [`Error::LevelCap`](crate::Error::LevelCap) or
//! [`Error::BudgetExceeded`](crate::Error::BudgetExceeded) instead of running away.

use std::sync::OnceLock;

use crate::error::{Error, Result};

pub const MAX_DIM_ENV: &str = "SEQSPEC_MAX_DIM";
pub const MAX_LEVEL_ENV: &str = "SEQSPEC_MAX_LEVEL";
pub const BUDGET_ENV: &str = "SEQSPEC_BUDGET";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest simplex dimension any constructed simplicial set may carry.
    pub max_dim: usize,
    /// Largest spectrum level (truncation) any construction may reach.
    pub max_level: usize,
    /// Default number of candidate assignments an enumeration may visit.
    pub budget: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_dim: 10, max_level: 8, budget: 2_000_000 }
    }
}

impl Limits {
    /// Defaults overridden by `SEQSPEC_MAX_DIM`, `SEQSPEC_MAX_LEVEL` and `SEQSPEC_BUDGET`.
    pub fn from_env() -> std::result::Result<Self, String> {
        let mut limits = Limits::default();
        let read = |name: &str| -> std::result::Result<Option<u64>, String> {
            match std::env::var(name) {
                Ok(v) => v
                    .trim()
                    .parse::<u64>()
                    .map(Some)
                    .map_err(|_| format!("{name} must be a nonnegative integer, got {v:?}")),
                Err(_) => Ok(None),
            }
        };
        if let Some(v) = read(MAX_DIM_ENV)? {
            limits.max_dim = v as usize;
        }
        if let Some(v) = read(MAX_LEVEL_ENV)? {
            limits.max_level = v as usize;
        }
        if let Some(v) = read(BUDGET_ENV)? {
            if v == 0 {
                return Err(format!("{BUDGET_ENV} must be positive"));
            }
            limits.budget = v;
        }
        Ok(limits)
    }

    pub fn check_dim(&self, dim: usize) -> Result<()> {
        if dim > self.max_dim {
            return Err(Error::DimensionCap { dim, cap: self.max_dim });
        }
        Ok(())
    }

    pub fn check_level(&self, level: usize) -> Result<()> {
        if level > self.max_level {
            return Err(Error::LevelCap { level, cap: self.max_level });
        }
        Ok(())
    }
}

static LIMITS: OnceLock<Limits> = OnceLock::new();

/// The active caps. Defaults apply until [`install`] is called.
pub fn limits() -> Limits {
    *LIMITS.get_or_init(Limits::default)
}

/// Installs process-wide caps. Returns `false` if caps were already fixed.
pub fn install(limits: Limits) -> bool {
    LIMITS.set(limits).is_ok()
}
