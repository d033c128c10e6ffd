use crate::error::{Error, Result};

/// Caps on the work a single call may do before giving up with
/// [`Error::ResourceLimit`] instead of returning a partial answer.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Minor evaluations per certificate.
    pub max_minors: u64,
    /// Permutations visited while enumerating index sets.
    pub max_enumeration: u64,
}

impl Limits {
    pub const DEFAULT_MINORS: u64 = 20_000_000;
    pub const DEFAULT_ENUMERATION: u64 = 5_000_000;

    /// The same cap for both kinds of work.
    pub fn uniform(cap: u64) -> Self {
        Limits {
            max_minors: cap,
            max_enumeration: cap,
        }
    }
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_minors: Self::DEFAULT_MINORS,
            max_enumeration: Self::DEFAULT_ENUMERATION,
        }
    }
}

/// Running count of charged work against one cap.
#[derive(Debug, Clone)]
pub(crate) struct Budget {
    used: u64,
    cap: u64,
    what: &'static str,
}

impl Budget {
    pub(crate) fn new(cap: u64, what: &'static str) -> Self {
        Budget { used: 0, cap, what }
    }

    pub(crate) fn charge(&mut self, amount: u64) -> Result<()> {
        self.used += amount;
        if self.used > self.cap {
            return Err(Error::ResourceLimit(format!("more than {} {} required", self.cap, self.what)));
        }
        Ok(())
    }

    pub(crate) fn used(&self) -> u64 {
        self.used
    }
}
