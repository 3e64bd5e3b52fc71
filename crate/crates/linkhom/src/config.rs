//! Run configuration shared by CLI commands.

use crate::error::{Error, Result};

/// Environment variable overriding the default q-series truncation order.
pub const Q_TRUNC_ENV: &str = "LINKHOM_Q_TRUNC";

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum OutputFormat {
    Text,
    Json,
    Latex,
}

#[derive(Clone, Copy, Debug)]
pub struct RunConfig {
    /// Default q-series truncation order for enumeration-backed commands.
    pub q_trunc: u64,
    /// Degree bound for symmetric-function computations; must be at least N
    /// for any requested computation.
    pub degree_bound: Option<u32>,
    pub format: OutputFormat,
    /// Cap on memo-table entries in the recursions.
    pub memo_limit: usize,
}

impl Default for RunConfig {
    fn default() -> Self {
        let q_trunc = std::env::var(Q_TRUNC_ENV)
            .ok()
            .and_then(|s| s.parse().ok())
            .unwrap_or(4);
        RunConfig {
            q_trunc,
            degree_bound: None,
            format: OutputFormat::Text,
            memo_limit: 1 << 20,
        }
    }
}

impl RunConfig {
    /// The degree bound to use for a computation whose natural degree is
    /// `needed`; an explicit bound below that is a usage error.
    pub fn degree_for(&self, needed: u32) -> Result<u32> {
        match self.degree_bound {
            Some(d) if d < needed => Err(Error::Precondition(format!(
                "degree bound {d} is below the required degree {needed}"
            ))),
            Some(d) => Ok(d),
            None => Ok(needed),
        }
    }
}
