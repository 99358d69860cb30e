//! The enumeration engine and its trust anchor.
//!
//! [`search`] is the production path: a tail-first backtracking enumeration
//! that prunes with every derived structural fact (odd entries, the
//! `psi`-chain, spikes only in last position, the window bounds) and
//! re-verifies each emitted sequence against the acceptance predicate.
//!
//! [`naive_oracle`] is the independent verifier: a single-threaded
//! generator that knows nothing about the derived pruning rules and trusts
//! only the acceptance predicate's own pairwise window condition. The two
//! must agree exactly; [`diff`] reports any symmetric difference.

mod diff;
mod oracle;
mod search;

pub use diff::{diff, DiffReport};
pub use oracle::{naive_oracle, naive_oracle_with_ceiling, ORACLE_CEILING};
pub use search::search;

use std::collections::BTreeMap;
use std::time::Duration;

use crate::bits::Nat;
use crate::seq::Sequence;

/// Upper limit for `max_dim`; keeps all window arithmetic inside `u64`.
pub const MAX_SUPPORTED_DIM: Nat = 1 << 62;

/// Bounds and sharding directives for [`search`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    /// Upper dimension bound (inclusive).
    pub max_dim: Nat,
    /// Lower dimension bound (inclusive), default 1.
    pub min_dim: Nat,
    /// Optional filter on sequence lengths.
    pub lengths: Option<std::collections::BTreeSet<u32>>,
    /// Worker count; results are identical for any value.
    pub shards: usize,
    /// Optional cap on visited search nodes per shard, for resource control.
    pub node_budget: Option<u64>,
}

impl SearchConfig {
    pub fn new(max_dim: Nat) -> Self {
        SearchConfig {
            max_dim,
            min_dim: 1,
            lengths: None,
            shards: 1,
            node_budget: None,
        }
    }

    pub fn min_dim(mut self, min_dim: Nat) -> Self {
        self.min_dim = min_dim;
        self
    }

    pub fn lengths<I: IntoIterator<Item = u32>>(mut self, lengths: I) -> Self {
        self.lengths = Some(lengths.into_iter().collect());
        self
    }

    pub fn shards(mut self, shards: usize) -> Self {
        self.shards = shards;
        self
    }

    pub fn node_budget(mut self, budget: u64) -> Self {
        self.node_budget = Some(budget);
        self
    }

    pub(crate) fn validate(&self) -> Result<(), EngineError> {
        if self.max_dim == 0 || self.max_dim > MAX_SUPPORTED_DIM {
            return Err(EngineError::InvalidConfig {
                reason: format!("max_dim must be in 1..={MAX_SUPPORTED_DIM}"),
            });
        }
        if self.min_dim > self.max_dim {
            return Err(EngineError::InvalidConfig {
                reason: format!("min_dim {} exceeds max_dim {}", self.min_dim, self.max_dim),
            });
        }
        if self.shards == 0 {
            return Err(EngineError::InvalidConfig {
                reason: "shards must be at least 1".to_string(),
            });
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EngineError {
    #[error("invalid search configuration: {reason}")]
    InvalidConfig { reason: String },
    #[error("oracle bound {max_dim} exceeds the configured ceiling {ceiling}")]
    OracleCeilingExceeded { max_dim: Nat, ceiling: Nat },
    #[error(
        "node budget exhausted after {visited} nodes while exploring the \
         branch rooted at tail {branch_root}"
    )]
    ResourceExhausted { branch_root: Nat, visited: u64 },
}

/// A finished, sorted, duplicate-free enumeration result.
#[derive(Clone, Debug)]
pub struct ResultSet {
    sequences: Vec<Sequence>,
    counts: BTreeMap<u32, u64>,
    elapsed: Duration,
}

impl ResultSet {
    /// Builds a result set from raw sequences: sorts into emission order
    /// `(dim, length, entries)` and tallies per-length counts.
    pub fn from_sequences(mut sequences: Vec<Sequence>, elapsed: Duration) -> Self {
        sequences.sort_unstable();
        sequences.dedup();
        let mut counts = BTreeMap::new();
        for s in &sequences {
            *counts.entry(s.len() as u32).or_insert(0u64) += 1;
        }
        ResultSet {
            sequences,
            counts,
            elapsed,
        }
    }

    pub fn sequences(&self) -> &[Sequence] {
        &self.sequences
    }

    /// Per-length totals.
    pub fn counts(&self) -> &BTreeMap<u32, u64> {
        &self.counts
    }

    pub fn len(&self) -> usize {
        self.sequences.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sequences.is_empty()
    }

    /// Largest length present, or 0 when empty.
    pub fn max_length(&self) -> u32 {
        self.counts.keys().next_back().copied().unwrap_or(0)
    }

    pub fn elapsed(&self) -> Duration {
        self.elapsed
    }
}

/// Result sets compare by their sequences; timing is incidental.
impl PartialEq for ResultSet {
    fn eq(&self, other: &Self) -> bool {
        self.sequences == other.sequences
    }
}

impl Eq for ResultSet {}
