//! Pruned tail-first enumeration.
//!
//! Sequences are grown from the last entry towards the head. The window
//! condition `0 <= 2*i_{j+1} - i_j < 2^phi(i_{j+1})` is driven by the entry
//! that is already fixed, so each extension step enumerates the odd integers
//! in the half-open interval `(2c - 2^phi(c), 2c]` above the current head
//! `c`, intersected with the next `psi` class `[2^psi(c), 2^(psi(c)+1))`.
//! Spikes never occur inside a sequence, and within the window that
//! exclusion is automatic: the only spike in the next class sits above
//! `2c`. A grown prefix is emitted as soon as the head condition
//! `0 < 2*i_1 - dim < 2^phi(i_1)` holds; extension stops once even the
//! smallest next entry `2^psi(c)` would overshoot `max_dim`.
//!
//! Every emitted sequence is re-verified against [`check_curtis`] before it
//! is recorded; a verification failure would be a bug in the pruning and
//! panics.

use std::time::Instant;

use crate::bits::{phi, psi, Nat};
use crate::check::check_curtis;
use crate::seq::Sequence;

use super::{EngineError, ResultSet, SearchConfig};

struct Shard<'a> {
    cfg: &'a SearchConfig,
    /// Largest length worth extending to, from the length filter.
    max_len: usize,
    /// Scratch chain in tail-first order: `chain[0]` is the last entry.
    chain: Vec<Nat>,
    out: Vec<Sequence>,
    visited: u64,
}

impl<'a> Shard<'a> {
    fn new(cfg: &'a SearchConfig) -> Self {
        let max_len = match &cfg.lengths {
            Some(set) => set.iter().next_back().copied().unwrap_or(0) as usize,
            // dim > 2^length for multi-entry sequences bounds the useful depth
            None => psi(cfg.max_dim) as usize + 1,
        };
        Shard {
            cfg,
            max_len,
            chain: Vec::with_capacity(64),
            out: Vec::new(),
            visited: 0,
        }
    }

    fn wanted_length(&self, len: usize) -> bool {
        match &self.cfg.lengths {
            Some(set) => set.contains(&(len as u32)),
            None => true,
        }
    }

    /// Emits the current chain if the head condition holds at its head.
    fn emit_if_accepted(&mut self, sum: Nat) {
        let head = *self.chain.last().expect("chain is never empty");
        if 2 * head <= sum {
            return;
        }
        let excess = 2 * head - sum;
        if excess >= 1 << phi(head) {
            return;
        }
        if sum < self.cfg.min_dim || !self.wanted_length(self.chain.len()) {
            return;
        }
        let entries: Vec<Nat> = self.chain.iter().rev().copied().collect();
        let seq = Sequence::new(entries).expect("search chains are valid sequences");
        // self-audit: the pruned path must never emit anything the
        // acceptance predicate rejects
        let report = check_curtis(&seq);
        assert!(
            report.accepted,
            "search emitted a rejected sequence {seq}: {report:?}"
        );
        self.out.push(seq);
    }

    fn explore(&mut self, root: Nat) -> Result<(), EngineError> {
        self.chain.clear();
        self.chain.push(root);
        self.grow(root, root)?;
        Ok(())
    }

    /// Recursively extends the chain whose current head is `head` and whose
    /// entry sum is `sum`.
    fn grow(&mut self, head: Nat, sum: Nat) -> Result<(), EngineError> {
        self.visited += 1;
        if let Some(budget) = self.cfg.node_budget {
            if self.visited > budget {
                return Err(EngineError::ResourceExhausted {
                    branch_root: self.chain[0],
                    visited: self.visited,
                });
            }
        }

        self.emit_if_accepted(sum);

        if self.chain.len() >= self.max_len {
            return Ok(());
        }
        let class_floor = 1 << psi(head);
        if sum + class_floor > self.cfg.max_dim {
            // even the smallest extension in the next psi class overshoots
            return Ok(());
        }
        let window_floor = 2 * head - (1 << phi(head)) + 1;
        let lo = window_floor.max(class_floor) | 1;
        let hi = (2 * head).min(self.cfg.max_dim - sum);
        let mut next = lo;
        while next <= hi {
            self.chain.push(next);
            self.grow(next, sum + next)?;
            self.chain.pop();
            next += 2;
        }
        Ok(())
    }
}

/// Runs one shard: explores every tail `root` assigned to `shard_index`
/// under round-robin assignment of the odd tails.
fn run_shard(cfg: &SearchConfig, shard_index: usize) -> Result<Vec<Sequence>, EngineError> {
    let mut shard = Shard::new(cfg);
    // accepted sequences have odd entries, so only odd tails can start one
    let mut root = 2 * shard_index as Nat + 1;
    while root <= cfg.max_dim {
        shard.explore(root)?;
        root += 2 * cfg.shards as Nat;
    }
    Ok(shard.out)
}

/// Enumerates exactly the accepted sequences within the configured bounds.
pub fn search(cfg: &SearchConfig) -> Result<ResultSet, EngineError> {
    cfg.validate()?;
    let start = Instant::now();

    let mut collected: Vec<Sequence> = Vec::new();
    if cfg.shards == 1 {
        collected = run_shard(cfg, 0)?;
    } else {
        let results = std::thread::scope(|scope| {
            let handles: Vec<_> = (0..cfg.shards)
                .map(|k| scope.spawn(move || run_shard(cfg, k)))
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("search worker panicked"))
                .collect::<Vec<_>>()
        });
        for r in results {
            collected.extend(r?);
        }
    }

    Ok(ResultSet::from_sequences(collected, start.elapsed()))
}
