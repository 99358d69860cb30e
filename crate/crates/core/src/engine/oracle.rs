//! Brute-force verifier, the trust anchor for the pruned search.
//!
//! Enumeration here deliberately knows nothing about the derived structure
//! of accepted sequences: no oddness, no `psi` chain, no spike placement,
//! no parity, no dimension bound. Tails range over *all* positive integers;
//! candidate predecessors are scanned downward from `2c` one by one, keeping
//! a candidate `p` exactly while the raw window inequality
//! `0 <= 2c - p < 2^phi(c)` holds, with only the dimension cutoff applied.
//! Every generated prefix is then filtered through [`check_curtis`] alone.
//!
//! The window inequality is the acceptance predicate's own pairwise
//! condition, so the generated superset provably contains every accepted
//! sequence; no structural fact about them is assumed. Even `phi` is
//! recomputed here by a digit loop so this file shares no arithmetic with
//! the pruned search.
//!
//! Enumerating the literal `i_j <= 2*i_{j+1}` superset instead would be
//! exponential in the dimension (every all-ones tuple qualifies), which is
//! why generation is anchored to the window condition; the test suite
//! additionally cross-checks this oracle against that literal enumeration
//! at small dimensions.

use std::time::Instant;

use crate::bits::Nat;
use crate::check::check_curtis;
use crate::seq::Sequence;

use super::{EngineError, ResultSet};

/// Default ceiling for oracle runs; the node count grows quickly with the
/// dimension bound.
pub const ORACLE_CEILING: Nat = 4096;

/// Digit-loop `phi`, independent of the bit intrinsics used elsewhere.
fn phi_by_digits(n: Nat) -> u32 {
    let mut i = 0;
    while (n >> i) & 1 == 1 {
        i += 1;
    }
    i
}

struct Oracle {
    max_dim: Nat,
    chain: Vec<Nat>,
    out: Vec<Sequence>,
}

impl Oracle {
    fn walk(&mut self, sum: Nat) {
        let entries: Vec<Nat> = self.chain.iter().rev().copied().collect();
        let seq = Sequence::new(entries).expect("oracle chains are valid sequences");
        if check_curtis(&seq).accepted {
            self.out.push(seq);
        }

        let cur = *self.chain.last().expect("chain is never empty");
        let bound = 1u64 << phi_by_digits(cur);
        let mut p = 2 * cur;
        while p >= 1 && 2 * cur - p < bound {
            if sum + p <= self.max_dim {
                self.chain.push(p);
                self.walk(sum + p);
                self.chain.pop();
            }
            p -= 1;
        }
    }
}

/// Enumerates the accepted sequences with `dim <= max_dim` without any of
/// the pruned search's shortcuts. Single-threaded by design.
pub fn naive_oracle(max_dim: Nat) -> Result<ResultSet, EngineError> {
    naive_oracle_with_ceiling(max_dim, ORACLE_CEILING)
}

/// [`naive_oracle`] with an explicit ceiling, for callers that accept the
/// cost of larger runs.
pub fn naive_oracle_with_ceiling(max_dim: Nat, ceiling: Nat) -> Result<ResultSet, EngineError> {
    if max_dim > ceiling {
        return Err(EngineError::OracleCeilingExceeded { max_dim, ceiling });
    }
    let start = Instant::now();
    let mut oracle = Oracle {
        max_dim,
        chain: Vec::with_capacity(64),
        out: Vec::new(),
    };
    for tail in 1..=max_dim {
        oracle.chain.clear();
        oracle.chain.push(tail);
        oracle.walk(tail);
    }
    Ok(ResultSet::from_sequences(oracle.out, start.elapsed()))
}
