//! Enumeration, verification and tabulation of admissible sequences of
//! positive excess satisfying the Curtis conditions for `A`-annihilation in
//! the Dyer-Lashof algebra.
//!
//! A sequence `I = (i_1, ..., i_r)` of positive integers is *admissible*
//! when `i_j <= 2*i_{j+1}` for every adjacent pair, and has *excess*
//! `ex(I) = i_1 - (i_2 + ... + i_r)`. Writing `phi(n)` for the position of
//! the lowest unset binary digit of `n`, the sequences of interest are the
//! admissible ones with `0 < ex(I) < 2^phi(i_1)` and
//! `0 <= 2*i_{j+1} - i_j < 2^phi(i_{j+1})` for every pair — for a single
//! entry, exactly the spikes `2^t - 1`. These index the `A`-annihilated
//! monomial generators `Q^I[1]` of `H_* Q S^0` of positive excess, the raw
//! material for spherical-class and hit-problem questions.
//!
//! The crate provides:
//!
//! - [`bits`]: the binary-expansion primitives `phi`, `psi`, spike tests
//!   and non-spike decompositions;
//! - [`seq`]: the [`Sequence`] data model and its text form;
//! - [`check`]: the acceptance predicate [`check_curtis`] with
//!   first-failure diagnostics, the equivalent augmented-window
//!   reformulation, and the derived structural invariants;
//! - [`families`]: closed-form generators for the classified families of
//!   lengths 1, 3, 4 and 5, each instance gate-checked before emission;
//! - [`engine`]: the pruned tail-first [`search`], the independent
//!   brute-force [`naive_oracle`] it is validated against, and [`diff`];
//! - [`table`]: byte-stable CSV/TSV/JSON tables and dyadic-interval
//!   statistics.
//!
//! ```
//! use curtis::{check_curtis, search, SearchConfig};
//!
//! let results = search(&SearchConfig::new(40).lengths([3])).unwrap();
//! let shown: Vec<String> = results.sequences().iter().map(|s| s.to_string()).collect();
//! assert_eq!(shown, ["9,5,3", "17,9,7", "19,11,7"]);
//! assert!(results.sequences().iter().all(|s| check_curtis(s).accepted));
//! ```

pub mod bits;
pub mod check;
pub mod engine;
pub mod families;
pub mod seq;
pub mod table;

pub use bits::Nat;
pub use check::{
    check_augmented, check_curtis, structural_report, structural_violations, CheckReport,
    Failure, FailureKind, StructuralInvariant,
};
pub use engine::{
    diff, naive_oracle, naive_oracle_with_ceiling, search, DiffReport, EngineError, ResultSet,
    SearchConfig, ORACLE_CEILING,
};
pub use families::{
    enumerate_closed, enumerate_family, instantiate, ClosedEnumeration, FamilyEnumeration,
    FamilyError, FamilyId, FamilyParams, RejectedInstance,
};
pub use seq::{Sequence, SequenceError};
pub use table::{emit, emit_grouped, group_pow2, stats, Format, StatsRow, TableRow};
