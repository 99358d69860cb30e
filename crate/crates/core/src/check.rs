//! Acceptance predicates and structural diagnostics.
//!
//! [`check_curtis`] is the acceptance predicate for the whole project: a
//! sequence is accepted when it is admissible, has positive excess (square
//! classes are excluded), the excess is below `2^phi(i_1)`, and every
//! adjacent pair `(i_j, i_{j+1})` satisfies the window condition
//! `0 <= 2*i_{j+1} - i_j < 2^phi(i_{j+1})`. A single entry is accepted
//! exactly when it is a spike.
//!
//! [`check_augmented`] is the equivalent single-condition reformulation:
//! prepend `i_0 = dim` and require the strict window
//! `0 < 2*i_{j+1} - i_j < 2^phi(i_{j+1})` at every `j` from 0. The two
//! predicates agree on every sequence; the equivalence is exercised
//! exhaustively in the test suite.
//!
//! [`structural_report`] evaluates the derived invariants that every
//! accepted sequence provably satisfies (all entries odd, strictly
//! decreasing, monotone `phi`, spikes only in last position, `psi` dropping
//! by exactly one per step, dimension/length parity, `dim > 2^length`).
//! It is diagnostic only and never feeds back into acceptance.

use std::fmt;

use crate::bits::{is_spike, phi, psi};
use crate::seq::Sequence;

/// Why a sequence was rejected, in the fixed clause order used by
/// [`check_curtis`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FailureKind {
    /// Some pair has `i_j > 2*i_{j+1}`.
    NotAdmissible,
    /// `ex(I) <= 0` (square classes and negative excess).
    ExcessNonPositive,
    /// `ex(I) >= 2^phi(i_1)`.
    ExcessTooLarge,
    /// Some window has `2*i_{j+1} - i_j < 0`.
    WindowLower,
    /// Some window has `2*i_{j+1} - i_j >= 2^phi(i_{j+1})`.
    WindowUpper,
}

impl fmt::Display for FailureKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            FailureKind::NotAdmissible => "NotAdmissible",
            FailureKind::ExcessNonPositive => "ExcessNonPositive",
            FailureKind::ExcessTooLarge => "ExcessTooLarge",
            FailureKind::WindowLower => "WindowLower",
            FailureKind::WindowUpper => "WindowUpper",
        };
        f.write_str(name)
    }
}

/// First violated constraint of a rejected sequence.
///
/// `position` is the index of the violated condition: `0` for the two excess
/// clauses (which constrain the head), and `j >= 1` for a condition on the
/// pair `(i_j, i_{j+1})`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Failure {
    pub kind: FailureKind,
    pub position: usize,
}

/// Structured verdict of the acceptance predicate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    /// Whether the sequence satisfies every acceptance clause.
    pub accepted: bool,
    /// `i_1 - (i_2 + ... + i_r)`, possibly zero or negative.
    pub excess: i128,
    /// Whether every pair satisfies `i_j <= 2*i_{j+1}`.
    pub admissible: bool,
    /// First violated clause, in order: admissibility, positive excess,
    /// excess bound, windows by ascending pair index.
    pub failure: Option<Failure>,
}

/// Evaluates the acceptance predicate with first-failure diagnostics.
pub fn check_curtis(seq: &Sequence) -> CheckReport {
    let entries = seq.entries();
    let excess = seq.excess();
    let admissible = seq.is_admissible();

    let failure = (|| {
        for (k, w) in entries.windows(2).enumerate() {
            if w[0] as u128 > 2 * w[1] as u128 {
                return Some(Failure {
                    kind: FailureKind::NotAdmissible,
                    position: k + 1,
                });
            }
        }
        if excess <= 0 {
            return Some(Failure {
                kind: FailureKind::ExcessNonPositive,
                position: 0,
            });
        }
        if excess >= 1i128 << phi(entries[0]) {
            return Some(Failure {
                kind: FailureKind::ExcessTooLarge,
                position: 0,
            });
        }
        for (k, w) in entries.windows(2).enumerate() {
            let gap = 2 * w[1] as i128 - w[0] as i128;
            if gap < 0 {
                // unreachable after the admissibility clause, kept so the
                // window check stands on its own
                return Some(Failure {
                    kind: FailureKind::WindowLower,
                    position: k + 1,
                });
            }
            if gap >= 1i128 << phi(w[1]) {
                return Some(Failure {
                    kind: FailureKind::WindowUpper,
                    position: k + 1,
                });
            }
        }
        None
    })();

    CheckReport {
        accepted: failure.is_none(),
        excess,
        admissible,
        failure,
    }
}

/// The augmented reformulation: with `i_0 = dim` prepended, tests
/// `0 < 2*i_{j+1} - i_j < 2^phi(i_{j+1})` for every `j` from `0` to `r-1`.
///
/// For a single entry this reads `0 < i_1 < 2^phi(i_1)`, the spike criterion.
pub fn check_augmented(seq: &Sequence) -> bool {
    let entries = seq.entries();
    let mut prev = seq.dim();
    for &cur in entries {
        let gap = 2 * cur as i128 - prev as i128;
        if gap <= 0 || gap >= 1i128 << phi(cur) {
            return false;
        }
        prev = cur;
    }
    true
}

/// The derived invariants evaluated by [`structural_report`].
///
/// Invariants that do not apply to a given sequence (e.g. chain conditions
/// on a single entry) evaluate vacuously to `true`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StructuralInvariant {
    /// Every entry is odd.
    AllOdd,
    /// `i_j > i_{j+1}` for every pair (lengths above 1).
    StrictlyDecreasing,
    /// `phi(i_1) <= ... <= phi(i_r)`.
    PhiMonotone,
    /// A spike entry occurs only in the last position.
    SpikeOnlyLast,
    /// If the last entry is a spike, `phi(i_{r-1}) < phi(i_r)`.
    PhiStrictAtSpikeTail,
    /// `psi(i_{j+1}) == psi(i_j) - 1` for every pair.
    PsiChain,
    /// `dim` and `length` have the same parity.
    ParityMatch,
    /// `dim > 2^length` for lengths above 1.
    DimLowerBound,
}

impl StructuralInvariant {
    pub const ALL: [StructuralInvariant; 8] = [
        StructuralInvariant::AllOdd,
        StructuralInvariant::StrictlyDecreasing,
        StructuralInvariant::PhiMonotone,
        StructuralInvariant::SpikeOnlyLast,
        StructuralInvariant::PhiStrictAtSpikeTail,
        StructuralInvariant::PsiChain,
        StructuralInvariant::ParityMatch,
        StructuralInvariant::DimLowerBound,
    ];

    fn holds_for(self, seq: &Sequence) -> bool {
        let e = seq.entries();
        let r = e.len();
        match self {
            StructuralInvariant::AllOdd => e.iter().all(|&x| x % 2 == 1),
            StructuralInvariant::StrictlyDecreasing => e.windows(2).all(|w| w[0] > w[1]),
            StructuralInvariant::PhiMonotone => e.windows(2).all(|w| phi(w[0]) <= phi(w[1])),
            StructuralInvariant::SpikeOnlyLast => e[..r - 1].iter().all(|&x| !is_spike(x)),
            StructuralInvariant::PhiStrictAtSpikeTail => {
                r == 1 || !is_spike(e[r - 1]) || phi(e[r - 2]) < phi(e[r - 1])
            }
            StructuralInvariant::PsiChain => e.windows(2).all(|w| psi(w[1]) + 1 == psi(w[0])),
            StructuralInvariant::ParityMatch => seq.dim() % 2 == (r as u64) % 2,
            StructuralInvariant::DimLowerBound => {
                r == 1 || (seq.dim() as u128) > (1u128 << r.min(127))
            }
        }
    }
}

impl fmt::Display for StructuralInvariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            StructuralInvariant::AllOdd => "AllOdd",
            StructuralInvariant::StrictlyDecreasing => "StrictlyDecreasing",
            StructuralInvariant::PhiMonotone => "PhiMonotone",
            StructuralInvariant::SpikeOnlyLast => "SpikeOnlyLast",
            StructuralInvariant::PhiStrictAtSpikeTail => "PhiStrictAtSpikeTail",
            StructuralInvariant::PsiChain => "PsiChain",
            StructuralInvariant::ParityMatch => "ParityMatch",
            StructuralInvariant::DimLowerBound => "DimLowerBound",
        };
        f.write_str(name)
    }
}

/// Evaluates every derived invariant independently and returns the full
/// vector. Diagnostic only; never part of acceptance.
pub fn structural_report(seq: &Sequence) -> Vec<(StructuralInvariant, bool)> {
    StructuralInvariant::ALL
        .iter()
        .map(|&inv| (inv, inv.holds_for(seq)))
        .collect()
}

/// The invariants from [`structural_report`] that fail, if any.
pub fn structural_violations(seq: &Sequence) -> Vec<StructuralInvariant> {
    structural_report(seq)
        .into_iter()
        .filter_map(|(inv, ok)| (!ok).then_some(inv))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seq::seq;

    #[test]
    fn single_spike_is_accepted() {
        let report = check_curtis(&seq(&[7]));
        assert!(report.accepted);
        assert_eq!(report.excess, 7);
        assert!(report.admissible);
        assert_eq!(report.failure, None);
    }

    #[test]
    fn single_non_spike_is_rejected() {
        let report = check_curtis(&seq(&[5]));
        assert!(!report.accepted);
        assert_eq!(
            report.failure,
            Some(Failure {
                kind: FailureKind::ExcessTooLarge,
                position: 0
            })
        );
    }

    #[test]
    fn known_rejection_17_9_5() {
        // excess 3 is not below 2^phi(17) = 2
        let report = check_curtis(&seq(&[17, 9, 5]));
        assert!(!report.accepted);
        assert!(report.admissible);
        assert_eq!(report.excess, 3);
        assert_eq!(
            report.failure,
            Some(Failure {
                kind: FailureKind::ExcessTooLarge,
                position: 0
            })
        );
    }

    #[test]
    fn known_acceptance_19_11_7() {
        let report = check_curtis(&seq(&[19, 11, 7]));
        assert!(report.accepted);
        assert_eq!(report.excess, 1);
    }

    #[test]
    fn length_two_example_is_rejected() {
        let report = check_curtis(&seq(&[5, 3]));
        assert!(!report.accepted);
        assert_eq!(report.failure.unwrap().kind, FailureKind::ExcessTooLarge);
    }

    #[test]
    fn inadmissible_pair_reports_position() {
        let report = check_curtis(&seq(&[3, 1]));
        assert_eq!(
            report.failure,
            Some(Failure {
                kind: FailureKind::NotAdmissible,
                position: 1
            })
        );
        let report = check_curtis(&seq(&[9, 5, 1]));
        assert_eq!(
            report.failure,
            Some(Failure {
                kind: FailureKind::NotAdmissible,
                position: 2
            })
        );
    }

    #[test]
    fn window_failure_reports_position() {
        // admissible with positive excess, but 2*9 - 17 = 1 is fine while
        // 2*7 - 9 = 5 >= 2^phi(7)... pick entries hitting the window clause:
        // (19, 11, 6): 2*6 - 11 = 1 < 2^phi(6) = 1 fails at pair 2
        let report = check_curtis(&seq(&[19, 11, 6]));
        assert_eq!(
            report.failure,
            Some(Failure {
                kind: FailureKind::WindowUpper,
                position: 2
            })
        );
    }

    #[test]
    fn zero_excess_is_a_square_class() {
        let report = check_curtis(&seq(&[2, 1, 1]));
        assert_eq!(
            report.failure.unwrap().kind,
            FailureKind::ExcessNonPositive
        );
        assert_eq!(report.excess, 0);
    }

    #[test]
    fn augmented_examples() {
        assert!(check_augmented(&seq(&[19, 11, 7])));
        assert!(!check_augmented(&seq(&[17, 9, 5])));
        assert!(check_augmented(&seq(&[15])));
    }

    #[test]
    fn single_entry_accepts_exactly_spikes() {
        for i in 1..=4096u64 {
            let s = seq(&[i]);
            assert_eq!(check_curtis(&s).accepted, is_spike(i), "i = {i}");
            assert_eq!(check_augmented(&s), is_spike(i), "i = {i}");
        }
    }

    #[test]
    fn structural_report_examples() {
        assert!(structural_violations(&seq(&[19, 11, 7])).is_empty());
        let bad = structural_violations(&seq(&[4, 2]));
        assert!(bad.contains(&StructuralInvariant::AllOdd));
        // passes every structural invariant yet fails the acceptance check
        let s = seq(&[17, 9, 5]);
        assert!(structural_violations(&s).is_empty());
        assert!(!check_curtis(&s).accepted);
    }

    #[test]
    fn structural_vector_is_complete_and_ordered() {
        let vec = structural_report(&seq(&[7]));
        assert_eq!(vec.len(), 8);
        assert_eq!(vec[0].0, StructuralInvariant::AllOdd);
        assert!(vec.iter().all(|&(_, ok)| ok));
    }

    #[test]
    fn reports_are_deterministic() {
        let s = seq(&[17, 9, 5]);
        assert_eq!(check_curtis(&s), check_curtis(&s));
    }
}
