//! Bit-level arithmetic on positive integers.
//!
//! Everything in this crate reduces to questions about binary expansions:
//! where the lowest unset bit of an integer sits ([`phi`]), how many binary
//! digits it has ([`psi`]), and how a non-spike integer decomposes around
//! those two positions ([`n_factor`], [`block`]). A *spike* is an integer of
//! the form `2^t - 1`, i.e. an all-ones expansion; spikes are exactly the
//! integers with `phi(n) == psi(n)`.
//!
//! All functions are defined on positive integers only. Calling them with `0`
//! (or [`n_factor`]/[`block`] with a spike) is a programming error and
//! panics; the search never produces such calls, and the panic is cheaper to
//! audit than a threaded `Result` in the innermost loop.

/// Project-wide integer type for entries and dimensions.
///
/// Target dimensions stay near `1.1e7`, so 64 bits leave ample headroom for
/// the doublings and partial sums that show up in window arithmetic.
pub type Nat = u64;

/// Index of the lowest unset bit of `n`.
///
/// Even numbers map to 0; a spike `2^t - 1` maps to `t`.
#[inline]
pub fn phi(n: Nat) -> u32 {
    assert!(n > 0, "phi(0) is outside the domain");
    n.trailing_ones()
}

/// Binary length of `n`: the unique `t` with `2^(t-1) <= n < 2^t`.
#[inline]
pub fn psi(n: Nat) -> u32 {
    assert!(n > 0, "psi(0) is outside the domain");
    Nat::BITS - n.leading_zeros()
}

/// Whether `n` is a spike, i.e. `n == 2^t - 1` for some `t > 0`.
#[inline]
pub fn is_spike(n: Nat) -> bool {
    assert!(n > 0, "is_spike(0) is outside the domain");
    n & n.wrapping_add(1) == 0
}

/// The even cofactor `N` in the decomposition `n = 2^phi(n) * N + 2^phi(n) - 1`
/// of a non-spike `n`. Always even and at least 2.
#[inline]
pub fn n_factor(n: Nat) -> Nat {
    assert!(!is_spike(n), "n_factor({n}) is undefined for spikes");
    // n + 1 ends in phi(n) zero bits, so the shift divides exactly.
    ((n + 1) >> phi(n)) - 1
}

/// The middle-bits value `B` in `n = 2^(psi(n)-1) + B + 2^phi(n) - 1` of a
/// non-spike `n`: the sum of the set bits strictly between positions
/// `phi(n)` and `psi(n) - 1`. May be zero (e.g. `n = 11`).
#[inline]
pub fn block(n: Nat) -> Nat {
    assert!(!is_spike(n), "block({n}) is undefined for spikes");
    n + 1 - (1 << (psi(n) - 1)) - (1 << phi(n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Digit-loop reference for `phi`, independent of the intrinsics.
    fn phi_ref(mut n: Nat) -> u32 {
        let mut i = 0;
        while n & 1 == 1 {
            n >>= 1;
            i += 1;
        }
        i
    }

    /// Digit-loop reference for `psi`.
    fn psi_ref(mut n: Nat) -> u32 {
        let mut i = 0;
        while n > 0 {
            n >>= 1;
            i += 1;
        }
        i
    }

    #[test]
    fn phi_examples() {
        assert_eq!(phi(4), 0);
        assert_eq!(phi(5), 1);
        assert_eq!(phi(7), 3);
    }

    #[test]
    fn psi_examples() {
        assert_eq!(psi(1), 1);
        assert_eq!(psi(7), 3);
        assert_eq!(psi(8), 4);
    }

    #[test]
    fn spike_examples() {
        assert!(is_spike(15));
        assert!(!is_spike(11));
        assert!(is_spike(1));
    }

    #[test]
    fn n_factor_examples() {
        assert_eq!(n_factor(11), 2);
        assert_eq!(n_factor(5), 2);
        assert_eq!(n_factor(19), 4);
    }

    #[test]
    fn block_examples() {
        assert_eq!(block(23), 0);
        assert_eq!(block(83), 16);
        assert_eq!(block(11), 0);
    }

    #[test]
    #[should_panic(expected = "phi(0)")]
    fn phi_rejects_zero() {
        phi(0);
    }

    #[test]
    #[should_panic(expected = "psi(0)")]
    fn psi_rejects_zero() {
        psi(0);
    }

    #[test]
    #[should_panic(expected = "undefined for spikes")]
    fn n_factor_rejects_spike() {
        n_factor(7);
    }

    #[test]
    #[should_panic(expected = "undefined for spikes")]
    fn block_rejects_spike() {
        block(31);
    }

    /// Exhaustive check of every structural fact this module relies on,
    /// over the first million integers.
    #[test]
    fn exhaustive_invariants_to_1e6() {
        for n in 1..=1_000_000u64 {
            let (p, q) = (phi(n), psi(n));
            assert_eq!(p, phi_ref(n));
            assert_eq!(q, psi_ref(n));
            assert!(p <= q);
            assert_eq!(p == q, is_spike(n));
            if !is_spike(n) {
                assert!(p < q - 1, "phi < psi - 1 failed for {n}");
                let nf = n_factor(n);
                assert!(nf >= 2 && nf.is_multiple_of(2), "n_factor({n}) = {nf}");
                assert_eq!((1 << p) * nf + (1 << p) - 1, n);
                let b = block(n);
                assert_eq!((1 << (q - 1)) + b + (1 << p) - 1, n);
                // The strict lower bound on the block admits a zero case.
                assert!(b == 0 || b > (1 << p), "block({n}) = {b}");
                assert!((1 << (q - 1)) + (1 << p) - 1 <= n);
                assert!(n <= (1 << q) - 1 - (1 << p));
            }
        }
    }

    proptest! {
        #[test]
        fn phi_psi_match_reference(n in 1u64..=u64::MAX / 4) {
            prop_assert_eq!(phi(n), phi_ref(n));
            prop_assert_eq!(psi(n), psi_ref(n));
        }

        #[test]
        fn nonspike_reconstruction(n in 1u64..=u64::MAX / 4) {
            if !is_spike(n) {
                let (p, q) = (phi(n), psi(n));
                prop_assert_eq!((1u64 << p) * n_factor(n) + (1 << p) - 1, n);
                prop_assert_eq!((1u64 << (q - 1)) + block(n) + (1 << p) - 1, n);
            }
        }
    }
}
