//! Closed-form generators for the classified low-length families.
//!
//! Eight parametric families are known: the spikes (length 1), one
//! two-parameter family for length 3, two families for length 4 and four
//! for length 5. Every instance a generator produces is passed through
//! [`check_curtis`] before emission, so off-by-one parameter ranges in the
//! published bounds can never leak an invalid row into a table: the
//! generators sweep from the smallest arity-legal parameters and let the
//! gate adjudicate, recording everything it drops.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::bits::Nat;
use crate::check::{check_curtis, CheckReport};
use crate::seq::Sequence;

/// Identifier of a closed-form family, in classification order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FamilyId {
    /// `(2^t - 1)` — the spikes.
    L1,
    /// `(2^(n+1)+2^m-1, 2^n+2^m-1, 2^n-1)`.
    L3,
    /// `(2^(n+3)+2^(n-1)-1, ..., 2^n+2^(n-1)-1)` — the uniform-offset chain.
    L4A,
    /// `(2^(n+2)+2^(m+1)+2^m'-1, 2^(n+1)+2^m+2^m'-1, 2^n+2^m-1, 2^n-1)`.
    L4B,
    /// `(2^(n+4)+2^n-3, 2^(n+3)+2^(n-1)-1, ..., 2^n+2^(n-1)-1)`.
    L5A,
    /// `(2^(n+3)+2^(n+2)+2^(n-2)-1, ..., 2^n+2^(n-1)+2^(n-2)-1, 2^n-1)`.
    L5B,
    /// The three-parameter length-5 family ending `(..., 2^n+2^(n-2)-1, 2^n-1)`.
    L5C,
    /// `(2^(n+3)+2^n+1, 2^(n+2)+2^(n-1)+1, 2^(n+1)+2^(n-2)+1, 2^n+2^(n-2)-1, 2^n-1)`.
    L5D,
}

impl FamilyId {
    pub const ALL: [FamilyId; 8] = [
        FamilyId::L1,
        FamilyId::L3,
        FamilyId::L4A,
        FamilyId::L4B,
        FamilyId::L5A,
        FamilyId::L5B,
        FamilyId::L5C,
        FamilyId::L5D,
    ];

    /// Length of the sequences this family produces.
    pub fn length(self) -> u32 {
        match self {
            FamilyId::L1 => 1,
            FamilyId::L3 => 3,
            FamilyId::L4A | FamilyId::L4B => 4,
            FamilyId::L5A | FamilyId::L5B | FamilyId::L5C | FamilyId::L5D => 5,
        }
    }

    /// Families producing sequences of the given length.
    pub fn of_length(length: u32) -> &'static [FamilyId] {
        match length {
            1 => &[FamilyId::L1],
            3 => &[FamilyId::L3],
            4 => &[FamilyId::L4A, FamilyId::L4B],
            5 => &[FamilyId::L5A, FamilyId::L5B, FamilyId::L5C, FamilyId::L5D],
            _ => &[],
        }
    }

    fn name(self) -> &'static str {
        match self {
            FamilyId::L1 => "L1",
            FamilyId::L3 => "L3",
            FamilyId::L4A => "L4A",
            FamilyId::L4B => "L4B",
            FamilyId::L5A => "L5A",
            FamilyId::L5B => "L5B",
            FamilyId::L5C => "L5C",
            FamilyId::L5D => "L5D",
        }
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyId {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        FamilyId::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| FamilyError::UnknownFamily { text: s.to_string() })
    }
}

/// Parameters instantiating a family. Arity depends on the family:
/// `L1` uses `t`; `L3` uses `n, m`; `L4A`, `L5A`, `L5B`, `L5D` use `n`;
/// `L4B`, `L5C` use `n, m, m2` (`m2` is the classification's `m'`).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct FamilyParams {
    pub n: Option<Nat>,
    pub m: Option<Nat>,
    pub m2: Option<Nat>,
    pub t: Option<Nat>,
}

impl FamilyParams {
    pub fn from_t(t: Nat) -> Self {
        FamilyParams {
            t: Some(t),
            ..Default::default()
        }
    }

    pub fn from_n(n: Nat) -> Self {
        FamilyParams {
            n: Some(n),
            ..Default::default()
        }
    }

    pub fn from_nm(n: Nat, m: Nat) -> Self {
        FamilyParams {
            n: Some(n),
            m: Some(m),
            ..Default::default()
        }
    }

    pub fn from_nmm(n: Nat, m: Nat, m2: Nat) -> Self {
        FamilyParams {
            n: Some(n),
            m: Some(m),
            m2: Some(m2),
            ..Default::default()
        }
    }
}

impl fmt::Display for FamilyParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (name, value) in [("n", self.n), ("m", self.m), ("m'", self.m2), ("t", self.t)] {
            if let Some(v) = value {
                if !first {
                    write!(f, ", ")?;
                }
                write!(f, "{name}={v}")?;
                first = false;
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FamilyError {
    #[error("{family} expects parameters ({expected})")]
    ArityMismatch {
        family: FamilyId,
        expected: &'static str,
    },
    #[error("{family}({params}) is outside the formula's domain")]
    OutOfDomain { family: FamilyId, params: FamilyParams },
    #[error("unknown family `{text}`")]
    UnknownFamily { text: String },
    #[error("no closed-form family for length {length}")]
    UnsupportedLength { length: u32 },
}

/// Signed power helper so formulas with `-1`/`-3` tails and `n-2` exponents
/// stay readable; domain errors surface as `None`.
fn pow2(e: Option<Nat>) -> Option<i128> {
    let e = e?;
    (e <= 100).then(|| 1i128 << e)
}

/// Instantiates the literal sequence of a family at the given parameters.
///
/// Parameter *bounds* are not enforced (callers probe boundary validity);
/// only the arity and the arithmetic domain of the formula are.
pub fn instantiate(family: FamilyId, params: &FamilyParams) -> Result<Sequence, FamilyError> {
    let arity_err = |expected| FamilyError::ArityMismatch { family, expected };
    let exact =
        |want_n: bool, want_m: bool, want_m2: bool, want_t: bool, expected: &'static str| {
            if params.n.is_some() == want_n
                && params.m.is_some() == want_m
                && params.m2.is_some() == want_m2
                && params.t.is_some() == want_t
            {
                Ok(())
            } else {
                Err(arity_err(expected))
            }
        };

    let raw: Option<Vec<i128>> = match family {
        FamilyId::L1 => {
            exact(false, false, false, true, "t")?;
            let t = params.t;
            (|| Some(vec![pow2(t)? - 1]))()
        }
        FamilyId::L3 => {
            exact(true, true, false, false, "n, m")?;
            let (n, m) = (params.n, params.m);
            (|| {
                Some(vec![
                    pow2(n.map(|n| n + 1))? + pow2(m)? - 1,
                    pow2(n)? + pow2(m)? - 1,
                    pow2(n)? - 1,
                ])
            })()
        }
        FamilyId::L4A => {
            exact(true, false, false, false, "n")?;
            let n = params.n;
            (|| {
                let low = pow2(n.and_then(|n| n.checked_sub(1)))?;
                (0..4)
                    .rev()
                    .map(|k| pow2(n.map(|n| n + k)).map(|p| p + low - 1))
                    .collect::<Option<Vec<_>>>()
            })()
        }
        FamilyId::L4B => {
            exact(true, true, true, false, "n, m, m'")?;
            let (n, m, m2) = (params.n, params.m, params.m2);
            (|| {
                Some(vec![
                    pow2(n.map(|n| n + 2))? + pow2(m.map(|m| m + 1))? + pow2(m2)? - 1,
                    pow2(n.map(|n| n + 1))? + pow2(m)? + pow2(m2)? - 1,
                    pow2(n)? + pow2(m)? - 1,
                    pow2(n)? - 1,
                ])
            })()
        }
        FamilyId::L5A => {
            exact(true, false, false, false, "n")?;
            let n = params.n;
            (|| {
                let low = pow2(n.and_then(|n| n.checked_sub(1)))?;
                Some(vec![
                    pow2(n.map(|n| n + 4))? + pow2(n)? - 3,
                    pow2(n.map(|n| n + 3))? + low - 1,
                    pow2(n.map(|n| n + 2))? + low - 1,
                    pow2(n.map(|n| n + 1))? + low - 1,
                    pow2(n)? + low - 1,
                ])
            })()
        }
        FamilyId::L5B => {
            exact(true, false, false, false, "n")?;
            let n = params.n;
            (|| {
                let low = pow2(n.and_then(|n| n.checked_sub(2)))?;
                Some(vec![
                    pow2(n.map(|n| n + 3))? + pow2(n.map(|n| n + 2))? + low - 1,
                    pow2(n.map(|n| n + 2))? + pow2(n.map(|n| n + 1))? + low - 1,
                    pow2(n.map(|n| n + 1))? + pow2(n)? + low - 1,
                    pow2(n)? + pow2(n.and_then(|n| n.checked_sub(1)))? + low - 1,
                    pow2(n)? - 1,
                ])
            })()
        }
        FamilyId::L5C => {
            exact(true, true, true, false, "n, m, m'")?;
            let (n, m, m2) = (params.n, params.m, params.m2);
            (|| {
                let n1 = pow2(n.and_then(|n| n.checked_sub(1)))?;
                let n2 = pow2(n.and_then(|n| n.checked_sub(2)))?;
                Some(vec![
                    pow2(n.map(|n| n + 3))? + pow2(n)? + pow2(m.map(|m| m + 1))? + pow2(m2)? - 1,
                    pow2(n.map(|n| n + 2))? + n1 + pow2(m)? + pow2(m2)? - 1,
                    pow2(n.map(|n| n + 1))? + n2 + pow2(m)? - 1,
                    pow2(n)? + n2 - 1,
                    pow2(n)? - 1,
                ])
            })()
        }
        FamilyId::L5D => {
            exact(true, false, false, false, "n")?;
            let n = params.n;
            (|| {
                let n2 = pow2(n.and_then(|n| n.checked_sub(2)))?;
                Some(vec![
                    pow2(n.map(|n| n + 3))? + pow2(n)? + 1,
                    pow2(n.map(|n| n + 2))? + pow2(n.and_then(|n| n.checked_sub(1)))? + 1,
                    pow2(n.map(|n| n + 1))? + n2 + 1,
                    pow2(n)? + n2 - 1,
                    pow2(n)? - 1,
                ])
            })()
        }
    };

    let out_of_domain = || FamilyError::OutOfDomain {
        family,
        params: *params,
    };
    let raw = raw.ok_or_else(out_of_domain)?;
    let entries = raw
        .into_iter()
        .map(|v| {
            if (1..=u64::MAX as i128).contains(&v) {
                Ok(v as Nat)
            } else {
                Err(out_of_domain())
            }
        })
        .collect::<Result<Vec<_>, _>>()?;
    Sequence::new(entries).map_err(|_| out_of_domain())
}

/// An instance the validation gate refused to emit.
#[derive(Clone, Debug)]
pub struct RejectedInstance {
    pub family: FamilyId,
    pub params: FamilyParams,
    pub seq: Sequence,
    pub report: CheckReport,
}

/// Result of enumerating one family: the accepted instances in emission
/// order, plus everything the gate dropped.
#[derive(Clone, Debug)]
pub struct FamilyEnumeration {
    pub family: FamilyId,
    pub sequences: Vec<Sequence>,
    pub rejected: Vec<RejectedInstance>,
}

/// Every parameter tuple whose formula powers can fit under `max_dim`.
///
/// Each emitted entry contains a term `2^e <= entry <= dim <= max_dim`, so
/// sweeping every exponent up to the bit length of `max_dim` is complete.
fn param_sweep(family: FamilyId, max_dim: Nat) -> Vec<FamilyParams> {
    let cap = crate::bits::psi(max_dim.max(1)) as Nat + 1;
    let mut out = Vec::new();
    match family {
        FamilyId::L1 => out.extend((1..=cap).map(FamilyParams::from_t)),
        FamilyId::L3 => {
            for n in 1..=cap {
                for m in 1..=cap {
                    out.push(FamilyParams::from_nm(n, m));
                }
            }
        }
        FamilyId::L4A | FamilyId::L5A | FamilyId::L5B | FamilyId::L5D => {
            out.extend((1..=cap).map(FamilyParams::from_n))
        }
        FamilyId::L4B | FamilyId::L5C => {
            for n in 1..=cap {
                for m in 1..=cap {
                    for m2 in 1..=cap {
                        out.push(FamilyParams::from_nmm(n, m, m2));
                    }
                }
            }
        }
    }
    out
}

/// Enumerates all gate-validated instances of one family with `dim <= max_dim`.
pub fn enumerate_family(family: FamilyId, max_dim: Nat) -> FamilyEnumeration {
    let mut seen = BTreeSet::new();
    let mut rejected = Vec::new();
    for params in param_sweep(family, max_dim) {
        // tuples outside the formula's arithmetic domain are not instances
        let Ok(seq) = instantiate(family, &params) else {
            continue;
        };
        if seq.dim() > max_dim {
            continue;
        }
        let report = check_curtis(&seq);
        if report.accepted {
            seen.insert(seq);
        } else {
            rejected.push(RejectedInstance {
                family,
                params,
                seq,
                report,
            });
        }
    }
    FamilyEnumeration {
        family,
        sequences: seen.into_iter().collect(),
        rejected,
    }
}

/// Merged enumeration across the families of the requested lengths.
#[derive(Clone, Debug)]
pub struct ClosedEnumeration {
    pub sequences: Vec<Sequence>,
    pub rejected: Vec<RejectedInstance>,
}

/// Deduplicated, sorted union over all families of the requested lengths.
/// Only lengths 1, 3, 4 and 5 have classified families.
pub fn enumerate_closed(
    lengths: &BTreeSet<u32>,
    max_dim: Nat,
) -> Result<ClosedEnumeration, FamilyError> {
    for &len in lengths {
        if FamilyId::of_length(len).is_empty() {
            return Err(FamilyError::UnsupportedLength { length: len });
        }
    }
    let mut seqs = BTreeSet::new();
    let mut rejected = Vec::new();
    for &len in lengths {
        for &family in FamilyId::of_length(len) {
            let one = enumerate_family(family, max_dim);
            seqs.extend(one.sequences);
            rejected.extend(one.rejected);
        }
    }
    Ok(ClosedEnumeration {
        sequences: seqs.into_iter().collect(),
        rejected,
    })
}
