//! The sequence data model.
//!
//! A [`Sequence`] is an ordered tuple of positive integers `(i_1, ..., i_r)`,
//! written head first, with its dimension (entry sum) cached. The text form
//! used by the CLI and the table formats is the bare comma-joined entry list,
//! e.g. `19,11,7`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::bits::Nat;

/// An ordered tuple of positive integers with cached dimension.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Sequence {
    entries: Vec<Nat>,
    dim: Nat,
}

/// Construction and parse errors for [`Sequence`].
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SequenceError {
    #[error("a sequence needs at least one entry")]
    Empty,
    #[error("entry {position} is zero; entries must be positive")]
    ZeroEntry { position: usize },
    #[error("dimension overflows 64 bits")]
    DimOverflow,
    #[error("invalid entry `{text}`")]
    InvalidEntry { text: String },
}

impl Sequence {
    /// Builds a sequence from entries in head-first order.
    pub fn new(entries: Vec<Nat>) -> Result<Self, SequenceError> {
        if entries.is_empty() {
            return Err(SequenceError::Empty);
        }
        let mut dim: Nat = 0;
        for (k, &e) in entries.iter().enumerate() {
            if e == 0 {
                return Err(SequenceError::ZeroEntry { position: k + 1 });
            }
            dim = dim.checked_add(e).ok_or(SequenceError::DimOverflow)?;
        }
        Ok(Sequence { entries, dim })
    }

    /// Entries in head-first order.
    #[inline]
    pub fn entries(&self) -> &[Nat] {
        &self.entries
    }

    /// Number of entries; always at least 1.
    #[inline]
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    /// A sequence is never empty; provided for clippy symmetry.
    #[inline]
    pub fn is_empty(&self) -> bool {
        false
    }

    /// The dimension: the sum of the entries.
    #[inline]
    pub fn dim(&self) -> Nat {
        self.dim
    }

    /// The first entry.
    #[inline]
    pub fn head(&self) -> Nat {
        self.entries[0]
    }

    /// The excess `i_1 - (i_2 + ... + i_r)`, equal to `2*i_1 - dim`.
    /// May be negative or zero.
    #[inline]
    pub fn excess(&self) -> i128 {
        2 * self.head() as i128 - self.dim as i128
    }

    /// Whether every adjacent pair satisfies `i_j <= 2*i_{j+1}`.
    /// Vacuously true for a single entry.
    pub fn is_admissible(&self) -> bool {
        self.entries
            .windows(2)
            .all(|w| w[0] as u128 <= 2 * w[1] as u128)
    }
}

/// Sequences order by `(dim, length, entries)`, the emission order used by
/// every result set and table in this crate.
impl Ord for Sequence {
    fn cmp(&self, other: &Self) -> Ordering {
        self.dim
            .cmp(&other.dim)
            .then_with(|| self.entries.len().cmp(&other.entries.len()))
            .then_with(|| self.entries.cmp(&other.entries))
    }
}

impl PartialOrd for Sequence {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Sequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for e in &self.entries {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for Sequence {
    type Err = SequenceError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.is_empty() {
            return Err(SequenceError::Empty);
        }
        let entries = s
            .split(',')
            .map(|f| {
                f.parse::<Nat>().map_err(|_| SequenceError::InvalidEntry {
                    text: f.to_string(),
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Sequence::new(entries)
    }
}

/// Convenience constructor for literal sequences in tests and examples.
///
/// Panics on invalid input, so use it only where the entries are known good.
pub fn seq(entries: &[Nat]) -> Sequence {
    Sequence::new(entries.to_vec()).expect("literal sequence must be valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dim_and_len_are_cached_sums() {
        let s = seq(&[19, 11, 7]);
        assert_eq!(s.dim(), 37);
        assert_eq!(s.len(), 3);
        assert_eq!(s.head(), 19);
    }

    #[test]
    fn excess_examples() {
        assert_eq!(seq(&[7]).excess(), 7);
        assert_eq!(seq(&[19, 11, 7]).excess(), 1);
        assert_eq!(seq(&[17, 9, 5]).excess(), 3);
    }

    #[test]
    fn admissibility_examples() {
        assert!(seq(&[19, 11, 7]).is_admissible());
        assert!(!seq(&[3, 1]).is_admissible());
        assert!(seq(&[5]).is_admissible());
    }

    #[test]
    fn text_form_round_trips() {
        for text in ["19,11,7", "7", "1,1,1", "131071"] {
            let s: Sequence = text.parse().unwrap();
            assert_eq!(s.to_string(), text);
        }
    }

    #[test]
    fn parse_rejects_malformed_input() {
        assert_eq!("".parse::<Sequence>(), Err(SequenceError::Empty));
        assert!(matches!(
            "19,,7".parse::<Sequence>(),
            Err(SequenceError::InvalidEntry { .. })
        ));
        assert!(matches!(
            "19, 11".parse::<Sequence>(),
            Err(SequenceError::InvalidEntry { .. })
        ));
        assert!(matches!(
            "a".parse::<Sequence>(),
            Err(SequenceError::InvalidEntry { .. })
        ));
        assert_eq!(
            "3,0".parse::<Sequence>(),
            Err(SequenceError::ZeroEntry { position: 2 })
        );
        assert!(matches!(
            "99999999999999999999999".parse::<Sequence>(),
            Err(SequenceError::InvalidEntry { .. })
        ));
    }

    #[test]
    fn dim_overflow_is_reported() {
        assert_eq!(
            Sequence::new(vec![u64::MAX, u64::MAX]),
            Err(SequenceError::DimOverflow)
        );
    }

    #[test]
    fn ordering_is_dim_then_length_then_entries() {
        let mut v = [seq(&[31]), seq(&[9, 5, 3]), seq(&[15]), seq(&[17, 9, 7])];
        v.sort();
        let shown: Vec<String> = v.iter().map(|s| s.to_string()).collect();
        assert_eq!(shown, ["15", "9,5,3", "31", "17,9,7"]);
        // same dim: shorter first, then lexicographic entries
        assert!(seq(&[129]) < seq(&[65, 33, 17, 9, 5]));
        assert!(seq(&[65, 33, 17, 9, 5]) < seq(&[65, 33, 17, 11, 3]));
    }
}
