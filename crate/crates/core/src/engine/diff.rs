//! Symmetric difference of two result sets, with per-row diagnostics.

use std::fmt;

use crate::check::{check_curtis, CheckReport};
use crate::seq::Sequence;

use super::ResultSet;

/// Sequences present in exactly one of two result sets, each annotated with
/// its acceptance report. An empty report means the sets agree.
#[derive(Clone, Debug, Default)]
pub struct DiffReport {
    pub left_only: Vec<(Sequence, CheckReport)>,
    pub right_only: Vec<(Sequence, CheckReport)>,
}

impl DiffReport {
    pub fn is_empty(&self) -> bool {
        self.left_only.is_empty() && self.right_only.is_empty()
    }

    pub fn len(&self) -> usize {
        self.left_only.len() + self.right_only.len()
    }
}

impl fmt::Display for DiffReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return writeln!(f, "result sets are identical");
        }
        for (side, rows) in [("left", &self.left_only), ("right", &self.right_only)] {
            for (seq, report) in rows {
                writeln!(
                    f,
                    "only in {side}: {seq} (dim {}, length {}): accepted={} excess={}{}",
                    seq.dim(),
                    seq.len(),
                    report.accepted,
                    report.excess,
                    match &report.failure {
                        Some(fail) => format!(" failure={} at j={}", fail.kind, fail.position),
                        None => String::new(),
                    }
                )?;
            }
        }
        Ok(())
    }
}

/// Walks two sorted result sets and collects the rows unique to each side.
pub fn diff(a: &ResultSet, b: &ResultSet) -> DiffReport {
    let (left, right) = (a.sequences(), b.sequences());
    let mut report = DiffReport::default();
    let (mut i, mut j) = (0, 0);
    while i < left.len() || j < right.len() {
        match (left.get(i), right.get(j)) {
            (Some(l), Some(r)) if l == r => {
                i += 1;
                j += 1;
            }
            (Some(l), Some(r)) if l < r => {
                report.left_only.push((l.clone(), check_curtis(l)));
                i += 1;
            }
            (Some(_), Some(r)) => {
                report.right_only.push((r.clone(), check_curtis(r)));
                j += 1;
            }
            (Some(l), None) => {
                report.left_only.push((l.clone(), check_curtis(l)));
                i += 1;
            }
            (None, Some(r)) => {
                report.right_only.push((r.clone(), check_curtis(r)));
                j += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    report
}
