//! Table serialization and dyadic-interval statistics.
//!
//! Output is byte-exact across platforms: ASCII, LF line endings, and the
//! fixed column order `dim, sequence, length`. CSV is the golden-file
//! format; the sequence field is always quoted there since it contains
//! commas. Rows group into the dyadic dimension intervals `[2^k, 2^(k+1))`.

use std::io::{self, Write};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::bits::{psi, Nat};
use crate::engine::ResultSet;
use crate::seq::Sequence;

/// One serialized row: dimension, text form, length.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub dim: Nat,
    pub sequence: String,
    pub length: u32,
}

impl TableRow {
    pub fn from_sequence(seq: &Sequence) -> Self {
        TableRow {
            dim: seq.dim(),
            sequence: seq.to_string(),
            length: seq.len() as u32,
        }
    }

    /// Parses the row back into a sequence, verifying the cached columns.
    pub fn to_sequence(&self) -> Result<Sequence, TableError> {
        let seq: Sequence = self
            .sequence
            .parse()
            .map_err(|_| TableError::BadRow(self.sequence.clone()))?;
        if seq.dim() != self.dim || seq.len() as u32 != self.length {
            return Err(TableError::InconsistentRow(self.sequence.clone()));
        }
        Ok(seq)
    }
}

/// Output formats understood by [`emit`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Csv,
    Tsv,
    Json,
}

impl FromStr for Format {
    type Err = TableError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "csv" => Ok(Format::Csv),
            "tsv" => Ok(Format::Tsv),
            "json" => Ok(Format::Json),
            other => Err(TableError::UnknownFormat(other.to_string())),
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum TableError {
    #[error("unknown format `{0}` (expected csv, tsv or json)")]
    UnknownFormat(String),
    #[error("write failed")]
    Io(#[from] io::Error),
    #[error("malformed table: {0}")]
    Parse(String),
    #[error("malformed row `{0}`")]
    BadRow(String),
    #[error("row `{0}` disagrees with its dim/length columns")]
    InconsistentRow(String),
}

const HEADER: [&str; 3] = ["dim", "sequence", "length"];

fn write_rows<W: Write>(rows: &[TableRow], format: Format, w: &mut W) -> io::Result<()> {
    match format {
        Format::Csv => {
            writeln!(w, "{}", HEADER.join(","))?;
            for r in rows {
                writeln!(w, "{},\"{}\",{}", r.dim, r.sequence, r.length)?;
            }
        }
        Format::Tsv => {
            writeln!(w, "{}", HEADER.join("\t"))?;
            for r in rows {
                writeln!(w, "{}\t{}\t{}", r.dim, r.sequence, r.length)?;
            }
        }
        Format::Json => {
            serde_json::to_writer(&mut *w, rows)?;
            writeln!(w)?;
        }
    }
    Ok(())
}

/// Serializes a result set in emission order.
pub fn emit<W: Write>(results: &ResultSet, format: Format, w: &mut W) -> io::Result<()> {
    let rows: Vec<TableRow> = results
        .sequences()
        .iter()
        .map(TableRow::from_sequence)
        .collect();
    write_rows(&rows, format, w)
}

/// A dyadic dimension interval `[lo, hi] = [2^k, 2^(k+1) - 1]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PowInterval {
    pub lo: Nat,
    pub hi: Nat,
}

/// Partitions rows by the dyadic interval of their dimension. Empty
/// intervals inside the covered range are kept, with zero rows.
pub fn group_pow2(results: &ResultSet) -> Vec<(PowInterval, Vec<TableRow>)> {
    let seqs = results.sequences();
    let Some(first) = seqs.first() else {
        return Vec::new();
    };
    let last = seqs.last().expect("nonempty");
    let lo_class = psi(first.dim()) - 1;
    let hi_class = psi(last.dim()) - 1;

    let mut out: Vec<(PowInterval, Vec<TableRow>)> = (lo_class..=hi_class)
        .map(|k| {
            (
                PowInterval {
                    lo: 1 << k,
                    hi: (1 << (k + 1)) - 1,
                },
                Vec::new(),
            )
        })
        .collect();
    for s in seqs {
        let k = (psi(s.dim()) - 1 - lo_class) as usize;
        out[k].1.push(TableRow::from_sequence(s));
    }
    out
}

/// Per-interval summary: sequence count, largest length, running total.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct StatsRow {
    pub lo: Nat,
    pub hi: Nat,
    pub count: u64,
    pub max_length: u32,
    pub cumulative: u64,
}

/// One [`StatsRow`] per dyadic interval over the covered range.
pub fn stats(results: &ResultSet) -> Vec<StatsRow> {
    let mut cumulative = 0u64;
    group_pow2(results)
        .into_iter()
        .map(|(interval, rows)| {
            cumulative += rows.len() as u64;
            StatsRow {
                lo: interval.lo,
                hi: interval.hi,
                count: rows.len() as u64,
                max_length: rows.iter().map(|r| r.length).max().unwrap_or(0),
                cumulative,
            }
        })
        .collect()
}

/// Grouped emission: sections per dyadic interval. In csv/tsv each section
/// is preceded by a `# [lo,hi] n sequences` comment line; json nests rows
/// under their interval.
pub fn emit_grouped<W: Write>(results: &ResultSet, format: Format, w: &mut W) -> io::Result<()> {
    let groups = group_pow2(results);
    match format {
        Format::Csv | Format::Tsv => {
            let sep = if format == Format::Csv { "," } else { "\t" };
            writeln!(w, "{}", HEADER.join(sep))?;
            for (interval, rows) in &groups {
                writeln!(
                    w,
                    "# [{},{}] {} sequence{}",
                    interval.lo,
                    interval.hi,
                    rows.len(),
                    if rows.len() == 1 { "" } else { "s" }
                )?;
                for r in rows {
                    if format == Format::Csv {
                        writeln!(w, "{},\"{}\",{}", r.dim, r.sequence, r.length)?;
                    } else {
                        writeln!(w, "{}\t{}\t{}", r.dim, r.sequence, r.length)?;
                    }
                }
            }
        }
        Format::Json => {
            #[derive(Serialize)]
            struct Group<'a> {
                lo: Nat,
                hi: Nat,
                rows: &'a [TableRow],
            }
            let shaped: Vec<Group> = groups
                .iter()
                .map(|(i, rows)| Group {
                    lo: i.lo,
                    hi: i.hi,
                    rows,
                })
                .collect();
            serde_json::to_writer(&mut *w, &shaped)?;
            writeln!(w)?;
        }
    }
    Ok(())
}

/// Strict parser for the csv emitted by [`emit`]; used for round-trip
/// verification.
pub fn parse_csv(text: &str) -> Result<Vec<TableRow>, TableError> {
    let mut lines = text.lines();
    match lines.next() {
        Some(h) if h == HEADER.join(",") => {}
        other => return Err(TableError::Parse(format!("bad header {other:?}"))),
    }
    let mut rows = Vec::new();
    for line in lines {
        let rest = line;
        let (dim, rest) = rest
            .split_once(",\"")
            .ok_or_else(|| TableError::BadRow(line.to_string()))?;
        let (sequence, length) = rest
            .rsplit_once("\",")
            .ok_or_else(|| TableError::BadRow(line.to_string()))?;
        rows.push(TableRow {
            dim: dim
                .parse()
                .map_err(|_| TableError::BadRow(line.to_string()))?,
            sequence: sequence.to_string(),
            length: length
                .parse()
                .map_err(|_| TableError::BadRow(line.to_string()))?,
        });
    }
    Ok(rows)
}

/// Parser for the json emitted by [`emit`].
pub fn parse_json(text: &str) -> Result<Vec<TableRow>, TableError> {
    serde_json::from_str(text).map_err(|e| TableError::Parse(e.to_string()))
}

/// Rebuilds verified sequences from parsed rows.
pub fn rows_to_sequences(rows: &[TableRow]) -> Result<Vec<Sequence>, TableError> {
    rows.iter().map(TableRow::to_sequence).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seq::seq;
    use std::time::Duration;

    fn set(seqs: &[&[u64]]) -> ResultSet {
        ResultSet::from_sequences(seqs.iter().map(|s| seq(s)).collect(), Duration::default())
    }

    fn emitted(results: &ResultSet, format: Format) -> String {
        let mut buf = Vec::new();
        emit(results, format, &mut buf).unwrap();
        String::from_utf8(buf).unwrap()
    }

    #[test]
    fn csv_quotes_the_sequence_field() {
        assert_eq!(
            emitted(&set(&[&[19, 11, 7]]), Format::Csv),
            "dim,sequence,length\n37,\"19,11,7\",3\n"
        );
    }

    #[test]
    fn empty_csv_is_header_only() {
        assert_eq!(emitted(&set(&[]), Format::Csv), "dim,sequence,length\n");
    }

    #[test]
    fn json_single_row() {
        assert_eq!(
            emitted(&set(&[&[7]]), Format::Json),
            "[{\"dim\":7,\"sequence\":\"7\",\"length\":1}]\n"
        );
    }

    #[test]
    fn tsv_is_unquoted() {
        assert_eq!(
            emitted(&set(&[&[19, 11, 7]]), Format::Tsv),
            "dim\tsequence\tlength\n37\t19,11,7\t3\n"
        );
    }

    #[test]
    fn interval_bucketing_examples() {
        let groups = group_pow2(&set(&[&[1], &[3], &[7], &[15], &[9, 5, 3]]));
        let shape: Vec<(u64, u64, usize)> = groups
            .iter()
            .map(|(i, rows)| (i.lo, i.hi, rows.len()))
            .collect();
        assert_eq!(
            shape,
            [(1, 1, 1), (2, 3, 1), (4, 7, 1), (8, 15, 1), (16, 31, 1)]
        );

        assert!(group_pow2(&set(&[])).is_empty());

        let groups = group_pow2(&set(&[&[17, 9, 7], &[19, 11, 7]]));
        assert_eq!(groups.len(), 1);
        assert_eq!(groups[0].0, PowInterval { lo: 32, hi: 63 });
        assert_eq!(groups[0].1.len(), 2);
    }

    #[test]
    fn empty_interval_inside_range_is_kept() {
        let groups = group_pow2(&set(&[&[1], &[7]]));
        let counts: Vec<usize> = groups.iter().map(|(_, rows)| rows.len()).collect();
        assert_eq!(counts, [1, 0, 1]);
    }

    #[test]
    fn stats_cumulative_and_sum() {
        let results = set(&[&[1], &[3], &[7], &[15], &[9, 5, 3], &[31], &[17, 9, 7], &[
            19, 11, 7,
        ]]);
        let rows = stats(&results);
        let total: u64 = rows.iter().map(|r| r.count).sum();
        assert_eq!(total, 8);
        assert_eq!(rows.last().unwrap().cumulative, 8);
        assert!(rows.windows(2).all(|w| w[0].cumulative <= w[1].cumulative));
        let last = rows.last().unwrap();
        assert_eq!((last.lo, last.hi, last.count, last.max_length), (32, 63, 2, 3));
    }

    #[test]
    fn stats_of_empty_set_is_empty() {
        assert!(stats(&set(&[])).is_empty());
    }

    #[test]
    fn csv_round_trip() {
        let results = set(&[&[7], &[9, 5, 3], &[19, 11, 7]]);
        let text = emitted(&results, Format::Csv);
        let rows = parse_csv(&text).unwrap();
        let seqs = rows_to_sequences(&rows).unwrap();
        assert_eq!(seqs, results.sequences());
    }

    #[test]
    fn json_round_trip() {
        let results = set(&[&[7], &[9, 5, 3]]);
        let text = emitted(&results, Format::Json);
        let seqs = rows_to_sequences(&parse_json(&text).unwrap()).unwrap();
        assert_eq!(seqs, results.sequences());
    }

    #[test]
    fn emission_is_deterministic() {
        let results = set(&[&[7], &[9, 5, 3], &[19, 11, 7]]);
        for format in [Format::Csv, Format::Tsv, Format::Json] {
            assert_eq!(emitted(&results, format), emitted(&results, format));
        }
    }

    #[test]
    fn grouped_emission_shape() {
        let mut buf = Vec::new();
        emit_grouped(&set(&[&[1], &[3]]), Format::Csv, &mut buf).unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            "dim,sequence,length\n# [1,1] 1 sequence\n1,\"1\",1\n# [2,3] 1 sequence\n3,\"3\",1\n"
        );
    }

    #[test]
    fn grouped_json_nests_rows_under_intervals() {
        let mut buf = Vec::new();
        emit_grouped(&set(&[&[1], &[3]]), Format::Json, &mut buf).unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            "[{\"lo\":1,\"hi\":1,\"rows\":[{\"dim\":1,\"sequence\":\"1\",\"length\":1}]},\
             {\"lo\":2,\"hi\":3,\"rows\":[{\"dim\":3,\"sequence\":\"3\",\"length\":1}]}]\n"
        );
    }

    #[test]
    fn format_parsing() {
        assert_eq!("csv".parse::<Format>().unwrap(), Format::Csv);
        assert!("xml".parse::<Format>().is_err());
    }
}
