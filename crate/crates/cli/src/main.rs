//! `curtis` — enumerate, verify and tabulate admissible sequences of
//! positive excess satisfying the Curtis A-annihilation conditions.
//!
//! Exit codes: 0 success (for `check`: accepted; for `diff-oracle`: empty
//! difference), 1 valid-but-negative outcome (rejected sequence, non-empty
//! difference), 2 usage or runtime error.

use std::collections::BTreeSet;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use curtis::bits::phi;
use curtis::{
    check_curtis, diff, enumerate_closed, naive_oracle, search, structural_report, FailureKind,
    Format, ResultSet, SearchConfig, Sequence,
};

#[derive(Parser)]
#[command(name = "curtis", version, about, disable_help_subcommand = true)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate all accepted sequences up to a dimension bound.
    Enumerate {
        /// Upper dimension bound (inclusive).
        #[arg(long)]
        max_dim: u64,
        /// Lower dimension bound (inclusive).
        #[arg(long, default_value_t = 1)]
        min_dim: u64,
        /// Keep only these lengths, e.g. `--lengths 1,3`.
        #[arg(long, value_delimiter = ',')]
        lengths: Option<Vec<u32>>,
        /// Output format: csv, tsv or json.
        #[arg(long, default_value = "csv")]
        format: String,
        /// Group rows by dyadic dimension intervals [2^k, 2^(k+1)).
        #[arg(long)]
        group_pow2: bool,
        /// Worker count; the output is identical for any value.
        #[arg(long, default_value_t = 1)]
        shards: usize,
        /// Write to this file instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check one sequence, given in text form, e.g. `19,11,7`.
    Check {
        /// Comma-separated entries, head first, no spaces.
        sequence: String,
    },
    /// Enumerate the closed-form families, validated instance by instance.
    Closed {
        /// Upper dimension bound (inclusive).
        #[arg(long)]
        max_dim: u64,
        /// Family lengths to include (subset of 1,3,4,5).
        #[arg(long, value_delimiter = ',', default_value = "1,3,4,5")]
        lengths: Vec<u32>,
        /// Output format: csv, tsv or json.
        #[arg(long, default_value = "csv")]
        format: String,
        /// Write to this file instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Report gate-dropped family instances on standard error.
        #[arg(long)]
        report_dropped: bool,
    },
    /// Cross-check the pruned search against the brute-force oracle.
    DiffOracle {
        /// Upper dimension bound (inclusive).
        #[arg(long)]
        max_dim: u64,
    },
    /// Per-dyadic-interval counts and maximal lengths.
    Stats {
        /// Upper dimension bound (inclusive).
        #[arg(long)]
        max_dim: u64,
    },
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Enumerate {
            max_dim,
            min_dim,
            lengths,
            format,
            group_pow2,
            shards,
            out,
        } => {
            let format: Format = format.parse().map_err(|e| format!("{e}"))?;
            let mut config = SearchConfig::new(max_dim).min_dim(min_dim).shards(shards);
            if let Some(lengths) = lengths {
                config = config.lengths(lengths);
            }
            let results = search(&config).map_err(|e| format!("{e}"))?;
            write_table(&results, format, group_pow2, out.as_deref())?;
            eprintln!(
                "enumerate: {} sequences (max length {}) in {:.3?}",
                results.len(),
                results.max_length(),
                results.elapsed()
            );
            Ok(ExitCode::SUCCESS)
        }

        Command::Check { sequence } => {
            let seq: Sequence = match sequence.parse() {
                Ok(seq) => seq,
                Err(e) => return Err(format!("malformed sequence `{sequence}`: {e}")),
            };
            let report = check_curtis(&seq);
            match &report.failure {
                None => println!("accepted"),
                Some(failure) => println!(
                    "rejected: {} ({})",
                    failure.kind,
                    describe_failure(&seq, failure.kind, failure.position, report.excess)
                ),
            }
            println!("sequence: {seq}");
            println!("dim: {}", seq.dim());
            println!("length: {}", seq.len());
            println!("excess: {}", report.excess);
            println!("admissible: {}", report.admissible);
            let vector: Vec<String> = structural_report(&seq)
                .iter()
                .map(|(inv, ok)| format!("{inv}={ok}"))
                .collect();
            println!("structural: {}", vector.join(" "));
            Ok(if report.accepted {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }

        Command::Closed {
            max_dim,
            lengths,
            format,
            out,
            report_dropped,
        } => {
            let format: Format = format.parse().map_err(|e| format!("{e}"))?;
            let lengths: BTreeSet<u32> = lengths.into_iter().collect();
            let closed = enumerate_closed(&lengths, max_dim).map_err(|e| format!("{e}"))?;
            let results =
                ResultSet::from_sequences(closed.sequences, std::time::Duration::default());
            write_table(&results, format, false, out.as_deref())?;
            if report_dropped {
                for r in &closed.rejected {
                    let failure = r.report.failure.as_ref().expect("rejected rows carry one");
                    eprintln!(
                        "dropped {} ({}): {} (dim {}): {} at j={}",
                        r.family,
                        r.params,
                        r.seq,
                        r.seq.dim(),
                        failure.kind,
                        failure.position
                    );
                }
                eprintln!(
                    "closed: {} sequences, {} dropped instances",
                    results.len(),
                    closed.rejected.len()
                );
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::DiffOracle { max_dim } => {
            let engine = search(&SearchConfig::new(max_dim)).map_err(|e| format!("{e}"))?;
            let oracle = naive_oracle(max_dim).map_err(|e| format!("{e}"))?;
            let report = diff(&engine, &oracle);
            if report.is_empty() {
                println!("identical ({} sequences)", engine.len());
                Ok(ExitCode::SUCCESS)
            } else {
                print!("{report}");
                println!("{} differing sequences", report.len());
                Ok(ExitCode::from(1))
            }
        }

        Command::Stats { max_dim } => {
            let results = search(&SearchConfig::new(max_dim)).map_err(|e| format!("{e}"))?;
            let rows = curtis::stats(&results);
            println!("{:<24}{:>9}{:>12}{:>12}", "interval", "count", "max_length", "cumulative");
            for row in rows {
                println!(
                    "{:<24}{:>9}{:>12}{:>12}",
                    format!("[{},{}]", row.lo, row.hi),
                    row.count,
                    row.max_length,
                    row.cumulative
                );
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn describe_failure(seq: &Sequence, kind: FailureKind, position: usize, excess: i128) -> String {
    let e = seq.entries();
    match kind {
        FailureKind::NotAdmissible => {
            let (a, b) = (e[position - 1], e[position]);
            format!("i_j > 2*i_j+1 at j={position}: {a} > 2*{b}")
        }
        FailureKind::ExcessNonPositive => format!("excess {excess} <= 0"),
        FailureKind::ExcessTooLarge => {
            format!("excess {excess} >= 2^phi(i1) = {}", 1u64 << phi(e[0]))
        }
        FailureKind::WindowLower => {
            let (a, b) = (e[position - 1], e[position]);
            format!("2*{b} - {a} < 0 at j={position}")
        }
        FailureKind::WindowUpper => {
            let (a, b) = (e[position - 1], e[position]);
            format!(
                "2*{b} - {a} = {} >= 2^phi({b}) = {} at j={position}",
                2 * b as i128 - a as i128,
                1u64 << phi(b)
            )
        }
    }
}

fn write_table(
    results: &ResultSet,
    format: Format,
    grouped: bool,
    out: Option<&std::path::Path>,
) -> Result<(), String> {
    fn write_to<W: Write>(
        results: &ResultSet,
        format: Format,
        grouped: bool,
        w: &mut W,
    ) -> io::Result<()> {
        if grouped {
            curtis::emit_grouped(results, format, w)
        } else {
            curtis::emit(results, format, w)
        }
    }
    let result = match out {
        Some(path) => {
            let file = File::create(path)
                .map_err(|e| format!("cannot create {}: {e}", path.display()))?;
            let mut w = BufWriter::new(file);
            write_to(results, format, grouped, &mut w).and_then(|()| w.flush())
        }
        None => {
            let stdout = io::stdout();
            let mut w = BufWriter::new(stdout.lock());
            write_to(results, format, grouped, &mut w).and_then(|()| w.flush())
        }
    };
    result.map_err(|e| format!("write failed: {e}"))
}
