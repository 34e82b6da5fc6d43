//! Command-line front end.
//!
//! Subcommands: `verify` (line-oriented refinability checks), `enumerate`
//! (stream every unrefinable partition of N), `count` (tab-separated
//! count rows for an N or a range), `table` (recompute the published
//! reference counts and flag mismatches), and `bench` (wall-clock
//! comparison of the fast and naive verifiers).
//!
//! Exit codes: 0 on success, 2 on usage or input errors, 3 on I/O
//! failures. `table` exits 1 when a computed count disagrees with the
//! published value. Input lines starting with `#` are skipped.

use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::ops::ControlFlow;
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use clap::{Parser, Subcommand, ValueEnum};

use crate::enumerate::{
    count_range, count_range_parallel, count_unrefinable, count_unrefinable_parallel,
    enumerate_with_mex, random_unrefinable, triangular_root, unrefinable_partitions, CountTable,
    EnumerationSink, PUBLISHED_COUNTS,
};
use crate::seq::StarSequence;
use crate::verify::{verify_fast, verify_naive};

const EXIT_OK: i32 = 0;
const EXIT_MISMATCH: i32 = 1;
const EXIT_USAGE: i32 = 2;
const EXIT_IO: i32 = 3;

#[derive(Parser)]
#[command(
    name = "unrefinable",
    version,
    about = "Verify, enumerate, and count unrefinable partitions into distinct parts"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Read star sequences line by line, print UNREFINABLE or REFINABLE
    Verify {
        /// Input file; stdin when omitted or `-`
        input: Option<PathBuf>,
    },
    /// Print every unrefinable partition of N, one per line
    Enumerate {
        n: u64,
        /// Print the star sequence or just the parts
        #[arg(long, value_enum, default_value_t = Format::Stars)]
        format: Format,
        /// Run only the branch with this minimal excludant
        #[arg(long)]
        mex: Option<usize>,
    },
    /// Print N<TAB>count rows for one N or an inclusive range
    Count {
        n: Option<u64>,
        /// Inclusive range A..B
        #[arg(long, value_parser = parse_range, conflicts_with = "n")]
        range: Option<(u64, u64)>,
        /// Worker threads
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Recompute the published reference counts and report mismatches
    Table {
        /// Include the N >= 1000 rows (these take a while)
        #[arg(long)]
        full: bool,
        /// Only rows with N at most this value
        #[arg(long)]
        limit: Option<u64>,
        /// Worker threads
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Time the fast and naive verifiers on generated unrefinable inputs
    Bench {
        /// Sequence lengths to measure
        lengths: Vec<usize>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Stars,
    Parts,
}

/// Parses arguments from the environment, runs one subcommand, and
/// returns the process exit code.
pub fn run() -> i32 {
    let cli = Cli::parse();
    match cli.command {
        Command::Verify { input } => cmd_verify(input.as_deref()),
        Command::Enumerate { n, format, mex } => cmd_enumerate(n, format, mex),
        Command::Count { n, range, jobs } => cmd_count(n, range, jobs),
        Command::Table { full, limit, jobs } => cmd_table(full, limit, jobs),
        Command::Bench { lengths } => cmd_bench(&lengths),
    }
}

fn parse_range(text: &str) -> Result<(u64, u64), String> {
    let (from, to) = text
        .split_once("..")
        .ok_or_else(|| format!("expected A..B, got `{text}`"))?;
    let from = from
        .trim()
        .parse::<u64>()
        .map_err(|_| format!("invalid range start `{from}`"))?;
    let to = to
        .trim()
        .parse::<u64>()
        .map_err(|_| format!("invalid range end `{to}`"))?;
    Ok((from, to))
}

fn cmd_verify(input: Option<&Path>) -> i32 {
    let reader: Box<dyn BufRead> = match input {
        None => Box::new(io::stdin().lock()),
        Some(path) if path.as_os_str() == "-" => Box::new(io::stdin().lock()),
        Some(path) => match File::open(path) {
            Ok(file) => Box::new(BufReader::new(file)),
            Err(err) => {
                eprintln!("error: cannot open {}: {err}", path.display());
                return EXIT_IO;
            }
        },
    };
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    for (index, line) in reader.lines().enumerate() {
        let number = index + 1;
        let line = match line {
            Ok(line) => line,
            Err(err) => {
                eprintln!("error: reading line {number}: {err}");
                return EXIT_IO;
            }
        };
        if line.trim_start().starts_with('#') {
            continue;
        }
        let seq: StarSequence = match line.parse() {
            Ok(seq) => seq,
            Err(err) => {
                let _ = out.flush();
                eprintln!("line {number}: {err}");
                return EXIT_USAGE;
            }
        };
        let word = if verify_fast(&seq).is_unrefinable() {
            "UNREFINABLE"
        } else {
            "REFINABLE"
        };
        if writeln!(out, "{word}").is_err() {
            return stdout_failed();
        }
    }
    if out.flush().is_err() {
        return stdout_failed();
    }
    EXIT_OK
}

/// Streams partitions to a writer; never buffers the result set.
struct LineSink<W: Write> {
    out: W,
    format: Format,
    failed: bool,
}

impl<W: Write> EnumerationSink for LineSink<W> {
    fn emit(&mut self, partition: &StarSequence) -> ControlFlow<()> {
        let result = match self.format {
            Format::Stars => writeln!(self.out, "{partition}"),
            Format::Parts => write_parts(&mut self.out, partition),
        };
        if result.is_err() {
            self.failed = true;
            return ControlFlow::Break(());
        }
        ControlFlow::Continue(())
    }
}

fn write_parts(out: &mut impl Write, partition: &StarSequence) -> io::Result<()> {
    for (i, part) in partition.parts().enumerate() {
        if i > 0 {
            write!(out, " ")?;
        }
        write!(out, "{part}")?;
    }
    writeln!(out)
}

fn cmd_enumerate(n: u64, format: Format, mex: Option<usize>) -> i32 {
    if n < 1 {
        eprintln!("N must be at least 1");
        return EXIT_USAGE;
    }
    let (root, _) = triangular_root(n);
    if let Some(m) = mex {
        if m < 1 || m > root {
            eprintln!("--mex must lie in 1..={root} for N = {n}");
            return EXIT_USAGE;
        }
    }
    let stdout = io::stdout();
    let mut sink = LineSink {
        out: BufWriter::new(stdout.lock()),
        format,
        failed: false,
    };
    match mex {
        Some(m) => enumerate_with_mex(n, m, &mut sink),
        None => unrefinable_partitions(n, &mut sink),
    }
    if sink.failed || sink.out.flush().is_err() {
        return stdout_failed();
    }
    EXIT_OK
}

fn cmd_count(n: Option<u64>, range: Option<(u64, u64)>, jobs: usize) -> i32 {
    let (from, to) = match (n, range) {
        (Some(value), None) => (value, value),
        (None, Some(range)) => range,
        _ => {
            eprintln!("count needs exactly one of N or --range A..B");
            return EXIT_USAGE;
        }
    };
    if from < 1 || from > to {
        eprintln!("invalid range {from}..{to}: need 1 <= A <= B");
        return EXIT_USAGE;
    }
    if jobs < 1 {
        eprintln!("--jobs must be at least 1");
        return EXIT_USAGE;
    }
    let table = if jobs == 1 {
        count_range(from, to)
    } else if from == to {
        CountTable {
            rows: vec![(from, count_unrefinable_parallel(from, jobs))],
        }
    } else {
        count_range_parallel(from, to, jobs)
    };
    print_rows(&table.rows.iter().map(|&(n, c)| (n, c, None)).collect::<Vec<_>>())
}

fn cmd_table(full: bool, limit: Option<u64>, jobs: usize) -> i32 {
    if jobs < 1 {
        eprintln!("--jobs must be at least 1");
        return EXIT_USAGE;
    }
    let cutoff = limit.unwrap_or(if full { u64::MAX } else { 500 });
    let mut all_ok = true;
    let mut rows = Vec::new();
    for &(n, expected) in PUBLISHED_COUNTS.iter().filter(|&&(n, _)| n <= cutoff) {
        let computed = if jobs > 1 {
            count_unrefinable_parallel(n, jobs)
        } else {
            count_unrefinable(n)
        };
        all_ok &= computed == expected;
        rows.push((n, computed, Some(expected)));
    }
    let code = print_rows(&rows);
    if code != EXIT_OK {
        code
    } else if all_ok {
        EXIT_OK
    } else {
        EXIT_MISMATCH
    }
}

fn print_rows(rows: &[(u64, u64, Option<u64>)]) -> i32 {
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    for &(n, computed, expected) in rows {
        let result = match expected {
            None => writeln!(out, "{n}\t{computed}"),
            Some(expected) => {
                let status = if computed == expected { "OK" } else { "MISMATCH" };
                writeln!(out, "{n}\t{computed}\t{expected}\t{status}")
            }
        };
        if result.is_err() {
            return stdout_failed();
        }
    }
    if out.flush().is_err() {
        return stdout_failed();
    }
    EXIT_OK
}

const BENCH_SEQUENCES: usize = 12;

fn cmd_bench(lengths: &[usize]) -> i32 {
    for &length in lengths {
        let inputs: Vec<StarSequence> = (0..BENCH_SEQUENCES)
            .map(|i| random_unrefinable(length, (length as u64) << 8 | i as u64))
            .collect();
        let fast = mean_call_ns(&inputs, |s| {
            std::hint::black_box(verify_fast(s));
        });
        let naive = mean_call_ns(&inputs, |s| {
            std::hint::black_box(verify_naive(s));
        });
        println!("{length}\tfast\t{fast}");
        println!("{length}\tnaive\t{naive}");
    }
    EXIT_OK
}

/// Mean wall time per call in nanoseconds, measured over at least 20 ms.
fn mean_call_ns(inputs: &[StarSequence], mut check: impl FnMut(&StarSequence)) -> u64 {
    for s in inputs {
        check(s);
    }
    let budget = Duration::from_millis(20);
    let start = Instant::now();
    let mut rounds: u128 = 0;
    loop {
        for s in inputs {
            check(s);
        }
        rounds += 1;
        if start.elapsed() >= budget {
            break;
        }
    }
    (start.elapsed().as_nanos() / (rounds * inputs.len() as u128)) as u64
}

fn stdout_failed() -> i32 {
    eprintln!("error: failed writing to stdout");
    EXIT_IO
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn range_parsing() {
        assert_eq!(parse_range("1..30"), Ok((1, 30)));
        assert_eq!(parse_range("100..100"), Ok((100, 100)));
        assert!(parse_range("100").is_err());
        assert!(parse_range("a..b").is_err());
    }

    #[test]
    fn cli_declaration_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
