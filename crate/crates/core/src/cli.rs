//! Command-line front end.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error, 3 oracle
//! size guard.

use std::io::{self, Write};

use clap::{Parser, Subcommand, ValueEnum};

use crate::bench::bench_rows;
use crate::bfile::{render_csv, BFile};
use crate::counting::{count_spq_direct, count_spq_recurrence, sequence_spq};
use crate::enumeration::{count_interval_bruteforce, count_spq_bruteforce, enumerate_spq};
use crate::error::Error;
use crate::sets::Ratio;
use crate::turan::{
    interval_count_closed, interval_count_sum, turan_edges_construction, turan_edges_formula,
};
use crate::verify::{run_suite_with_fault, Bounds, Fault, Suite};

pub const EXIT_OK: u8 = 0;
pub const EXIT_VERIFY_FAILED: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_GUARD: u8 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "schreier",
    version,
    about = "Exact counts of generalized Schreier sets"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

type Positive = clap::builder::RangedU64ValueParser<u64>;

fn positive() -> Positive {
    clap::value_parser!(u64).range(1..)
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print |S^{p/q}_n|.
    Count {
        #[arg(long, value_parser = positive())]
        p: u64,
        #[arg(long, value_parser = positive())]
        q: u64,
        #[arg(long, value_parser = positive())]
        n: u64,
        #[arg(long, value_enum, default_value_t = CountMethod::Recurrence)]
        method: CountMethod,
    },
    /// Print |S^{p/q}_n| for a range of n.
    Sequence {
        #[arg(long, value_parser = positive())]
        p: u64,
        #[arg(long, value_parser = positive())]
        q: u64,
        #[arg(long = "max", value_parser = positive())]
        n_max: u64,
        #[arg(long, value_enum, default_value_t = SeqFormat::Csv)]
        format: SeqFormat,
        /// First index to emit.
        #[arg(long, default_value_t = 1)]
        offset: u64,
        /// Start at n = 0 (same as --offset 0).
        #[arg(long)]
        include_zero: bool,
    },
    /// List the members of S^{p/q}_n.
    Enumerate {
        #[arg(long, value_parser = positive())]
        p: u64,
        #[arg(long, value_parser = positive())]
        q: u64,
        #[arg(long, value_parser = positive())]
        n: u64,
    },
    /// Print the edge count of the Turán graph T(n, parts).
    Turan {
        #[arg(long, value_parser = positive())]
        n: u64,
        #[arg(long, value_parser = positive())]
        parts: u64,
        #[arg(long, value_enum, default_value_t = TuranMethod::Formula)]
        method: TuranMethod,
    },
    /// Print Sr(n, p), the number of intervals in [n] with p·min F ≥ |F|.
    IntervalCount {
        #[arg(long, value_parser = positive())]
        n: u64,
        #[arg(long, value_parser = positive())]
        p: u64,
        #[arg(long, value_enum, default_value_t = IntervalMethod::Closed)]
        method: IntervalMethod,
    },
    /// Run a verification grid.
    Verify {
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        #[arg(long, value_parser = positive())]
        pmax: Option<u64>,
        #[arg(long, value_parser = positive())]
        qmax: Option<u64>,
        #[arg(long, value_parser = positive())]
        nmax: Option<u64>,
        /// Corrupt the recurrence's first base value (exercises the failure path).
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
    /// Time the oracle, recurrence and direct formula for n = 1..max.
    Bench {
        #[arg(long, value_parser = positive())]
        p: u64,
        #[arg(long, value_parser = positive())]
        q: u64,
        #[arg(long = "max", value_parser = positive())]
        n_max: u64,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CountMethod {
    Oracle,
    Recurrence,
    Direct,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SeqFormat {
    Csv,
    Bfile,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TuranMethod {
    Formula,
    Graph,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum IntervalMethod {
    Sum,
    Closed,
    Enum,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    Recurrence,
    Direct,
    Bijections,
    TuranIdentity,
    ScaleInvariance,
    All,
}

impl SuiteArg {
    fn suites(self) -> Vec<Suite> {
        match self {
            SuiteArg::Recurrence => vec![Suite::Recurrence],
            SuiteArg::Direct => vec![Suite::Direct],
            SuiteArg::Bijections => vec![Suite::Bijections],
            SuiteArg::TuranIdentity => vec![Suite::TuranIdentity],
            SuiteArg::ScaleInvariance => vec![Suite::ScaleInvariance],
            SuiteArg::All => Suite::ALL.to_vec(),
        }
    }
}

fn ratio(p: u64, q: u64) -> Result<Ratio, Error> {
    Ratio::new(p, q)
}

fn execute<W: Write>(command: Command, out: &mut W) -> Result<u8, Failure> {
    match command {
        Command::Count { p, q, n, method } => {
            let r = ratio(p, q)?;
            let value = match method {
                CountMethod::Oracle => count_spq_bruteforce(n, r)?,
                CountMethod::Recurrence => count_spq_recurrence(n, r),
                CountMethod::Direct => count_spq_direct(n, r),
            };
            writeln!(out, "{value}")?;
        }
        Command::Sequence {
            p,
            q,
            n_max,
            format,
            offset,
            include_zero,
        } => {
            let r = ratio(p, q)?;
            let first = if include_zero { 0 } else { offset };
            if first > n_max {
                return Err(Failure::Usage(format!(
                    "offset {first} is beyond --max {n_max}"
                )));
            }
            let seq = sequence_spq(n_max, r);
            let values = &seq.values()[first as usize..];
            match format {
                SeqFormat::Csv => writeln!(out, "{}", render_csv(values))?,
                SeqFormat::Bfile => {
                    let bfile = BFile::from_values(first, values.iter().cloned())
                        .with_comment(format!("|S^{{{p}/{q}}}_n| for n = {first}..{n_max}"));
                    write!(out, "{}", bfile.render())?;
                }
            }
        }
        Command::Enumerate { p, q, n } => {
            for f in enumerate_spq(n, ratio(p, q)?)?.members {
                writeln!(out, "{f}")?;
            }
        }
        Command::Turan { n, parts, method } => {
            let value = match method {
                TuranMethod::Formula => turan_edges_formula(n, parts)?,
                TuranMethod::Graph => turan_edges_construction(n, parts)?,
            };
            writeln!(out, "{value}")?;
        }
        Command::IntervalCount { n, p, method } => {
            let value = match method {
                IntervalMethod::Sum => interval_count_sum(n, p)?,
                IntervalMethod::Closed => interval_count_closed(n, p)?,
                IntervalMethod::Enum => count_interval_bruteforce(n, p)?,
            };
            writeln!(out, "{value}")?;
        }
        Command::Verify {
            suite,
            pmax,
            qmax,
            nmax,
            inject_fault,
        } => {
            let fault = if inject_fault {
                Fault::BaseCaseOffByOne
            } else {
                Fault::None
            };
            let mut all_pass = true;
            for s in suite.suites() {
                let d = s.default_bounds();
                let bounds = Bounds {
                    pmax: pmax.unwrap_or(d.pmax),
                    qmax: qmax.unwrap_or(d.qmax),
                    nmax: nmax.unwrap_or(d.nmax),
                };
                let report = run_suite_with_fault(s, bounds, fault)?;
                writeln!(out, "{report}")?;
                all_pass &= report.pass();
            }
            writeln!(
                out,
                "{}",
                if all_pass {
                    "overall: PASS"
                } else {
                    "overall: FAIL"
                }
            )?;
            if !all_pass {
                return Ok(EXIT_VERIFY_FAILED);
            }
        }
        Command::Bench { p, q, n_max } => {
            writeln!(out, "n\tmethod\tnanoseconds\tdigest")?;
            for row in bench_rows(ratio(p, q)?, n_max) {
                writeln!(out, "{}", row.to_tsv())?;
            }
        }
    }
    Ok(EXIT_OK)
}

enum Failure {
    Lib(Error),
    Usage(String),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

/// Runs a parsed command, writing results to `out` and diagnostics to `err`.
/// Returns the process exit code.
pub fn run<W: Write, E: Write>(cli: Cli, out: &mut W, err: &mut E) -> u8 {
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(Failure::Lib(e @ Error::OracleGuard { .. })) => {
            let _ = writeln!(
                err,
                "error: {e}; use --method recurrence or --method direct for large n"
            );
            EXIT_GUARD
        }
        Err(Failure::Lib(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => EXIT_OK,
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

/// Parses `args` (program name first) and runs the command. Parse failures
/// print clap's message and return exit code 2 (0 for `--help`/`--version`).
pub fn run_from_args<I, T, W, E>(args: I, out: &mut W, err: &mut E) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
    W: Write,
    E: Write,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(cli, out, err),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{rendered}");
            } else {
                let _ = write!(out, "{rendered}");
            }
            code
        }
    }
}
