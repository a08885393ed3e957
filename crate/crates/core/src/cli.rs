//! Command-line front end: `compute`, `verify` and `bench`.
//!
//! Exit codes: 0 on success, 1 when algorithms disagree, 2 on usage or I/O
//! errors.

use std::ffi::OsString;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{ArgGroup, Args, Parser, Subcommand};

use crate::bench::{run_bench, write_csv, BenchPlan, IndexSeries};
use crate::error::Error;
use crate::metrics::OpCounts;
use crate::sequences::{compute, fib_linear, lucas_linear, Algorithm, Kind};
use crate::term::Natural;
use crate::Index;

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "lucas",
    version,
    about = "Individual Lucas and Fibonacci numbers in O(log n) operations"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print one sequence value.
    Compute(ComputeArgs),
    /// Check every algorithm against the linear recurrence.
    Verify(VerifyArgs),
    /// Time algorithms and write CSV records.
    Bench(BenchArgs),
}

#[derive(Debug, Args)]
pub struct ComputeArgs {
    #[arg(short = 'n', long = "index")]
    pub n: Index,

    #[arg(long, default_value = "lucas")]
    pub kind: Kind,

    #[arg(long, default_value = "middle")]
    pub algo: Algorithm,

    #[arg(long, default_value_t = 10, value_parser = parse_radix)]
    pub radix: u32,

    /// Print operation counts to standard error.
    #[arg(long)]
    pub stats: bool,

    /// Print only the number of digits.
    #[arg(long)]
    pub length_only: bool,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Largest index checked.
    #[arg(long = "max", default_value_t = 512)]
    pub max: Index,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("series").required(true).args(["indices", "geometric"])))]
pub struct BenchArgs {
    /// Comma-separated, strictly increasing indices.
    #[arg(long, value_delimiter = ',')]
    pub indices: Vec<Index>,

    /// `min:max:steps`, geometrically spaced.
    #[arg(long, value_parser = parse_geometric)]
    pub geometric: Option<IndexSeries>,

    #[arg(long, value_delimiter = ',', default_value = "middle")]
    pub algos: Vec<Algorithm>,

    #[arg(long, default_value = "lucas")]
    pub kind: Kind,

    #[arg(long, default_value_t = 5)]
    pub reps: u32,

    #[arg(long, default_value_t = 1)]
    pub warmup: u32,

    /// Output file; standard output when absent.
    #[arg(long)]
    pub csv: Option<PathBuf>,
}

fn parse_radix(s: &str) -> Result<u32, String> {
    match s {
        "10" => Ok(10),
        "16" => Ok(16),
        _ => Err(format!("radix must be 10 or 16, got {s}")),
    }
}

fn parse_geometric(s: &str) -> Result<IndexSeries, String> {
    let parts: Vec<&str> = s.split(':').collect();
    let [min, max, steps] = parts[..] else {
        return Err(format!("expected min:max:steps, got {s}"));
    };
    let num = |v: &str| v.parse::<Index>().map_err(|e| format!("{v}: {e}"));
    Ok(IndexSeries::Geometric {
        min: num(min)?,
        max: num(max)?,
        steps: steps.parse().map_err(|e| format!("{steps}: {e}"))?,
    })
}

/// Parses `args` (including the program name) and runs the subcommand.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                EXIT_USAGE
            } else {
                let _ = write!(out, "{text}");
                EXIT_OK
            };
        }
    };
    match &cli.command {
        Command::Compute(a) => cmd_compute(a, out, err),
        Command::Verify(a) => cmd_verify(a, out, err),
        Command::Bench(a) => cmd_bench(a, out, err),
    }
}

fn report(err: &mut dyn Write, e: &Error) -> i32 {
    let _ = writeln!(err, "error: {e}");
    match e {
        Error::Mismatch { .. } | Error::NotLucas { .. } => EXIT_MISMATCH,
        _ => EXIT_USAGE,
    }
}

pub fn cmd_compute(args: &ComputeArgs, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let mut ops = OpCounts::new();
    let value = match compute(args.kind, args.n, args.algo, &mut ops) {
        Ok(v) => v,
        Err(e) => return report(err, &e),
    };
    let digits = value.to_str_radix(args.radix);
    let written = if args.length_only {
        writeln!(out, "{}", digits.len())
    } else {
        writeln!(out, "{digits}")
    };
    if let Err(e) = written.and_then(|_| out.flush()) {
        return report(
            err,
            &Error::Io {
                path: "<stdout>".into(),
                source: e,
            },
        );
    }
    if args.stats {
        let _ = writeln!(err, "{ops}");
    }
    EXIT_OK
}

/// A named way of computing `(kind, n) -> value`.
pub type Candidate<'a> = (
    &'static str,
    Box<dyn Fn(Kind, Index) -> crate::Result<Natural> + 'a>,
);

/// Every [`Algorithm`] through the public dispatch.
pub fn default_candidates() -> Vec<Candidate<'static>> {
    Algorithm::ALL
        .into_iter()
        .map(|algo| -> Candidate<'static> {
            (
                algo.name(),
                Box::new(move |kind, n| compute(kind, n, algo, &mut OpCounts::new())),
            )
        })
        .collect()
}

pub fn cmd_verify(args: &VerifyArgs, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    verify_with(args.max, &default_candidates(), out, err)
}

/// Compares each candidate with the linear recurrences for `n = 0..=max`,
/// Lucas before Fibonacci at each index. Stops at the first disagreement.
pub fn verify_with(
    max: Index,
    candidates: &[Candidate<'_>],
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    let (mut l, mut l_next) = (lucas_linear::<Natural>(0), lucas_linear::<Natural>(1));
    let (mut f, mut f_next) = (fib_linear::<Natural>(0), fib_linear::<Natural>(1));
    for n in 0..=max {
        for (kind, expected) in [(Kind::Lucas, &l), (Kind::Fib, &f)] {
            for (name, eval) in candidates {
                match eval(kind, n) {
                    Ok(got) if &got == expected => {}
                    Ok(got) => {
                        let _ = writeln!(
                            err,
                            "mismatch: kind={kind} n={n} algo={name} expected={expected} got={got}"
                        );
                        return EXIT_MISMATCH;
                    }
                    Err(e) => {
                        let _ = writeln!(
                            err,
                            "mismatch: kind={kind} n={n} algo={name} expected={expected} error={e}"
                        );
                        return EXIT_MISMATCH;
                    }
                }
            }
        }
        let next = &l + &l_next;
        l = std::mem::replace(&mut l_next, next);
        let next = &f + &f_next;
        f = std::mem::replace(&mut f_next, next);
    }
    let names: Vec<&str> = candidates.iter().map(|(name, _)| *name).collect();
    let _ = writeln!(
        out,
        "ok: {} agree with the linear recurrence for lucas and fib, n = 0..={max}",
        names.join(", ")
    );
    EXIT_OK
}

pub fn cmd_bench(args: &BenchArgs, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let series = match &args.geometric {
        Some(g) => g.clone(),
        None => IndexSeries::Explicit(args.indices.clone()),
    };
    let records = series
        .indices()
        .and_then(|idx| BenchPlan::new(idx, args.algos.clone(), args.kind, args.reps, args.warmup))
        .and_then(|plan| run_bench(&plan));
    let records = match records {
        Ok(r) => r,
        Err(e) => return report(err, &e),
    };
    let written = match &args.csv {
        Some(path) => File::create(path)
            .map_err(|source| Error::Io {
                path: path.clone(),
                source,
            })
            .and_then(|f| write_csv(&records, BufWriter::new(f), path)),
        None => write_csv(&records, out, Path::new("<stdout>")),
    };
    match written {
        Ok(()) => EXIT_OK,
        Err(e) => report(err, &e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequences::lucas_middle_with_seed;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(
            std::iter::once("lucas").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn compute_examples() {
        assert_eq!(
            run_str(&["compute", "--kind", "lucas", "--algo", "middle", "-n", "10"]).1,
            "123\n"
        );
        assert_eq!(
            run_str(&["compute", "--kind", "lucas", "--algo", "ripple", "-n", "4"]).1,
            "7\n"
        );
        assert_eq!(
            run_str(&["compute", "--kind", "fib", "--algo", "middle", "-n", "10"]).1,
            "55\n"
        );
    }

    #[test]
    fn compute_hex_and_length() {
        assert_eq!(
            run_str(&["compute", "-n", "30", "--radix", "16"]).1,
            "1c6392\n"
        );
        assert_eq!(run_str(&["compute", "-n", "30", "--length-only"]).1, "7\n");
        assert_eq!(
            run_str(&["compute", "-n", "30", "--radix", "16", "--length-only"]).1,
            "6\n"
        );
    }

    #[test]
    fn compute_stats_go_to_stderr() {
        let (code, out, err) = run_str(&["compute", "-n", "10", "--stats"]);
        assert_eq!(code, 0);
        assert_eq!(out, "123\n");
        assert_eq!(err, "squarings=4 mults=0 adds=6 calls=0 memo_hits=0\n");
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(run_str(&["compute", "-n", "10", "--algo", "bogus"]).0, 2);
        assert_eq!(run_str(&["compute", "-n", "10", "--radix", "8"]).0, 2);
        assert_eq!(run_str(&["compute", "-n", "18446744073709551616"]).0, 2);
        assert_eq!(run_str(&["compute"]).0, 2);
        assert_eq!(run_str(&[]).0, 2);
        assert_eq!(run_str(&["bench", "--algos", "middle"]).0, 2);
        assert_eq!(run_str(&["bench", "--indices", "5,3"]).0, 2);
        assert_eq!(run_str(&["bench", "--geometric", "2:10"]).0, 2);
    }

    #[test]
    fn help_exits_zero() {
        let (code, out, _) = run_str(&["--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("compute"));
    }

    #[test]
    fn verify_ranges() {
        let (code, out, _) = run_str(&["verify", "--max", "64"]);
        assert_eq!(code, 0);
        assert!(out.starts_with("ok:"));
        assert_eq!(run_str(&["verify", "--max", "1"]).0, 0);
        assert_eq!(run_str(&["verify", "--max", "0"]).0, 0);
    }

    #[test]
    fn verify_catches_corrupted_seed() {
        let bad: Candidate<'static> = (
            "middle",
            Box::new(|kind, n| match (kind, n) {
                (Kind::Lucas, 2..) => lucas_middle_with_seed(n, [3, 4, 8], &mut OpCounts::new()),
                _ => compute(kind, n, Algorithm::Middle, &mut OpCounts::new()),
            }),
        );
        let (mut out, mut err) = (Vec::new(), Vec::new());
        assert_eq!(verify_with(16, &[bad], &mut out, &mut err), 1);
        let err = String::from_utf8(err).unwrap();
        assert!(err.contains("n=7 algo=middle expected=29"), "{err}");
    }

    #[test]
    fn bench_to_stdout() {
        let (code, out, _) = run_str(&[
            "bench",
            "--indices",
            "10",
            "--algos",
            "middle,linear",
            "--kind",
            "lucas",
            "--reps",
            "1",
        ]);
        assert_eq!(code, 0);
        let lines: Vec<&str> = out.lines().collect();
        assert_eq!(lines.len(), 3);
        assert!(lines[1..].iter().all(|l| l.ends_with(",7")));
    }
}
