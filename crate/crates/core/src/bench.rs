//! Benchmark harness: timed runs, cross-algorithm agreement, CSV output.

use std::io::Write;
use std::path::Path;
use std::time::Instant;

use crate::error::{Error, Result};
use crate::metrics::{BenchRecord, OpCounts};
use crate::sequences::{compute, Algorithm, Kind};
use crate::term::Natural;
use crate::Index;

pub const CSV_HEADER: &str =
    "n,kind,algo,rep,elapsed_ns,squarings,mults,adds,calls,memo_hits,result_bits";

/// How the benchmark indices are given.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IndexSeries {
    Explicit(Vec<Index>),
    /// `steps` points spaced geometrically from `min` to `max`, rounded and
    /// deduplicated. Both endpoints are always present.
    Geometric {
        min: Index,
        max: Index,
        steps: u32,
    },
}

impl IndexSeries {
    pub fn indices(&self) -> Result<Vec<Index>> {
        match self {
            IndexSeries::Explicit(v) => Ok(v.clone()),
            &IndexSeries::Geometric { min, max, steps } => geometric(min, max, steps),
        }
    }
}

fn geometric(min: Index, max: Index, steps: u32) -> Result<Vec<Index>> {
    if min == 0 || min > max {
        return Err(Error::InvalidPlan(format!(
            "geometric series needs 1 <= min <= max, got {min}:{max}"
        )));
    }
    if steps == 0 || (steps == 1 && min != max) {
        return Err(Error::InvalidPlan(format!(
            "geometric series {min}:{max} needs at least 2 steps, got {steps}"
        )));
    }
    let ratio = (max as f64 / min as f64).powf(1.0 / (steps.max(2) - 1) as f64);
    let mut out: Vec<Index> = (0..steps)
        .map(|i| match i {
            0 => min,
            _ if i == steps - 1 => max,
            _ => ((min as f64) * ratio.powi(i as i32))
                .round()
                .clamp(min as f64, max as f64) as Index,
        })
        .collect();
    out.dedup();
    Ok(out)
}

/// A validated benchmark plan.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BenchPlan {
    indices: Vec<Index>,
    algos: Vec<Algorithm>,
    kind: Kind,
    reps: u32,
    warmup: u32,
}

impl BenchPlan {
    /// Indices must be non-empty and strictly increasing; `reps >= 1`.
    pub fn new(
        indices: Vec<Index>,
        algos: Vec<Algorithm>,
        kind: Kind,
        reps: u32,
        warmup: u32,
    ) -> Result<Self> {
        if indices.is_empty() {
            return Err(Error::InvalidPlan("no indices".into()));
        }
        if let Some(w) = indices.windows(2).find(|w| w[0] >= w[1]) {
            return Err(Error::InvalidPlan(format!(
                "indices must be strictly increasing ({} then {})",
                w[0], w[1]
            )));
        }
        if algos.is_empty() {
            return Err(Error::InvalidPlan("no algorithms".into()));
        }
        if reps == 0 {
            return Err(Error::InvalidPlan("reps must be at least 1".into()));
        }
        Ok(BenchPlan {
            indices,
            algos,
            kind,
            reps,
            warmup,
        })
    }

    pub fn indices(&self) -> &[Index] {
        &self.indices
    }

    pub fn algos(&self) -> &[Algorithm] {
        &self.algos
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn reps(&self) -> u32 {
        self.reps
    }

    pub fn warmup(&self) -> u32 {
        self.warmup
    }

    /// Number of records a run produces.
    pub fn record_count(&self) -> usize {
        self.indices.len() * self.algos.len() * self.reps as usize
    }
}

/// Runs `plan` sequentially, handing each record to `emit` in
/// `(n, algo, rep)` order.
///
/// All records for one `n` are held back until every algorithm has produced
/// the same value; a disagreement aborts with [`Error::Mismatch`] before any
/// of that index's records are emitted.
pub fn run_bench_with<F>(plan: &BenchPlan, emit: F) -> Result<()>
where
    F: FnMut(BenchRecord) -> Result<()>,
{
    drive(plan, compute, emit)
}

fn drive<C, F>(plan: &BenchPlan, mut compute: C, mut emit: F) -> Result<()>
where
    C: FnMut(Kind, Index, Algorithm, &mut OpCounts) -> Result<Natural>,
    F: FnMut(BenchRecord) -> Result<()>,
{
    let kind = plan.kind;
    for &n in &plan.indices {
        let mut pending = Vec::with_capacity(plan.algos.len() * plan.reps as usize);
        let mut reference = None;
        for &algo in &plan.algos {
            for _ in 0..plan.warmup {
                compute(kind, n, algo, &mut OpCounts::new())?;
            }
            for rep in 0..plan.reps {
                let mut ops = OpCounts::new();
                let start = Instant::now();
                let value = compute(kind, n, algo, &mut ops)?;
                let elapsed_ns = u64::try_from(start.elapsed().as_nanos()).unwrap_or(u64::MAX);

                match &reference {
                    None => reference = Some((algo, value.clone())),
                    Some((first, expected)) if *expected != value => {
                        return Err(Error::Mismatch {
                            n,
                            kind: kind.name(),
                            first: first.name(),
                            second: algo.name(),
                        });
                    }
                    Some(_) => {}
                }
                pending.push(BenchRecord {
                    n,
                    kind,
                    algo,
                    rep,
                    elapsed_ns,
                    ops,
                    result_bits: value.bits(),
                });
            }
        }
        pending.into_iter().try_for_each(&mut emit)?;
    }
    Ok(())
}

pub fn run_bench(plan: &BenchPlan) -> Result<Vec<BenchRecord>> {
    let mut out = Vec::with_capacity(plan.record_count());
    run_bench_with(plan, |r| {
        out.push(r);
        Ok(())
    })?;
    Ok(out)
}

pub fn csv_row(r: &BenchRecord) -> String {
    format!(
        "{},{},{},{},{},{},{},{},{},{},{}",
        r.n,
        r.kind,
        r.algo,
        r.rep,
        r.elapsed_ns,
        r.ops.squarings,
        r.ops.general_mults,
        r.ops.add_subs,
        r.ops.recursive_calls,
        r.ops.memo_hits,
        r.result_bits
    )
}

/// Writes the header and one row per record. `dest` names the sink in
/// error messages.
pub fn write_csv<'a, I, W>(records: I, mut sink: W, dest: &Path) -> Result<()>
where
    I: IntoIterator<Item = &'a BenchRecord>,
    W: Write,
{
    let io = |source| Error::Io {
        path: dest.to_path_buf(),
        source,
    };
    writeln!(sink, "{CSV_HEADER}").map_err(io)?;
    for r in records {
        writeln!(sink, "{}", csv_row(r)).map_err(io)?;
    }
    sink.flush().map_err(io)
}
