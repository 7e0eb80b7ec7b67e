//! Exhaustive and randomized verification: covering generators, the
//! per-covering law suite, sweep drivers, and a counterexample finder.
//!
//! Sweeps distribute coverings across worker threads (optionally capped
//! by the `THREADS` environment variable) and merge results in
//! generator order, so output is reproducible.

mod counterexample;
mod generate;
mod suite;

pub use counterexample::{
    find_counterexample, predicate_holds, predicate_ids, predicate_witness, Counterexample,
    GeneratorConfig,
};
pub use generate::{
    enumerate_coverings, enumerate_coverings_capped, enumerate_partitions, random_covering,
    ENUM_DEFAULT_CAP, ENUM_HARD_CAP,
};
pub use suite::{
    run_theorem_suite, run_theorem_suite_capped, TheoremReport, Witness, SUITE_DEFAULT_CAP,
    SUITE_HARD_CAP,
};

use crate::covering::{ApproxSpace, Covering};
use crate::error::Error;

/// Aggregated result of one law across a sweep of coverings.
#[derive(Clone, Debug)]
pub struct TheoremStat {
    pub id: &'static str,
    pub checked: usize,
    pub hypothesis_held: usize,
    pub failures: usize,
}

/// One failed law on one covering of a sweep.
#[derive(Clone, Debug)]
pub struct SweepFailure {
    /// Position of the covering in generator order.
    pub index: u64,
    pub covering: Covering,
    pub report: TheoremReport,
}

/// Merged outcome of a sweep; failures are ordered by covering index.
#[derive(Clone, Debug)]
pub struct SweepSummary {
    pub coverings_checked: usize,
    pub stats: Vec<TheoremStat>,
    pub failures: Vec<SweepFailure>,
}

impl SweepSummary {
    pub fn all_hold(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Runs the law suite on every covering of an n-element universe.
pub fn verify_exhaustive(n: usize, limit: Option<usize>) -> Result<SweepSummary, Error> {
    verify_exhaustive_capped(n, limit, ENUM_DEFAULT_CAP)
}

pub fn verify_exhaustive_capped(
    n: usize,
    limit: Option<usize>,
    cap: usize,
) -> Result<SweepSummary, Error> {
    // Probe the caps up front so the sweep fails before any work.
    enumerate_coverings_capped(n, Some(0), cap)?.count();
    let jobs: Vec<(u64, Covering)> = enumerate_coverings_capped(n, limit, cap)?
        .enumerate()
        .map(|(i, c)| (i as u64, c))
        .collect();
    run_sweep(&jobs, SUITE_HARD_CAP)
}

/// Runs the law suite on seeded random coverings with seeds
/// seed, seed+1, ..., seed+trials-1.
pub fn verify_random(
    n: usize,
    density: f64,
    seed: u64,
    trials: u64,
) -> Result<SweepSummary, Error> {
    if n > SUITE_DEFAULT_CAP {
        return Err(Error::SizeLimit {
            size: n,
            cap: SUITE_DEFAULT_CAP,
        });
    }
    let jobs: Vec<(u64, Covering)> = (0..trials)
        .map(|t| {
            let s = seed.wrapping_add(t);
            (s, random_covering(n, density, s))
        })
        .collect();
    run_sweep(&jobs, SUITE_DEFAULT_CAP)
}

struct Partial {
    coverings: usize,
    stats: Vec<TheoremStat>,
    failures: Vec<SweepFailure>,
}

fn run_batch(jobs: &[(u64, Covering)], cap: usize) -> Result<Partial, Error> {
    let mut partial = Partial {
        coverings: 0,
        stats: Vec::new(),
        failures: Vec::new(),
    };
    for (index, covering) in jobs {
        let space = ApproxSpace::new(covering.clone());
        let reports = run_theorem_suite_capped(&space, cap)?;
        partial.coverings += 1;
        if partial.stats.is_empty() {
            partial.stats = reports
                .iter()
                .map(|r| TheoremStat {
                    id: r.id,
                    checked: 0,
                    hypothesis_held: 0,
                    failures: 0,
                })
                .collect();
        }
        for (stat, report) in partial.stats.iter_mut().zip(&reports) {
            debug_assert_eq!(stat.id, report.id);
            stat.checked += 1;
            stat.hypothesis_held += report.hypothesis_held as usize;
            stat.failures += (!report.conclusion_holds) as usize;
        }
        for report in reports {
            if !report.conclusion_holds {
                partial.failures.push(SweepFailure {
                    index: *index,
                    covering: covering.clone(),
                    report,
                });
            }
        }
    }
    Ok(partial)
}

fn worker_count(jobs: usize) -> usize {
    let available = std::thread::available_parallelism()
        .map(|n| n.get())
        .unwrap_or(1);
    let capped = std::env::var("THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .filter(|&t| t >= 1)
        .map_or(available, |t| t.min(available));
    capped.clamp(1, jobs.max(1))
}

fn run_sweep(jobs: &[(u64, Covering)], cap: usize) -> Result<SweepSummary, Error> {
    let workers = worker_count(jobs.len());
    let partials: Vec<Partial> = if workers <= 1 || jobs.len() < 2 * workers {
        vec![run_batch(jobs, cap)?]
    } else {
        let chunk_size = jobs.len().div_ceil(workers);
        std::thread::scope(|scope| {
            let handles: Vec<_> = jobs
                .chunks(chunk_size)
                .map(|chunk| scope.spawn(move || run_batch(chunk, cap)))
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("verification worker panicked"))
                .collect::<Result<Vec<_>, _>>()
        })?
    };

    let mut summary = SweepSummary {
        coverings_checked: 0,
        stats: Vec::new(),
        failures: Vec::new(),
    };
    for partial in partials {
        summary.coverings_checked += partial.coverings;
        if summary.stats.is_empty() {
            summary.stats = partial.stats;
        } else {
            for (total, part) in summary.stats.iter_mut().zip(&partial.stats) {
                assert_eq!(total.id, part.id);
                total.checked += part.checked;
                total.hypothesis_held += part.hypothesis_held;
                total.failures += part.failures;
            }
        }
        summary.failures.extend(partial.failures);
    }
    summary.failures.sort_by_key(|f| f.index);
    Ok(summary)
}
