//! Runs the per-space invariant suite over a corpus of topologies.

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use ptloc_core::suite::{check_space, Fault, SpaceCheck};
use ptloc_core::topology::{FiniteSpace, Topologies, TopologyError, ENUMERATION_LIMIT};

use crate::sample::sample_spaces;

/// Largest size enumerated exhaustively under `--force`.
pub const FORCED_EXHAUSTIVE_LIMIT: usize = 5;
/// Largest size accepted for random sampling.
pub const SAMPLING_LIMIT: usize = 16;
/// Sampled spaces with more opens than this are skipped.
pub const SAMPLED_OPENS_LIMIT: usize = 256;

#[derive(Debug, Error)]
pub enum DriverError {
    #[error(transparent)]
    Enumeration(#[from] TopologyError),
    #[error("{0} points exceeds the sampling limit of {SAMPLING_LIMIT}")]
    TooLarge(usize),
    #[error("checking {0} points needs random sampling; pass --seed")]
    SeedRequired(usize),
}

#[derive(Clone, Debug)]
pub struct CheckOptions {
    pub min_points: usize,
    pub max_points: usize,
    pub force: bool,
    pub seed: Option<u64>,
    pub samples: usize,
    pub fault: Option<Fault>,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerdictRecord {
    pub points: usize,
    pub index: usize,
    pub sampled: bool,
    /// Open sets as point bitmasks.
    pub opens: Vec<u64>,
    pub t0: bool,
    pub sober: bool,
    pub homeomorphic_to_input: bool,
    pub homeomorphic_to_sobrification: bool,
    pub ps: usize,
    pub loc: usize,
    pub primes: usize,
    pub violations: Vec<String>,
}

#[derive(Clone, Debug, Default, Serialize, PartialEq, Eq)]
pub struct SizeSummary {
    pub points: usize,
    pub sampled: bool,
    pub topologies: usize,
    pub t0: usize,
    pub skipped: usize,
    pub violations: usize,
}

#[derive(Clone, Debug)]
pub struct CheckOutcome {
    pub records: Vec<VerdictRecord>,
    pub sizes: Vec<SizeSummary>,
    /// Seed actually used for sampled sizes.
    pub seed: Option<u64>,
}

impl CheckOutcome {
    pub fn violations(&self) -> usize {
        self.sizes.iter().map(|s| s.violations).sum()
    }

    pub fn topologies(&self) -> usize {
        self.sizes.iter().map(|s| s.topologies).sum()
    }
}

fn record(n: usize, index: usize, sampled: bool, x: &FiniteSpace, c: SpaceCheck) -> VerdictRecord {
    VerdictRecord {
        points: n,
        index,
        sampled,
        opens: x.opens().iter().map(|u| u.bits()).collect(),
        t0: c.t0,
        sober: c.sober,
        homeomorphic_to_input: c.homeomorphic_to_input,
        homeomorphic_to_sobrification: c.homeomorphic_to_sobrification,
        ps: c.ps_size,
        loc: c.loc_size,
        primes: c.prime_count,
        violations: c.violations.iter().map(|v| format!("{v:?}")).collect(),
    }
}

/// Runs the suite over every size `min_points..=max_points`. Sizes up to
/// [`ENUMERATION_LIMIT`] are exhaustive; larger sizes need `force`, and
/// beyond [`FORCED_EXHAUSTIVE_LIMIT`] they are sampled from `seed`.
pub fn run_check(opts: &CheckOptions) -> Result<CheckOutcome, DriverError> {
    if opts.max_points > ENUMERATION_LIMIT && !opts.force {
        return Err(TopologyError::EnumerationGuard {
            points: opts.max_points,
            limit: ENUMERATION_LIMIT,
        }
        .into());
    }
    if opts.max_points > SAMPLING_LIMIT {
        return Err(DriverError::TooLarge(opts.max_points));
    }
    if opts.max_points > FORCED_EXHAUSTIVE_LIMIT && opts.seed.is_none() {
        return Err(DriverError::SeedRequired(opts.max_points));
    }
    let mut records = Vec::new();
    let mut sizes = Vec::new();
    let mut fault = opts.fault;
    for n in opts.min_points..=opts.max_points {
        let (spaces, sampled) = if n <= FORCED_EXHAUSTIVE_LIMIT {
            (Topologies::new(n, false, opts.force)?.collect::<Vec<_>>(), false)
        } else {
            (sample_spaces(n, opts.samples, opts.seed.unwrap_or_default()), true)
        };
        let (kept, skipped): (Vec<_>, Vec<_>) = spaces
            .into_iter()
            .partition(|x| x.opens().len() <= SAMPLED_OPENS_LIMIT);
        // the fault lands on the first space with at least one point
        let target = if n > 0 { fault.take() } else { None };
        let checks: Vec<SpaceCheck> = kept
            .par_iter()
            .enumerate()
            .map(|(i, x)| check_space(x, if i == 0 { target } else { None }))
            .collect();
        let mut summary = SizeSummary {
            points: n,
            sampled,
            skipped: skipped.len(),
            ..SizeSummary::default()
        };
        for (i, (x, c)) in kept.iter().zip(checks).enumerate() {
            summary.topologies += 1;
            summary.t0 += usize::from(c.t0);
            summary.violations += usize::from(!c.passed());
            records.push(record(n, i, sampled, x, c));
        }
        sizes.push(summary);
    }
    Ok(CheckOutcome {
        records,
        sizes,
        seed: opts.seed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn opts(max_points: usize) -> CheckOptions {
        CheckOptions {
            min_points: 0,
            max_points,
            force: false,
            seed: None,
            samples: 4,
            fault: None,
        }
    }

    #[test]
    fn three_points() {
        let out = run_check(&opts(3)).unwrap();
        assert_eq!(out.sizes[3].topologies, 29);
        assert_eq!(out.sizes[3].t0, 19);
        assert_eq!(out.violations(), 0);
        assert_eq!(out.topologies(), 1 + 1 + 4 + 29);
    }

    #[test]
    fn guard_and_seed_requirements() {
        assert!(matches!(run_check(&opts(5)), Err(DriverError::Enumeration(_))));
        let mut o = opts(6);
        o.force = true;
        assert!(matches!(run_check(&o), Err(DriverError::SeedRequired(6))));
    }

    #[test]
    fn fault_is_reported() {
        let mut o = opts(2);
        o.fault = Some(Fault::CorruptLocJoin);
        let out = run_check(&o).unwrap();
        assert_eq!(out.violations(), 1);
        assert_eq!(out.sizes[1].violations, 1);
    }
}
