//! Randomized and golden-instance verification of the integral laws:
//! additivity and linearity under subadditive capacities, disjoint-support
//! super/additivity, convergence properties, pan/concave coincidence, and
//! counterexample searches on capacities that break the hypotheses.

mod golden;
mod search;
mod suites;

pub use golden::{reproduce_example_52, GoldenCheck, GoldenReport};
pub use search::{
    find_additivity_counterexample, find_comonotone_counterexample,
    find_comonotone_over_family, SearchWitness,
};
pub use suites::*;

use rayon::prelude::*;

use crate::capacity::Capacity;
use crate::generate::{self, Family};
use crate::report::{VerificationReport, ViolationWitness};
use crate::space::FiniteSpace;
use crate::value::Mode;

/// Shared setup for one randomized suite: trial count, base seed, the range
/// of ground-set sizes, the capacity source and the numeric mode.
#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub trials: u32,
    pub seed: u64,
    /// Per-trial n is drawn uniformly from 2..=n_max (clamped further by
    /// suites with enumeration oracles).
    pub n_max: usize,
    /// Capacity families, cycled per trial.
    pub families: Vec<Family>,
    pub mode: Mode,
    /// When set, every trial uses this capacity instead of a generated one.
    pub fixed_capacity: Option<Capacity>,
}

impl SuiteConfig {
    pub fn new(trials: u32, seed: u64, n_max: usize, family: Family, mode: Mode) -> Self {
        SuiteConfig {
            trials,
            seed,
            n_max: n_max.clamp(2, 16),
            families: vec![family],
            mode,
            fixed_capacity: None,
        }
    }

    pub fn with_families(mut self, families: Vec<Family>) -> Self {
        assert!(!families.is_empty());
        self.families = families;
        self
    }

    pub fn with_fixed_capacity(mut self, capacity: Capacity) -> Self {
        self.fixed_capacity = Some(capacity);
        self
    }

    /// Deterministic sub-seed for (trial, lane).
    fn lane(&self, trial: u32, lane: u64) -> u64 {
        generate::derive_seed(self.seed, trial as u64, lane)
    }

    /// The capacity for one trial, honoring `fixed_capacity`, plus the
    /// ground-set size cap requested by the suite.
    fn capacity_for(&self, trial: u32, n_cap: usize) -> Capacity {
        if let Some(mu) = &self.fixed_capacity {
            return mu.clone();
        }
        let span = (self.n_max.min(n_cap)).saturating_sub(2) as u64 + 1;
        let n = 2 + (self.lane(trial, 0) % span) as usize;
        let space = FiniteSpace::of_size(n).unwrap();
        let family = self.families[trial as usize % self.families.len()];
        generate::gen_capacity(&space, self.lane(trial, 1), family, self.mode)
    }
}

/// Run trials concurrently and merge witnesses by trial index, so the report
/// is identical to a sequential run.
fn run_suite<F>(name: &str, cfg: &SuiteConfig, n_cap: usize, trial_fn: F) -> VerificationReport
where
    F: Fn(u32, &Capacity) -> Vec<ViolationWitness> + Sync,
{
    let witnesses: Vec<ViolationWitness> = (0..cfg.trials)
        .into_par_iter()
        .map(|trial| {
            let mu = cfg.capacity_for(trial, n_cap);
            trial_fn(trial, &mu)
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect();
    VerificationReport::new(name, cfg.trials, cfg.seed, cfg.mode).with_witnesses(witnesses)
}
