//! Parallel driver for the ratio experiment.
//!
//! Every sample draws from its own seed, so the report does not depend on the
//! number of threads or on scheduling.

use qupart_core::stats::{ratio_sample, ExperimentConfig, RatioRecord, RatioReport};
use qupart_core::Result;
use rayon::prelude::*;

/// Runs `cfg` on a pool of `threads` workers (at least one).
pub fn run_ratio_experiment(cfg: &ExperimentConfig, threads: usize) -> Result<RatioReport> {
    cfg.validate()?;
    let pool = rayon::ThreadPoolBuilder::new().num_threads(threads.max(1)).build().expect("thread pool");
    let jobs: Vec<(usize, usize)> =
        cfg.lengths.iter().flat_map(|&m| (0..cfg.samples_per_length).map(move |i| (m, i))).collect();
    let outcomes =
        pool.install(|| jobs.par_iter().map(|&(m, i)| ratio_sample(cfg, m, i)).collect::<Result<Vec<_>>>())?;
    let records = cfg
        .lengths
        .iter()
        .zip(outcomes.chunks(cfg.samples_per_length))
        .map(|(&m, samples)| RatioRecord::from_samples(m, samples))
        .collect();
    Ok(RatioReport { records })
}
