//! Exhaustive enumeration, the sweeps built on it, and the growing pipeline.

pub mod canon;
pub mod enumerate;
pub mod grow;
pub mod sweep;

pub use enumerate::{enumerate_graphs, fold_graphs, Generated};
pub use grow::{pipeline_grow, GrowOutcome, GrowParams, GrowTrace, Stage};
pub use sweep::{
    corrupted_minor, run_suite, sweep_c4_necessity, sweep_embed, sweep_even_hole_subset_e, sweep_obs51, sweep_thm31,
    sweep_thm31_with, sweep_thm32, C4Exemplar, Finding, Source, Suite, SweepReport, REPORT_SCHEMA,
};

use crate::error::{Error, Result};

pub const THREADS_ENV: &str = "OBSTRUCTION_LAB_THREADS";

/// Sizes the global worker pool: `requested`, else the environment
/// variable, else one worker per core. Returns the size in effect; a pool
/// already built earlier keeps its size.
pub fn init_threads(requested: Option<usize>) -> Result<usize> {
    let from_env = match std::env::var(THREADS_ENV) {
        Ok(s) => Some(
            s.trim()
                .parse::<usize>()
                .map_err(|e| Error::precondition(format!("{THREADS_ENV}={s:?}: {e}")))?,
        ),
        Err(_) => None,
    };
    match requested.or(from_env) {
        Some(0) => Err(Error::precondition("thread count must be at least 1")),
        Some(n) => {
            let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
            Ok(rayon::current_num_threads())
        }
        None => Ok(rayon::current_num_threads()),
    }
}
