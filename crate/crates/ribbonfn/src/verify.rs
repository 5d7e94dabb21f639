//! Parallel driver for the verification suites.
//!
//! Cases are independent and pure, so they fan out over a thread pool; the
//! failure list is re-ordered by case index afterwards so a run with any
//! `--jobs` value produces the same report as a sequential one.

use rayon::prelude::*;

use ribbonfn_core::suite::{suite_cases, IdentityReport, SuiteBounds};
use ribbonfn_core::Error;

pub fn run_parallel(
    name: &str,
    bounds: &SuiteBounds,
    jobs: Option<usize>,
) -> Result<IdentityReport, Error> {
    let cases = suite_cases(name, bounds)?;
    let run = || {
        let mut failures: Vec<_> = cases
            .par_iter()
            .enumerate()
            .filter_map(|(i, case)| case.run().map(|f| (i, f)))
            .collect();
        failures.sort_by_key(|(i, _)| *i);
        failures.into_iter().map(|(_, f)| f).collect::<Vec<_>>()
    };
    let failures = match jobs {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .expect("thread pool construction")
            .install(run),
        None => run(),
    };
    Ok(IdentityReport {
        suite: name.to_string(),
        bounds: *bounds,
        cases: cases.len() as u64,
        failures,
    })
}
