//! Running catalog entries over their parameter grids.
//!
//! Instances are independent, so the parallel runner simply maps them over a
//! worker pool; results always come back in planning order.

use crate::registry::{Env, Grid, IdentityDescriptor, IdentityReport, Params, Status};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use std::time::Duration;

/// JSON report schema version.
pub const REPORT_VERSION: u32 = 1;

/// One planned instance.
#[derive(Clone)]
pub struct Task {
    pub entry: &'static IdentityDescriptor,
    pub params: Params,
}

/// Expands each selected entry over the grid, in catalog order.
pub fn plan(entries: &[&'static IdentityDescriptor], grid: &Grid) -> Vec<Task> {
    entries
        .iter()
        .flat_map(|&entry| {
            entry
                .instances(grid)
                .into_iter()
                .map(move |params| Task { entry, params })
        })
        .collect()
}

fn run_one(env: &Env, grid: &Grid, task: &Task, mutate: Option<&str>) -> IdentityReport {
    let mutated = mutate == Some(task.entry.name);
    task.entry.run(env, &task.params, grid, mutated)
}

pub fn run_sequential(
    env: &Env,
    grid: &Grid,
    tasks: &[Task],
    mutate: Option<&str>,
) -> Vec<IdentityReport> {
    tasks.iter().map(|t| run_one(env, grid, t, mutate)).collect()
}

/// Runs the tasks on a pool of `jobs` threads (`0` picks the core count).
#[cfg(feature = "parallel")]
pub fn run_parallel(
    env: &Env,
    grid: &Grid,
    tasks: &[Task],
    mutate: Option<&str>,
    jobs: usize,
) -> Vec<IdentityReport> {
    use rayon::prelude::*;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .expect("thread pool");
    pool.install(|| {
        tasks
            .par_iter()
            .map(|t| run_one(env, grid, t, mutate))
            .collect()
    })
}

/// Parallel when the `parallel` feature is enabled and `jobs != 1`.
pub fn run(
    env: &Env,
    grid: &Grid,
    tasks: &[Task],
    mutate: Option<&str>,
    jobs: usize,
) -> Vec<IdentityReport> {
    #[cfg(feature = "parallel")]
    if jobs != 1 {
        return run_parallel(env, grid, tasks, mutate, jobs);
    }
    let _ = jobs;
    run_sequential(env, grid, tasks, mutate)
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
    pub elapsed_ms: u64,
}

impl Summary {
    pub fn new(reports: &[IdentityReport], elapsed: Duration) -> Self {
        let count = |s: Status| reports.iter().filter(|r| r.status == s).count();
        Summary {
            pass: count(Status::Pass),
            fail: count(Status::Fail),
            skipped: count(Status::Skipped),
            elapsed_ms: elapsed.as_millis() as u64,
        }
    }

    /// Every instance passed (skips count as not passing).
    pub fn all_pass(&self) -> bool {
        self.fail == 0 && self.skipped == 0
    }
}

/// The versioned JSON document: `{version, config, results, summary}`.
/// Object keys are emitted in sorted order.
pub fn json_report(config: Value, reports: &[IdentityReport], summary: &Summary) -> Value {
    json!({
        "version": REPORT_VERSION,
        "config": config,
        "results": reports,
        "summary": summary,
    })
}
