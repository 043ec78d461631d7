//! Executes catalog checks, serially or on a worker pool, and assembles
//! the deterministic report.

use super::{glob_match, CheckSpec, EvalResult, Tier};
use crate::report::{CheckOutcome, CheckStatus, Report};
use crate::{Error, Result};
use std::collections::BTreeMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

#[derive(Debug, Clone)]
pub struct RunConfig {
    /// Glob over check ids; `None` runs everything.
    pub filter: Option<String>,
    /// Tier mask; `None` runs all tiers.
    pub tiers: Option<Vec<Tier>>,
    /// Tolerance loosening factor, >= 1 (tightening is a code change).
    pub tol_scale: f64,
    /// Worker threads.
    pub jobs: usize,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self { filter: None, tiers: None, tol_scale: 1.0, jobs: 1 }
    }
}

fn evaluate_point(spec: &CheckSpec, point_idx: usize, tol_scale: f64) -> CheckOutcome {
    let point = &spec.grid[point_idx];
    let params: BTreeMap<String, f64> =
        point.params.iter().map(|(k, v)| (k.to_string(), *v)).collect();
    let start = Instant::now();
    let eval = catch_unwind(AssertUnwindSafe(|| (spec.eval)(point)));
    let wall_time_ms = start.elapsed().as_secs_f64() * 1e3;

    let (lhs, rhs, status, message) = match eval {
        Ok(EvalResult::Pair { lhs, rhs }) => {
            let scale = lhs.abs().max(rhs.abs());
            let bound = tol_scale * (spec.tolerance.abs_tol + spec.tolerance.rel_tol * scale);
            let abs_residual = (lhs - rhs).abs();
            let status = if spec.tier == Tier::Experimental {
                CheckStatus::Experimental
            } else if abs_residual.is_finite() && abs_residual <= bound {
                CheckStatus::Pass
            } else {
                CheckStatus::Fail
            };
            (lhs, rhs, status, None)
        }
        Ok(EvalResult::Skip { reason }) => {
            let status = if spec.tier == Tier::Experimental {
                CheckStatus::Experimental
            } else {
                CheckStatus::Skipped
            };
            (f64::NAN, f64::NAN, status, Some(reason))
        }
        Err(panic) => {
            let msg = panic
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| panic.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "evaluator panicked".to_string());
            (f64::NAN, f64::NAN, CheckStatus::Fail, Some(msg))
        }
    };

    let abs_residual = (lhs - rhs).abs();
    let rel_residual = abs_residual / lhs.abs().max(rhs.abs()).max(f64::MIN_POSITIVE);
    CheckOutcome {
        check_id: spec.id.to_string(),
        params,
        lhs,
        rhs,
        abs_residual,
        rel_residual,
        status,
        wall_time_ms,
        message,
    }
}

/// Runs the matching checks and returns the report. Outcomes are ordered
/// by (catalog order, grid index) regardless of `jobs`.
pub fn run(checks: &[CheckSpec], config: &RunConfig) -> Result<Report> {
    if !(config.tol_scale >= 1.0) {
        return Err(Error::InvalidArgument(format!(
            "tol_scale must be >= 1, got {}",
            config.tol_scale
        )));
    }
    if config.jobs == 0 {
        return Err(Error::InvalidArgument("jobs must be >= 1".into()));
    }

    let selected: Vec<&CheckSpec> = checks
        .iter()
        .filter(|c| {
            config
                .filter
                .as_deref()
                .map_or(true, |f| glob_match(f, c.id))
        })
        .filter(|c| config.tiers.as_ref().map_or(true, |ts| ts.contains(&c.tier)))
        .collect();

    let tasks: Vec<(usize, usize)> = selected
        .iter()
        .enumerate()
        .flat_map(|(ci, c)| (0..c.grid.len()).map(move |pi| (ci, pi)))
        .collect();

    let results: Mutex<Vec<((usize, usize), CheckOutcome)>> =
        Mutex::new(Vec::with_capacity(tasks.len()));
    let cursor = AtomicUsize::new(0);
    let workers = config.jobs.min(tasks.len().max(1));

    std::thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| loop {
                let i = cursor.fetch_add(1, Ordering::Relaxed);
                if i >= tasks.len() {
                    break;
                }
                let (ci, pi) = tasks[i];
                let outcome = evaluate_point(selected[ci], pi, config.tol_scale);
                results.lock().unwrap().push(((ci, pi), outcome));
            });
        }
    });

    let mut collected = results.into_inner().unwrap();
    // deterministic order: (check_id, grid index), independent of jobs
    collected.sort_by(|((_, pa), oa), ((_, pb), ob)| {
        oa.check_id.cmp(&ob.check_id).then(pa.cmp(pb))
    });
    let outcomes = collected.into_iter().map(|(_, o)| o).collect();
    Ok(Report::new(config.tol_scale, outcomes))
}
