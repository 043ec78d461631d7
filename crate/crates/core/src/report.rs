//! Check outcomes and the serializable run report.

use serde::Serialize;
use std::collections::BTreeMap;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
    Experimental,
}

/// Result of one check at one grid point. `lhs`/`rhs` are the two computed
/// side values; failed evaluations carry NaN sides and a message.
#[derive(Debug, Clone, Serialize)]
pub struct CheckOutcome {
    pub check_id: String,
    pub params: BTreeMap<String, f64>,
    pub lhs: f64,
    pub rhs: f64,
    pub abs_residual: f64,
    pub rel_residual: f64,
    pub status: CheckStatus,
    pub wall_time_ms: f64,
    #[serde(skip)]
    pub message: Option<String>,
}

#[derive(Debug, Clone, Copy, Default, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
    pub experimental: usize,
}

/// Ordered collection of outcomes; ordering follows the catalog and grid,
/// independent of execution concurrency.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub tool_version: String,
    pub tol_scale: f64,
    pub summary: Summary,
    pub outcomes: Vec<CheckOutcome>,
}

impl Report {
    pub fn new(tol_scale: f64, outcomes: Vec<CheckOutcome>) -> Self {
        let mut summary = Summary::default();
        for o in &outcomes {
            match o.status {
                CheckStatus::Pass => summary.pass += 1,
                CheckStatus::Fail => summary.fail += 1,
                CheckStatus::Skipped => summary.skipped += 1,
                CheckStatus::Experimental => summary.experimental += 1,
            }
        }
        Self {
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            tol_scale,
            summary,
            outcomes,
        }
    }

    /// Exit classification: 0 when no non-experimental check failed,
    /// 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.summary.fail == 0 {
            0
        } else {
            1
        }
    }
}
