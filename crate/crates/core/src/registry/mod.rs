//! The identity catalog, the (optionally concurrent) check runner, and
//! report emission.

mod catalog;
mod emit;
mod globmatch;
mod runner;

pub use catalog::catalog;
pub use emit::{to_json, to_markdown};
pub use globmatch::glob_match;
pub use runner::{run, RunConfig};

use crate::quad::Tolerance;

/// Verification strictness class.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Tier {
    Strict,
    Standard,
    Loose,
    Experimental,
}

impl Tier {
    /// Default residual tolerance of the tier (relative with an absolute
    /// floor); individual checks may pin tighter bounds.
    pub fn default_tolerance(self) -> Tolerance {
        match self {
            Tier::Strict => Tolerance { abs_tol: 1e-12, rel_tol: 1e-8 },
            Tier::Standard => Tolerance { abs_tol: 1e-12, rel_tol: 1e-6 },
            Tier::Loose => Tolerance { abs_tol: 1e-12, rel_tol: 1e-4 },
            Tier::Experimental => Tolerance { abs_tol: f64::INFINITY, rel_tol: f64::INFINITY },
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Tier::Strict => "strict",
            Tier::Standard => "standard",
            Tier::Loose => "loose",
            Tier::Experimental => "experimental",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "strict" => Some(Tier::Strict),
            "standard" => Some(Tier::Standard),
            "loose" => Some(Tier::Loose),
            "experimental" => Some(Tier::Experimental),
            _ => None,
        }
    }
}

/// One named parameter point of a check grid.
#[derive(Debug, Clone)]
pub struct GridPoint {
    pub params: Vec<(&'static str, f64)>,
}

impl GridPoint {
    pub fn new(params: &[(&'static str, f64)]) -> Self {
        Self { params: params.to_vec() }
    }

    pub fn get(&self, name: &str) -> f64 {
        self.params
            .iter()
            .find(|(n, _)| *n == name)
            .map(|(_, v)| *v)
            .unwrap_or_else(|| panic!("grid point missing parameter {name}"))
    }
}

/// Evaluation of one grid point: both side values, or a skip with reason.
pub enum EvalResult {
    Pair { lhs: f64, rhs: f64 },
    Skip { reason: String },
}

impl EvalResult {
    pub fn pair(lhs: f64, rhs: f64) -> Self {
        EvalResult::Pair { lhs, rhs }
    }
}

impl From<crate::Result<(f64, f64)>> for EvalResult {
    fn from(r: crate::Result<(f64, f64)>) -> Self {
        match r {
            Ok((lhs, rhs)) => EvalResult::Pair { lhs, rhs },
            Err(e) => EvalResult::Skip { reason: e.to_string() },
        }
    }
}

type Evaluator = Box<dyn Fn(&GridPoint) -> EvalResult + Send + Sync>;

/// One registered identity: id, source anchor, tier, parameter grid,
/// side evaluators and tolerance.
pub struct CheckSpec {
    pub id: &'static str,
    /// Source section the identity belongs to (2..7; 0 for plumbing
    /// self-tests).
    pub section: u8,
    /// Formula-level anchor locating the identity in the catalog document;
    /// empty only for plumbing self-tests.
    pub anchor: &'static str,
    pub tier: Tier,
    pub tolerance: Tolerance,
    pub grid: Vec<GridPoint>,
    pub eval: Evaluator,
}

impl CheckSpec {
    pub fn new(
        id: &'static str,
        section: u8,
        anchor: &'static str,
        tier: Tier,
        tolerance: Tolerance,
        grid: Vec<GridPoint>,
        eval: impl Fn(&GridPoint) -> EvalResult + Send + Sync + 'static,
    ) -> Self {
        Self { id, section, anchor, tier, tolerance, grid, eval: Box::new(eval) }
    }
}
