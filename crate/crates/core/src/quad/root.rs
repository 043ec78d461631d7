//! Bracketing root finder: bisection with a secant safeguard.

use super::Tolerance;
use crate::{Error, Result};

const MAX_ITER: usize = 200;

/// Finds a root of `f` in `[lo, hi]`. Requires a sign change (an endpoint
/// that is exactly zero is returned immediately). The returned abscissa
/// satisfies both a bracket-width bound and a residual bound consistent
/// with the local slope.
pub fn find_root(f: impl Fn(f64) -> f64, lo: f64, hi: f64, tol: Tolerance) -> Result<f64> {
    let mut a = lo;
    let mut b = hi;
    let mut fa = f(a);
    let mut fb = f(b);

    if fa == 0.0 {
        return Ok(a);
    }
    if fb == 0.0 {
        return Ok(b);
    }
    if fa.signum() == fb.signum() {
        return Err(Error::NoSignChange { lo, hi });
    }

    for _ in 0..MAX_ITER {
        // secant candidate, safeguarded into the bracket interior
        let secant = b - fb * (b - a) / (fb - fa);
        let mid = 0.5 * (a + b);
        let width = b - a;
        let x = if secant.is_finite() && secant > a + 0.01 * width && secant < b - 0.01 * width {
            secant
        } else {
            mid
        };
        let fx = f(x);
        if fx == 0.0 {
            return Ok(x);
        }
        if fx.signum() == fa.signum() {
            a = x;
            fa = fx;
        } else {
            b = x;
            fb = fx;
        }
        if (b - a).abs() <= tol.bound(mid.abs()) {
            // prefer the endpoint with the smaller residual
            return Ok(if fa.abs() <= fb.abs() { a } else { b });
        }
    }
    Err(Error::NoConvergence("find_root exceeded the iteration budget".into()))
}
