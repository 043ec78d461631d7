//! Series summation with a geometric tail bound, plus an accelerated
//! variant for alternating series.

use super::osc::aitken_accelerate;
use super::{Accumulator, IntegrandValue, QuadResult, Tolerance};
use crate::Complex64;

const MAX_TERMS: u64 = 20_000_000;
const WINDOW: usize = 3;

fn sum_series_generic<S: IntegrandValue>(
    term: impl Fn(u64) -> S,
    tol: Tolerance,
) -> QuadResult {
    let mut acc = Accumulator::<S>::new();
    // envelope of recent |term| magnitudes; plain ratios are unreliable when
    // an oscillating factor passes near one of its zeros
    let mut recent = [0.0f64; WINDOW];
    let mut older = [0.0f64; WINDOW];

    for n in 1..=MAX_TERMS {
        let t = term(n);
        acc.add(t);
        let mag = t.norm();
        let idx = ((n - 1) as usize) % WINDOW;
        older[idx] = recent[idx];
        recent[idx] = mag;

        if n >= 2 * WINDOW as u64 {
            let m_new = recent.iter().cloned().fold(0.0f64, f64::max);
            let m_old = older.iter().cloned().fold(0.0f64, f64::max);
            if m_old > 0.0 && m_new < m_old {
                let r = (m_new / m_old).powf(1.0 / WINDOW as f64).min(1.0 - 1e-12);
                // geometric extrapolation, widened to cover algebraic decay
                // |t_n| ~ n^{-p} where the ratio-based bound is not one
                let geo = r / (1.0 - r);
                let p = n as f64 * (1.0 - r);
                let alg = if p > 1.05 { n as f64 / (p - 1.0) } else { geo };
                let tail = 1.5 * m_new * geo.max(alg);
                if tail <= tol.bound(acc.value().norm()) {
                    return QuadResult {
                        value: acc.value().into_complex(),
                        error_estimate: tail,
                        evaluations: n as usize,
                        converged: true,
                    };
                }
            }
            if m_new == 0.0 && m_old == 0.0 {
                // the terms vanished identically
                return QuadResult {
                    value: acc.value().into_complex(),
                    error_estimate: 0.0,
                    evaluations: n as usize,
                    converged: true,
                };
            }
        }
    }

    QuadResult {
        value: acc.value().into_complex(),
        error_estimate: f64::INFINITY,
        evaluations: MAX_TERMS as usize,
        converged: false,
    }
}

/// Sums `term(1) + term(2) + ...` until a geometric bound on the tail meets
/// the tolerance. Non-decaying terms exhaust the budget and are reported
/// through `converged = false`.
pub fn sum_series(term: impl Fn(u64) -> f64, tol: Tolerance) -> QuadResult {
    sum_series_generic(term, tol)
}

/// Complex-term variant of [`sum_series`].
pub fn sum_series_complex(term: impl Fn(u64) -> Complex64, tol: Tolerance) -> QuadResult {
    sum_series_generic(term, tol)
}

/// Alternating-series summation accelerated by the iterated Aitken
/// transformation of the partial sums.
pub fn sum_series_alternating(term: impl Fn(u64) -> f64, tol: Tolerance) -> QuadResult {
    let mut partials = Vec::with_capacity(64);
    let mut sum = 0.0f64;
    let cap = 100_000u64;
    for n in 1..=cap {
        sum += term(n);
        partials.push(sum);
        if partials.len() >= 6 && partials.len() % 2 == 0 {
            let (acc, err) = aitken_accelerate(&partials);
            if err <= tol.bound(acc.abs()) {
                return QuadResult {
                    value: Complex64::new(acc, 0.0),
                    error_estimate: err,
                    evaluations: n as usize,
                    converged: true,
                };
            }
        }
    }
    let (acc, err) = aitken_accelerate(&partials);
    QuadResult {
        value: Complex64::new(acc, 0.0),
        error_estimate: err,
        evaluations: cap as usize,
        converged: false,
    }
}
