//! Oscillatory integrals: panel sums between caller-supplied zeros of the
//! oscillating factor, accelerated by the iterated Aitken transformation
//! with a reciprocal-abscissa Richardson fallback.
//!
//! Aitken is sharp when the panel sums alternate. When the trigonometric
//! envelope carries a constant-frequency component (products of several
//! trig factors do), the panel sums pick up a monotone algebraic part on
//! which Aitken reports misleadingly small changes; partial sums are then
//! smooth in 1/X and polynomial extrapolation in the reciprocal cutoff is
//! both accurate and honest. The two accelerators cross-validate each
//! other and the engine keeps whichever survives.

use super::gk::gk_adaptive;
use super::{QuadResult, Tolerance};
use crate::Complex64;

const MAX_PANELS: usize = 512;

/// Iterated Aitken delta-squared acceleration of a partial-sum sequence.
/// Returns (best value, change between the last two sweeps).
pub(crate) fn aitken_accelerate(s: &[f64]) -> (f64, f64) {
    let mut v = s.to_vec();
    let mut best = *v.last().unwrap();
    let mut prev_best = best;
    while v.len() >= 3 {
        let mut w = Vec::with_capacity(v.len() - 2);
        for i in 0..v.len() - 2 {
            let d1 = v[i + 1] - v[i];
            let d2 = v[i + 2] - v[i + 1];
            let den = d2 - d1;
            // a tiny denominator means the tail is already flat; keep the raw entry
            let scale = v[i + 2].abs().max(v[i].abs()).max(1e-300);
            let accel = v[i + 2] - d2 * d2 / den;
            if den.abs() <= 8.0 * f64::EPSILON * scale || !accel.is_finite() {
                w.push(v[i + 2]);
            } else {
                w.push(accel);
            }
        }
        prev_best = best;
        best = *w.last().unwrap();
        v = w;
    }
    (best, (best - prev_best).abs())
}

/// Polynomial extrapolation of partial sums to infinite cutoff: Neville's
/// algorithm in t = 1/X evaluated at t = 0, over the last few points.
pub(crate) fn neville_reciprocal(cutoffs: &[f64], sums: &[f64]) -> (f64, f64) {
    let m = cutoffs.len().min(9);
    let n0 = cutoffs.len() - m;
    let t: Vec<f64> = cutoffs[n0..].iter().map(|&x| 1.0 / x).collect();
    let mut tab: Vec<f64> = sums[n0..].to_vec();
    let mut best = *tab.last().unwrap();
    let mut err = f64::INFINITY;
    for j in 1..m {
        for i in 0..m - j {
            tab[i] = (t[i] * tab[i + 1] - t[i + j] * tab[i]) / (t[i] - t[i + j]);
        }
        let prev = best;
        best = tab[0];
        err = (best - prev).abs();
    }
    (best, err)
}

/// Best accelerated estimate from the two transforms. Aitken is kept only
/// while the Richardson value corroborates it within the combined claimed
/// errors; a small Aitken claim contradicted by a confident Richardson
/// value is the monotone-mixture failure mode and the Richardson estimate
/// wins.
fn accelerate(cutoffs: &[f64], sums: &[f64]) -> (f64, f64) {
    let (a_val, a_err) = aitken_accelerate(sums);
    if sums.len() < 8 {
        return (a_val, a_err);
    }
    let (n_val, n_err) = neville_reciprocal(cutoffs, sums);
    if !n_val.is_finite() {
        return (a_val, a_err);
    }
    let disagreement = (a_val - n_val).abs();
    let aitken_ok = disagreement <= 4.0 * (a_err + n_err);
    if aitken_ok && a_err <= n_err {
        (a_val, a_err)
    } else if aitken_ok {
        (n_val, n_err)
    } else {
        (n_val, n_err.max(f64::EPSILON * n_val.abs()))
    }
}

/// Integrates an oscillatory integrand over `[z_0, sup zeros)` where the
/// iterator enumerates consecutive sign-change abscissae of the oscillating
/// factor (the first element is the lower integration limit). Panel
/// integrals between consecutive zeros are summed and the partial sums are
/// accelerated; the reported error combines panel errors with the
/// acceleration residual.
pub fn integrate_oscillatory(
    f: impl Fn(f64) -> f64,
    zeros: impl IntoIterator<Item = f64>,
    tol: Tolerance,
) -> QuadResult {
    let mut zs = zeros.into_iter();
    let Some(mut lo) = zs.next() else {
        return QuadResult {
            value: Complex64::new(0.0, 0.0),
            error_estimate: f64::INFINITY,
            evaluations: 0,
            converged: false,
        };
    };

    let panel_tol = Tolerance {
        abs_tol: (tol.abs_tol / 16.0).max(1e-300),
        rel_tol: (tol.rel_tol / 16.0).clamp(1e-14, 1.0),
    };

    let mut cutoffs: Vec<f64> = Vec::new();
    let mut partial_sums: Vec<f64> = Vec::new();
    let mut sum = 0.0f64;
    let mut panel_err = 0.0f64;
    let mut evals = 0usize;
    let mut small_run = 0usize;
    let mut peak = 0.0f64;
    let mut truncated = false; // non-finite panel stopped the scan

    for hi in zs {
        if !(hi > lo) {
            return QuadResult {
                value: Complex64::new(sum, 0.0),
                error_estimate: f64::INFINITY,
                evaluations: evals,
                converged: false,
            };
        }
        let (v, e, n, _) = gk_adaptive(&f, lo, hi, panel_tol, 200);
        evals += n;
        if !v.is_finite() {
            // the integrand left the representable range; extrapolate from
            // the panels gathered so far
            truncated = true;
            break;
        }
        sum += v;
        panel_err += e;
        cutoffs.push(hi);
        partial_sums.push(sum);
        peak = peak.max(sum.abs());
        lo = hi;

        let bound = tol.bound(sum.abs().max(peak * 0.1));

        // damped case: consecutive negligible panels mean the direct sum is done
        if v.abs() <= 0.02 * bound + 4.0 * f64::EPSILON * peak {
            small_run += 1;
            if small_run >= 2 {
                return QuadResult {
                    value: Complex64::new(sum, 0.0),
                    error_estimate: panel_err + v.abs(),
                    evaluations: evals,
                    converged: true,
                };
            }
        } else {
            small_run = 0;
        }

        // accelerated case
        if partial_sums.len() >= 5 {
            let (acc, acc_err) = accelerate(&cutoffs, &partial_sums);
            let total_err = acc_err + panel_err;
            if total_err <= tol.bound(acc.abs()) {
                return QuadResult {
                    value: Complex64::new(acc, 0.0),
                    error_estimate: total_err,
                    evaluations: evals,
                    converged: true,
                };
            }
        }

        if partial_sums.len() >= MAX_PANELS {
            break;
        }
    }

    // zeros exhausted, scan truncated, or panel budget reached
    let _ = truncated;
    let (value, acc_err) = if partial_sums.len() >= 3 {
        accelerate(&cutoffs, &partial_sums)
    } else {
        (sum, f64::INFINITY)
    };
    let total_err = acc_err + panel_err;
    let converged = total_err <= tol.bound(value.abs());
    QuadResult {
        value: Complex64::new(value, 0.0),
        error_estimate: total_err,
        evaluations: evals,
        converged,
    }
}
