//! Bessel J of real order by the ascending series, with a stable downward
//! recurrence from a shifted order where the alternating series would
//! cancel badly (large x at small order).

use super::gamma::recip_gamma;
use crate::{Error, Result};

const MAX_TERMS: usize = 400;

/// J_nu(x) / x^nu, entire in the order; the reciprocal-gamma factor makes
/// negative orders (and the poles between them) well defined. Valid for
/// 0 < x <= 12 and any real order; this is the form the order-integrated
/// identities need.
pub fn bessel_j_over_xpow(nu: f64, x: f64) -> f64 {
    let x2 = 0.25 * x * x;
    let two_pow = (-nu * std::f64::consts::LN_2).exp(); // 2^{-nu}
    let mut pow_term = 1.0f64; // (-x^2/4)^k / k!
    let mut sum = 0.0f64;
    let mut comp = 0.0f64;
    let mut max_mag = 0.0f64;
    for k in 0..MAX_TERMS {
        let t = pow_term * recip_gamma(k as f64 + nu + 1.0) * two_pow;
        let y = t - comp;
        let s = sum + y;
        comp = (s - sum) - y;
        sum = s;
        let mag = t.abs();
        max_mag = max_mag.max(mag);
        if k as f64 + nu + 1.0 > 1.0 && k >= 4 && mag < 5e-17 * max_mag.max(1e-300) {
            break;
        }
        pow_term *= -x2 / (k as f64 + 1.0);
    }
    sum
}

/// Ascending series for nu > -1/2 with ratio-recurrence term generation:
/// a single gamma evaluation seeds the terms, so each term carries only
/// a few ulp of correlated error instead of fresh log-gamma noise.
fn j_series_pos(nu: f64, x: f64) -> f64 {
    debug_assert!(nu > -0.5);
    let x2 = 0.25 * x * x;
    let mut term = x.powf(nu) * (-nu * std::f64::consts::LN_2).exp() * recip_gamma(nu + 1.0);
    let mut sum = term;
    let mut comp = 0.0f64;
    for k in 1..MAX_TERMS {
        term *= -x2 / (k as f64 * (k as f64 + nu));
        let y = term - comp;
        let s = sum + y;
        comp = (s - sum) - y;
        sum = s;
        if term.abs() < 5e-17 * sum.abs().max(1e-300) && k >= 4 {
            break;
        }
    }
    sum
}

fn j_series(nu: f64, x: f64) -> f64 {
    if nu > -0.5 {
        j_series_pos(nu, x)
    } else {
        bessel_j_over_xpow(nu, x) * x.powf(nu)
    }
}

/// Bessel function of the first kind, real order.
///
/// Supported for 0 < x <= 12 and -5 <= nu <= 40 (the only regime the
/// verification checks need). Outside that range an explicit
/// unsupported-range error is returned.
pub fn bessel_j(nu: f64, x: f64) -> Result<f64> {
    if !(x > 0.0 && x <= 12.0) {
        return Err(Error::OutOfRange(format!(
            "bessel_j supports 0 < x <= 12, got x = {x}"
        )));
    }
    if !(-5.0..=40.0).contains(&nu) {
        return Err(Error::OutOfRange(format!(
            "bessel_j supports -5 <= nu <= 40, got nu = {nu}"
        )));
    }
    // Where x exceeds the order, the alternating series cancels away the
    // trailing digits. Evaluate at a shifted order past the turning point
    // (cancellation-free) and recur downward, the stable direction.
    let shift = if x > 3.0 && nu < 1.5 * x {
        (1.5 * x - nu).ceil() as i64
    } else {
        0
    };
    if shift == 0 {
        return Ok(j_series(nu, x));
    }
    let nu0 = nu + shift as f64;
    let mut j_up = j_series(nu0 + 1.0, x);
    let mut j_cur = j_series(nu0, x);
    let mut mu = nu0;
    for _ in 0..shift {
        let j_down = (2.0 * mu / x) * j_cur - j_up;
        j_up = j_cur;
        j_cur = j_down;
        mu -= 1.0;
    }
    Ok(j_cur)
}
