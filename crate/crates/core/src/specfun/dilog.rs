//! Dilogarithm Li2(x) = -integral of log(1-w)/w from 0 to x, for x <= 1.

use crate::{Error, Result};
use std::f64::consts::PI;

fn li2_series(x: f64) -> f64 {
    // |x| <= 1/2: sum x^n / n^2
    let mut sum = 0.0;
    let mut p = x;
    let mut n = 1u32;
    loop {
        let t = p / (n as f64 * n as f64);
        sum += t;
        if t.abs() < 1e-17 * sum.abs().max(1e-300) || n > 200 {
            break;
        }
        p *= x;
        n += 1;
    }
    sum
}

/// Dilogarithm for real x <= 1. Series on |x| <= 1/2; the Euler reflection
/// Li2(x) + Li2(1-x) = pi^2/6 - ln x ln(1-x) on (1/2, 1]; the Landen
/// transform Li2(x) = -Li2(x/(x-1)) - ln^2(1-x)/2 below -1/2.
pub fn li2(x: f64) -> Result<f64> {
    if x > 1.0 {
        return Err(Error::OutOfRange(format!("li2 requires x <= 1, got {x}")));
    }
    if x == 1.0 {
        return Ok(PI * PI / 6.0);
    }
    if x == 0.0 {
        return Ok(0.0);
    }
    if x > 0.5 {
        let y = 1.0 - x;
        return Ok(PI * PI / 6.0 - x.ln() * y.ln() - li2(y)?);
    }
    if x < -0.5 {
        let y = x / (x - 1.0); // in (0, 1) for x < 0
        return Ok(-li2(y)? - 0.5 * (1.0 - x).ln().powi(2));
    }
    Ok(li2_series(x))
}
