//! Question 783 and its generalization, Question 295, the phi(n) cosine
//! transform with its special values, the sine-transform functional
//! equation, and the Gauss-sum closed form.

use crate::quad::{find_root, integrate_finite, integrate_semi_infinite, Tolerance};
use crate::specfun::{cos_pi, sin_pi};
use crate::{Error, Result};
use std::f64::consts::PI;

fn quad_tol() -> Tolerance {
    Tolerance { abs_tol: 1e-13, rel_tol: 1e-12 }
}

/// Upper integration limit for the u-form of Question 783: the root of
/// u^{n-1}(u - 1) = 1, bracketed from [1, 1 + 2^{1/min(n,1)}] and grown
/// geometrically until the sign change appears.
fn q783_upper_limit(n: f64) -> Result<f64> {
    let h = |u: f64| (n - 1.0) * u.ln() + (u - 1.0).ln();
    let mut hi = 1.0 + 2.0f64.powf(1.0 / n.min(1.0));
    for _ in 0..200 {
        if h(hi) > 0.0 {
            break;
        }
        hi = 1.0 + (hi - 1.0) * 2.0;
    }
    find_root(|u| h(u), 1.0 + 1e-12, hi, Tolerance { abs_tol: 1e-14, rel_tol: 1e-14 })
}

/// phi(n) of Question 783: with v = u^n - u^{n-1}, the integral of
/// (log u / v) dv over v in (0, 1], taken in the u variable where it is
/// single-valued. The integrand log(u) (nu - n + 1)/(u(u-1)) has the
/// removable value 1 at u = 1.
pub fn q783_phi(n: f64) -> Result<f64> {
    if n < 0.0 {
        return Err(Error::OutOfRange(format!("q783_phi requires n >= 0, got {n}")));
    }
    if n == 0.0 {
        // v = (u-1)/u on u in [1, oo); substitute s = u - 1
        let r = integrate_semi_infinite(
            |s| {
                if s == 0.0 {
                    1.0
                } else {
                    f64::ln_1p(s) / (s * (1.0 + s))
                }
            },
            0.0,
            quad_tol(),
        );
        if !r.converged {
            return Err(Error::NoConvergence("q783_phi(0) quadrature".into()));
        }
        return Ok(r.real());
    }
    let upper = q783_upper_limit(n)?;
    let integrand = move |u: f64| {
        let d = u - 1.0;
        if d == 0.0 {
            return 1.0;
        }
        // log(u) (n u - n + 1) / (u (u - 1)), written through ln_1p for
        // stability against the removable point
        f64::ln_1p(d) / d * (n * d + 1.0) / u
    };
    let r = integrate_finite(integrand, 1.0, upper, quad_tol());
    if !r.converged {
        return Err(Error::NoConvergence("q783_phi quadrature".into()));
    }
    Ok(r.real())
}

/// Functional-equation residual phi(n) + phi(1/n) - pi^2/6 for n > 0.
pub fn q783_functional_residual(n: f64) -> Result<f64> {
    if n <= 0.0 {
        return Err(Error::OutOfRange("functional equation requires n > 0".into()));
    }
    Ok(q783_phi(n)? + q783_phi(1.0 / n)? - PI * PI / 6.0)
}

/// The monotone-function generalization of Question 783: for a strictly
/// increasing differentiable g with g(0) = 1 and g(oo) = oo, and
/// v(t) = g^n(t)/g(1/t), computes the integral of log g(t) d(log v) over
/// the t-range where v runs from 0 to 1.
///
/// Convergence of the defining integral is a hypothesis on g, not
/// something this routine can verify; only the curated g in the catalog
/// are certified.
pub fn berndt_evans_phi(
    g: impl Fn(f64) -> f64,
    dg: impl Fn(f64) -> f64,
    n: f64,
) -> Result<f64> {
    if n <= 0.0 {
        return Err(Error::OutOfRange("berndt_evans_phi requires n > 0".into()));
    }
    // monotonicity spot checks: g itself and the induced v(t) = g^n(t)/g(1/t)
    let mut prev = g(1e-3);
    for &t in &[0.1, 0.5, 1.0, 3.0, 20.0] {
        let cur = g(t);
        if cur <= prev {
            return Err(Error::InvalidArgument("g is not strictly increasing".into()));
        }
        prev = cur;
    }
    let v = |t: f64| n * g(t).ln() - g(1.0 / t).ln(); // log v
    let mut prev_v = v(1e-3);
    for &t in &[0.01, 0.1, 0.5, 1.0, 3.0, 20.0] {
        let cur = v(t);
        if cur <= prev_v {
            return Err(Error::InvalidArgument("v(t) is not monotone on the sample grid".into()));
        }
        prev_v = cur;
    }

    // v = 1 at the t solving n log g(t) = log g(1/t); v is increasing, so
    // bracket around t = 1 and grow geometrically
    let h = |t: f64| n * g(t).ln() - g(1.0 / t).ln();
    let (mut lo, mut hi) = (1.0f64, 1.0f64);
    for _ in 0..200 {
        if h(lo) < 0.0 {
            break;
        }
        lo *= 0.5;
    }
    for _ in 0..200 {
        if h(hi) > 0.0 {
            break;
        }
        hi *= 2.0;
    }
    let t_star = find_root(h, lo, hi, Tolerance { abs_tol: 1e-14, rel_tol: 1e-14 })?;

    let integrand = move |t: f64| {
        let gt = g(t);
        let dlogv = n * dg(t) / gt + dg(1.0 / t) / (t * t * g(1.0 / t));
        gt.ln() * dlogv
    };
    // the t -> 0 endpoint behavior is integrable for admissible g; the
    // double-exponential rule absorbs it
    let r = crate::quad::integrate_singular(integrand, 0.0, t_star, quad_tol());
    if !r.converged {
        return Err(Error::NoConvergence("berndt_evans_phi quadrature".into()));
    }
    Ok(r.real())
}

/// One side of Question 295: sqrt(alpha) times the integral of
/// e^{-x^2}/cosh(alpha x) over [0, oo). Reciprocity swaps alpha with
/// beta = pi/alpha.
pub fn q295_side(alpha: f64) -> Result<f64> {
    if alpha <= 0.0 {
        return Err(Error::OutOfRange("q295_side requires alpha > 0".into()));
    }
    let r = integrate_semi_infinite(
        move |x| (-x * x).exp() / (alpha * x).cosh(),
        0.0,
        Tolerance { abs_tol: 1e-14, rel_tol: 1e-13 },
    );
    if !r.converged {
        return Err(Error::NoConvergence("q295 quadrature".into()));
    }
    Ok(alpha.sqrt() * r.real())
}

/// Truncation point for the y-substituted kernel: e^{-2 pi y}(1 + n y^2)
/// below 1e-18.
fn ram_phi_cutoff(n: f64) -> f64 {
    let mut y = 7.0;
    while (-2.0 * PI * y).exp() * (1.0 + n.abs() * y * y) > 1e-18 {
        y += 0.5;
    }
    y
}

/// phi(n): the cosine transform of 1/(e^{2 pi sqrt x} - 1), computed after
/// the substitution x = y^2 as 2 integral of y cos(n y^2)/(e^{2 pi y} - 1).
/// The y -> 0 limit of the kernel is 1/(2 pi).
pub fn ram_phi(n: f64) -> Result<f64> {
    if n < 0.0 {
        return Err(Error::OutOfRange(format!("ram_phi requires n >= 0, got {n}")));
    }
    let f = move |y: f64| {
        if y == 0.0 {
            return 1.0 / PI; // 2 * lim y/(e^{2 pi y} - 1) = 2/(2 pi)
        }
        2.0 * y * (n * y * y).cos() / f64::exp_m1(2.0 * PI * y)
    };
    let r = integrate_finite(f, 0.0, ram_phi_cutoff(n), Tolerance::abs(1e-12));
    if !r.converged {
        return Err(Error::NoConvergence("ram_phi quadrature".into()));
    }
    Ok(r.real())
}

/// Left side of the sine-transform functional equation, by the same
/// substitution.
pub fn ram_sine_lhs(n: f64) -> Result<f64> {
    if n <= 0.0 {
        return Err(Error::OutOfRange("ram_sine_lhs requires n > 0".into()));
    }
    let f = move |y: f64| {
        if y == 0.0 {
            return 0.0;
        }
        2.0 * y * (n * y * y).sin() / f64::exp_m1(2.0 * PI * y)
    };
    let r = integrate_finite(f, 0.0, ram_phi_cutoff(n), Tolerance::abs(1e-12));
    if !r.converged {
        return Err(Error::NoConvergence("ram_sine quadrature".into()));
    }
    Ok(r.real())
}

/// Residual of the sine-transform functional equation
/// LHS = phi(n) - 1/(2n) + phi(pi^2/n) sqrt(2 pi^3 / n^3).
pub fn ram_sine_residual(n: f64) -> Result<f64> {
    let lhs = ram_sine_lhs(n)?;
    let rhs = ram_phi(n)? - 1.0 / (2.0 * n)
        + ram_phi(PI * PI / n)? * (2.0 * PI.powi(3) / n.powi(3)).sqrt();
    Ok(lhs - rhs)
}

/// Odd positive pair (a, b) for the Gauss-sum closed form of phi(pi a/b).
#[derive(Debug, Clone, Copy)]
pub struct GaussSumParams {
    a: u64,
    b: u64,
}

impl GaussSumParams {
    pub fn new(a: u64, b: u64) -> Result<Self> {
        if a % 2 == 0 || b % 2 == 0 || a == 0 || b == 0 {
            return Err(Error::InvalidArgument(format!(
                "Gauss-sum parameters must be odd positive, got ({a}, {b})"
            )));
        }
        Ok(Self { a, b })
    }

    pub fn a(&self) -> u64 {
        self.a
    }

    pub fn b(&self) -> u64 {
        self.b
    }
}

/// Finite Gauss-sum evaluation of phi(pi a/b):
/// (1/4) sum_{r=1}^{b} (b-2r) cos(r^2 pi a/b)
///   - (b/4a) sqrt(b/a) sum_{r=1}^{a} (a-2r) sin(pi/4 + r^2 pi b/a).
/// Trigonometric arguments are reduced modulo 2 in exact integer
/// arithmetic before the pi-scaled evaluation.
pub fn ram_phi_gauss(p: GaussSumParams) -> f64 {
    let (a, b) = (p.a, p.b);
    let mut s1 = 0.0f64;
    for r in 1..=b {
        let frac = ((r * r % (2 * b)) * a % (2 * b)) as f64 / b as f64;
        s1 += (b as f64 - 2.0 * r as f64) * cos_pi(frac);
    }
    let mut s2 = 0.0f64;
    for r in 1..=a {
        let frac = ((r * r % (2 * a)) * b % (2 * a)) as f64 / a as f64;
        s2 += (a as f64 - 2.0 * r as f64) * sin_pi(0.25 + frac);
    }
    0.25 * s1 - (b as f64 / (4.0 * a as f64)) * (b as f64 / a as f64).sqrt() * s2
}
