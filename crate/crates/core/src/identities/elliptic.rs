//! Elliptic-integral entries: the addition theorem under the displayed
//! cotangent condition, the arccos and double-integral entries, the
//! first-notebook degree-3 transformation, and the quartic / lemniscate
//! inversion formulas with the arc-doubling substitution.

use crate::quad::{find_root, integrate_finite, integrate_singular_offsets, sum_series,
                  Tolerance};
use crate::specfun::{elliptic_f, elliptic_f_extended, elliptic_k};
use crate::{Error, Result};
use std::f64::consts::{FRAC_PI_2, PI};
use std::sync::OnceLock;

/// Which power of x sits under the radical in the addition-theorem
/// condition. The displayed condition reads sqrt(1 - x sin^2 gamma); the
/// equivalent Jacobian-function relation suggests x^2. Both readings are
/// computable and the catalog records which one verifies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RadicalVariant {
    /// sqrt(1 - x sin^2 gamma), as displayed
    X,
    /// sqrt(1 - x^2 sin^2 gamma), the dn-function reading
    XSquared,
}

/// Addition-theorem residual u + v - w.
pub fn addition_check(alpha: f64, beta: f64, x: f64, variant: RadicalVariant) -> Result<f64> {
    let (uv, w) = addition_sides(alpha, beta, x, variant)?;
    Ok(uv - w)
}

/// The two sides (u + v, w) of the addition theorem, where u, v, w are
/// incomplete integrals with parameter m = x^2 at amplitudes alpha, beta
/// and the gamma solving the cotangent condition under the selected
/// radical.
pub fn addition_sides(
    alpha: f64,
    beta: f64,
    x: f64,
    variant: RadicalVariant,
) -> Result<(f64, f64)> {
    if !(alpha > 0.0 && alpha < FRAC_PI_2 && beta > 0.0 && beta < FRAC_PI_2) {
        return Err(Error::OutOfRange("addition_check requires alpha, beta in (0, pi/2)".into()));
    }
    if !(x > 0.0 && x < 1.0) {
        return Err(Error::OutOfRange("addition_check requires 0 < x < 1".into()));
    }
    let m = x * x;
    let xr = match variant {
        RadicalVariant::X => x,
        RadicalVariant::XSquared => x * x,
    };
    // condition cleared of denominators:
    // cos a cos b - cos g - sin a sin b sqrt(1 - xr sin^2 g) = 0
    let h = move |g: f64| {
        alpha.cos() * beta.cos() - g.cos()
            - alpha.sin() * beta.sin() * (1.0 - xr * g.sin().powi(2)).sqrt()
    };
    if h(1e-9).signum() == h(PI - 1e-9).signum() {
        return Err(Error::Infeasible(format!(
            "no root of the addition condition in (0, pi) at alpha={alpha}, beta={beta}, x={x}"
        )));
    }
    let gamma = find_root(h, 1e-9, PI - 1e-9, Tolerance { abs_tol: 1e-15, rel_tol: 1e-15 })?;
    let u = elliptic_f(alpha, m)?;
    let v = elliptic_f(beta, m)?;
    let w = elliptic_f_extended(gamma, m)?;
    Ok((u + v, w))
}

/// Residual of the arccos entry.
pub fn entry_arccos_residual(x: f64) -> Result<f64> {
    let (l, r) = entry_arccos_sides(x)?;
    Ok(l - r)
}

/// Both sides of the arccos entry:
/// (pi/2) integral of (1 + x sin phi)^{-1/2} against the integral of
/// arccos(x sin^2 phi)/sqrt(1 - x^2 sin^4 phi), both over [0, pi/2].
pub fn entry_arccos_sides(x: f64) -> Result<(f64, f64)> {
    if x.abs() >= 1.0 {
        return Err(Error::OutOfRange("entry requires |x| < 1".into()));
    }
    let tol = Tolerance::abs(5e-14);
    let lhs = integrate_finite(
        move |phi| 1.0 / (1.0 + x * phi.sin()).sqrt(),
        0.0,
        FRAC_PI_2,
        tol,
    );
    let rhs = integrate_finite(
        move |phi| {
            let s2 = phi.sin().powi(2);
            (x * s2).acos() / (1.0 - x * x * s2 * s2).sqrt()
        },
        0.0,
        FRAC_PI_2,
        tol,
    );
    if !lhs.converged || !rhs.converged {
        return Err(Error::NoConvergence("arccos entry quadrature".into()));
    }
    Ok((FRAC_PI_2 * lhs.real(), rhs.real()))
}

/// Both sides of the double-integral entry. The iterated integral (inner
/// theta, outer phi, inner tolerance ten times tighter) against the
/// half-difference of squared complete integrals at moduli (1 +- x)/2.
pub fn entry_double_integral_sides(x: f64) -> Result<(f64, f64)> {
    if x.abs() >= 1.0 {
        return Err(Error::OutOfRange("entry requires |x| < 1".into()));
    }
    let inner_tol = Tolerance::abs(1e-13);
    let outer = integrate_finite(
        move |phi: f64| {
            let sp = phi.sin();
            let k2 = x * x * sp * sp; // inner parameter m = x^2 sin^2 phi
            let inner = integrate_finite(
                move |theta: f64| 1.0 / (1.0 - k2 * theta.sin().powi(2)).sqrt(),
                0.0,
                FRAC_PI_2,
                inner_tol,
            );
            x * sp * inner.real() / (1.0 - k2).sqrt()
        },
        0.0,
        FRAC_PI_2,
        Tolerance::abs(1e-12),
    );
    if !outer.converged {
        return Err(Error::NoConvergence("double-integral entry quadrature".into()));
    }
    let kp = elliptic_k(0.5 * (1.0 + x))?;
    let km = elliptic_k(0.5 * (1.0 - x))?;
    Ok((outer.real(), 0.5 * (kp * kp - km * km)))
}

/// Residual of the first-notebook transformation.
pub fn entry_page172_residual(x: f64, alpha: f64) -> Result<f64> {
    let (l, r) = entry_page172_sides(x, alpha)?;
    Ok(l - r)
}

/// Both sides of the first-notebook transformation: with
/// R = ((1+sin a)/(1-sin a)) ((1+x sin a)/(1-x sin a))^2 and
/// beta = arcsin((R-1)/(R+1)),
/// (1+2x) F(alpha, x^3 (2+x)/(1+2x)) against F(beta, x ((2+x)/(1+2x))^3).
pub fn entry_page172_sides(x: f64, alpha: f64) -> Result<(f64, f64)> {
    if !(x > 0.0 && x < 1.0) {
        return Err(Error::OutOfRange("transformation requires 0 < x < 1".into()));
    }
    if !(alpha > 0.0 && alpha <= FRAC_PI_2) {
        return Err(Error::OutOfRange("transformation requires 0 < alpha <= pi/2".into()));
    }
    let sa = alpha.sin();
    let r = (1.0 + sa) / (1.0 - sa) * ((1.0 + x * sa) / (1.0 - x * sa)).powi(2);
    let sin_beta = if r.is_infinite() { 1.0 } else { (r - 1.0) / (r + 1.0) };
    if !(0.0..=1.0).contains(&sin_beta) {
        return Err(Error::OutOfRange("beta out of range".into()));
    }
    let beta = sin_beta.asin();
    let ratio = (2.0 + x) / (1.0 + 2.0 * x);
    let m1 = x.powi(3) * ratio;
    let m2 = x * ratio.powi(3);
    Ok(((1.0 + 2.0 * x) * elliptic_f(alpha, m1)?, elliptic_f(beta, m2)?))
}

/// G(v): integral of (1 + t^4)^{-1/2} from 0 to v.
pub fn quartic_g(v: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&v) {
        return Err(Error::OutOfRange("quartic_g requires v in [0, 1]".into()));
    }
    if v == 0.0 {
        return Ok(0.0);
    }
    let r = integrate_finite(
        |t| 1.0 / (1.0 + t * t * t * t).sqrt(),
        0.0,
        v,
        Tolerance { abs_tol: 1e-13, rel_tol: 1e-13 },
    );
    if !r.converged {
        return Err(Error::NoConvergence("quartic_g quadrature".into()));
    }
    Ok(r.real())
}

fn quartic_mu() -> f64 {
    static MU: OnceLock<f64> = OnceLock::new();
    *MU.get_or_init(|| 4.0 * quartic_g(1.0).expect("G(1) converges") / PI)
}

/// F(v): the lemniscate integral of (1 - t^4)^{-1/2} from 0 to v, by
/// tanh-sinh quadrature with exact upper-endpoint offsets (the integrand
/// is singular at t = 1 when v = 1).
pub fn lemniscate_f_quad(v: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&v) {
        return Err(Error::OutOfRange("lemniscate integral requires v in [0, 1]".into()));
    }
    if v == 0.0 {
        return Ok(0.0);
    }
    let r = integrate_singular_offsets(
        |t, _, dv| {
            // 1 - t^4 = (v-t)(...) only at v = 1 does the root touch the
            // endpoint; write (1-t)(1+t)(1+t^2) with 1-t from the offset
            let one_minus_t = if v == 1.0 { dv } else { 1.0 - t };
            1.0 / (one_minus_t * (1.0 + t) * (1.0 + t * t)).sqrt()
        },
        0.0,
        v,
        Tolerance { abs_tol: 1e-13, rel_tol: 1e-13 },
    );
    if !r.converged {
        return Err(Error::NoConvergence("lemniscate quadrature".into()));
    }
    Ok(r.real())
}

/// The binomial-series route to F(v): sum (1/2)_n v^{4n+1} / (n! (4n+1)).
pub fn lemniscate_f_series(v: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&v) {
        return Err(Error::OutOfRange("lemniscate series requires v in [0, 1]".into()));
    }
    if v >= 0.999 {
        return Err(Error::OutOfRange(
            "lemniscate series converges too slowly above v = 0.999".into(),
        ));
    }
    let v4 = v.powi(4);
    let mut poch_over_fact = 1.0f64; // (1/2)_n / n!
    let mut v_pow = v;
    let mut sum = 0.0f64;
    for n in 0..100_000u64 {
        let term = poch_over_fact * v_pow / (4.0 * n as f64 + 1.0);
        sum += term;
        if term.abs() < 1e-17 * sum.abs() {
            break;
        }
        poch_over_fact *= (n as f64 + 0.5) / (n as f64 + 1.0);
        v_pow *= v4;
    }
    Ok(sum)
}

/// Lemniscate integral F(v); quadrature route, cross-checked against the
/// series in the test suite.
pub fn lemniscate_f(v: f64) -> Result<f64> {
    lemniscate_f_quad(v)
}

fn lemniscate_mu() -> f64 {
    static MU: OnceLock<f64> = OnceLock::new();
    *MU.get_or_init(|| 2.0 * 2.0f64.sqrt() * lemniscate_f_quad(1.0).expect("F(1) converges") / PI)
}

/// Inversion state of either normalized integral: theta mu / 2 = G(v) for
/// the quartic case, theta mu / sqrt 2 = F(v) for the lemniscate case.
#[derive(Debug, Clone, Copy)]
pub struct InversionState {
    pub v: f64,
    pub theta: f64,
    pub mu: f64,
}

/// theta from v in the quartic normalization.
pub fn quartic_state(v: f64) -> Result<InversionState> {
    let mu = quartic_mu();
    Ok(InversionState { v, theta: 2.0 * quartic_g(v)? / mu, mu })
}

/// theta from v in the lemniscate normalization.
pub fn lemniscate_state(v: f64) -> Result<InversionState> {
    let mu = lemniscate_mu();
    Ok(InversionState { v, theta: 2.0f64.sqrt() * lemniscate_f_quad(v)? / mu, mu })
}

/// Residual of the quartic inversion formula.
pub fn quartic_inversion_residual(v: f64) -> Result<f64> {
    let (l, r) = quartic_inversion_sides(v)?;
    Ok(l - r)
}

/// Both sides of the quartic inversion formula
/// 2 arctan v = theta + sum sin(2 n theta)/(n cosh(n pi)).
pub fn quartic_inversion_sides(v: f64) -> Result<(f64, f64)> {
    if !(v > 0.0 && v <= 1.0) {
        return Err(Error::OutOfRange("quartic inversion requires v in (0, 1]".into()));
    }
    let st = quartic_state(v)?;
    let theta = st.theta;
    let series = sum_series(
        move |n| (2.0 * n as f64 * theta).sin() / (n as f64 * (n as f64 * PI).cosh()),
        Tolerance::abs(1e-15),
    );
    if !series.converged {
        return Err(Error::NoConvergence("quartic inversion series".into()));
    }
    Ok((2.0 * v.atan(), theta + series.real()))
}

/// Left side of the lemniscate inversion formula:
/// log v + pi/6 - (log 2)/2 + sum (1/4)_n v^{4n} / ((3/4)_n 4n).
///
/// The series converges geometrically for v below 0.97. Near and at v = 1
/// its terms decay only like n^{-3/2}, so it is evaluated through the
/// Euler-type integral obtained by writing the Pochhammer ratio as a Beta
/// integral and summing the geometric series under the integral sign:
/// sum = -c * integral over (0,1) of t^{-3/4}(1-t)^{-1/2} ln(1 - v^4 t),
/// with c = Gamma(3/4)/(4 sqrt(pi) Gamma(1/4)).
pub fn lemniscate_inversion_lhs(v: f64) -> Result<f64> {
    if !(v > 0.0 && v <= 1.0) {
        return Err(Error::OutOfRange("lemniscate inversion requires v in (0, 1]".into()));
    }
    let head = v.ln() + PI / 6.0 - 0.5 * 2.0f64.ln();
    let v4 = v.powi(4);
    let series = if v <= 0.97 {
        let mut ratio = 1.0f64; // (1/4)_n / (3/4)_n
        let mut v_pow = 1.0f64;
        let mut sum = 0.0f64;
        for n in 1..100_000u64 {
            ratio *= (n as f64 - 0.75) / (n as f64 - 0.25);
            v_pow *= v4;
            let term = ratio * v_pow / (4.0 * n as f64);
            sum += term;
            if term.abs() < 1e-17 * sum.abs().max(1e-300) {
                break;
            }
        }
        sum
    } else {
        let g34 = crate::specfun::gamma_real(0.75)?;
        let g14 = crate::specfun::gamma_real(0.25)?;
        let c = g34 / (4.0 * PI.sqrt() * g14);
        let r = integrate_singular_offsets(
            move |t, da, db| {
                let log_arg = if v4 == 1.0 { db.ln() } else { f64::ln_1p(-v4 * t) };
                da.powf(-0.75) / db.sqrt() * log_arg
            },
            0.0,
            1.0,
            Tolerance::abs(1e-13),
        );
        if !r.converged {
            return Err(Error::NoConvergence("lemniscate inversion integral".into()));
        }
        -c * r.real()
    };
    Ok(head + series)
}

/// Right side of the lemniscate inversion formula:
/// log sin theta + theta^2/(2 pi) - 2 sum cos(2 n theta)/(n (e^{2 pi n}-1)).
pub fn lemniscate_inversion_rhs(v: f64) -> Result<f64> {
    let st = lemniscate_state(v)?;
    let theta = st.theta;
    let series = sum_series(
        move |n| {
            let nf = n as f64;
            (2.0 * nf * theta).cos() / (nf * f64::exp_m1(2.0 * PI * nf))
        },
        Tolerance::abs(1e-16),
    );
    if !series.converged {
        return Err(Error::NoConvergence("lemniscate inversion series".into()));
    }
    Ok(theta.sin().ln() + theta * theta / (2.0 * PI) - 2.0 * series.real())
}

/// Residual of the lemniscate inversion formula.
pub fn lemniscate_inversion_residual(v: f64) -> Result<f64> {
    Ok(lemniscate_inversion_lhs(v)? - lemniscate_inversion_rhs(v)?)
}

/// Residual of the arc-doubling substitution.
pub fn lemniscate_doubling_residual(x: f64) -> Result<f64> {
    let (l, r) = lemniscate_doubling_sides(x)?;
    Ok(l - r)
}

/// Both sides of the arc-doubling substitution
/// F(sqrt2 x / sqrt(1+x^4)) against sqrt2 G(x).
pub fn lemniscate_doubling_sides(x: f64) -> Result<(f64, f64)> {
    if !(x > 0.0 && x <= 1.0) {
        return Err(Error::OutOfRange("doubling substitution requires x in (0, 1]".into()));
    }
    let v = 2.0f64.sqrt() * x / (1.0 + x.powi(4)).sqrt();
    Ok((lemniscate_f_quad(v)?, 2.0f64.sqrt() * quartic_g(x)?))
}
