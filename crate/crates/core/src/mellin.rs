//! Ramanujan's Master Theorem, the q-beta integral, Frullani's theorem and
//! Ramanujan's generalized Frullani limit, each paired with a quadrature
//! cross-check.
//!
//! The Master Theorem hypotheses (growth conditions on the coefficient
//! function) are not validated here; only the curated coefficient functions
//! wired into the check catalog are certified.

use crate::qseries::{ln_qpoch_neg, qpochhammer_inf, Nome};
use crate::quad::{integrate_semi_infinite, integrate_singular, QuadResult, Tolerance};
use crate::specfun::{gamma_real, sin_pi};
use crate::{Error, Result};
use std::f64::consts::PI;

/// Both sides of one identity instance.
#[derive(Debug, Clone, Copy)]
pub struct SidePair {
    pub lhs: f64,
    pub rhs: f64,
}

impl SidePair {
    pub fn abs_residual(&self) -> f64 {
        (self.lhs - self.rhs).abs()
    }
}

/// Master Theorem value Gamma(n) phi(-n) for the Mellin transform of
/// F(x) = sum phi(k) (-x)^k / k!.
pub fn master_value(phi: impl Fn(f64) -> f64, n: f64) -> Result<f64> {
    if !(n > 0.0 && n < 1.0) {
        return Err(Error::OutOfRange(format!(
            "master_value is certified for 0 < n < 1, got {n}"
        )));
    }
    let v = phi(-n);
    if !v.is_finite() {
        return Err(Error::InvalidArgument("coefficient function pole at -n".into()));
    }
    Ok(gamma_real(n)? * v)
}

/// Integrates x^{n-1} F(x) over [0, oo) and pairs it with Gamma(n) phi(-n).
pub fn master_check(
    f: impl Fn(f64) -> f64,
    phi: impl Fn(f64) -> f64,
    n: f64,
    tol: Tolerance,
) -> Result<SidePair> {
    let rhs = master_value(phi, n)?;
    let lhs = mellin_transform(&f, n, tol)?;
    Ok(SidePair { lhs, rhs })
}

/// x^{n-1}-weighted transform split at 1: tanh-sinh absorbs the x^{n-1}
/// endpoint factor, exp-sinh the tail.
fn mellin_transform(f: &impl Fn(f64) -> f64, n: f64, tol: Tolerance) -> Result<f64> {
    let head = integrate_singular(|x| x.powf(n - 1.0) * f(x), 0.0, 1.0, tol.scaled(0.5));
    let tail = integrate_semi_infinite(|x| x.powf(n - 1.0) * f(x), 1.0, tol.scaled(0.5));
    if !head.converged || !tail.converged {
        return Err(Error::NoConvergence("mellin transform quadrature".into()));
    }
    Ok(head.real() + tail.real())
}

/// The q-beta identity: integral of t^{s-1} (-atq; q)/(−t; q) against
/// pi/sin(pi s) * (q^{1-s};q)(aq;q) / ((q;q)(aq^{1-s};q)).
pub fn q_beta_check(s: f64, a: f64, q: Nome, tol: Tolerance) -> Result<SidePair> {
    if !(s > 0.0 && s < 1.0) {
        return Err(Error::OutOfRange(format!("q_beta_check requires 0 < s < 1, got {s}")));
    }
    if a < 0.0 {
        return Err(Error::OutOfRange("q_beta_check requires a >= 0".into()));
    }
    let qv = q.get();
    // the product ratio decays superpolynomially in t; work in log space
    let integrand = move |t: f64| {
        if t == 0.0 {
            return 0.0;
        }
        let ln_ratio = ln_qpoch_neg(a * t * qv, qv) - ln_qpoch_neg(t, qv);
        ((s - 1.0) * t.ln() + ln_ratio).exp()
    };
    let head = integrate_singular(integrand, 0.0, 1.0, tol.scaled(0.5));
    let tail = integrate_semi_infinite(integrand, 1.0, tol.scaled(0.5));
    if !head.converged || !tail.converged {
        return Err(Error::NoConvergence("q-beta quadrature".into()));
    }
    let lhs = head.real() + tail.real();

    let q1s = qv.powf(1.0 - s);
    let rhs = PI / sin_pi(s) * qpochhammer_inf(q1s, q) * qpochhammer_inf(a * qv, q)
        / (qpochhammer_inf(qv, q) * qpochhammer_inf(a * q1s, q));
    Ok(SidePair { lhs, rhs })
}

/// Closed Frullani value {f(0) - f(oo)} log(b/a). When f has no limit at
/// infinity but f(x)/x is integrable, pass `f_inf = 0`.
pub fn frullani_value(f0: f64, f_inf: f64, a: f64, b: f64) -> f64 {
    (f0 - f_inf) * (b / a).ln()
}

/// Companion quadrature of the defining integral (f(ax) - f(bx))/x.
pub fn frullani_quadrature(f: impl Fn(f64) -> f64, a: f64, b: f64, tol: Tolerance) -> QuadResult {
    // the exp-sinh lattice never samples x = 0 itself; the difference
    // quotient is bounded there so the origin carries no mass
    integrate_semi_infinite(move |x| (f(a * x) - f(b * x)) / x, 0.0, tol)
}

/// The default extrapolation ladder. Four points extrapolate a cubic and
/// leave a few units of 1e-5 on the table; six reach comfortably below
/// 1e-6. The integrand x^{n-1}(f(ax) - g(bx)) stays bounded at the origin
/// (the leading coefficients cancel), so the small-n integrals are benign.
pub const FRULLANI_LADDER: [f64; 6] = [0.2, 0.1, 0.05, 0.025, 0.0125, 0.00625];

/// Richardson-extrapolated limit of integral of x^{n-1}(f(ax) - g(bx))
/// as n -> 0+, over the supplied descending n-ladder. The theorem requires
/// f(0) = g(0) and f(oo) = g(oo); both are asserted numerically, at the
/// origin and at a far sample point.
pub fn generalized_frullani_limit(
    f: impl Fn(f64) -> f64,
    g: impl Fn(f64) -> f64,
    a: f64,
    b: f64,
    ladder: &[f64],
    tol: Tolerance,
) -> Result<QuadResult> {
    if ladder.len() < 2 {
        return Err(Error::InvalidArgument("extrapolation ladder needs >= 2 points".into()));
    }
    let origin_scale = f(0.0).abs().max(g(0.0).abs()).max(1.0);
    if (f(0.0) - g(0.0)).abs() > 1e-12 * origin_scale {
        return Err(Error::InvalidArgument("generalized Frullani requires f(0) = g(0)".into()));
    }
    // equal limits at infinity: algebraically decaying tails are still
    // O(1/far) at the sample point, so the bound stays proportional to that
    let far = 1e8;
    if (f(far) - g(far)).abs() > 1e-6 * origin_scale {
        return Err(Error::InvalidArgument(
            "generalized Frullani requires f(oo) = g(oo)".into(),
        ));
    }
    let mut values = Vec::with_capacity(ladder.len());
    let mut evals = 0usize;
    for &n in ladder {
        if !(n > 0.0 && n < 0.5) {
            return Err(Error::OutOfRange("ladder points must lie in (0, 1/2)".into()));
        }
        let h = integrate_singular(
            |x| x.powf(n - 1.0) * (f(a * x) - g(b * x)),
            0.0,
            1.0,
            tol.scaled(0.25),
        );
        let t = integrate_semi_infinite(
            |x| x.powf(n - 1.0) * (f(a * x) - g(b * x)),
            1.0,
            tol.scaled(0.25),
        );
        evals += h.evaluations + t.evaluations;
        if !h.converged || !t.converged {
            return Err(Error::NoConvergence(format!("frullani ladder integral at n = {n}")));
        }
        values.push(h.real() + t.real());
    }

    // Neville extrapolation of I(n) to n = 0
    let mut tableau = values.clone();
    let mut prev_best = tableau[0];
    let mut best = *tableau.last().unwrap();
    let k = ladder.len();
    for j in 1..k {
        for i in 0..k - j {
            let x0 = ladder[i];
            let x1 = ladder[i + j];
            tableau[i] = (x0 * tableau[i + 1] - x1 * tableau[i]) / (x0 - x1);
        }
        prev_best = best;
        best = tableau[0];
    }
    let err = (best - prev_best).abs();
    Ok(QuadResult {
        value: crate::Complex64::new(best, 0.0),
        error_estimate: err,
        evaluations: evals,
        converged: err.is_finite(),
    })
}

/// Closed right side of the generalized Frullani theorem:
/// {f(0) - f(oo)} { log(b/a) + d/ds log(v(s)/u(s)) at 0 }.
pub fn generalized_frullani_rhs(f0: f64, f_inf: f64, a: f64, b: f64, dlog_ratio_at_0: f64) -> f64 {
    (f0 - f_inf) * ((b / a).ln() + dlog_ratio_at_0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quad::differentiate;
    use crate::specfun::{digamma, ln_gamma_real};

    const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

    fn tol() -> Tolerance {
        Tolerance { abs_tol: 1e-11, rel_tol: 1e-11 }
    }

    #[test]
    fn master_exponential() {
        // phi == 1, F = e^{-x}: Mellin transform is Gamma(n)
        let p = master_check(|x: f64| (-x).exp(), |_| 1.0, 0.5, tol()).unwrap();
        assert!((p.rhs - PI.sqrt()).abs() < 1e-13);
        assert!(p.abs_residual() < 1e-10);
    }

    #[test]
    fn master_beta_representation() {
        // phi(t) = Gamma(t+m+n')/Gamma(m+n') with F(x) = (1+x)^{-(m+n')}
        // yields B(m, n') = Gamma(m)Gamma(n')/Gamma(m+n');
        // at m = 1/3, n' = 2/3 this is pi/sin(pi/3) = 2 pi/sqrt 3
        let (m, np) = (1.0 / 3.0, 2.0 / 3.0);
        let phi = move |t: f64| (ln_gamma_real(t + m + np).unwrap()).exp() / gamma_real(m + np).unwrap();
        let f = move |x: f64| (1.0 + x).powf(-(m + np));
        let p = master_check(f, phi, m, tol()).unwrap();
        assert!((p.rhs - 2.0 * PI / 3.0f64.sqrt()).abs() < 1e-12);
        assert!(p.abs_residual() < 1e-9);
    }

    #[test]
    fn master_geometric() {
        // phi(k) = k!, F = 1/(1+x), n = 1/4: Gamma(1/4)Gamma(3/4) = pi sqrt 2
        let phi = |t: f64| gamma_real(t + 1.0).unwrap();
        let p = master_check(|x: f64| 1.0 / (1.0 + x), phi, 0.25, tol()).unwrap();
        assert!((p.rhs - PI * 2.0f64.sqrt()).abs() < 1e-12);
        assert!(p.abs_residual() < 1e-9);
    }

    #[test]
    fn q_beta_a_zero_specialization() {
        let q = Nome::new(0.2).unwrap();
        let p = q_beta_check(0.5, 0.0, q, tol()).unwrap();
        let expected = PI * qpochhammer_inf(0.2f64.sqrt(), q) / qpochhammer_inf(0.2, q);
        assert!((p.rhs - expected).abs() < 1e-13);
        assert!(p.abs_residual() < 1e-8, "residual {}", p.abs_residual());
    }

    #[test]
    fn q_beta_general_point() {
        let q = Nome::new(0.1).unwrap();
        let p = q_beta_check(1.0 / 3.0, 0.3, q, tol()).unwrap();
        assert!(p.abs_residual() < 1e-8, "residual {}", p.abs_residual());
    }

    #[test]
    fn frullani_classical() {
        let v = frullani_value(1.0, 0.0, 1.0, 2.0);
        assert!((v - 2.0f64.ln()).abs() < 1e-15);
        let q = frullani_quadrature(|x: f64| (-x).exp(), 1.0, 2.0, tol());
        assert!(q.converged);
        assert!((q.real() - v).abs() < 1e-9);
    }

    #[test]
    fn frullani_equal_scales_vanishes() {
        assert_eq!(frullani_value(1.0, 0.0, 1.5, 1.5), 0.0);
    }

    #[test]
    fn frullani_no_limit_convention() {
        // f = 1/(1+x): f(oo) replaced by 0; a=2, b=1 gives -log 2
        let v = frullani_value(1.0, 0.0, 2.0, 1.0);
        assert!((v + 2.0f64.ln()).abs() < 1e-15);
        let q = frullani_quadrature(|x: f64| 1.0 / (1.0 + x), 2.0, 1.0, tol());
        assert!(q.converged);
        assert!((q.real() - v).abs() < 1e-9);
    }

    #[test]
    fn generalized_frullani_reduces_to_classical() {
        let r = generalized_frullani_limit(
            |x: f64| (-x).exp(),
            |x: f64| (-x).exp(),
            1.0,
            3.0,
            &FRULLANI_LADDER,
            tol(),
        )
        .unwrap();
        assert!((r.real() - 3.0f64.ln()).abs() < 1e-6, "got {}", r.real());
    }

    #[test]
    fn generalized_frullani_digamma_case() {
        // f = e^{-x} (u == 1), g = 1/(1+x) (v(k) = k!), a = b = 1:
        // d/ds log Gamma(s+1) at 0 = -gamma
        let r = generalized_frullani_limit(
            |x: f64| (-x).exp(),
            |x: f64| 1.0 / (1.0 + x),
            1.0,
            1.0,
            &FRULLANI_LADDER,
            tol(),
        )
        .unwrap();
        assert!((r.real() + EULER_GAMMA).abs() < 1e-5, "got {}", r.real());

        // the same correction term from the two exposed routes
        let analytic = digamma(1.0).unwrap();
        let numeric = differentiate(|s| ln_gamma_real(s + 1.0).unwrap(), 0.0, 0.1);
        assert!((analytic + EULER_GAMMA).abs() < 1e-12);
        assert!((numeric.value + EULER_GAMMA).abs() < 1e-9);
        let rhs = generalized_frullani_rhs(1.0, 0.0, 1.0, 1.0, numeric.value);
        assert!((r.real() - rhs).abs() < 1e-5);
    }

    #[test]
    fn generalized_frullani_rejects_mismatched_boundaries() {
        // f(0) = 1 vs g(0) = 2
        let err = generalized_frullani_limit(
            |x: f64| (-x).exp(),
            |x: f64| 2.0 * (-x).exp(),
            1.0,
            1.0,
            &FRULLANI_LADDER,
            tol(),
        );
        assert!(err.is_err());
        // matching origin but different limits: f(oo) = 0 vs g(oo) = 0.3
        let err = generalized_frullani_limit(
            |x: f64| (-x).exp(),
            |x: f64| 0.7 / (1.0 + x) + 0.3,
            1.0,
            1.0,
            &FRULLANI_LADDER,
            tol(),
        );
        assert!(err.is_err());
    }

    #[test]
    fn generalized_frullani_additive_case() {
        let r = generalized_frullani_limit(
            |x: f64| (-x).exp(),
            |x: f64| 1.0 / (1.0 + x),
            1.0,
            2.0,
            &FRULLANI_LADDER,
            tol(),
        )
        .unwrap();
        assert!((r.real() - (2.0f64.ln() - EULER_GAMMA)).abs() < 1e-5);
    }
}
