//! Theta-kernel modular relations, the closed-form oscillatory
//! evaluations, the reciprocal-gamma quadruple integral, the
//! Bessel-product integral, and the Riemann Xi transform identities.

use crate::mellin::SidePair;
use crate::quad::{integrate_finite, integrate_oscillatory, integrate_semi_infinite,
                  integrate_semi_infinite_complex, integrate_singular, Tolerance};
use crate::specfun::{bessel_j_over_xpow, cos_pi, ln_gamma, recip_gamma, recip_gamma_ln, xi_big};
use crate::{Complex64, Error, Result};
use std::cell::RefCell;
use std::collections::HashMap;
use std::f64::consts::PI;

/// Gaussian-damped theta kernel phi_w(t): integral over [0, oo) of
/// cos(pi t x) e^{-pi w x^2} / cosh(pi x). Complex t is allowed while the
/// Gaussian still dominates (|Im t| <= 2w covers every catalogued use).
pub fn phi_w(t: Complex64, w: f64) -> Result<Complex64> {
    check_kernel_domain(t, w)?;
    let r = integrate_semi_infinite_complex(
        move |x| {
            if PI * w * x * x > 745.0 {
                // Gaussian underflow; the trig/cosh pair would overflow first
                return Complex64::new(0.0, 0.0);
            }
            let phase = Complex64::new(PI * x, 0.0) * t;
            phase.cos() * (-PI * w * x * x).exp() / (PI * x).cosh()
        },
        0.0,
        Tolerance { abs_tol: 1e-13, rel_tol: 1e-12 },
    );
    if !r.converged {
        return Err(Error::NoConvergence("phi_w quadrature".into()));
    }
    Ok(r.value)
}

/// Companion kernel psi_w(t) with the sinh denominator; the removable
/// x -> 0 value of sin(pi t x)/sinh(pi x) is t.
pub fn psi_w(t: Complex64, w: f64) -> Result<Complex64> {
    check_kernel_domain(t, w)?;
    let r = integrate_semi_infinite_complex(
        move |x| {
            if x == 0.0 {
                return t;
            }
            if PI * w * x * x > 745.0 {
                return Complex64::new(0.0, 0.0);
            }
            let phase = Complex64::new(PI * x, 0.0) * t;
            phase.sin() * (-PI * w * x * x).exp() / (PI * x).sinh()
        },
        0.0,
        Tolerance { abs_tol: 1e-13, rel_tol: 1e-12 },
    );
    if !r.converged {
        return Err(Error::NoConvergence("psi_w quadrature".into()));
    }
    Ok(r.value)
}

fn check_kernel_domain(t: Complex64, w: f64) -> Result<()> {
    if w <= 0.0 {
        return Err(Error::OutOfRange("theta kernels require w > 0".into()));
    }
    if t.im.abs() > 2.0 * w {
        return Err(Error::OutOfRange(
            "theta kernels require |Im t| <= 2w for Gaussian dominance".into(),
        ));
    }
    Ok(())
}

/// First modular relation, as both computable sides:
/// phi_w(t) against (1/sqrt w) e^{-pi t^2/(4w)} phi_{1/w}(i t/w).
///
/// At the imaginary argument the cosine kernel turns into
/// cosh(pi t x / w), which is exactly what the Fourier-cosine Parseval
/// pairing of sech (self-reciprocal) with the modulated Gaussian
/// produces; the sinh-kernel integral evaluated there is purely imaginary
/// and cannot carry the real left side under any constant factor.
pub fn modular_relation1_sides(t: f64, w: f64) -> Result<(Complex64, Complex64)> {
    let lhs = phi_w(Complex64::new(t, 0.0), w)?;
    let phi_dual = phi_w(Complex64::new(0.0, t / w), 1.0 / w)?;
    let factor = (-PI * t * t / (4.0 * w)).exp() / w.sqrt();
    Ok((lhs, factor * phi_dual))
}

/// Second modular relation:
/// e^{pi t^2/(4w)} {1/2 + psi_w(t)} against
/// e^{pi (t+w)^2/(4w)} phi_w(t + w).
pub fn modular_relation2_sides(t: f64, w: f64) -> Result<(Complex64, Complex64)> {
    let psi = psi_w(Complex64::new(t, 0.0), w)?;
    let lhs = (PI * t * t / (4.0 * w)).exp() * (psi + 0.5);
    let phi = phi_w(Complex64::new(t + w, 0.0), w)?;
    let rhs = (PI * (t + w) * (t + w) / (4.0 * w)).exp() * phi;
    Ok((lhs, rhs))
}

fn mustafy_lhs(t: f64, quadratic: impl Fn(f64) -> f64 + Copy) -> Result<f64> {
    let f = move |x: f64| {
        if x == 0.0 {
            return 2.0 * t * quadratic(0.0);
        }
        (2.0 * PI * t * x).sin() / (PI * x).sinh() * quadratic(x)
    };
    let zeros = (0u64..).map(move |k| k as f64 / (2.0 * t));
    let r = integrate_oscillatory(f, zeros, Tolerance::abs(1e-10));
    if !r.converged {
        return Err(Error::NoConvergence("mustafy oscillatory quadrature".into()));
    }
    Ok(r.real())
}

/// Cosine-kernel evaluation: integral of sin(2 pi t x) cos(pi x^2)/sinh(pi x)
/// against (cosh(pi t) - cos(pi t^2)) / (2 sinh(pi t)).
pub fn mustafy_cos_sides(t: f64) -> Result<SidePair> {
    if t <= 0.0 {
        return Err(Error::OutOfRange("mustafy evaluation requires t > 0".into()));
    }
    let lhs = mustafy_lhs(t, |x| (PI * x * x).cos())?;
    let rhs = ((PI * t).cosh() - (PI * t * t).cos()) / (2.0 * (PI * t).sinh());
    Ok(SidePair { lhs, rhs })
}

/// Sine-kernel evaluation: integral of sin(2 pi t x) sin(pi x^2)/sinh(pi x)
/// against sin(pi t^2) / (2 sinh(pi t)).
pub fn mustafy_sin_sides(t: f64) -> Result<SidePair> {
    if t <= 0.0 {
        return Err(Error::OutOfRange("mustafy evaluation requires t > 0".into()));
    }
    let lhs = mustafy_lhs(t, |x| (PI * x * x).sin())?;
    let rhs = (PI * t * t).sin() / (2.0 * (PI * t).sinh());
    Ok(SidePair { lhs, rhs })
}

/// Exponent quadruple with the constraint alpha+beta+gamma+delta = 4.
#[derive(Debug, Clone, Copy)]
pub struct GammaQuadParams {
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
    pub delta: f64,
}

impl GammaQuadParams {
    pub fn new(alpha: f64, beta: f64, gamma: f64, delta: f64) -> Result<Self> {
        if (alpha + beta + gamma + delta - 4.0).abs() > 1e-14 {
            return Err(Error::InvalidArgument(
                "gamma-quad exponents must sum to 4".into(),
            ));
        }
        Ok(Self { alpha, beta, gamma, delta })
    }
}

/// Right side 1/(2 Gamma(gamma+delta-1) Gamma(2 alpha+delta-2)
/// Gamma(2 beta+gamma-2)), through reciprocal gammas so an argument at a
/// pole yields the limit value 0 instead of an error.
pub fn gamma_quad_rhs(p: GammaQuadParams) -> f64 {
    0.5 * recip_gamma(p.gamma + p.delta - 1.0)
        * recip_gamma(2.0 * p.alpha + p.delta - 2.0)
        * recip_gamma(2.0 * p.beta + p.gamma - 2.0)
}

/// Left side: the line integral of
/// cos(pi(x+beta+gamma)) / (Gamma(a+x)Gamma(b-x)Gamma(c+2x)Gamma(d-2x)).
///
/// The reciprocal-gamma factors are paired in log space: past |x| ~ 85 the
/// growing factor alone overflows while the product still decays like
/// x^{-2}. The tails run through the oscillatory engine on lattices of the
/// trigonometric envelope's zeros spaced by its full period 2, which makes
/// the panel sums smooth in the reciprocal cutoff (the triple trig product
/// carries a constant-frequency component, so half-period panels would not
/// alternate).
pub fn gamma_quad_lhs(p: GammaQuadParams) -> Result<f64> {
    let g = move |x: f64| {
        let (l1, s1) = recip_gamma_ln(p.alpha + x);
        let (l2, s2) = recip_gamma_ln(p.beta - x);
        let (l3, s3) = recip_gamma_ln(p.gamma + 2.0 * x);
        let (l4, s4) = recip_gamma_ln(p.delta - 2.0 * x);
        let sign = s1 * s2 * s3 * s4;
        if sign == 0.0 {
            return 0.0;
        }
        cos_pi(x + p.beta + p.gamma) * sign * (l1 + l2 + l3 + l4).exp()
    };
    let core = 4.0 + p.alpha.abs().max(p.beta.abs());
    // envelope zeros from sin(pi(delta - 2x)) at x = delta/2 + j/2;
    // the lattice steps by the full period 2
    let x0 = p.delta / 2.0 + ((core - p.delta / 2.0) * 2.0).ceil() / 2.0;
    let u0 = p.gamma / 2.0 + ((core - p.gamma / 2.0) * 2.0).ceil() / 2.0;

    let tol = Tolerance::abs(2e-11);
    let pos = integrate_oscillatory(g, (0u64..).map(move |k| x0 + 2.0 * k as f64), tol);
    let neg = integrate_oscillatory(move |u| g(-u), (0u64..).map(move |k| u0 + 2.0 * k as f64), tol);
    let mid = integrate_finite(g, -u0, x0, Tolerance::abs(1e-12));
    if !pos.converged || !neg.converged || !mid.converged {
        return Err(Error::NoConvergence("gamma-quad line integral".into()));
    }
    Ok(pos.real() + neg.real() + mid.real())
}

/// Right side of the Bessel-product integral:
/// J_{a+b}(sqrt(2x^2+2y^2)) / ((x^2+y^2)/2)^{(a+b)/2}, computed as
/// 2^{a+b} J_nu(s)/s^nu at s = sqrt(2x^2+2y^2).
pub fn bessel_product_rhs(alpha: f64, beta: f64, x: f64, y: f64) -> Result<f64> {
    check_bessel_domain(alpha, beta, x, y)?;
    let s = (2.0 * x * x + 2.0 * y * y).sqrt();
    Ok(2.0f64.powf(alpha + beta) * bessel_j_over_xpow(alpha + beta, s))
}

/// Left side: the line integral over the order parameter w of
/// [J_{a+w}(x)/x^{a+w}] [J_{b-w}(y)/y^{b-w}], whose tails decay like
/// w^{-(a+b+1)} with unit-spaced sign changes from the reflected gamma.
pub fn bessel_product_lhs(alpha: f64, beta: f64, x: f64, y: f64) -> Result<f64> {
    check_bessel_domain(alpha, beta, x, y)?;
    let g = move |w: f64| bessel_j_over_xpow(alpha + w, x) * bessel_j_over_xpow(beta - w, y);
    let core = 4.0 + alpha.abs().max(beta.abs());
    let x0 = beta + (core - beta).ceil(); // sign lattice of the J_{b-w} factor
    let u0 = alpha + (core - alpha).ceil(); // reflected: J_{a+w} at w = -u
    let tol = Tolerance::abs(3e-9);
    let pos = integrate_oscillatory(g, (0u64..).map(move |k| x0 + k as f64), tol);
    let neg = integrate_oscillatory(move |u| g(-u), (0u64..).map(move |k| u0 + k as f64), tol);
    let mid = integrate_finite(g, -u0, x0, Tolerance::abs(1e-11));
    if !pos.converged || !neg.converged || !mid.converged {
        return Err(Error::NoConvergence("bessel-product line integral".into()));
    }
    Ok(pos.real() + neg.real() + mid.real())
}

fn check_bessel_domain(alpha: f64, beta: f64, x: f64, y: f64) -> Result<()> {
    if alpha + beta < 2.0 {
        return Err(Error::OutOfRange(
            "bessel product harness requires alpha + beta >= 2 for tail decay".into(),
        ));
    }
    if !(x > 0.0 && x <= 2.0 && y > 0.0 && y <= 2.0) {
        return Err(Error::OutOfRange("bessel product harness requires x, y in (0, 2]".into()));
    }
    Ok(())
}

/// 1/(e^y - 1) - 1/y, the regularized Bose kernel, entire at 0.
fn bose_reg(y: f64) -> f64 {
    if y.abs() < 0.1 {
        // Bernoulli series: -1/2 + y/12 - y^3/720 + y^5/30240 - y^7/1209600
        let y2 = y * y;
        -0.5 + y * (1.0 / 12.0 + y2 * (-1.0 / 720.0 + y2 * (1.0 / 30_240.0 - y2 / 1_209_600.0)))
    } else {
        1.0 / f64::exp_m1(y) - 1.0 / y
    }
}

/// Inner Gaussian-Bose integral of the Xi-transform pair:
/// integral over [0, oo) of x e^{-pi x^2 u} / (e^{2 pi x} - 1).
fn bose_gauss_integral(u: f64, tol: Tolerance) -> Result<f64> {
    let r = integrate_semi_infinite(
        move |x| {
            if x == 0.0 {
                return 1.0 / (2.0 * PI);
            }
            x * (-PI * x * x * u).exp() / f64::exp_m1(2.0 * PI * x)
        },
        0.0,
        tol,
    );
    if !r.converged {
        return Err(Error::NoConvergence("bose-gauss inner integral".into()));
    }
    Ok(r.real())
}

/// e^{-n} - 4 pi e^{-3n} * (inner integral at u = e^{-4n}).
fn eq13_lhs(n: f64, tol: Tolerance) -> Result<f64> {
    let inner = bose_gauss_integral((-4.0 * n).exp(), tol)?;
    Ok((-n).exp() - 4.0 * PI * (-3.0 * n).exp() * inner)
}

/// |Gamma((s-1+it)/4)|^2 for real s, t.
fn gamma_pair_weight(s: f64, t: f64) -> Result<f64> {
    let lg = ln_gamma(Complex64::new((s - 1.0) / 4.0, t / 4.0))?;
    Ok((2.0 * lg.re).exp())
}

/// Both sides of the cosine-transform identity (the Fourier-inverted
/// form): LHS the Bose-Gaussian combination at n, RHS the Xi-weighted
/// cosine integral truncated where the exponentially decaying weight is
/// below 1e-16 (t = 60 is conservative for the whole grid).
pub fn riemann_eq13_sides(n: f64) -> Result<SidePair> {
    let lhs = eq13_lhs(n, Tolerance::abs(1e-11))?;
    let integrand = move |t: f64| -> f64 {
        let w = gamma_pair_weight(0.0, t).expect("pole-free on the real line");
        let xi = xi_big(Complex64::new(t / 2.0, 0.0)).expect("strip");
        assert!(xi.im.abs() <= 1e-13 * xi.norm().max(1e-300), "Xi must be real on the real axis");
        w * xi.re * (n * t).cos()
    };
    let r = integrate_finite(integrand, 0.0, 60.0, Tolerance::abs(1e-9));
    if !r.converged {
        return Err(Error::NoConvergence("eq13 xi-weight quadrature".into()));
    }
    Ok(SidePair { lhs, rhs: r.real() / (4.0 * PI * PI.sqrt()) })
}

/// Both sides of the Xi-transform identity: nested cosine transform of the
/// Bose-Gaussian combination on the left (inner tolerance ten times
/// tighter, memoized on the outer nodes), gamma-pair times Xi on the right.
pub fn riemann_eq12_sides(t: f64) -> Result<SidePair> {
    let memo: RefCell<HashMap<u64, f64>> = RefCell::new(HashMap::new());
    let inner_tol = Tolerance::abs(1e-10);
    let g = move |z: f64| -> f64 {
        let key = z.to_bits();
        if let Some(&v) = memo.borrow().get(&key) {
            return v;
        }
        let v = eq13_lhs(z, inner_tol).expect("inner integral converges");
        memo.borrow_mut().insert(key, v);
        v
    };
    // the combination decays like e^{-z}; 45 units reach 1e-19
    let lhs = integrate_finite(move |z| g(z) * (t * z).cos(), 0.0, 45.0, Tolerance::abs(1e-9));
    if !lhs.converged {
        return Err(Error::NoConvergence("eq12 outer quadrature".into()));
    }
    let rhs = gamma_pair_weight(0.0, t)? * xi_big(Complex64::new(t / 2.0, 0.0))?.re
        / (8.0 * PI.sqrt());
    Ok(SidePair { lhs: lhs.real(), rhs })
}

/// Both sides of the F(n, s) product representation. The t-integral side
/// composes the gamma pair with Xi((t+is)/2) Xi((t-is)/2) =
/// |xi(1/2+s/2+it/2)|^2; the x-integral side pairs two regularized Bose
/// kernels. Certified at s = 0; other s are handled as an empirical strip
/// scan and may legitimately fail to converge (s >= 1 diverges at the
/// x-side tail).
pub fn f_ns_sides(n: f64, s: f64) -> Result<SidePair> {
    // t-side
    let t_integrand = move |t: f64| -> f64 {
        let w = gamma_pair_weight(s, t).expect("pole-free for s >= 0");
        let xi = crate::specfun::xi_small(Complex64::new(0.5 + s / 2.0, t / 2.0)).expect("strip");
        w * xi.norm_sqr() * (n * t).cos() / ((s + 1.0) * (s + 1.0) + t * t)
    };
    let lhs = integrate_finite(t_integrand, 0.0, 60.0, Tolerance::abs(1e-9));
    if !lhs.converged {
        return Err(Error::NoConvergence("F(n,s) t-side quadrature".into()));
    }

    // x-side
    let en = n.exp();
    let emn = (-n).exp();
    let p = move |x: f64| bose_reg(x * en) * bose_reg(x * emn);
    let scale = 0.125 * (4.0 * PI).powf(-(s - 3.0) / 2.0);
    let head = integrate_singular(move |x| x.powf(s) * p(x), 0.0, 1.0, Tolerance::abs(1e-10));
    let tail = integrate_semi_infinite(move |x| x.powf(s) * p(x), 1.0, Tolerance::abs(1e-10));
    if !head.converged || !tail.converged {
        return Err(Error::NoConvergence(
            "F(n,s) x-side quadrature (divergent outside the certified strip)".into(),
        ));
    }
    let rhs = scale * (head.real() + tail.real());
    Ok(SidePair { lhs: lhs.real(), rhs })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn phi_w_definition_self_consistency() {
        // two tolerance levels of the same defining integral
        let a = phi_w(Complex64::new(0.0, 0.0), 1.0).unwrap();
        let direct = integrate_semi_infinite(
            |x| (-PI * x * x).exp() / (PI * x).cosh(),
            0.0,
            Tolerance::abs(1e-9),
        );
        assert!(direct.converged);
        assert!((a.re - direct.real()).abs() < 1e-9);
        assert!(a.im == 0.0);
    }

    #[test]
    fn modular_relation_one() {
        for &(t, w) in &[(0.5, 1.0), (1.0 / 3.0, 0.5), (1.0, 2.0)] {
            let (lhs, rhs) = modular_relation1_sides(t, w).unwrap();
            assert!((lhs - rhs).norm() < 1e-9, "(t,w)=({t},{w}): {lhs} vs {rhs}");
        }
    }

    #[test]
    fn modular_relation_two() {
        for &(t, w) in &[(0.5, 1.0), (1.0 / 3.0, 0.5), (1.0, 2.0)] {
            let (lhs, rhs) = modular_relation2_sides(t, w).unwrap();
            assert!((lhs - rhs).norm() < 1e-9, "(t,w)=({t},{w}): {lhs} vs {rhs}");
        }
    }

    #[test]
    fn mustafy_pair_at_half() {
        let c = mustafy_cos_sides(0.5).unwrap();
        assert!(c.abs_residual() < 1e-8, "cos residual {}", c.abs_residual());
        let s = mustafy_sin_sides(0.5).unwrap();
        assert!(s.abs_residual() < 1e-8, "sin residual {}", s.abs_residual());
        // closed form re-evaluated from scratch
        let rhs = (PI * 0.25).sin() / (2.0 * (PI * 0.5).sinh());
        assert!((s.rhs - rhs).abs() < 1e-15);
    }

    #[test]
    fn mustafy_small_t_limit() {
        let s = mustafy_sin_sides(0.05).unwrap();
        assert!(s.abs_residual() < 1e-6);
    }

    #[test]
    fn gamma_quad_unit_case_against_reflection_oracle() {
        // alpha=beta=gamma=delta=1 reduces by reflection to
        // integral of sin^2(2 pi x)/(4 pi^2 x^2) over the line = 1/2
        let p = GammaQuadParams::new(1.0, 1.0, 1.0, 1.0).unwrap();
        assert!((gamma_quad_rhs(p) - 0.5).abs() < 1e-14);
        let reduced = |x: f64| {
            if x == 0.0 {
                1.0
            } else {
                let s = (2.0 * PI * x).sin();
                s * s / (4.0 * PI * PI * x * x)
            }
        };
        let oracle_half = integrate_finite(reduced, 0.0, 40.25, Tolerance::abs(1e-9));
        // tail of sin^2/(4 pi^2 x^2) beyond X: mean value 1/(8 pi^2 x^2),
        // integrates to 1/(8 pi^2 X)
        let tail = 1.0 / (8.0 * PI * PI * 40.25);
        let oracle = 2.0 * (oracle_half.real() + tail);
        assert!((oracle - 0.5).abs() < 1e-4, "oracle sanity: {oracle}");
        let lhs = gamma_quad_lhs(p).unwrap();
        assert!((lhs - 0.5).abs() < 1e-7, "lhs {lhs}");
    }

    #[test]
    fn gamma_quad_zero_rhs_case() {
        let p = GammaQuadParams::new(1.5, 1.5, 0.5, 0.5).unwrap();
        assert_eq!(gamma_quad_rhs(p), 0.0);
        assert!(gamma_quad_lhs(p).unwrap().abs() < 1e-6);
    }

    #[test]
    fn gamma_quad_generic_case() {
        let p = GammaQuadParams::new(1.0, 1.0, 1.5, 0.5).unwrap();
        let lhs = gamma_quad_lhs(p).unwrap();
        assert!((lhs - gamma_quad_rhs(p)).abs() < 1e-6);
    }

    #[test]
    fn gamma_quad_reflection_symmetry() {
        let a = gamma_quad_lhs(GammaQuadParams::new(1.0, 1.0, 1.5, 0.5).unwrap()).unwrap();
        let b = gamma_quad_lhs(GammaQuadParams::new(1.0, 1.0, 0.5, 1.5).unwrap()).unwrap();
        assert!((a - b).abs() < 1e-10, "{a} vs {b}");
    }

    #[test]
    fn bessel_product_unit_point() {
        let rhs = bessel_product_rhs(1.0, 1.0, 1.0, 1.0).unwrap();
        // J_2(2) from the series oracle
        let j22 = crate::specfun::bessel_j(2.0, 2.0).unwrap();
        assert!((rhs - j22).abs() < 1e-13);
        let lhs = bessel_product_lhs(1.0, 1.0, 1.0, 1.0).unwrap();
        assert!((lhs - rhs).abs() < 1e-6, "lhs {lhs} rhs {rhs}");
    }

    #[test]
    fn bessel_product_small_argument() {
        let lhs = bessel_product_lhs(1.0, 1.0, 0.01, 0.01).unwrap();
        let rhs = bessel_product_rhs(1.0, 1.0, 0.01, 0.01).unwrap();
        assert!((lhs - rhs).abs() < 1e-6);
    }

    #[test]
    fn riemann_eq13_at_zero() {
        let p = riemann_eq13_sides(0.0).unwrap();
        assert!(p.abs_residual() < 1e-6, "residual {}", p.abs_residual());
    }

    #[test]
    fn riemann_eq13_evenness_of_lhs() {
        // the cosine side forces LHS(n) = LHS(-n)
        let a = eq13_lhs(0.5, Tolerance::abs(1e-11)).unwrap();
        let b = eq13_lhs(-0.5, Tolerance::abs(1e-11)).unwrap();
        assert!((a - b).abs() < 1e-6, "{a} vs {b}");
    }

    #[test]
    fn riemann_eq13_large_n_decay() {
        let l2 = eq13_lhs(2.0, Tolerance::abs(1e-12)).unwrap().abs();
        let l3 = eq13_lhs(3.0, Tolerance::abs(1e-12)).unwrap().abs();
        let l5 = eq13_lhs(5.0, Tolerance::abs(1e-12)).unwrap().abs();
        assert!(l5 < 1e-2);
        assert!(l3 < l2 && l5 < l3);
    }

    #[test]
    fn riemann_eq12_points() {
        for &t in &[0.0, 2.0] {
            let p = riemann_eq12_sides(t).unwrap();
            assert!(p.abs_residual() < 1e-5, "t = {t}: residual {}", p.abs_residual());
        }
    }

    #[test]
    fn riemann_eq12_lhs_is_even_in_t() {
        // the cosine kernel makes the z-integral even in t
        let a = riemann_eq12_sides(2.0).unwrap().lhs;
        let b = riemann_eq12_sides(-2.0).unwrap().lhs;
        assert!((a - b).abs() < 1e-12, "{a} vs {b}");
    }

    #[test]
    fn f_ns_certified_plane() {
        for &n in &[0.0, 0.5] {
            let p = f_ns_sides(n, 0.0).unwrap();
            assert!(p.abs_residual() < 1e-5, "n = {n}: residual {}", p.abs_residual());
        }
    }

    #[test]
    fn f_ns_divergent_strip_is_flagged() {
        assert!(f_ns_sides(0.0, 1.5).is_err());
    }
}
