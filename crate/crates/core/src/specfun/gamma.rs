//! Gamma family: complex log-gamma by the Lanczos approximation with
//! reflection, the entire reciprocal gamma, digamma, and Pochhammer symbols.

use crate::{Complex64, Error, Result};
use std::f64::consts::PI;

// Lanczos g = 7, 9 coefficients (GSL/Boost table); ~15 significant digits
// over the right half-plane.
const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

fn is_nonpositive_integer(x: f64) -> bool {
    x <= 0.0 && x == x.floor() && x.is_finite()
}

/// sin(pi x) with exact argument reduction on the integer part.
pub fn sin_pi(x: f64) -> f64 {
    if x == x.floor() {
        return 0.0;
    }
    let n = x.round();
    let r = x - n; // |r| <= 1/2, exact
    let s = (PI * r).sin();
    if (n as i64) % 2 == 0 {
        s
    } else {
        -s
    }
}

/// cos(pi x) with exact argument reduction on the integer part.
pub fn cos_pi(x: f64) -> f64 {
    let n = x.round();
    let r = x - n;
    if r.abs() == 0.5 {
        return 0.0;
    }
    let c = (PI * r).cos();
    if (n as i64) % 2 == 0 {
        c
    } else {
        -c
    }
}

/// sin(pi z) for complex z, reduced through the real part for accuracy.
fn sin_pi_complex(z: Complex64) -> Complex64 {
    // sin(pi(x+iy)) = sin(pi x) cosh(pi y) + i cos(pi x) sinh(pi y)
    let (x, y) = (z.re, z.im);
    Complex64::new(sin_pi(x) * (PI * y).cosh(), cos_pi(x) * (PI * y).sinh())
}

fn lanczos_ln_gamma_right(z: Complex64) -> Complex64 {
    // valid for Re z >= 0.5
    let x = z - 1.0;
    let mut s = Complex64::new(LANCZOS[0], 0.0);
    for (i, &c) in LANCZOS.iter().enumerate().skip(1) {
        s += c / (x + i as f64);
    }
    let base = x + LANCZOS_G + 0.5;
    0.5 * (2.0 * PI).ln() + (x + 0.5) * base.ln() - base + s.ln()
}

/// Principal-branch log-gamma for complex argument.
///
/// Reflection is applied for Re z < 1/2; accuracy is 13+ significant digits
/// for |z| <= 100. Poles (nonpositive integers) are reported as errors.
pub fn ln_gamma(z: Complex64) -> Result<Complex64> {
    if z.im == 0.0 && is_nonpositive_integer(z.re) {
        return Err(Error::GammaPole(format!("{}", z.re)));
    }
    if z.re >= 0.5 {
        Ok(lanczos_ln_gamma_right(z))
    } else {
        // ln Gamma(z) = ln pi - ln sin(pi z) - ln Gamma(1 - z)
        let lg = lanczos_ln_gamma_right(Complex64::new(1.0, 0.0) - z);
        Ok(Complex64::new(PI.ln(), 0.0) - sin_pi_complex(z).ln() - lg)
    }
}

/// Gamma(z) = exp(ln_gamma(z)).
pub fn gamma(z: Complex64) -> Result<Complex64> {
    ln_gamma(z).map(|l| l.exp())
}

/// Real log-gamma, defined for x > 0.
pub fn ln_gamma_real(x: f64) -> Result<f64> {
    if x <= 0.0 {
        return Err(Error::OutOfRange(format!("ln_gamma_real requires x > 0, got {x}")));
    }
    if x >= 0.5 {
        let xm = x - 1.0;
        let mut s = LANCZOS[0];
        for (i, &c) in LANCZOS.iter().enumerate().skip(1) {
            s += c / (xm + i as f64);
        }
        let base = xm + LANCZOS_G + 0.5;
        Ok(0.5 * (2.0 * PI).ln() + (xm + 0.5) * base.ln() - base + s.ln())
    } else {
        // Gamma(x) = pi / (sin(pi x) Gamma(1-x)); both factors positive here
        Ok(PI.ln() - (sin_pi(x)).ln() - ln_gamma_real(1.0 - x)?)
    }
}

/// Real gamma for non-pole arguments of either sign.
pub fn gamma_real(x: f64) -> Result<f64> {
    if is_nonpositive_integer(x) {
        return Err(Error::GammaPole(format!("{x}")));
    }
    if x >= 0.5 {
        Ok(ln_gamma_real(x)?.exp())
    } else {
        Ok(PI / (sin_pi(x) * gamma_real(1.0 - x)?))
    }
}

/// 1/Gamma(x): entire, exactly zero at nonpositive integers. Computed by
/// reflection sin(pi x) Gamma(1-x) / pi for x < 1/2 so no pole is touched.
pub fn recip_gamma(x: f64) -> f64 {
    let (ln_abs, sign) = recip_gamma_ln(x);
    sign * ln_abs.exp()
}

/// log|1/Gamma(x)| and the sign, for products of reciprocal gammas whose
/// individual factors overflow while the product stays moderate.
pub fn recip_gamma_ln(x: f64) -> (f64, f64) {
    if is_nonpositive_integer(x) {
        return (f64::NEG_INFINITY, 0.0);
    }
    if x >= 0.5 {
        (-ln_gamma_real(x).expect("x >= 0.5 is pole-free"), 1.0)
    } else {
        let s = sin_pi(x);
        let lg = ln_gamma_real(1.0 - x).expect("1 - x > 0.5");
        (lg + s.abs().ln() - PI.ln(), s.signum())
    }
}

// Asymptotic coefficients of psi(x) ~ ln x - 1/(2x) - sum B_{2n}/(2n x^{2n}).
const DIGAMMA_ASY: [f64; 7] = [
    1.0 / 12.0,
    -1.0 / 120.0,
    1.0 / 252.0,
    -1.0 / 240.0,
    1.0 / 132.0,
    -691.0 / 32760.0,
    1.0 / 12.0,
];

/// Digamma for x > 0: recurrence lift to x >= 10, then the asymptotic
/// series. 12+ digits on (0, 100].
pub fn digamma(x: f64) -> Result<f64> {
    if x <= 0.0 {
        return Err(Error::OutOfRange(format!("digamma requires x > 0, got {x}")));
    }
    let mut result = 0.0;
    let mut x = x;
    while x < 10.0 {
        result -= 1.0 / x;
        x += 1.0;
    }
    let inv2 = 1.0 / (x * x);
    let mut tail = 0.0;
    let mut p = inv2;
    for &c in &DIGAMMA_ASY {
        tail -= c * p;
        p *= inv2;
    }
    Ok(result + x.ln() - 0.5 / x + tail)
}

/// Pochhammer symbol (a)_n = a (a+1) ... (a+n-1), with (a)_0 = 1.
pub fn pochhammer(a: f64, n: u32) -> f64 {
    let mut p = 1.0;
    for k in 0..n {
        p *= a + k as f64;
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;

    const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

    #[test]
    fn ln_gamma_factorial() {
        let v = ln_gamma(Complex64::new(5.0, 0.0)).unwrap();
        assert!((v.re - 24.0f64.ln()).abs() < 1e-13);
        assert!(v.im.abs() < 1e-15);
    }

    #[test]
    fn gamma_imaginary_axis_modulus() {
        // |Gamma(it)|^2 = pi / (t sinh(pi t)) by the reflection formula
        let g = gamma(Complex64::new(0.0, 1.0)).unwrap();
        let expected = PI / (1.0 * PI.sinh());
        assert!((g.norm_sqr() - expected).abs() < 1e-12);
        assert!((g.norm_sqr() - 0.272_029_054_982_133).abs() < 1e-11);
    }

    #[test]
    fn gamma_half_matches_quadrature_oracle() {
        use crate::quad::{integrate_semi_infinite, Tolerance};
        // oracle: integral over [0,oo) of x^{-1/2} e^{-x} via the exp-sinh rule
        let oracle =
            integrate_semi_infinite(|x| (-x).exp() / x.sqrt(), 0.0, Tolerance::abs(1e-13));
        assert!(oracle.converged);
        let g = gamma_real(0.5).unwrap();
        assert!((g - oracle.real()).abs() < 1e-11);
        assert!((g - PI.sqrt()).abs() < 1e-13);
    }

    #[test]
    fn recip_gamma_zeros_are_exact() {
        assert_eq!(recip_gamma(0.0), 0.0);
        assert_eq!(recip_gamma(-3.0), 0.0);
        assert_eq!(recip_gamma(-41.0), 0.0);
    }

    #[test]
    fn recip_gamma_half() {
        assert!((recip_gamma(0.5) - 1.0 / PI.sqrt()).abs() < 1e-14);
    }

    #[test]
    fn digamma_values() {
        // oracle for psi(1) = -gamma: harmonic sum minus log, Euler's limit
        let n = 4_000_000u64;
        let mut h = 0.0f64;
        for k in (1..=n).rev() {
            h += 1.0 / k as f64;
        }
        let gamma_oracle = h - (n as f64).ln() - 0.5 / n as f64 + 1.0 / (12.0 * (n as f64).powi(2));
        assert!((digamma(1.0).unwrap() + gamma_oracle).abs() < 1e-12);
        assert!((digamma(1.0).unwrap() + EULER_GAMMA).abs() < 1e-12);
        // recurrence psi(2) = psi(1) + 1
        assert!((digamma(2.0).unwrap() - (1.0 - EULER_GAMMA)).abs() < 1e-12);
        // duplication: psi(1/2) = -gamma - 2 ln 2
        assert!((digamma(0.5).unwrap() + EULER_GAMMA + 2.0 * 2.0f64.ln()).abs() < 1e-12);
    }

    #[test]
    fn pochhammer_values() {
        assert_eq!(pochhammer(3.7, 0), 1.0);
        assert_eq!(pochhammer(1.0, 5), 120.0);
        assert!((pochhammer(0.5, 3) - 15.0 / 8.0).abs() < 1e-15);
    }

    #[test]
    fn conjugate_symmetry() {
        let z = Complex64::new(2.3, 4.1);
        let a = ln_gamma(z).unwrap();
        let b = ln_gamma(z.conj()).unwrap();
        assert_eq!(a.re, b.re);
        assert_eq!(a.im, -b.im);
        // reflection path
        let z = Complex64::new(-1.3, 2.6);
        let a = ln_gamma(z).unwrap();
        let b = ln_gamma(z.conj()).unwrap();
        assert_eq!(a.re, b.re);
        assert_eq!(a.im, -b.im);
    }

    #[test]
    fn poles_are_errors() {
        assert!(matches!(ln_gamma(Complex64::new(-2.0, 0.0)), Err(Error::GammaPole(_))));
        assert!(gamma_real(0.0).is_err());
    }
}
