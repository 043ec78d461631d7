//! Complete and incomplete elliptic integrals of the first kind.
//!
//! The parameter convention is m = k^2 throughout: integrands read
//! 1/sqrt(1 - m sin^2 theta).

use crate::quad::{integrate_finite, Tolerance};
use crate::{Error, Result};
use std::f64::consts::{FRAC_PI_2, PI};

/// Elliptic modulus stored canonically as m = k^2 in [0, 1).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EllipticModulus {
    m: f64,
}

impl EllipticModulus {
    pub fn from_m(m: f64) -> Result<Self> {
        if !(0.0..1.0).contains(&m) {
            return Err(Error::OutOfRange(format!("modulus m must be in [0,1), got {m}")));
        }
        Ok(Self { m })
    }

    pub fn from_k(k: f64) -> Result<Self> {
        Self::from_m(k * k)
    }

    pub fn m(self) -> f64 {
        self.m
    }

    pub fn k(self) -> f64 {
        self.m.sqrt()
    }
}

/// Arithmetic-geometric mean of two positive numbers.
pub fn agm(a0: f64, b0: f64) -> f64 {
    let mut a = a0;
    let mut b = b0;
    for _ in 0..60 {
        let an = 0.5 * (a + b);
        let bn = (a * b).sqrt();
        if (an - bn).abs() <= 2.0 * f64::EPSILON * an.abs() {
            return 0.5 * (an + bn);
        }
        a = an;
        b = bn;
    }
    0.5 * (a + b)
}

/// Complete elliptic integral of the first kind, K(m) = pi/(2 agm(1, sqrt(1-m))).
pub fn elliptic_k(m: f64) -> Result<f64> {
    if !(0.0..1.0).contains(&m) {
        return Err(Error::OutOfRange(format!("elliptic_k requires 0 <= m < 1, got {m}")));
    }
    if m == 0.0 {
        return Ok(FRAC_PI_2);
    }
    Ok(PI / (2.0 * agm(1.0, (1.0 - m).sqrt())))
}

/// Incomplete elliptic integral of the first kind F(phi, m) for
/// phi in [0, pi/2], by direct adaptive quadrature of the defining
/// integrand (smooth for m < 1).
pub fn elliptic_f(phi: f64, m: f64) -> Result<f64> {
    if !(0.0..=FRAC_PI_2 + 1e-12).contains(&phi) {
        return Err(Error::OutOfRange(format!(
            "elliptic_f requires 0 <= phi <= pi/2, got {phi}"
        )));
    }
    if !(0.0..1.0).contains(&m) {
        return Err(Error::OutOfRange(format!("elliptic_f requires 0 <= m < 1, got {m}")));
    }
    if phi == 0.0 {
        return Ok(0.0);
    }
    let r = integrate_finite(
        |t| 1.0 / (1.0 - m * t.sin().powi(2)).sqrt(),
        0.0,
        phi.min(FRAC_PI_2),
        Tolerance { abs_tol: 2e-14, rel_tol: 2e-14 },
    );
    Ok(r.real())
}

/// F(phi, m) extended to phi in [0, pi] through F(phi) = 2K - F(pi - phi).
/// Amplitudes beyond pi/2 occur in the addition theorem and the lost
/// notebook arctangent limits.
pub fn elliptic_f_extended(phi: f64, m: f64) -> Result<f64> {
    if !(0.0..=PI + 1e-12).contains(&phi) {
        return Err(Error::OutOfRange(format!(
            "elliptic_f_extended requires 0 <= phi <= pi, got {phi}"
        )));
    }
    if phi <= FRAC_PI_2 {
        elliptic_f(phi, m)
    } else {
        Ok(2.0 * elliptic_k(m)? - elliptic_f(PI - phi, m)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k_at_zero() {
        assert_eq!(elliptic_k(0.0).unwrap(), FRAC_PI_2);
    }

    #[test]
    fn lemniscatic_value_from_gamma_oracle() {
        // K(m = 1/2) = Gamma(1/4)^2 / (4 sqrt(pi))
        let g = super::super::gamma::gamma_real(0.25).unwrap();
        let expected = g * g / (4.0 * PI.sqrt());
        let got = elliptic_k(0.5).unwrap();
        assert!((got - expected).abs() < 1e-13);
        assert!((got - 1.854_074_677_301_372).abs() < 1e-11);
    }

    #[test]
    fn k_against_direct_quadrature() {
        for &m in &[0.1, 0.5, 0.9, 0.95] {
            let q = integrate_finite(
                |t| 1.0 / (1.0 - m * t.sin().powi(2)).sqrt(),
                0.0,
                FRAC_PI_2,
                Tolerance { abs_tol: 1e-13, rel_tol: 1e-13 },
            );
            assert!(q.converged);
            assert!((q.real() - elliptic_k(m).unwrap()).abs() < 1e-12, "m = {m}");
        }
    }

    #[test]
    fn incomplete_reduces_to_amplitude_at_zero_modulus() {
        assert!((elliptic_f(1.234, 0.0).unwrap() - 1.234).abs() < 1e-13);
    }

    #[test]
    fn incomplete_consistency_with_complete() {
        for &m in &[0.0, 0.3, 0.8] {
            let f = elliptic_f(FRAC_PI_2, m).unwrap();
            assert!((f - elliptic_k(m).unwrap()).abs() < 1e-12);
        }
    }

    #[test]
    fn gauss_landen_descent_oracle() {
        // One AGM/Landen descent step. With a1 = (1+k')/2, b1 = sqrt(k') and
        // the amplitude update phi1 = phi + atan(k' tan phi),
        //   F(phi, m) = (1/2) * integral over [0, phi1] of
        //               dtheta / sqrt(a1^2 cos^2 + b1^2 sin^2),
        // recomputed by an independent quadrature of the transformed form.
        let (phi, m) = (1.0f64, 0.3f64);
        let kp = (1.0 - m).sqrt();
        let (a1, b1) = ((1.0 + kp) / 2.0, kp.sqrt());
        let phi1 = phi + (kp * phi.tan()).atan();
        let oracle = integrate_finite(
            |t| 1.0 / (a1 * a1 * t.cos().powi(2) + b1 * b1 * t.sin().powi(2)).sqrt(),
            0.0,
            phi1,
            Tolerance { abs_tol: 1e-13, rel_tol: 1e-13 },
        );
        assert!(oracle.converged);
        let lhs = elliptic_f(phi, m).unwrap();
        assert!((lhs - 0.5 * oracle.real()).abs() < 1e-12, "lhs {lhs}");
    }

    #[test]
    fn extension_joins_smoothly() {
        let m = 0.4;
        let a = elliptic_f_extended(FRAC_PI_2 - 1e-9, m).unwrap();
        let b = elliptic_f_extended(FRAC_PI_2 + 1e-9, m).unwrap();
        assert!((a - b).abs() < 1e-7);
    }
}
