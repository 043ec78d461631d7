//! Riemann zeta by Euler-Maclaurin summation on the strip Re s > -2, and
//! the xi / capital-Xi combinations built from it.

use super::gamma::ln_gamma;
use crate::{Complex64, Error, Result};
use std::f64::consts::PI;

// B_{2k} / (2k)! for k = 1..8
const EM_COEFF: [f64; 8] = [
    1.0 / 12.0,
    -1.0 / 720.0,
    1.0 / 30_240.0,
    -1.0 / 1_209_600.0,
    1.0 / 47_900_160.0,
    -691.0 / 1_307_674_368_000.0,
    1.0 / 74_724_249_600.0,
    -3617.0 / 10_670_622_842_880_000.0,
];

/// zeta(s) for Re s > -2, s != 1, by Euler-Maclaurin with
/// N = max(20, 2|Im s|) leading terms and 8 Bernoulli corrections.
/// 11+ digits for |Im s| <= 80.
pub fn zeta(s: Complex64) -> Result<Complex64> {
    if s.re <= -2.0 {
        return Err(Error::OutOfRange(format!(
            "zeta supported only for Re s > -2, got {}",
            s.re
        )));
    }
    if (s - Complex64::new(1.0, 0.0)).norm() < 1e-12 {
        return Err(Error::InvalidArgument("zeta pole at s = 1".into()));
    }

    let n = (2.0 * s.im.abs()).ceil().max(20.0) as u64;
    let nf = n as f64;

    let mut sum = Complex64::new(0.0, 0.0);
    for k in 1..n {
        sum += (-s * (k as f64).ln()).exp();
    }
    let n_pow_minus_s = (-s * nf.ln()).exp();
    sum += 0.5 * n_pow_minus_s;
    sum += n_pow_minus_s * nf / (s - 1.0);

    // corrections: B_{2k}/(2k)! * s(s+1)...(s+2k-2) * N^{-s-2k+1}
    let mut poch = s;
    let mut n_pow = n_pow_minus_s / nf;
    for (k, &c) in EM_COEFF.iter().enumerate() {
        sum += c * poch * n_pow;
        let j = 2.0 * (k as f64 + 1.0);
        poch *= (s + (j - 1.0)) * (s + j);
        n_pow /= nf * nf;
    }
    Ok(sum)
}

/// xi(s) = (1/2) s (s-1) pi^{-s/2} Gamma(s/2) zeta(s), computed in the
/// pole-free form (s-1) pi^{-s/2} Gamma(s/2 + 1) zeta(s).
pub fn xi_small(s: Complex64) -> Result<Complex64> {
    let lg = ln_gamma(s / 2.0 + 1.0)?;
    let z = zeta(s)?;
    let pi_factor = (-(s / 2.0) * PI.ln()).exp();
    Ok((s - 1.0) * pi_factor * lg.exp() * z)
}

/// Capital Xi(t) = xi(1/2 + i t); real and even for real t.
pub fn xi_big(t: Complex64) -> Result<Complex64> {
    xi_small(Complex64::new(0.5, 0.0) + Complex64::i() * t)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zr(x: f64) -> Complex64 {
        zeta(Complex64::new(x, 0.0)).unwrap()
    }

    #[test]
    fn zeta_two_and_four_against_series_oracle() {
        // direct series with Euler-Maclaurin-free tail: sum to N plus
        // integral bound bracketing
        let n = 200_000u64;
        let mut s2 = 0.0f64;
        let mut s4 = 0.0f64;
        for k in (1..=n).rev() {
            let kf = k as f64;
            s2 += 1.0 / (kf * kf);
            s4 += 1.0 / (kf * kf * kf * kf);
        }
        s2 += 1.0 / n as f64 - 1.0 / (2.0 * (n as f64).powi(2)) + 1.0 / (6.0 * (n as f64).powi(3));
        s4 += 1.0 / (3.0 * (n as f64).powi(3));
        assert!((zr(2.0).re - s2).abs() < 1e-12);
        assert!((zr(2.0).re - PI * PI / 6.0).abs() < 1e-13);
        assert!((zr(4.0).re - s4).abs() < 1e-11);
        assert!((zr(4.0).re - PI.powi(4) / 90.0).abs() < 1e-13);
    }

    #[test]
    fn zeta_zero() {
        assert!((zr(0.0).re + 0.5).abs() < 1e-13);
        assert!(zr(0.0).im.abs() < 1e-14);
    }

    #[test]
    fn xi_functional_equation_spot() {
        let s = Complex64::new(0.3, 7.0);
        let a = xi_small(s).unwrap();
        let b = xi_small(Complex64::new(1.0, 0.0) - s).unwrap();
        assert!((a - b).norm() < 1e-10 * a.norm().max(1e-10));
    }

    #[test]
    fn xi_big_is_real_and_even_on_the_real_axis() {
        let t = Complex64::new(3.0, 0.0);
        let a = xi_big(t).unwrap();
        let b = xi_big(-t).unwrap();
        assert!((a - b).norm() < 1e-13 * a.norm());
        assert!(a.im.abs() < 1e-13 * a.norm());
        let c = xi_big(Complex64::new(5.0, 0.0)).unwrap();
        assert!(c.im.abs() < 1e-13 * c.norm().max(1e-300));
    }

    #[test]
    fn xi_at_half_composes_gamma_and_zeta_oracles() {
        // Xi(0) = xi(1/2) = -(1/8) pi^{-1/4} Gamma(1/4) zeta(1/2)
        let g = super::super::gamma::gamma_real(0.25).unwrap();
        let z_half = zr(0.5).re;
        let expected = -(1.0 / 8.0) * PI.powf(-0.25) * g * z_half;
        let got = xi_big(Complex64::new(0.0, 0.0)).unwrap();
        assert!((got.re - expected).abs() < 1e-12);
        assert!((got.re - 0.497_120_778).abs() < 1e-8);
    }
}
