//! Generic continued-fraction evaluation (modified Lentz) and the two
//! letter fractions with their squared / cubed numerator patterns.

use crate::quad::{QuadResult, Tolerance};
use crate::Complex64;

const TINY: f64 = 1e-30;
const MAX_TERMS: u64 = 100_000;

/// Generator of the fraction b0 + a1/(b1 + a2/(b2 + ...)). The term
/// function maps n >= 1 to (a_n, b_n) and must be deterministic in n.
pub struct CFGenerator {
    pub b0: f64,
    terms: Box<dyn Fn(u64) -> (f64, f64) + Send + Sync>,
}

impl CFGenerator {
    pub fn new(b0: f64, terms: impl Fn(u64) -> (f64, f64) + Send + Sync + 'static) -> Self {
        Self { b0, terms: Box::new(terms) }
    }

    pub fn term(&self, n: u64) -> (f64, f64) {
        (self.terms)(n)
    }
}

/// Modified Lentz evaluation: successive convergents without deep
/// recursion, tiny-pivot rescue, stop when the convergent delta factor
/// differs from 1 by less than the tolerance.
///
/// Fractions with polynomially growing numerators (the letter fractions)
/// converge algebraically, where the momentary |delta - 1| understates
/// the remaining tail; the error estimate therefore uses the change in
/// the convergent across a doubling of the iteration count, which bounds
/// an algebraic tail within a constant factor.
pub fn evaluate_cf(gen: &CFGenerator, tol: Tolerance) -> QuadResult {
    let mut f = if gen.b0 == 0.0 { TINY } else { gen.b0 };
    let mut c = f;
    let mut d = 0.0f64;
    let mut checkpoint_value = f;
    let mut next_checkpoint = 16u64;
    let mut tiny_run = 0u32;
    for n in 1..=MAX_TERMS {
        let (a, b) = gen.term(n);
        d = b + a * d;
        if d == 0.0 {
            d = TINY;
        }
        c = b + a / c;
        if c == 0.0 {
            c = TINY;
        }
        d = 1.0 / d;
        let delta = c * d;
        f *= delta;
        // geometric convergence bottoms out at machine noise, below which
        // the multiplicative update only drifts by ~ulp/2 per step
        if (delta - 1.0).abs() <= 8.0 * f64::EPSILON {
            tiny_run += 1;
            if tiny_run >= 3 {
                return QuadResult {
                    value: Complex64::new(f, 0.0),
                    error_estimate: 16.0 * f64::EPSILON * f.abs(),
                    evaluations: n as usize,
                    converged: true,
                };
            }
        } else {
            tiny_run = 0;
        }
        if n == next_checkpoint {
            let err = 2.0 * (f - checkpoint_value).abs();
            if err <= tol.bound(f.abs()) {
                return QuadResult {
                    value: Complex64::new(f, 0.0),
                    error_estimate: err.max(f64::EPSILON * f.abs()),
                    evaluations: n as usize,
                    converged: true,
                };
            }
            checkpoint_value = f;
            next_checkpoint *= 2;
        }
    }
    QuadResult {
        value: Complex64::new(f, 0.0),
        error_estimate: 2.0 * (f - checkpoint_value).abs(),
        evaluations: MAX_TERMS as usize,
        converged: false,
    }
}

/// Backward evaluation of the fraction truncated after `n_terms` terms;
/// the independent oracle for the Lentz path.
pub fn evaluate_backward(gen: &CFGenerator, n_terms: u64) -> f64 {
    let mut tail = 0.0f64;
    for n in (1..=n_terms).rev() {
        let (a, b) = gen.term(n);
        tail = a / (b + tail);
    }
    gen.b0 + tail
}

/// First letter fraction: numerators 1, 1^2, 1^2, 2^2, 2^2, 3^2, 3^2, ...
/// over unit denominators. Equals 4 times the integral of
/// x e^{-x sqrt 5}/cosh x over [0, oo).
pub fn letter_cf_first() -> CFGenerator {
    CFGenerator::new(0.0, |n| {
        let a = if n == 1 {
            1.0
        } else {
            let k = (n / 2) as f64;
            k * k
        };
        (a, 1.0)
    })
}

/// Second letter fraction: numerators 1, 1^3, 1^3, 2^3, 2^3, 3^3, 3^3, ...
/// with denominators 1, 1, 3, 1, 5, 1, 7, ... Equals 2 times the integral
/// of x^2 e^{-x sqrt 3}/sinh x over [0, oo).
pub fn letter_cf_second() -> CFGenerator {
    CFGenerator::new(0.0, |n| {
        let a = if n == 1 {
            1.0
        } else {
            let k = (n / 2) as f64;
            k * k * k
        };
        let b = if n >= 3 && n % 2 == 1 { n as f64 } else { 1.0 };
        (a, b)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn golden_section() {
        // all a_n = b_n = 1, b0 = 0: fixed point of x = 1/(1+x)
        let gen = CFGenerator::new(0.0, |_| (1.0, 1.0));
        let r = evaluate_cf(&gen, Tolerance::rel(1e-14));
        assert!(r.converged);
        assert!((r.real() - (5.0f64.sqrt() - 1.0) / 2.0).abs() < 1e-13);
    }

    #[test]
    fn lentz_matches_backward_truncation() {
        let gen = CFGenerator::new(0.4, |n| (1.0 + (n as f64).sin().powi(2), 1.5 + 1.0 / n as f64));
        let lentz = evaluate_cf(&gen, Tolerance::rel(1e-14));
        let backward = evaluate_backward(&gen, 200);
        assert!(lentz.converged);
        assert!((lentz.real() - backward).abs() < 1e-12);
    }

    #[test]
    fn letter_pattern_transcription() {
        let g1 = letter_cf_first();
        let a: Vec<f64> = (1..=9).map(|n| g1.term(n).0).collect();
        assert_eq!(a, vec![1.0, 1.0, 1.0, 4.0, 4.0, 9.0, 9.0, 16.0, 16.0]);
        assert!((1..=9).all(|n| g1.term(n).1 == 1.0));

        let g2 = letter_cf_second();
        let a: Vec<f64> = (1..=9).map(|n| g2.term(n).0).collect();
        assert_eq!(a, vec![1.0, 1.0, 1.0, 8.0, 8.0, 27.0, 27.0, 64.0, 64.0]);
        let b: Vec<f64> = (1..=9).map(|n| g2.term(n).1).collect();
        assert_eq!(b, vec![1.0, 1.0, 3.0, 1.0, 5.0, 1.0, 7.0, 1.0, 9.0]);
    }
}
