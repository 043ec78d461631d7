//! Numerical integration, series summation, root finding and
//! differentiation.
//!
//! Engines:
//! - finite intervals: globally adaptive Gauss–Kronrod 7/15 ([`integrate_finite`])
//! - integrable endpoint singularities: tanh-sinh double-exponential rule
//!   ([`integrate_singular`])
//! - semi-infinite intervals: exp-sinh double-exponential rule
//!   ([`integrate_semi_infinite`])
//! - oscillatory tails: between-zeros panel sums with iterated-Aitken
//!   acceleration ([`integrate_oscillatory`])
//!
//! All engines integrate real and complex integrands through the same code
//! path; a real integrand yields a result whose imaginary part is exactly
//! zero because every accumulated term has a zero imaginary component.

mod de;
mod diff;
mod gk;
mod osc;
mod root;
mod series;

pub use de::{integrate_line, integrate_semi_infinite, integrate_semi_infinite_complex,
             integrate_singular, integrate_singular_complex, integrate_singular_offsets};
pub use diff::{differentiate, DiffResult};
pub use gk::{integrate_finite, integrate_finite_complex};
pub use osc::integrate_oscillatory;
pub use root::find_root;
pub use series::{sum_series, sum_series_alternating, sum_series_complex};

use crate::{Complex64, Error, Result};

/// Mixed absolute/relative tolerance. A candidate error `e` against a value
/// of magnitude `m` is accepted when `e <= abs_tol + rel_tol * m`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    pub abs_tol: f64,
    pub rel_tol: f64,
}

impl Tolerance {
    pub fn new(abs_tol: f64, rel_tol: f64) -> Result<Self> {
        if !(abs_tol >= 0.0) || !(rel_tol >= 0.0) {
            return Err(Error::InvalidArgument(
                "tolerances must be nonnegative".into(),
            ));
        }
        if abs_tol == 0.0 && rel_tol == 0.0 {
            return Err(Error::InvalidArgument(
                "at least one of abs_tol, rel_tol must be positive".into(),
            ));
        }
        Ok(Self { abs_tol, rel_tol })
    }

    /// Absolute-only tolerance.
    pub fn abs(abs_tol: f64) -> Self {
        Self { abs_tol, rel_tol: 0.0 }
    }

    /// Relative-only tolerance (with a denormal-guard absolute floor).
    pub fn rel(rel_tol: f64) -> Self {
        Self { abs_tol: 1e-300, rel_tol }
    }

    /// Acceptance bound for a value of magnitude `scale`.
    pub fn bound(&self, scale: f64) -> f64 {
        self.abs_tol + self.rel_tol * scale
    }

    /// Scale both components (used by per-panel splitting).
    pub(crate) fn scaled(&self, k: f64) -> Self {
        Self { abs_tol: self.abs_tol * k, rel_tol: self.rel_tol * k }
    }
}

impl Default for Tolerance {
    fn default() -> Self {
        Self { abs_tol: 1e-12, rel_tol: 1e-10 }
    }
}

/// Result of an integration or summation call.
#[derive(Debug, Clone, Copy)]
pub struct QuadResult {
    /// Computed value; imaginary part is exactly 0 for real integrands.
    pub value: Complex64,
    /// Estimated absolute error, always nonnegative.
    pub error_estimate: f64,
    /// Number of integrand evaluations.
    pub evaluations: usize,
    /// Whether the requested tolerance was met.
    pub converged: bool,
}

impl QuadResult {
    /// Real part of the value (the value itself for real integrands).
    pub fn real(&self) -> f64 {
        self.value.re
    }
}

/// Scalar types the quadrature engines operate on.
pub trait IntegrandValue: Copy {
    fn zero() -> Self;
    fn add(self, other: Self) -> Self;
    fn sub(self, other: Self) -> Self;
    fn scale(self, k: f64) -> Self;
    /// Modulus.
    fn norm(self) -> f64;
    fn into_complex(self) -> Complex64;
    fn is_finite(self) -> bool;
}

impl IntegrandValue for f64 {
    fn zero() -> Self {
        0.0
    }
    fn add(self, other: Self) -> Self {
        self + other
    }
    fn sub(self, other: Self) -> Self {
        self - other
    }
    fn scale(self, k: f64) -> Self {
        self * k
    }
    fn norm(self) -> f64 {
        self.abs()
    }
    fn into_complex(self) -> Complex64 {
        Complex64::new(self, 0.0)
    }
    fn is_finite(self) -> bool {
        f64::is_finite(self)
    }
}

impl IntegrandValue for Complex64 {
    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn add(self, other: Self) -> Self {
        self + other
    }
    fn sub(self, other: Self) -> Self {
        self - other
    }
    fn scale(self, k: f64) -> Self {
        self * k
    }
    fn norm(self) -> f64 {
        Complex64::norm(self)
    }
    fn into_complex(self) -> Complex64 {
        self
    }
    fn is_finite(self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }
}

/// Kahan compensated accumulator, generic over the integrand scalar.
#[derive(Clone, Copy)]
pub(crate) struct Accumulator<S: IntegrandValue> {
    sum: S,
    comp: S,
}

impl<S: IntegrandValue> Accumulator<S> {
    pub fn new() -> Self {
        Self { sum: S::zero(), comp: S::zero() }
    }

    pub fn add(&mut self, term: S) {
        let y = term.sub(self.comp);
        let t = self.sum.add(y);
        self.comp = t.sub(self.sum).sub(y);
        self.sum = t;
    }

    pub fn value(&self) -> S {
        self.sum
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tolerance_requires_one_positive() {
        assert!(Tolerance::new(0.0, 0.0).is_err());
        assert!(Tolerance::new(-1.0, 0.0).is_err());
        assert!(Tolerance::new(1e-10, 0.0).is_ok());
    }

    #[test]
    fn real_integrand_has_exactly_zero_imaginary_part() {
        let r = integrate_finite(|x| x * x, 0.0, 1.0, Tolerance::default());
        assert_eq!(r.value.im, 0.0);
        assert!(r.converged);
    }
}
