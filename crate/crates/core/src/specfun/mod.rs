//! Classical special functions: the gamma family, Bessel J of real order,
//! the dilogarithm, elliptic integrals, zeta and the Riemann xi functions,
//! and Pochhammer symbols.

mod bessel;
mod dilog;
mod elliptic;
mod gamma;
mod zeta;

pub use bessel::{bessel_j, bessel_j_over_xpow};
pub use dilog::li2;
pub use elliptic::{agm, elliptic_f, elliptic_f_extended, elliptic_k, EllipticModulus};
pub use gamma::{cos_pi, digamma, gamma, gamma_real, ln_gamma, ln_gamma_real, pochhammer,
                recip_gamma, recip_gamma_ln, sin_pi};
pub use zeta::{xi_big, xi_small, zeta};
