//! Computable left/right sides for every catalogued identity, organized by
//! source section: classical problem-and-letter material, the analytic
//! (gamma / Bessel / xi transform) family, the elliptic-integral entries,
//! and the lost-notebook theta-quotient entries.

pub mod analytic;
pub mod classic;
pub mod elliptic;
pub mod lostnb;
