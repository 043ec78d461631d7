//! Numerical special functions and an identity-verification engine.
//!
//! The crate is organized as a stack: [`quad`] supplies integration, root
//! finding, differentiation and series summation; [`specfun`], [`qseries`]
//! and [`contfrac`] build the classical functions on top of it; the
//! [`identities`] modules express both sides of each catalogued integral
//! identity; [`registry`] enumerates the checks and runs them, producing a
//! [`report::Report`] consumed by the `rverify` CLI.

pub mod contfrac;
pub mod identities;
pub mod mellin;
pub mod qseries;
pub mod quad;
pub mod registry;
pub mod report;
pub mod specfun;

pub use num_complex::Complex64;

/// Crate-wide error type.
#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    #[error("no sign change on [{lo}, {hi}]")]
    NoSignChange { lo: f64, hi: f64 },
    #[error("iteration did not converge: {0}")]
    NoConvergence(String),
    #[error("pole of gamma at {0}")]
    GammaPole(String),
    #[error("argument outside supported range: {0}")]
    OutOfRange(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("condition infeasible: {0}")]
    Infeasible(String),
}

pub type Result<T> = std::result::Result<T, Error>;
