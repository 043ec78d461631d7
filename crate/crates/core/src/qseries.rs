//! q-Pochhammer products, the Euler function f(-q), the Rogers-Ramanujan
//! continued fraction in product form, and the theta quotients attached to
//! the degree 5, 14 and 35 modular equations.

use crate::{Error, Result};

/// A nome q strictly inside the unit interval. The general-purpose ceiling
/// is 1/2; consumers that can justify a wider range (the lost-notebook
/// constant-C integrand runs to 0.9) declare their own ceiling explicitly.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Nome(f64);

impl Nome {
    /// General-purpose nome, 0 < q <= 1/2.
    pub fn new(q: f64) -> Result<Self> {
        Self::with_ceiling(q, 0.5)
    }

    /// Nome with a consumer-declared ceiling (at most 0.95).
    pub fn with_ceiling(q: f64, ceiling: f64) -> Result<Self> {
        if !(0.0..=0.95).contains(&ceiling) {
            return Err(Error::InvalidArgument(format!(
                "nome ceiling must lie in (0, 0.95], got {ceiling}"
            )));
        }
        if !(q > 0.0 && q <= ceiling) {
            return Err(Error::OutOfRange(format!(
                "nome must satisfy 0 < q <= {ceiling}, got {q}"
            )));
        }
        Ok(Self(q))
    }

    pub fn get(self) -> f64 {
        self.0
    }
}

/// Raw infinite q-Pochhammer product (a; q)_inf for 0 < q < 1, truncated at
/// the first k with |a| q^k < 1e-18 (1 - q). Relative accuracy ~1e-14 for
/// q <= 1/2, and stays 12+ digits out to q = 0.9.
pub(crate) fn qpoch_inf_raw(a: f64, q: f64) -> f64 {
    // q = 0 is the underflow limit of integrand nodes like t^5 near t = 0,
    // where the product degenerates to the single factor 1 - a
    debug_assert!((0.0..1.0).contains(&q));
    if a == 0.0 {
        return 1.0;
    }
    let cutoff = 1e-18 * (1.0 - q);
    let mut p = 1.0f64;
    let mut aq = a;
    for _ in 0..200_000 {
        if aq.abs() < cutoff {
            break;
        }
        p *= 1.0 - aq;
        aq *= q;
    }
    p
}

/// (a; q)_inf = prod_{k>=0} (1 - a q^k).
pub fn qpochhammer_inf(a: f64, q: Nome) -> f64 {
    qpoch_inf_raw(a, q.get())
}

/// Euler function f(-q) = (q; q)_inf.
pub fn euler_f_neg(q: Nome) -> f64 {
    qpoch_inf_raw(q.get(), q.get())
}

/// f(-x) for a bare 0 < x < 1 argument; integrands attached to the lost
/// notebook entries evaluate theta products at interior quadrature nodes
/// whose range is declared by the caller through `Nome::with_ceiling`.
pub(crate) fn euler_f_neg_raw(x: f64) -> f64 {
    qpoch_inf_raw(x, x)
}

/// Rogers-Ramanujan continued fraction u(q) via the product representation
/// q^{1/5} (q; q^5)(q^4; q^5) / ((q^2; q^5)(q^3; q^5)).
pub fn rr_cf_product(q: Nome) -> f64 {
    let qv = q.get();
    let q5 = qv.powi(5);
    let num = qpoch_inf_raw(qv, q5) * qpoch_inf_raw(qv.powi(4), q5);
    let den = qpoch_inf_raw(qv * qv, q5) * qpoch_inf_raw(qv.powi(3), q5);
    qv.powf(0.2) * num / den
}

/// lambda(q) = q f^6(-q^5) / f^6(-q).
pub fn lambda5(q: Nome) -> f64 {
    let qv = q.get();
    let r = euler_f_neg_raw(qv.powi(5)) / euler_f_neg_raw(qv);
    qv * r.powi(6)
}

/// Degree-14 theta quotient v(q) = q (f(-q) f(-q^14) / (f(-q^2) f(-q^7)))^4.
pub fn v14(q: Nome) -> f64 {
    let qv = q.get();
    let r = euler_f_neg_raw(qv) * euler_f_neg_raw(qv.powi(14))
        / (euler_f_neg_raw(qv * qv) * euler_f_neg_raw(qv.powi(7)));
    qv * r.powi(4)
}

/// Degree-35 theta quotient v(q) = q f(-q) f(-q^35) / (f(-q^5) f(-q^7)).
pub fn v35(q: Nome) -> f64 {
    let qv = q.get();
    qv * euler_f_neg_raw(qv) * euler_f_neg_raw(qv.powi(35))
        / (euler_f_neg_raw(qv.powi(5)) * euler_f_neg_raw(qv.powi(7)))
}

/// ln (-t; q)_inf = sum_k ln(1 + t q^k) for t >= 0; the log-space form the
/// q-beta integrand needs to survive superpolynomial growth in t.
pub fn ln_qpoch_neg(t: f64, q: f64) -> f64 {
    debug_assert!(t >= 0.0 && q > 0.0 && q < 1.0);
    let mut s = 0.0f64;
    let mut tq = t;
    let cutoff = 1e-19 * (1.0 - q);
    for _ in 0..200_000 {
        if tq < cutoff {
            break;
        }
        s += f64::ln_1p(tq);
        tq *= q;
    }
    s
}
