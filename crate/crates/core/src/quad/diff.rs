//! Numerical differentiation by central differences with Richardson
//! extrapolation over a shrinking step ladder (Ridders' scheme).

const CON: f64 = 1.4;
const SAFE: f64 = 2.0;
const NTAB: usize = 12;

/// Result of a [`differentiate`] call.
#[derive(Debug, Clone, Copy)]
pub struct DiffResult {
    pub value: f64,
    pub error_estimate: f64,
    /// False when the extrapolation table never improved on the first
    /// column (the widest-error fallback value is returned in that case).
    pub converged: bool,
}

/// Derivative of `f` at `x` starting from step `h0`.
pub fn differentiate(f: impl Fn(f64) -> f64, x: f64, h0: f64) -> DiffResult {
    assert!(h0 > 0.0, "differentiate requires a positive initial step");
    let mut table = [[0.0f64; NTAB]; NTAB];
    let mut h = h0;
    table[0][0] = (f(x + h) - f(x - h)) / (2.0 * h);
    let mut best = table[0][0];
    let mut err = f64::MAX;
    let mut improved = false;

    let con2 = CON * CON;
    for i in 1..NTAB {
        h /= CON;
        table[0][i] = (f(x + h) - f(x - h)) / (2.0 * h);
        let mut fac = con2;
        for j in 1..=i {
            table[j][i] = (table[j - 1][i] * fac - table[j - 1][i - 1]) / (fac - 1.0);
            fac *= con2;
            let errt = (table[j][i] - table[j - 1][i])
                .abs()
                .max((table[j][i] - table[j - 1][i - 1]).abs());
            if errt <= err {
                err = errt;
                best = table[j][i];
                improved = true;
            }
        }
        // non-monotone table: stop once higher order makes things worse
        if (table[i][i] - table[i - 1][i - 1]).abs() >= SAFE * err {
            break;
        }
    }
    DiffResult { value: best, error_estimate: err, converged: improved && err.is_finite() }
}
