//! Randomized invariants of the quadrature engines, the continued-fraction
//! evaluator, and the transform helpers, plus the determinism contract of
//! the check runner.

use proptest::prelude::*;
use rverify_core::contfrac::{evaluate_backward, evaluate_cf, CFGenerator};
use rverify_core::quad::{find_root, integrate_finite, Tolerance};
use rverify_core::registry::{self, RunConfig};
use rverify_core::{mellin, specfun};

fn tol() -> Tolerance {
    Tolerance { abs_tol: 1e-11, rel_tol: 1e-11 }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    // integrate(alpha f + beta g) = alpha integrate(f) + beta integrate(g)
    #[test]
    fn quadrature_linearity(
        alpha in -3.0f64..3.0,
        beta in -3.0f64..3.0,
        freq in 0.5f64..4.0,
        shift in -1.0f64..1.0,
    ) {
        let f = move |x: f64| (freq * x).sin() + shift;
        let g = move |x: f64| (x * x - shift * x).cos();
        let combined = integrate_finite(move |x| alpha * f(x) + beta * g(x), 0.0, 2.0, tol());
        let fa = integrate_finite(f, 0.0, 2.0, tol());
        let ga = integrate_finite(g, 0.0, 2.0, tol());
        let lhs = combined.real();
        let rhs = alpha * fa.real() + beta * ga.real();
        let budget = combined.error_estimate
            + alpha.abs() * fa.error_estimate
            + beta.abs() * ga.error_estimate
            + 1e-12;
        prop_assert!((lhs - rhs).abs() <= 10.0 * budget, "{lhs} vs {rhs}");
    }

    // interval additivity at a random interior split
    #[test]
    fn quadrature_interval_additivity(c in 0.05f64..0.95, freq in 0.5f64..5.0) {
        let f = move |x: f64| (freq * x).cos() * (1.0 + x);
        let whole = integrate_finite(f, 0.0, 1.0, tol());
        let left = integrate_finite(f, 0.0, c, tol());
        let right = integrate_finite(f, c, 1.0, tol());
        let budget = whole.error_estimate + left.error_estimate + right.error_estimate + 1e-12;
        prop_assert!(
            (whole.real() - left.real() - right.real()).abs() <= 10.0 * budget
        );
    }

    // Lentz value against direct backward evaluation of the truncation
    #[test]
    fn lentz_matches_backward(seed_a in 0.2f64..3.0, seed_b in 0.7f64..2.0) {
        let gen = CFGenerator::new(0.3, move |n| {
            let a = seed_a * (1.0 + ((n * 2654435761) % 97) as f64 / 97.0);
            let b = seed_b + ((n * 40503) % 31) as f64 / 31.0;
            (a, b)
        });
        let lentz = evaluate_cf(&gen, Tolerance::rel(1e-13));
        prop_assert!(lentz.converged);
        let backward = evaluate_backward(&gen, 200);
        prop_assert!((lentz.real() - backward).abs() < 1e-12 * backward.abs().max(1.0));
    }

    // the returned root satisfies the residual bound against the local slope
    #[test]
    fn root_postcondition(a in -2.0f64..-0.2, b in 0.2f64..2.0, skew in 0.2f64..3.0) {
        let f = move |x: f64| skew * x * x * x + x - (a + b) * 0.1;
        prop_assume!(f(a) * f(b) < 0.0);
        let t = Tolerance { abs_tol: 1e-13, rel_tol: 1e-13 };
        let root = find_root(f, a, b, t).unwrap();
        let slope = (f(root + 1e-6) - f(root - 1e-6)) / 2e-6;
        prop_assert!(f(root).abs() <= 1e-11 * slope.abs().max(1.0));
    }

    // Mellin side of the exponential: residual below 1e-9 across 0 < n < 1
    #[test]
    fn master_theorem_exponential_sweep(n in 0.1f64..0.9) {
        let pair = mellin::master_check(|x: f64| (-x).exp(), |_| 1.0, n, tol()).unwrap();
        prop_assert!(pair.abs_residual() < 1e-9, "residual {}", pair.abs_residual());
    }
}

#[test]
fn frullani_is_antisymmetric_in_the_scales() {
    for (a, b) in [(1.0, 2.0), (0.5, 3.0), (2.0, 0.25)] {
        let fwd = mellin::frullani_value(1.0, 0.0, a, b);
        let rev = mellin::frullani_value(1.0, 0.0, b, a);
        assert_eq!(fwd, -rev);
        let qf = mellin::frullani_quadrature(|x: f64| (-x).exp(), a, b, tol());
        let qr = mellin::frullani_quadrature(|x: f64| (-x).exp(), b, a, tol());
        assert!((qf.real() + qr.real()).abs() < 1e-9);
    }
}

#[test]
fn generalized_frullani_ladder_insensitivity() {
    let alt = [0.16, 0.08, 0.04, 0.02, 0.01, 0.005];
    let base = mellin::generalized_frullani_limit(
        |x: f64| (-x).exp(),
        |x: f64| 1.0 / (1.0 + x),
        1.0,
        1.0,
        &mellin::FRULLANI_LADDER,
        tol(),
    )
    .unwrap();
    let moved = mellin::generalized_frullani_limit(
        |x: f64| (-x).exp(),
        |x: f64| 1.0 / (1.0 + x),
        1.0,
        1.0,
        &alt,
        tol(),
    )
    .unwrap();
    assert!(
        (base.real() - moved.real()).abs() < 1e-6,
        "{} vs {}",
        base.real(),
        moved.real()
    );
}

#[test]
fn digamma_against_gamma_slope() {
    // d/ds log Gamma(s+1) at 0 equals psi(1)
    let d = rverify_core::quad::differentiate(
        |s| specfun::ln_gamma_real(s + 1.0).unwrap(),
        0.0,
        0.1,
    );
    assert!((d.value - specfun::digamma(1.0).unwrap()).abs() < 1e-9);
}

#[test]
fn runner_is_deterministic_and_concurrency_equivalent() {
    let catalog = registry::catalog();
    let filter = Some("q783-*".to_string());
    let serial = registry::run(
        &catalog,
        &RunConfig { filter: filter.clone(), tiers: None, tol_scale: 1.0, jobs: 1 },
    )
    .unwrap();
    let parallel = registry::run(
        &catalog,
        &RunConfig { filter, tiers: None, tol_scale: 1.0, jobs: 4 },
    )
    .unwrap();
    let strip = |s: &str| -> String {
        s.lines()
            .filter(|l| !l.contains("wall_time_ms"))
            .collect::<Vec<_>>()
            .join("\n")
    };
    let a = strip(&registry::to_json(&serial));
    let b = strip(&registry::to_json(&parallel));
    assert_eq!(a, b, "serial and concurrent runs must emit identical values");
    assert_eq!(serial.summary.pass, 8, "two q783 families, eight points");
}

#[test]
fn runner_rejects_tightening_scale() {
    let catalog = registry::catalog();
    let err = registry::run(
        &catalog,
        &RunConfig { filter: None, tiers: None, tol_scale: 0.5, jobs: 1 },
    );
    assert!(err.is_err());
}

#[test]
fn experimental_checks_never_affect_the_exit_code() {
    let catalog = registry::catalog();
    let report = registry::run(
        &catalog,
        &RunConfig {
            filter: Some("f-ns-strip-scan".into()),
            tiers: None,
            tol_scale: 1.0,
            jobs: 1,
        },
    )
    .unwrap();
    assert_eq!(report.exit_code(), 0);
    assert_eq!(report.summary.experimental, 3);
    assert_eq!(report.summary.fail, 0);
}

#[test]
fn report_golden_shape() {
    // synthetic one-outcome report against the frozen schema rendering
    use rverify_core::report::{CheckOutcome, CheckStatus, Report};
    use std::collections::BTreeMap;
    let outcome = CheckOutcome {
        check_id: "demo".into(),
        params: BTreeMap::from([("n".to_string(), 2.0)]),
        lhs: 1.0,
        rhs: 1.0,
        abs_residual: 0.0,
        rel_residual: 0.0,
        status: CheckStatus::Pass,
        wall_time_ms: 0.0,
        message: None,
    };
    let mut report = Report::new(1.0, vec![outcome]);
    report.tool_version = "x.y.z".into();
    let golden = r#"{
  "tool_version": "x.y.z",
  "tol_scale": 1.0,
  "summary": {
    "pass": 1,
    "fail": 0,
    "skipped": 0,
    "experimental": 0
  },
  "outcomes": [
    {
      "check_id": "demo",
      "params": {
        "n": 2.0
      },
      "lhs": 1.0,
      "rhs": 1.0,
      "abs_residual": 0.0,
      "rel_residual": 0.0,
      "status": "pass",
      "wall_time_ms": 0.0
    }
  ]
}"#;
    assert_eq!(registry::to_json(&report), golden);
}
