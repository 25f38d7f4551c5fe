//! Acceptance criteria AC1-AC10, one PASS/FAIL line each.
//!
//! Runs without the libtest harness so the report is always printed; the
//! process exits nonzero if any criterion fails.

use std::f64::consts::{FRAC_PI_2, LN_2, PI};
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use dilogkit::constants;
use dilogkit::expansion::{arcsin_series, convolve, evaluate_series};
use dilogkit::identities::{
    euler_sum, register_all, standard_grid, EulerSumSpec, VerificationReport,
};
use dilogkit::quadrature::{
    arccos_kernel_transform, arctan_arccot_integral, arctan_sq_over_x_integral,
    cot_kernel_integral, lemma4_transform, wallis_transform, Integrand, QuadratureConfig,
};
use dilogkit::special::{chi2, chi3, li2, li3, ti2, wallis_table};
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

type Check = fn() -> Outcome;

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        passed,
        detail: detail.into(),
    }
}

/// Tracks the largest deviation seen against a fixed tolerance.
#[derive(Default)]
struct Worst {
    err: f64,
    label: String,
}

impl Worst {
    fn see(&mut self, label: impl Into<String>, err: f64) {
        if err.is_nan() || err > self.err {
            self.err = err;
            self.label = label.into();
        }
    }

    fn within(&self, tol: f64) -> bool {
        self.err <= tol
    }

    fn describe(&self) -> String {
        format!("worst {:.2e} ({})", self.err, self.label)
    }
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let start = Instant::now();
    let out = f();
    (out, start.elapsed())
}

fn ac1_constants() -> Outcome {
    let cfg = QuadratureConfig::default();
    let c = constants();
    let z3 = c.zeta3.value;
    let (worst, elapsed) = timed(|| {
        let mut w = Worst::default();
        let checks: [(&str, f64, f64); 6] = [
            (
                "W arcsin",
                wallis_transform(&Integrand::arcsin(), 1.0, &cfg)
                    .unwrap()
                    .value,
                PI * PI / 8.0,
            ),
            (
                "W arsinh",
                wallis_transform(&Integrand::arsinh(), 1.0, &cfg)
                    .unwrap()
                    .value,
                ti2(1.0).unwrap(),
            ),
            (
                "K arcsin",
                arccos_kernel_transform(&Integrand::arcsin(), 1.0, &cfg)
                    .unwrap()
                    .value,
                0.875 * z3,
            ),
            (
                "K arsinh",
                arccos_kernel_transform(&Integrand::arsinh(), 1.0, &cfg)
                    .unwrap()
                    .value,
                PI.powi(3) / 32.0,
            ),
            (
                "W arsinh^2/2",
                wallis_transform(&Integrand::half_arsinh_sq(), 1.0, &cfg)
                    .unwrap()
                    .value,
                PI.powi(3) / 96.0,
            ),
            (
                "K arsinh^2/2",
                arccos_kernel_transform(&Integrand::half_arsinh_sq(), 1.0, &cfg)
                    .unwrap()
                    .value,
                3.0 * PI / 64.0 * z3,
            ),
        ];
        for (label, got, want) in checks {
            w.see(label, (got - want).abs());
        }
        w
    });
    let ok = worst.within(1e-9) && elapsed < Duration::from_secs(1);
    outcome(
        ok,
        format!(
            "{}, tol 1e-9, {:.3}s (< 1s)",
            worst.describe(),
            elapsed.as_secs_f64()
        ),
    )
}

fn run_cases(ids: &[&str]) -> Vec<VerificationReport> {
    register_all().run(Some(ids)).expect("known ids")
}

fn report_worst(reports: &[VerificationReport]) -> Worst {
    let mut w = Worst::default();
    for r in reports {
        let err = if r.passed {
            r.worst_abs_error
        } else {
            f64::INFINITY
        };
        w.see(r.case_id.clone(), err);
    }
    w
}

fn ac2_theorem_grids() -> Outcome {
    let ids = [
        "thm1.eq8",
        "thm1.eq9",
        "thm1.eq10",
        "thm1.eq11",
        "thm1.eq12",
        "thm2.eq33",
        "thm2.eq34",
        "thm2.eq35",
        "thm2.eq36",
        "thm2.eq37",
    ];
    let (reports, elapsed) = timed(|| run_cases(&ids));
    let grids_ok = register_all()
        .select(Some(&ids))
        .unwrap()
        .iter()
        .all(|c| c.grid.len() == 21 && c.tolerance == 1e-9);
    let w = report_worst(&reports);
    let ok = grids_ok && w.within(1e-9) && elapsed < Duration::from_secs(10);
    outcome(
        ok,
        format!(
            "10 identities x 21 points, {}, {:.3}s (< 10s)",
            w.describe(),
            elapsed.as_secs_f64()
        ),
    )
}

fn ac3_lemma4() -> Outcome {
    let cfg = QuadratureConfig::default();
    let mut w = Worst::default();
    for t in standard_grid() {
        let d = lemma4_transform(t, &cfg).unwrap().value - li2(t).unwrap();
        w.see(format!("t={t}"), d.abs());
    }
    outcome(
        w.within(1e-9),
        format!("21 points, {}, tol 1e-9", w.describe()),
    )
}

fn ac4_lemma5() -> Outcome {
    let a1 = arcsin_series(1, 60).unwrap();
    let a2 = arcsin_series(2, 60).unwrap();
    let mut rel = Worst::default();
    for (k, closed, oracle) in [
        (3, arcsin_series(3, 60).unwrap(), convolve(&a1, &a2)),
        (4, arcsin_series(4, 60).unwrap(), convolve(&a2, &a2)),
    ] {
        for i in 0..=60 {
            let (a, b) = (closed.coefficient(i), oracle.coefficient(i));
            let scale = a.abs().max(b.abs());
            let e = if scale == 0.0 {
                0.0
            } else {
                (a - b).abs() / scale
            };
            rel.see(format!("power {k} index {i}"), e);
        }
    }
    let mut point = Worst::default();
    for k in 3..=4u8 {
        let s = arcsin_series(k, 400).unwrap();
        for i in 0..=90 {
            let t = i as f64 / 100.0;
            point.see(
                format!("power {k} t={t}"),
                (evaluate_series(&s, t) - t.asin().powi(k as i32)).abs(),
            );
        }
    }
    outcome(
        rel.within(1e-10) && point.within(1e-10),
        format!(
            "coefficients rel {}, pointwise {}",
            rel.describe(),
            point.describe()
        ),
    )
}

fn ac5_inequalities() -> Outcome {
    let ids = [
        "thm3.ineq43",
        "thm3.ineq44",
        "thm3.ineq45",
        "thm3.upper.li2",
        "thm3.upper.chi2",
    ];
    let reports = run_cases(&ids);
    let points: u64 = reports.iter().map(|r| r.evaluations).sum();
    let violations = reports.iter().filter(|r| !r.passed).count();
    let w = report_worst(&reports);
    outcome(
        violations == 0 && points == 5000,
        format!(
            "5 bounds x 1000 points, largest violation {:.2e} (slack 1e-12)",
            w.err
        ),
    )
}

fn ac6_euler_sums() -> Outcome {
    let mut w = Worst::default();
    let mut slowest = Duration::ZERO;
    let specs = [
        (
            EulerSumSpec::odd_harmonic_over_odd_square(),
            PI.powi(4) / 384.0,
            true,
        ),
        (
            EulerSumSpec::shifted_harmonic_over_square(),
            PI.powi(4) / 120.0,
            true,
        ),
        (
            EulerSumSpec::squared_odd_harmonic_over_square(),
            PI.powi(4) / 32.0,
            false,
        ),
        (
            EulerSumSpec::harmonic_over_square(),
            1.75 * constants().zeta4.value,
            false,
        ),
    ];
    for (spec, target, timed_case) in specs {
        assert_eq!(spec.terms, 1_000_000);
        let (v, elapsed) = timed(|| euler_sum(&spec).unwrap());
        if timed_case {
            slowest = slowest.max(elapsed);
        }
        w.see(spec.name.clone(), (v - target).abs());
    }
    outcome(
        w.within(1e-6) && slowest < Duration::from_millis(500),
        format!(
            "N = 1e6, {}, tol 1e-6, slowest {:.3}s (< 0.5s)",
            w.describe(),
            slowest.as_secs_f64()
        ),
    )
}

fn ac7_golden_ratio() -> Outcome {
    let cfg = QuadratureConfig::default();
    let c = constants();
    let phi = (1.0 + 5f64.sqrt()) / 2.0;
    let lp = phi.ln();
    let z3 = c.zeta3.value;
    let li2_half = PI * PI / 12.0 - 0.5 * LN_2 * LN_2;
    let li3_half = 0.875 * z3 - PI * PI / 12.0 * LN_2 + LN_2.powi(3) / 6.0;
    let li3_phi2 = 0.8 * z3 - 2.0 * PI * PI / 15.0 * lp + 2.0 / 3.0 * lp.powi(3);
    let r2 = 0.5f64.sqrt();
    let checks = [
        (
            "56",
            wallis_transform(&Integrand::arcsin(), 1.0 / phi, &cfg)
                .unwrap()
                .value,
            -0.75 * lp * lp + PI * PI / 12.0,
        ),
        (
            "57",
            wallis_transform(&Integrand::half_arcsin_sq(), r2, &cfg)
                .unwrap()
                .value,
            PI / 8.0 * li2_half,
        ),
        (
            "58",
            16.0 / PI
                * arccos_kernel_transform(&Integrand::half_arcsin_sq(), 1.0 / phi, &cfg)
                    .unwrap()
                    .value,
            li3_phi2,
        ),
        (
            "59",
            wallis_transform(&Integrand::half_arsinh_sq(), phi.sqrt().recip(), &cfg)
                .unwrap()
                .value,
            FRAC_PI_2 * (-lp * lp / 8.0 + PI * PI / 60.0),
        ),
        (
            "60",
            16.0 / PI
                * arccos_kernel_transform(&Integrand::half_arcsin_sq(), r2, &cfg)
                    .unwrap()
                    .value,
            li3_half,
        ),
    ];
    let mut w = Worst::default();
    for (label, got, want) in checks {
        w.see(format!("case {label}"), (got - want).abs());
    }
    outcome(
        w.within(1e-9),
        format!("5 special values, {}, tol 1e-9", w.describe()),
    )
}

fn ac8_concluding_integrals() -> Outcome {
    let cfg = QuadratureConfig::default();
    let c = constants();
    let (z3, z5) = (c.zeta3.value, c.zeta5.value);
    let g = ti2(1.0).unwrap();
    let i = arctan_arccot_integral(&cfg).unwrap().value;
    let i2 = arctan_sq_over_x_integral(&cfg).unwrap().value;
    let checks = [
        (
            "cot3",
            cot_kernel_integral(3, &cfg).unwrap().value,
            PI.powi(3) / 8.0 * LN_2 - 9.0 / 16.0 * PI * z3,
        ),
        (
            "cot4",
            cot_kernel_integral(4, &cfg).unwrap().value,
            (-18.0 * PI * PI * z3 + 93.0 * z5 + 2.0 * PI.powi(4) * LN_2) / 32.0,
        ),
        ("atan*acot", i, 0.875 * z3),
        ("decomposition", i, FRAC_PI_2 * g - i2),
    ];
    let mut w = Worst::default();
    for (label, got, want) in checks {
        w.see(label, (got - want).abs());
    }
    outcome(w.within(1e-9), format!("{}, tol 1e-9", w.describe()))
}

fn ac9_properties() -> Outcome {
    let cfg = QuadratureConfig::default();
    let mut notes = Vec::new();
    let mut ok = true;

    let mut mono = Worst::default();
    let w = wallis_table(20);
    for (m, &wm) in w.iter().enumerate() {
        let expect = if m % 2 == 0 { FRAC_PI_2 * wm } else { wm };
        let got = wallis_transform(&Integrand::monomial(m as i32), 1.0, &cfg)
            .unwrap()
            .value;
        mono.see(format!("m={m}"), (got - expect).abs());
    }
    ok &= mono.within(1e-12);
    notes.push(format!("monomial {:.1e}", mono.err));

    let menu: Vec<Integrand> = Integrand::NAMES
        .iter()
        .map(|n| Integrand::from_name(n).unwrap())
        .collect();
    let mut runner = TestRunner::new(Config {
        cases: 64,
        failure_persistence: None,
        ..Config::default()
    });
    let linear = runner.run(
        &(
            -2.0f64..2.0,
            -2.0f64..2.0,
            0usize..7,
            0usize..7,
            0.0f64..=1.0,
        ),
        |(a, b, i, j, t)| {
            let (f, g) = (&menu[i], &menu[j]);
            let lhs = wallis_transform(&Integrand::combination(a, f, b, g), t, &cfg)
                .unwrap()
                .value;
            let rhs = a * wallis_transform(f, t, &cfg).unwrap().value
                + b * wallis_transform(g, t, &cfg).unwrap().value;
            prop_assert!((lhs - rhs).abs() <= 1e-11);
            Ok(())
        },
    );
    ok &= linear.is_ok();
    notes.push(format!(
        "linearity {}",
        if linear.is_ok() { "ok" } else { "failed" }
    ));

    let wt = wallis_table(1001);
    let mut ulps = 0.0f64;
    for n in 0..=500 {
        let p = wt[2 * n] * wt[2 * n + 1] * (2 * n + 1) as f64;
        ulps = ulps.max((p - 1.0).abs() / f64::EPSILON);
    }
    ok &= ulps <= 4.0;
    notes.push(format!("wallis pair {ulps} ulp"));

    let mut obs = Worst::default();
    for i in 0..200 {
        let t = 0.99 * i as f64 / 199.0;
        obs.see(
            format!("obs1 t={t}"),
            (li2(t).unwrap() - chi2(t).unwrap() - 0.25 * li2(t * t).unwrap()).abs(),
        );
        obs.see(
            format!("obs2 t={t}"),
            (li3(t).unwrap() - chi3(t).unwrap() - 0.125 * li3(t * t).unwrap()).abs(),
        );
    }
    ok &= obs.within(1e-12);
    notes.push(format!("observations {:.1e}", obs.err));

    let mut parity_ok = true;
    for k in 1..=4u8 {
        let s = arcsin_series(k, 200).unwrap();
        parity_ok &= s
            .coefficients()
            .iter()
            .enumerate()
            .all(|(i, &c)| (i + k as usize).is_multiple_of(2) || c == 0.0);
    }
    for k in 1..=2u8 {
        let s = dilogkit::expansion::arsinh_series(k, 200).unwrap();
        parity_ok &= s
            .coefficients()
            .iter()
            .enumerate()
            .all(|(i, &c)| (i + k as usize).is_multiple_of(2) || c == 0.0);
    }
    ok &= parity_ok;
    notes.push(format!(
        "parity {}",
        if parity_ok { "ok" } else { "failed" }
    ));

    outcome(ok, notes.join(", "))
}

fn ac10_cli_verify_all() -> Outcome {
    let (out, elapsed) = timed(|| {
        Command::new(env!("CARGO_BIN_EXE_dilogkit"))
            .args(["verify", "--all", "--format", "json"])
            .output()
            .expect("run dilogkit")
    });
    let code = out.status.code();
    let report: serde_json::Value = match serde_json::from_slice(&out.stdout) {
        Ok(v) => v,
        Err(e) => return outcome(false, format!("unparseable report: {e}")),
    };
    let cases = report["cases"].as_array().cloned().unwrap_or_default();
    let passing = cases.iter().filter(|c| c["passed"] == true).count();
    let ok = code == Some(0)
        && passing >= 30
        && passing == cases.len()
        && elapsed < Duration::from_secs(60);
    outcome(
        ok,
        format!(
            "exit {code:?}, {passing}/{} cases passing, {:.2}s (< 60s)",
            cases.len(),
            elapsed.as_secs_f64()
        ),
    )
}

fn main() -> ExitCode {
    let criteria: [(&str, &str, Check); 10] = [
        ("AC1", "constants at t = 1", ac1_constants),
        ("AC2", "Wallis and arccos-kernel grids", ac2_theorem_grids),
        ("AC3", "square-root kernel for Li2", ac3_lemma4),
        ("AC4", "arcsin^3, arcsin^4 coefficients", ac4_lemma5),
        ("AC5", "inequalities on 1000 points", ac5_inequalities),
        ("AC6", "Euler sums", ac6_euler_sums),
        ("AC7", "golden-ratio and 1/sqrt2 values", ac7_golden_ratio),
        ("AC8", "closing integrals", ac8_concluding_integrals),
        ("AC9", "property suites", ac9_properties),
        ("AC10", "verify --all", ac10_cli_verify_all),
    ];
    let mut failures = 0;
    for (id, title, check) in criteria {
        let o = check();
        if !o.passed {
            failures += 1;
        }
        println!(
            "{id:<5} {} {title}: {}",
            if o.passed { "PASS" } else { "FAIL" },
            o.detail
        );
    }
    println!(
        "{}/{} criteria passed",
        criteria.len() - failures,
        criteria.len()
    );
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
