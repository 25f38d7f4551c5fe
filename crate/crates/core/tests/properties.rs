use std::f64::consts::{FRAC_PI_2, PI};

use dilogkit::expansion::{arcsin_series, arsinh_series, convolve, evaluate_series, wallis_image};
use dilogkit::quadrature::{wallis_transform, Integrand, QuadratureConfig};
use dilogkit::special::{
    chi2, chi3, evaluate, li2, li3, ti2, wallis_coefficient, wallis_integral, wallis_table, Family,
};
use proptest::prelude::*;

fn ulps(a: f64, b: f64) -> f64 {
    (a - b).abs() / (f64::EPSILON * b.abs())
}

fn binomial(n: u32, k: u32) -> u128 {
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

#[test]
fn wallis_pair_product() {
    let w = wallis_table(1001);
    for n in 0..=500 {
        let p = w[2 * n] * w[2 * n + 1] * (2 * n + 1) as f64;
        assert!(ulps(p, 1.0) <= 4.0, "n = {n}: {p}");
    }
}

#[test]
fn wallis_central_binomial() {
    for n in 0..=50u32 {
        let exact = binomial(2 * n, n) as f64 / 4f64.powi(n as i32);
        let w = wallis_coefficient(2 * n as usize).value;
        assert!(ulps(w, exact) <= 4.0, "n = {n}");
    }
}

#[test]
fn wallis_parity_subsequences_decrease() {
    let w = wallis_table(600);
    for n in 2..=598 {
        assert!(w[n + 2] < w[n], "n = {n}");
    }
    for n in 1..300 {
        assert!(wallis_integral(n + 1) < wallis_integral(n));
    }
}

fn observation_grid() -> impl Iterator<Item = f64> {
    (0..200).map(|i| 0.99 * i as f64 / 199.0)
}

#[test]
fn observation_li2_splits_by_parity() {
    for t in observation_grid() {
        let d = li2(t).unwrap() - chi2(t).unwrap() - 0.25 * li2(t * t).unwrap();
        assert!(d.abs() <= 1e-12, "t = {t}: {d}");
    }
}

#[test]
fn observation_li3_splits_by_parity() {
    for t in observation_grid() {
        let d = li3(t).unwrap() - chi3(t).unwrap() - 0.125 * li3(t * t).unwrap();
        assert!(d.abs() <= 1e-12, "t = {t}: {d}");
    }
}

#[test]
fn pointwise_arcsin_powers() {
    for k in 1..=4u8 {
        let s = arcsin_series(k, 400).unwrap();
        for i in 0..50 {
            let t = 0.9 * i as f64 / 49.0;
            let d = evaluate_series(&s, t) - t.asin().powi(k as i32);
            assert!(d.abs() <= 1e-10, "k = {k}, t = {t}: {d}");
        }
    }
}

#[test]
fn closed_form_coefficients_match_convolution() {
    let a1 = arcsin_series(1, 60).unwrap();
    let a2 = arcsin_series(2, 60).unwrap();
    let pairs = [
        (arcsin_series(3, 60).unwrap(), convolve(&a1, &a2)),
        (arcsin_series(4, 60).unwrap(), convolve(&a2, &a2)),
    ];
    for (closed, oracle) in pairs {
        for i in 0..=60 {
            let (a, b) = (closed.coefficient(i), oracle.coefficient(i));
            let scale = a.abs().max(b.abs());
            assert!(
                scale == 0.0 || (a - b).abs() / scale <= 1e-10,
                "index {i}: {a} vs {b}"
            );
        }
    }
}

#[test]
fn all_expansions_have_correct_parity() {
    let cases = [
        (arcsin_series(1, 101).unwrap(), 1),
        (arcsin_series(2, 101).unwrap(), 0),
        (arcsin_series(3, 101).unwrap(), 1),
        (arcsin_series(4, 101).unwrap(), 0),
        (arsinh_series(1, 101).unwrap(), 1),
        (arsinh_series(2, 101).unwrap(), 0),
    ];
    for (s, parity) in cases {
        for (i, &c) in s.coefficients().iter().enumerate() {
            if i % 2 != parity {
                assert_eq!(c, 0.0, "{:?} index {i}", s.source());
            }
        }
        let image = wallis_image(&s);
        for (i, &c) in image.coefficients().iter().enumerate() {
            if i % 2 != parity {
                assert_eq!(c, 0.0);
            }
        }
    }
}

#[test]
fn monomial_law() {
    let cfg = QuadratureConfig::default();
    for m in 0..=20i32 {
        let w = wallis_coefficient(m as usize).value;
        let expect = if m % 2 == 0 { FRAC_PI_2 * w } else { w };
        let got = wallis_transform(&Integrand::monomial(m), 1.0, &cfg)
            .unwrap()
            .value;
        assert!((got - expect).abs() <= 1e-12, "m = {m}: {got} vs {expect}");
    }
}

#[test]
fn wallis_of_arsinh_is_ti2() {
    let cfg = QuadratureConfig::default();
    for i in 0..50 {
        let t = i as f64 / 49.0;
        let d = wallis_transform(&Integrand::arsinh(), t, &cfg)
            .unwrap()
            .value
            - ti2(t).unwrap();
        assert!(d.abs() <= 1e-10, "t = {t}: {d}");
    }
}

fn menu() -> Vec<Integrand> {
    Integrand::NAMES
        .iter()
        .map(|n| Integrand::from_name(n).unwrap())
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn wallis_transform_is_linear(
        a in -2.0f64..2.0,
        b in -2.0f64..2.0,
        i in 0usize..7,
        j in 0usize..7,
        t in 0.0f64..=1.0,
    ) {
        let cfg = QuadratureConfig::default();
        let fs = menu();
        let (f, g) = (&fs[i], &fs[j]);
        let combined = Integrand::combination(a, f, b, g);
        let lhs = wallis_transform(&combined, t, &cfg).unwrap().value;
        let rhs = a * wallis_transform(f, t, &cfg).unwrap().value
            + b * wallis_transform(g, t, &cfg).unwrap().value;
        prop_assert!((lhs - rhs).abs() <= 1e-11, "{lhs} vs {rhs}");
    }

    #[test]
    fn family_is_nondecreasing(mut ts in prop::collection::vec(0.0f64..=1.0, 2..12)) {
        ts.sort_by(f64::total_cmp);
        for family in Family::ALL {
            let vals: Vec<f64> = ts.iter().map(|&t| evaluate(family, t).unwrap().value).collect();
            for w in vals.windows(2) {
                prop_assert!(w[1] >= w[0], "{} not monotone: {:?}", family.name(), vals);
            }
        }
    }

    #[test]
    fn linear_upper_bounds(t in 0.0f64..=1.0) {
        prop_assert!(li2(t).unwrap() <= PI * PI / 6.0 * t + 1e-12);
        prop_assert!(chi2(t).unwrap() <= PI * PI / 8.0 * t + 1e-12);
    }

    #[test]
    fn observations_at_random_points(t in 0.0f64..0.99) {
        let d1 = li2(t).unwrap() - chi2(t).unwrap() - 0.25 * li2(t * t).unwrap();
        let d2 = li3(t).unwrap() - chi3(t).unwrap() - 0.125 * li3(t * t).unwrap();
        prop_assert!(d1.abs() <= 1e-12 && d2.abs() <= 1e-12);
    }

    #[test]
    fn monomial_images_are_exact(m in 0usize..200) {
        let mut c = vec![0.0; m + 1];
        c[m] = 1.0;
        let s = dilogkit::SeriesExpansion::new(c, dilogkit::expansion::SeriesSource::Combination);
        let image = wallis_image(&s);
        let w = wallis_coefficient(m).value;
        let expect = if m % 2 == 0 { FRAC_PI_2 * w } else { w };
        prop_assert_eq!(image.coefficient(m), expect);
    }
}
