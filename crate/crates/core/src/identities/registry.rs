use std::f64::consts::{FRAC_PI_2, PI};
use std::sync::Arc;

use super::euler::{euler_sum, EulerSumSpec};
use super::{CaseKind, ErrorMetric, IdentityCase, Param, Recipe, Registry};
use crate::constants::constants;
use crate::error::Result;
use crate::expansion::{
    arcsin_series, arsinh_series, convolve, evaluate_series, integrate_over_y, wallis_image,
    SeriesExpansion,
};
use crate::quadrature::{
    arccos_kernel_transform, arctan_arccot_integral, arctan_over_x_integral,
    arctan_sq_over_x_integral, cot_kernel_integral, generalized_wallis_transform, lemma4_transform,
    wallis_transform, Integrand, QuadratureConfig,
};
use crate::special::{chi2, chi3, li2, li3, ti2, ti3};

pub const QUADRATURE_TOL: f64 = 1e-9;
pub const SERIES_TOL: f64 = 1e-11;
pub const SUM_TOL: f64 = 1e-6;
const INEQUALITY_SLACK: f64 = 1e-12;
const LEMMA5_REL_TOL: f64 = 1e-10;
const LEMMA5_ORDER: usize = 60;
/// Degree of the expansions used by the coefficient-algebra path; keeps the
/// truncation remainder at `t = 0.99` below 1e-13.
const COEFFICIENT_ORDER: usize = 3000;
/// Degree used for the termwise Wallis sums at `t = 1` (100001 odd terms).
const UNIT_SUM_ORDER: usize = 200_001;

/// `{0, 0.05, ..., 0.95, 0.99}`.
pub fn standard_grid() -> Vec<f64> {
    (0..20).map(|i| i as f64 / 20.0).chain([0.99]).collect()
}

/// `{0.001, 0.002, ..., 1}`.
pub fn dense_grid() -> Vec<f64> {
    (1..=1000).map(|i| i as f64 / 1000.0).collect()
}

fn points(grid: Vec<f64>) -> Vec<Param> {
    grid.into_iter().map(Some).collect()
}

fn param<F>(f: F) -> Recipe
where
    F: Fn(f64) -> Result<f64> + Send + Sync + 'static,
{
    Arc::new(move |p: Param| f(p.expect("parametric recipe evaluated without a parameter")))
}

fn fixed<F>(f: F) -> Recipe
where
    F: Fn() -> Result<f64> + Send + Sync + 'static,
{
    Arc::new(move |_| f())
}

fn value(x: f64) -> Recipe {
    Arc::new(move |_| Ok(x))
}

/// `scale * W f(t)` by quadrature.
fn wallis(
    f: Integrand,
    scale: f64,
    cfg: QuadratureConfig,
) -> impl Fn(f64) -> Result<f64> + Send + Sync {
    move |t| Ok(scale * wallis_transform(&f, t, &cfg)?.value)
}

/// `scale * int_0^1 f(tx) acos(x)/x dx` by quadrature.
fn kernel(
    f: Integrand,
    scale: f64,
    cfg: QuadratureConfig,
) -> impl Fn(f64) -> Result<f64> + Send + Sync {
    move |t| Ok(scale * arccos_kernel_transform(&f, t, &cfg)?.value)
}

/// Evaluates a fixed expansion at the grid parameter.
fn series_at(s: SeriesExpansion) -> Recipe {
    let s = Arc::new(s);
    param(move |t| Ok(evaluate_series(&s, t)))
}

fn half_arcsin_sq_rhs(t: f64) -> Result<f64> {
    Ok(0.25 * li2(t * t)?)
}

fn half_arsinh_sq_wallis_rhs(t: f64) -> Result<f64> {
    Ok(FRAC_PI_2 * (0.25 * li2(t * t)? - 0.125 * li2(t.powi(4))?))
}

fn half_arsinh_sq_kernel_rhs(t: f64) -> Result<f64> {
    Ok(FRAC_PI_2 * (0.125 * li3(t * t)? - li3(t.powi(4))? / 32.0))
}

fn arcsin_sq() -> Integrand {
    Integrand::new("arcsin_sq", 0.0, |y: f64| y.asin().powi(2))
}

/// Builds the registry with the default quadrature configuration.
pub fn register_all() -> Registry {
    register_all_with(&QuadratureConfig::default())
}

pub fn register_all_with(cfg: &QuadratureConfig) -> Registry {
    let mut reg = Registry::new();
    wallis_representations(&mut reg, *cfg);
    coefficient_path(&mut reg);
    kernel_representations(&mut reg, *cfg);
    unit_constants(&mut reg, *cfg);
    decompositions(&mut reg);
    inequalities(&mut reg, *cfg);
    euler_sums(&mut reg);
    maclaurin_oracles(&mut reg);
    classical_sums(&mut reg, *cfg);
    special_values(&mut reg, *cfg);
    closing_integrals(&mut reg, *cfg);
    reg
}

fn wallis_representations(reg: &mut Registry, cfg: QuadratureConfig) {
    let grid = || points(standard_grid());
    let cases: [(&str, &str, &str, Integrand, f64, Recipe); 5] = [
        (
            "thm1.eq8",
            "Wallis transform of arcsin is chi_2",
            "chi_2(t) = int_0^1 asin(tu)/sqrt(1-u^2) du",
            Integrand::arcsin(),
            1.0,
            param(chi2),
        ),
        (
            "thm1.eq9",
            "Wallis transform of arcsin^2/pi is Li_2(t^2)/4",
            "Li_2(t^2)/4 = (1/pi) int_0^1 asin(tu)^2/sqrt(1-u^2) du",
            arcsin_sq(),
            1.0 / PI,
            param(half_arcsin_sq_rhs),
        ),
        (
            "thm1.eq10",
            "Wallis transform of arcsin + arcsin^2/pi is Li_2",
            "Li_2(t) = int_0^1 (asin(tu) + asin(tu)^2/pi)/sqrt(1-u^2) du",
            Integrand::arcsin_plus_sq_over_pi(),
            1.0,
            param(li2),
        ),
        (
            "thm1.eq11",
            "Wallis transform of arsinh is Ti_2",
            "Ti_2(t) = int_0^1 asinh(tu)/sqrt(1-u^2) du",
            Integrand::arsinh(),
            1.0,
            param(ti2),
        ),
        (
            "thm1.eq12",
            "Wallis transform of arsinh^2/2",
            "(pi/2)(Li_2(t^2)/4 - Li_2(t^4)/8) = int_0^1 asinh(tu)^2/2/sqrt(1-u^2) du",
            Integrand::half_arsinh_sq(),
            1.0,
            param(half_arsinh_sq_wallis_rhs),
        ),
    ];
    for (id, desc, anchor, f, scale, rhs) in cases {
        reg.push(IdentityCase::new(
            id,
            desc,
            anchor,
            CaseKind::Equality,
            grid(),
            QUADRATURE_TOL,
            param(wallis(f, scale, cfg)),
            rhs,
        ));
    }
}

/// Expansions paired with the closed forms their Wallis images should equal.
type ClosedForm = fn(f64) -> Result<f64>;

pub(crate) fn coefficient_path_expansions() -> [(SeriesExpansion, ClosedForm); 5] {
    let order = COEFFICIENT_ORDER;
    let p1 = arcsin_series(1, order).expect("valid order");
    let p2 = arcsin_series(2, order).expect("valid order");
    let h1 = arsinh_series(1, order).expect("valid order");
    let h2 = arsinh_series(2, order).expect("valid order");
    [
        (wallis_image(&p1), chi2),
        (wallis_image(&p2.scale(0.5)), |t| {
            Ok(FRAC_PI_2 * half_arcsin_sq_rhs(t)?)
        }),
        (wallis_image(&p1.combine(1.0, &p2, 1.0 / PI)), li2),
        (wallis_image(&h1), ti2),
        (wallis_image(&h2.scale(0.5)), half_arsinh_sq_wallis_rhs),
    ]
}

fn coefficient_path(reg: &mut Registry) {
    let meta = [
        (
            "thm1.coeff13",
            "W(arcsin) = chi_2 coefficientwise",
            "W(asin t) = chi_2(t)",
        ),
        (
            "thm1.coeff14",
            "W(arcsin^2/2) = (pi/8) Li_2(t^2) coefficientwise",
            "W(asin(t)^2/2) = (pi/2) Li_2(t^2)/4",
        ),
        (
            "thm1.coeff15",
            "W(arcsin + arcsin^2/pi) = Li_2 coefficientwise",
            "W(asin t + asin(t)^2/pi) = Li_2(t)",
        ),
        (
            "thm1.coeff16",
            "W(arsinh) = Ti_2 coefficientwise",
            "W(asinh t) = Ti_2(t)",
        ),
        (
            "thm1.coeff17",
            "W(arsinh^2/2) coefficientwise",
            "W(asinh(t)^2/2) = (pi/2)(Li_2(t^2)/4 - Li_2(t^4)/8)",
        ),
    ];
    for ((id, desc, anchor), (image, rhs)) in meta.into_iter().zip(coefficient_path_expansions()) {
        reg.push(IdentityCase::new(
            id,
            desc,
            anchor,
            CaseKind::Equality,
            points(standard_grid()),
            SERIES_TOL,
            series_at(image),
            param(rhs),
        ));
    }
}

fn kernel_representations(reg: &mut Registry, cfg: QuadratureConfig) {
    let cases: [(&str, &str, &str, Integrand, f64, Recipe); 5] = [
        (
            "thm2.eq33",
            "arccos-kernel transform of arcsin is chi_3",
            "chi_3(t) = int_0^1 asin(tx) acos(x)/x dx",
            Integrand::arcsin(),
            1.0,
            param(chi3),
        ),
        (
            "thm2.eq34",
            "arccos-kernel transform of arcsin^2/2 is (pi/16) Li_3(t^2)",
            "Li_3(t^2)/8 = (2/pi) int_0^1 asin(tx)^2/2 acos(x)/x dx",
            Integrand::half_arcsin_sq(),
            2.0 / PI,
            param(|t| Ok(0.125 * li3(t * t)?)),
        ),
        (
            "thm2.eq35",
            "arccos-kernel transform of arcsin + arcsin^2/pi is Li_3",
            "Li_3(t) = int_0^1 (asin(tx) + asin(tx)^2/pi) acos(x)/x dx",
            Integrand::arcsin_plus_sq_over_pi(),
            1.0,
            param(li3),
        ),
        (
            "thm2.eq36",
            "arccos-kernel transform of arsinh is Ti_3",
            "Ti_3(t) = int_0^1 asinh(tx) acos(x)/x dx",
            Integrand::arsinh(),
            1.0,
            param(ti3),
        ),
        (
            "thm2.eq37",
            "arccos-kernel transform of arsinh^2/2",
            "(pi/2)(Li_3(t^2)/8 - Li_3(t^4)/32) = int_0^1 asinh(tx)^2/2 acos(x)/x dx",
            Integrand::half_arsinh_sq(),
            1.0,
            param(half_arsinh_sq_kernel_rhs),
        ),
    ];
    for (id, desc, anchor, f, scale, rhs) in cases {
        reg.push(IdentityCase::new(
            id,
            desc,
            anchor,
            CaseKind::Equality,
            points(standard_grid()),
            QUADRATURE_TOL,
            param(kernel(f, scale, cfg)),
            rhs,
        ));
    }
}

struct UnitCase {
    id: &'static str,
    description: &'static str,
    anchor: &'static str,
    lhs: Recipe,
    rhs: Recipe,
}

fn unit_cases(cfg: QuadratureConfig) -> (Vec<UnitCase>, Vec<UnitCase>) {
    let c = constants();
    let (pi, z3) = (c.pi.value, c.zeta3.value);
    let w = |f: Integrand, s: f64| {
        fixed({
            let g = wallis(f, s, cfg);
            move || g(1.0)
        })
    };
    let k = |f: Integrand, s: f64| {
        fixed({
            let g = kernel(f, s, cfg);
            move || g(1.0)
        })
    };
    let first = vec![
        UnitCase {
            id: "cor1.chi2",
            description: "int asin(u)/sqrt(1-u^2) = pi^2/8",
            anchor: "int_0^1 asin(u)/sqrt(1-u^2) du = (3/4) zeta(2) = pi^2/8",
            lhs: w(Integrand::arcsin(), 1.0),
            rhs: value(pi * pi / 8.0),
        },
        UnitCase {
            id: "cor1.li2_sq",
            description: "(2/pi) int (asin u)^2/2 / sqrt(1-u^2) = pi^2/24",
            anchor: "(2/pi) int_0^1 asin(u)^2/2/sqrt(1-u^2) du = zeta(2)/4 = pi^2/24",
            lhs: w(Integrand::half_arcsin_sq(), 2.0 / pi),
            rhs: value(pi * pi / 24.0),
        },
        UnitCase {
            id: "cor1.li2",
            description: "int (asin u + asin(u)^2/pi)/sqrt(1-u^2) = pi^2/6",
            anchor: "int_0^1 (asin(u) + asin(u)^2/pi)/sqrt(1-u^2) du = zeta(2)",
            lhs: w(Integrand::arcsin_plus_sq_over_pi(), 1.0),
            rhs: value(pi * pi / 6.0),
        },
        UnitCase {
            id: "cor1.catalan",
            description: "int asinh(u)/sqrt(1-u^2) = G",
            anchor: "int_0^1 asinh(u)/sqrt(1-u^2) du = G",
            lhs: w(Integrand::arsinh(), 1.0),
            rhs: fixed(|| ti2(1.0)),
        },
        UnitCase {
            id: "cor1.arsinh_sq",
            description: "int asinh(u)^2/2/sqrt(1-u^2) = pi^3/96",
            anchor: "int_0^1 asinh(u)^2/2/sqrt(1-u^2) du = (pi/16) zeta(2) = pi^3/96",
            lhs: w(Integrand::half_arsinh_sq(), 1.0),
            rhs: value(pi.powi(3) / 96.0),
        },
    ];
    let second = vec![
        UnitCase {
            id: "cor2.38",
            description: "int asin(x) acos(x)/x = (7/8) zeta(3)",
            anchor: "int_0^1 asin(x) acos(x)/x dx = (7/8) zeta(3)",
            lhs: k(Integrand::arcsin(), 1.0),
            rhs: value(0.875 * z3),
        },
        UnitCase {
            id: "cor2.39",
            description: "(2/pi) int asin(x)^2/2 acos(x)/x = zeta(3)/8",
            anchor: "(2/pi) int_0^1 asin(x)^2/2 acos(x)/x dx = zeta(3)/8",
            lhs: k(Integrand::half_arcsin_sq(), 2.0 / pi),
            rhs: value(0.125 * z3),
        },
        UnitCase {
            id: "cor2.40",
            description: "int (asin x + asin(x)^2/pi) acos(x)/x = zeta(3)",
            anchor: "int_0^1 (asin(x) + asin(x)^2/pi) acos(x)/x dx = zeta(3)",
            lhs: k(Integrand::arcsin_plus_sq_over_pi(), 1.0),
            rhs: value(z3),
        },
        UnitCase {
            id: "cor2.41",
            description: "int asinh(x) acos(x)/x = pi^3/32",
            anchor: "int_0^1 asinh(x) acos(x)/x dx = pi^3/32",
            lhs: k(Integrand::arsinh(), 1.0),
            rhs: value(pi.powi(3) / 32.0),
        },
        UnitCase {
            id: "cor2.42",
            description: "int asinh(x)^2/2 acos(x)/x = (3 pi/64) zeta(3)",
            anchor: "int_0^1 asinh(x)^2/2 acos(x)/x dx = (3 pi/64) zeta(3)",
            lhs: k(Integrand::half_arsinh_sq(), 1.0),
            rhs: value(3.0 * pi / 64.0 * z3),
        },
    ];
    (first, second)
}

fn unit_constants(reg: &mut Registry, cfg: QuadratureConfig) {
    let (first, second) = unit_cases(cfg);
    for (group, anchor, cases) in [
        ("cor1.all", "Wallis transforms at t = 1", first),
        ("cor2.all", "arccos-kernel transforms at t = 1", second),
    ] {
        // aggregate case: grid point i selects sub-identity i
        let lhs: Vec<Recipe> = cases.iter().map(|c| c.lhs.clone()).collect();
        let rhs: Vec<Recipe> = cases.iter().map(|c| c.rhs.clone()).collect();
        let grid = (0..cases.len()).map(|i| Some(i as f64)).collect();
        for c in cases {
            reg.push(IdentityCase::new(
                c.id,
                c.description,
                c.anchor,
                CaseKind::Equality,
                vec![None],
                QUADRATURE_TOL,
                c.lhs,
                c.rhs,
            ));
        }
        let pick = |side: Vec<Recipe>| -> Recipe {
            Arc::new(move |p: Param| side[p.unwrap_or(0.0) as usize](None))
        };
        reg.push(IdentityCase::new(
            group,
            "all five constants of the group; grid point = sub-identity index",
            anchor,
            CaseKind::Equality,
            grid,
            QUADRATURE_TOL,
            pick(lhs),
            pick(rhs),
        ));
    }
}

fn decompositions(reg: &mut Registry) {
    let grid: Vec<f64> = (0..=198).map(|i| i as f64 * 0.005).collect();
    reg.push(IdentityCase::new(
        "obs1",
        "Li_2 splits into odd part chi_2 and even part Li_2(t^2)/4",
        "Li_2(t) = chi_2(t) + Li_2(t^2)/4",
        CaseKind::Equality,
        points(grid.clone()),
        SERIES_TOL,
        param(li2),
        param(|t| Ok(chi2(t)? + 0.25 * li2(t * t)?)),
    ));
    reg.push(IdentityCase::new(
        "obs2",
        "Li_3 splits into odd part chi_3 and even part Li_3(t^2)/8",
        "Li_3(t) = chi_3(t) + Li_3(t^2)/8",
        CaseKind::Equality,
        points(grid),
        SERIES_TOL,
        param(li3),
        param(|t| Ok(chi3(t)? + 0.125 * li3(t * t)?)),
    ));
}

fn inequalities(reg: &mut Registry, cfg: QuadratureConfig) {
    reg.push(IdentityCase::new(
        "lem4",
        "square-root kernel representation of Li_2",
        "Li_2(t) = (8 sqrt(t)/pi) int_0^1 asin(sqrt(t) x) acos(x)/sqrt(1 - t x^2) dx",
        CaseKind::Equality,
        points(standard_grid()),
        QUADRATURE_TOL,
        param(move |t| Ok(lemma4_transform(t, &cfg)?.value)),
        param(li2),
    ));
    let lower: [(&str, &str, &str, Recipe, Recipe); 3] = [
        (
            "thm3.ineq43",
            "lower bound for Li_2 by arcsin^3",
            "Li_2(t) >= (4/(3 pi)) asin(t)^3/t",
            param(li2),
            param(|t| Ok(4.0 / (3.0 * PI) * t.asin().powi(3) / t)),
        ),
        (
            "thm3.ineq44",
            "lower bound for chi_2 by arcsin^2",
            "chi_2(t) >= asin(t)^2/(2t)",
            param(chi2),
            param(|t| Ok(t.asin().powi(2) / (2.0 * t))),
        ),
        (
            "thm3.ineq45",
            "lower bound for Ti_2 by arsinh^2",
            "Ti_2(t) >= asinh(t)^2/(2t)",
            param(ti2),
            param(|t| Ok(t.asinh().powi(2) / (2.0 * t))),
        ),
    ];
    let upper: [(&str, &str, &str, Recipe, Recipe); 2] = [
        (
            "thm3.upper.li2",
            "linear upper bound for Li_2",
            "Li_2(t) <= (pi^2/6) t",
            param(|t| Ok(PI * PI / 6.0 * t)),
            param(li2),
        ),
        (
            "thm3.upper.chi2",
            "linear upper bound for chi_2",
            "chi_2(t) <= (pi^2/8) t",
            param(|t| Ok(PI * PI / 8.0 * t)),
            param(chi2),
        ),
    ];
    for (id, desc, anchor, lhs, rhs) in lower.into_iter().chain(upper) {
        reg.push(IdentityCase::new(
            id,
            desc,
            anchor,
            CaseKind::Inequality,
            points(dense_grid()),
            INEQUALITY_SLACK,
            lhs,
            rhs,
        ));
    }
}

fn sum_case(
    reg: &mut Registry,
    id: &str,
    desc: &str,
    anchor: &str,
    spec: EulerSumSpec,
    target: f64,
) {
    reg.push(IdentityCase::new(
        id,
        desc,
        anchor,
        CaseKind::Sum,
        vec![None],
        SUM_TOL,
        fixed(move || euler_sum(&spec)),
        value(target),
    ));
}

fn euler_sums(reg: &mut Registry) {
    let c = constants();
    let (pi, z4) = (c.pi.value, c.zeta4.value);
    sum_case(
        reg,
        "thm4.sum47",
        "odd harmonic numbers over odd squares",
        "sum_{n>=0} O_n^(2)/(2n+1)^2 = pi^4/384 = (15/64) zeta(4)",
        EulerSumSpec::odd_harmonic_over_odd_square(),
        pi.powi(4) / 384.0,
    );
    sum_case(
        reg,
        "thm4.sum48",
        "shifted order-2 harmonic numbers over squares",
        "sum_{n>=1} H_{n-1}^(2)/n^2 = pi^4/120 = (3/4) zeta(4)",
        EulerSumSpec::shifted_harmonic_over_square(),
        pi.powi(4) / 120.0,
    );
    sum_case(
        reg,
        "remark.dedoelder",
        "squared first-order odd harmonic numbers over squares",
        "sum_{n>=1} (1 + 1/3 + ... + 1/(2n-1))^2/n^2 = pi^4/32",
        EulerSumSpec::squared_odd_harmonic_over_square(),
        pi.powi(4) / 32.0,
    );
    sum_case(
        reg,
        "remark.h2sum",
        "order-2 harmonic numbers over squares",
        "sum_{n>=1} H_n^(2)/n^2 = (3/4) zeta(4) + zeta(4) = (7/4) zeta(4)",
        EulerSumSpec::harmonic_over_square(),
        1.75 * z4,
    );
}

fn maclaurin_oracles(reg: &mut Registry) {
    let p1 = arcsin_series(1, LEMMA5_ORDER).expect("valid order");
    let p2 = arcsin_series(2, LEMMA5_ORDER).expect("valid order");
    let cases = [
        (
            "lem5.coeff3",
            "closed-form arcsin^3 coefficients vs Cauchy product arcsin * arcsin^2",
            "asin(t)^3 = sum 6 O_n^(2) w_2n t^(2n+1)/(2n+1)",
            arcsin_series(3, LEMMA5_ORDER).expect("valid order"),
            convolve(&p1, &p2),
        ),
        (
            "lem5.coeff4",
            "closed-form arcsin^4 coefficients vs Cauchy product arcsin^2 * arcsin^2",
            "asin(t)^4 = (1/2) sum 3 H_{n-1}^(2) t^(2n)/(w_2n n^2)",
            arcsin_series(4, LEMMA5_ORDER).expect("valid order"),
            convolve(&p2, &p2),
        ),
    ];
    for (id, desc, anchor, closed, oracle) in cases {
        let coefficient = |s: SeriesExpansion| -> Recipe {
            Arc::new(move |p: Param| Ok(s.coefficient(p.unwrap_or(0.0) as usize)))
        };
        reg.push(
            IdentityCase::new(
                id,
                desc,
                anchor,
                CaseKind::Equality,
                (0..=LEMMA5_ORDER).map(|i| Some(i as f64)).collect(),
                LEMMA5_REL_TOL,
                coefficient(closed),
                coefficient(oracle),
            )
            .with_metric(ErrorMetric::Relative),
        );
    }
}

fn classical_sums(reg: &mut Registry, cfg: QuadratureConfig) {
    let c = constants();
    let (pi, z3) = (c.pi.value, c.zeta3.value);
    // termwise Wallis integrals of the arcsin series at t = 1; the remainder
    // sum_{n>=N} 1/(2n+1)^s is about 1/(4N) for s = 2 and 1/(16N^2) for s = 3
    let n_terms = (UNIT_SUM_ORDER + 1) as f64 / 2.0;
    reg.push(IdentityCase::new(
        "fig1.boo",
        "termwise Wallis integral of the arcsin series",
        "sum_{n>=0} 1/(2n+1)^2 = (3/4) zeta(2) = pi^2/8",
        CaseKind::Equality,
        vec![None],
        SERIES_TOL,
        fixed(move || {
            let s = wallis_image(&arcsin_series(1, UNIT_SUM_ORDER)?);
            Ok(evaluate_series(&s, 1.0) + 1.0 / (4.0 * n_terms))
        }),
        value(pi * pi / 8.0),
    ));
    reg.push(IdentityCase::new(
        "fig1.ewell",
        "termwise Wallis integral of the integrated arcsin series",
        "sum_{n>=0} 1/(2n+1)^3 = (7/8) zeta(3)",
        CaseKind::Equality,
        vec![None],
        SERIES_TOL,
        fixed(move || {
            let s = wallis_image(&integrate_over_y(&arcsin_series(1, UNIT_SUM_ORDER)?)?);
            Ok(evaluate_series(&s, 1.0) + 1.0 / (16.0 * n_terms * n_terms))
        }),
        value(0.875 * z3),
    ));
    reg.push(IdentityCase::new(
        "fig1.wy",
        "arccos-kernel transform of arcsin^2 at t = 1",
        "int_0^1 asin(x)^2 acos(x)/x dx = (pi/8) zeta(3)",
        CaseKind::Equality,
        vec![None],
        QUADRATURE_TOL,
        fixed({
            let g = kernel(arcsin_sq(), 1.0, cfg);
            move || g(1.0)
        }),
        value(pi / 8.0 * z3),
    ));
}

fn special_values(reg: &mut Registry, cfg: QuadratureConfig) {
    let c = constants();
    let (pi, z3, ln2) = (c.pi.value, c.zeta3.value, c.ln2.value);
    let phi = c.phi.value;
    let lp = c.ln_phi.value;
    let li3_phi2 = 0.8 * z3 - 2.0 * pi * pi / 15.0 * lp + 2.0 / 3.0 * lp.powi(3);
    let li2_half = pi * pi / 12.0 - 0.5 * ln2 * ln2;
    let li3_half = 0.875 * z3 - pi * pi / 12.0 * ln2 + ln2.powi(3) / 6.0;
    let chi2_phi = -0.75 * lp * lp + pi * pi / 12.0;

    let series: [(&str, &str, Recipe, f64); 6] = [
        (
            "fact51",
            "Li_2(1/phi) = -log^2(phi) + pi^2/10",
            fixed(move || li2(1.0 / phi)),
            -lp * lp + pi * pi / 10.0,
        ),
        (
            "fact52",
            "Li_2(1/phi^2) = -log^2(phi) + pi^2/15",
            fixed(move || li2(1.0 / (phi * phi))),
            -lp * lp + pi * pi / 15.0,
        ),
        (
            "fact53",
            "Li_3(1/phi^2) = (4/5) zeta(3) - (2 pi^2/15) log(phi) + (2/3) log^3(phi)",
            fixed(move || li3(1.0 / (phi * phi))),
            li3_phi2,
        ),
        (
            "fact54",
            "Li_2(1/2) = pi^2/12 - log^2(2)/2",
            fixed(|| li2(0.5)),
            li2_half,
        ),
        (
            "fact55",
            "Li_3(1/2) = (7/8) zeta(3) - (pi^2/12) log 2 + log^3(2)/6",
            fixed(|| li3(0.5)),
            li3_half,
        ),
        (
            "cor56.chi2",
            "chi_2(1/phi) = Li_2(1/phi) - Li_2(1/phi^2)/4 = -(3/4) log^2(phi) + pi^2/12",
            fixed(move || chi2(1.0 / phi)),
            chi2_phi,
        ),
    ];
    for (id, anchor, lhs, target) in series {
        reg.push(IdentityCase::new(
            id,
            "special value at a golden-ratio or one-half argument",
            anchor,
            CaseKind::Equality,
            vec![None],
            SERIES_TOL,
            lhs,
            value(target),
        ));
    }

    let at = |g: Box<dyn Fn(f64) -> Result<f64> + Send + Sync>, t: f64| fixed(move || g(t));
    let quadrature: [(&str, &str, Recipe, f64); 5] = [
        (
            "cor56",
            "int_0^1 asin(u/phi)/sqrt(1-u^2) du = -(3/4) log^2(phi) + pi^2/12",
            at(Box::new(wallis(Integrand::arcsin(), 1.0, cfg)), 1.0 / phi),
            chi2_phi,
        ),
        (
            "cor57",
            "int_0^1 asin(u/sqrt 2)^2/2/sqrt(1-u^2) du = (pi/8)(pi^2/12 - log^2(2)/2)",
            at(
                Box::new(wallis(Integrand::half_arcsin_sq(), 1.0, cfg)),
                0.5f64.sqrt(),
            ),
            pi / 8.0 * li2_half,
        ),
        (
            "cor58",
            "(16/pi) int_0^1 asin(x/phi)^2/2 acos(x)/x dx = Li_3(1/phi^2)",
            at(
                Box::new(kernel(Integrand::half_arcsin_sq(), 16.0 / pi, cfg)),
                1.0 / phi,
            ),
            li3_phi2,
        ),
        (
            "cor59",
            "int_0^1 asinh(u/sqrt(phi))^2/2/sqrt(1-u^2) du = (pi/2)(-log^2(phi)/8 + pi^2/60)",
            at(
                Box::new(wallis(Integrand::half_arsinh_sq(), 1.0, cfg)),
                phi.sqrt().recip(),
            ),
            FRAC_PI_2 * (-lp * lp / 8.0 + pi * pi / 60.0),
        ),
        (
            "cor60",
            "(16/pi) int_0^1 asin(x/sqrt 2)^2/2 acos(x)/x dx = Li_3(1/2)",
            at(
                Box::new(kernel(Integrand::half_arcsin_sq(), 16.0 / pi, cfg)),
                0.5f64.sqrt(),
            ),
            li3_half,
        ),
    ];
    for (id, anchor, lhs, target) in quadrature {
        reg.push(IdentityCase::new(
            id,
            "integral evaluated at a special argument",
            anchor,
            CaseKind::Equality,
            vec![None],
            QUADRATURE_TOL,
            lhs,
            value(target),
        ));
    }
}

fn closing_integrals(reg: &mut Registry, cfg: QuadratureConfig) {
    let c = constants();
    let (pi, z3, z5, ln2) = (c.pi.value, c.zeta3.value, c.zeta5.value, c.ln2.value);
    let quad = |id: &str, anchor: &str, lhs: Recipe, rhs: Recipe, reg: &mut Registry| {
        reg.push(IdentityCase::new(
            id,
            "closed-form integral",
            anchor,
            CaseKind::Equality,
            vec![None],
            QUADRATURE_TOL,
            lhs,
            rhs,
        ));
    };
    quad(
        "concl.asin3",
        "int_0^1 asin(x)^3/x dx = int_0^{pi/2} u^3 cot(u) du = (pi^3/8) log 2 - (9/16) pi zeta(3)",
        fixed(move || Ok(cot_kernel_integral(3, &cfg)?.value)),
        value(pi.powi(3) / 8.0 * ln2 - 9.0 / 16.0 * pi * z3),
        reg,
    );
    quad(
        "concl.asin4",
        "int_0^1 asin(x)^4/x dx = (-18 pi^2 zeta(3) + 93 zeta(5) + 2 pi^4 log 2)/32",
        fixed(move || Ok(cot_kernel_integral(4, &cfg)?.value)),
        value((-18.0 * pi * pi * z3 + 93.0 * z5 + 2.0 * pi.powi(4) * ln2) / 32.0),
        reg,
    );
    quad(
        "concl.atan",
        "int_0^1 atan(x) acot(x)/x dx = (7/8) zeta(3)",
        fixed(move || Ok(arctan_arccot_integral(&cfg)?.value)),
        value(0.875 * z3),
        reg,
    );
    quad(
        "concl.atan_i1",
        "int_0^1 atan(x)/x dx = G",
        fixed(move || Ok(arctan_over_x_integral(&cfg)?.value)),
        fixed(|| ti2(1.0)),
        reg,
    );
    quad(
        "concl.atan_i2",
        "int_0^1 atan(x)^2/x dx = pi G/2 - (7/8) zeta(3)",
        fixed(move || Ok(arctan_sq_over_x_integral(&cfg)?.value)),
        fixed(move || Ok(FRAC_PI_2 * ti2(1.0)? - 0.875 * z3)),
        reg,
    );
    quad(
        "concl.atan_decomp",
        "I = (pi/2) I_1 - I_2 with I_1 = G",
        fixed(move || Ok(arctan_arccot_integral(&cfg)?.value)),
        fixed(move || Ok(FRAC_PI_2 * ti2(1.0)? - arctan_sq_over_x_integral(&cfg)?.value)),
        reg,
    );
    reg.push(IdentityCase::new(
        "concl.walpha",
        "generalized Wallis operator applied to 1 gives arcsin(alpha)",
        "W_alpha 1 = int_0^alpha du/sqrt(1-u^2) = asin(alpha)",
        CaseKind::Equality,
        points(standard_grid().into_iter().chain([1.0]).collect()),
        QUADRATURE_TOL,
        param(move |alpha| {
            Ok(generalized_wallis_transform(&Integrand::constant(1.0), 0.5, alpha, &cfg)?.value)
        }),
        param(|alpha| Ok(alpha.asin())),
    ));
}
