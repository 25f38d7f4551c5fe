//! Integral transforms with singular kernels, evaluated by composite
//! Gauss–Legendre after a trigonometric substitution that makes every
//! integrand smooth on a finite interval.
//!
//! | transform | substitution | integrand on `[0, pi/2]` |
//! |---|---|---|
//! | `W f(t) = int_0^1 f(tu)/sqrt(1-u^2) du` | `u = sin(th)` | `f(t sin th)` |
//! | `int_0^1 f(tx) acos(x)/x dx` | `x = cos(th)` | `f(t cos th)/cos th * th * sin th` |
//! | `int_0^1 asin(x)^k / x dx` | `x = sin(u)` | `u^k cot u` |

use std::env;
use std::f64::consts::{FRAC_PI_2, PI};
use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::compensated::KahanSum;
use crate::error::{Error, Result};

/// Name of the environment variable that overrides the default panel count.
pub const PANELS_ENV: &str = "DILOGKIT_PANELS";

/// Below this, `f(c)/c` is replaced by its limit `f'(0)`.
pub const SMALL_ARGUMENT: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct QuadratureConfig {
    pub nodes_per_panel: usize,
    pub panels: usize,
    pub target_tol: f64,
    pub max_refinements: u32,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        Self {
            nodes_per_panel: 32,
            panels: 8,
            target_tol: 1e-13,
            max_refinements: 3,
        }
    }
}

impl QuadratureConfig {
    pub fn validate(&self) -> Result<()> {
        if self.nodes_per_panel < 4 {
            return Err(Error::InvalidConfig(format!(
                "nodes_per_panel must be at least 4, got {}",
                self.nodes_per_panel
            )));
        }
        if self.panels == 0 {
            return Err(Error::InvalidConfig("panels must be positive".into()));
        }
        if self.target_tol.is_nan() || self.target_tol < 1e-14 {
            return Err(Error::InvalidConfig(format!(
                "target_tol must be at least 1e-14, got {}",
                self.target_tol
            )));
        }
        Ok(())
    }

    pub fn with_panels(self, panels: usize) -> Self {
        Self { panels, ..self }
    }

    /// Default config, with the panel count taken from `DILOGKIT_PANELS`
    /// when set.
    pub fn from_env() -> Result<Self> {
        let cfg = Self::default();
        match env::var(PANELS_ENV) {
            Ok(raw) => {
                let panels = raw.trim().parse::<usize>().map_err(|_| {
                    Error::InvalidConfig(format!("{PANELS_ENV}={raw:?} is not a positive integer"))
                })?;
                let cfg = cfg.with_panels(panels);
                cfg.validate()?;
                Ok(cfg)
            }
            Err(_) => Ok(cfg),
        }
    }
}

/// Gauss–Legendre rule on `[-1, 1]`.
#[derive(Debug, Clone)]
pub struct GaussLegendre {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl GaussLegendre {
    /// Nodes by Newton iteration on `P_n` from the Tricomi initial guesses.
    pub fn new(n: usize) -> Self {
        assert!(n >= 1);
        let mut nodes = vec![0.0; n];
        let mut weights = vec![0.0; n];
        let nf = n as f64;
        for i in 0..n.div_ceil(2) {
            let mut x = (PI * (i as f64 + 0.75) / (nf + 0.5)).cos();
            let mut dp = 0.0;
            for _ in 0..100 {
                let (p, d) = legendre_with_derivative(n, x);
                dp = d;
                let dx = p / d;
                x -= dx;
                if dx.abs() <= 1e-16 * x.abs().max(1.0) {
                    break;
                }
            }
            let (_, d) = legendre_with_derivative(n, x);
            if d != 0.0 {
                dp = d;
            }
            let w = 2.0 / ((1.0 - x * x) * dp * dp);
            nodes[i] = -x;
            nodes[n - 1 - i] = x;
            weights[i] = w;
            weights[n - 1 - i] = w;
        }
        if n % 2 == 1 {
            nodes[n / 2] = 0.0;
        }
        Self { nodes, weights }
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }
}

fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

/// A quadrature value with its error budget.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct QuadResult {
    pub value: f64,
    /// `|refined - coarse|` plus the rounding budget of the refined sum.
    pub error_estimate: f64,
    /// Panel count of the reported (refined) value.
    pub panels: usize,
    pub evaluations: u64,
}

struct PanelSum {
    value: f64,
    magnitude: f64,
}

fn composite<F>(
    rule: &GaussLegendre,
    a: f64,
    b: f64,
    panels: usize,
    g: &F,
    tag: &str,
) -> Result<PanelSum>
where
    F: Fn(f64) -> f64,
{
    let h = (b - a) / panels as f64;
    let mut acc = KahanSum::new();
    let mut magnitude = 0.0;
    for p in 0..panels {
        let mid = a + (p as f64 + 0.5) * h;
        let half = 0.5 * h;
        for (&x, &w) in rule.nodes.iter().zip(&rule.weights) {
            let node = mid + half * x;
            let y = g(node);
            if !y.is_finite() {
                return Err(Error::Evaluation {
                    tag: tag.to_string(),
                    node,
                    value: y,
                });
            }
            let contribution = w * half * y;
            acc.add(contribution);
            magnitude += contribution.abs();
        }
    }
    Ok(PanelSum {
        value: acc.value(),
        magnitude,
    })
}

/// Integrates smooth `g` over `[a, b]`, halving the panel width until two
/// successive values agree to `target_tol` or refinements run out.
pub fn integrate<F>(g: F, a: f64, b: f64, cfg: &QuadratureConfig, tag: &str) -> Result<QuadResult>
where
    F: Fn(f64) -> f64,
{
    cfg.validate()?;
    if a == b {
        return Ok(QuadResult {
            value: 0.0,
            error_estimate: 0.0,
            panels: cfg.panels,
            evaluations: 0,
        });
    }
    let rule = GaussLegendre::new(cfg.nodes_per_panel);
    let per_panel = cfg.nodes_per_panel as u64;
    let mut panels = cfg.panels;
    let mut coarse = composite(&rule, a, b, panels, &g, tag)?;
    let mut evaluations = panels as u64 * per_panel;
    let mut refinements = 0;
    loop {
        panels *= 2;
        let fine = composite(&rule, a, b, panels, &g, tag)?;
        evaluations += panels as u64 * per_panel;
        let rounding = 8.0 * f64::EPSILON * fine.magnitude;
        let error_estimate = (fine.value - coarse.value).abs() + rounding;
        refinements += 1;
        if error_estimate <= cfg.target_tol || refinements > cfg.max_refinements {
            return Ok(QuadResult {
                value: fine.value,
                error_estimate,
                panels,
                evaluations,
            });
        }
        coarse = fine;
    }
}

type Callable = Arc<dyn Fn(f64) -> f64 + Send + Sync>;

/// A real function on `[0, 1]` together with a tag naming it and its
/// slope at the origin (used for the removable point of `f(y)/y`).
#[derive(Clone)]
pub struct Integrand {
    tag: String,
    func: Callable,
    slope_at_zero: f64,
}

impl fmt::Debug for Integrand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Integrand")
            .field("tag", &self.tag)
            .field("slope_at_zero", &self.slope_at_zero)
            .finish()
    }
}

impl Integrand {
    /// The callable must be side-effect free.
    pub fn new<F>(tag: impl Into<String>, slope_at_zero: f64, func: F) -> Self
    where
        F: Fn(f64) -> f64 + Send + Sync + 'static,
    {
        Self {
            tag: tag.into(),
            func: Arc::new(func),
            slope_at_zero,
        }
    }

    pub fn tag(&self) -> &str {
        &self.tag
    }

    pub fn slope_at_zero(&self) -> f64 {
        self.slope_at_zero
    }

    #[inline]
    pub fn eval(&self, y: f64) -> f64 {
        (self.func)(y)
    }

    pub fn arcsin() -> Self {
        Self::new("arcsin", 1.0, f64::asin)
    }

    /// `arcsin(y)^2 / pi`.
    pub fn arcsin_sq_over_pi() -> Self {
        Self::new("arcsin_sq_over_pi", 0.0, |y: f64| y.asin().powi(2) / PI)
    }

    /// `arcsin(y)^2 / 2`.
    pub fn half_arcsin_sq() -> Self {
        Self::new("half_arcsin_sq", 0.0, |y: f64| 0.5 * y.asin().powi(2))
    }

    /// `arcsin(y) + arcsin(y)^2 / pi`.
    pub fn arcsin_plus_sq_over_pi() -> Self {
        Self::new("arcsin_plus_sq_over_pi", 1.0, |y: f64| {
            let a = y.asin();
            a + a * a / PI
        })
    }

    pub fn arsinh() -> Self {
        Self::new("arsinh", 1.0, f64::asinh)
    }

    /// `arsinh(y)^2 / 2`.
    pub fn half_arsinh_sq() -> Self {
        Self::new("half_arsinh_sq", 0.0, |y: f64| 0.5 * y.asinh().powi(2))
    }

    pub fn constant(c: f64) -> Self {
        Self::new(format!("constant({c})"), 0.0, move |_| c)
    }

    pub fn monomial(m: i32) -> Self {
        let slope = if m == 1 { 1.0 } else { 0.0 };
        Self::new(format!("t^{m}"), slope, move |y: f64| y.powi(m))
    }

    /// `a f + b g`.
    pub fn combination(a: f64, f: &Integrand, b: f64, g: &Integrand) -> Self {
        let (ff, gg) = (f.func.clone(), g.func.clone());
        Self {
            tag: format!("{a}*{} + {b}*{}", f.tag, g.tag),
            func: Arc::new(move |y| a * ff(y) + b * gg(y)),
            slope_at_zero: a * f.slope_at_zero + b * g.slope_at_zero,
        }
    }

    /// Looks up one of the named integrands used by the CLI.
    pub fn from_name(name: &str) -> Option<Self> {
        Some(match name {
            "arcsin" => Self::arcsin(),
            "arcsin_sq_over_pi" => Self::arcsin_sq_over_pi(),
            "half_arcsin_sq" => Self::half_arcsin_sq(),
            "arcsin_plus_sq_over_pi" => Self::arcsin_plus_sq_over_pi(),
            "arsinh" => Self::arsinh(),
            "half_arsinh_sq" => Self::half_arsinh_sq(),
            "one" => Self::constant(1.0),
            _ => return None,
        })
    }

    pub const NAMES: [&'static str; 7] = [
        "arcsin",
        "arcsin_sq_over_pi",
        "half_arcsin_sq",
        "arcsin_plus_sq_over_pi",
        "arsinh",
        "half_arsinh_sq",
        "one",
    ];
}

fn check_unit(what: &'static str, x: f64) -> Result<()> {
    if (0.0..=1.0).contains(&x) {
        Ok(())
    } else {
        Err(Error::Domain {
            what,
            value: x,
            domain: "[0, 1]",
        })
    }
}

/// `W f(t) = int_0^1 f(tu) / sqrt(1-u^2) du`.
pub fn wallis_transform(f: &Integrand, t: f64, cfg: &QuadratureConfig) -> Result<QuadResult> {
    generalized_wallis_transform(f, t, 1.0, cfg)
}

/// `W_alpha f(t) = int_0^alpha f(tu) / sqrt(1-u^2) du`.
pub fn generalized_wallis_transform(
    f: &Integrand,
    t: f64,
    alpha: f64,
    cfg: &QuadratureConfig,
) -> Result<QuadResult> {
    check_unit("wallis transform t", t)?;
    check_unit("wallis transform alpha", alpha)?;
    let upper = if alpha == 1.0 {
        FRAC_PI_2
    } else {
        alpha.asin()
    };
    integrate(|th: f64| f.eval(t * th.sin()), 0.0, upper, cfg, f.tag())
}

/// `int_0^1 f(tx) acos(x) / x dx`.
pub fn arccos_kernel_transform(
    f: &Integrand,
    t: f64,
    cfg: &QuadratureConfig,
) -> Result<QuadResult> {
    check_unit("arccos kernel t", t)?;
    if t == 0.0 {
        return Ok(QuadResult {
            value: 0.0,
            error_estimate: 0.0,
            panels: cfg.panels,
            evaluations: 0,
        });
    }
    let slope = f.slope_at_zero();
    let g = |th: f64| {
        let c = th.cos();
        let ratio = if c < SMALL_ARGUMENT {
            t * slope
        } else {
            f.eval(t * c) / c
        };
        ratio * th * th.sin()
    };
    integrate(g, 0.0, FRAC_PI_2, cfg, f.tag())
}

/// `(8 sqrt(t)/pi) int_0^1 asin(sqrt(t) x) acos(x) / sqrt(1 - t x^2) dx`,
/// another representation of the dilogarithm.
pub fn lemma4_transform(t: f64, cfg: &QuadratureConfig) -> Result<QuadResult> {
    check_unit("lemma4_transform t", t)?;
    let r = t.sqrt();
    let g = |th: f64| {
        let c = th.cos();
        (r * c).asin() * th * th.sin() / (1.0 - t * c * c).sqrt()
    };
    let mut res = integrate(g, 0.0, FRAC_PI_2, cfg, "lemma4")?;
    let scale = 8.0 * r / PI;
    res.value *= scale;
    res.error_estimate *= scale;
    Ok(res)
}

/// `u^k cot(u)` with the series branch `u^(k-1) (1 - u^2/3)` near 0.
pub fn cot_kernel(k: i32, u: f64) -> f64 {
    if u < 1e-4 {
        u.powi(k - 1) * (1.0 - u * u / 3.0)
    } else {
        u.powi(k) / u.tan()
    }
}

/// `int_0^1 asin(x)^k / x dx = int_0^{pi/2} u^k cot(u) du` for `k` in `{3, 4}`.
pub fn cot_kernel_integral(k: u32, cfg: &QuadratureConfig) -> Result<QuadResult> {
    if !(3..=4).contains(&k) {
        return Err(Error::Range {
            what: "cot_kernel_integral k",
            value: k as i64,
            range: "{3, 4}",
        });
    }
    let k = k as i32;
    integrate(
        |u| cot_kernel(k, u),
        0.0,
        FRAC_PI_2,
        cfg,
        &format!("u^{k} cot u"),
    )
}

/// `atan(x)/x` with its limit 1 at the origin.
fn atan_over_x(x: f64) -> f64 {
    if x < SMALL_ARGUMENT {
        1.0
    } else {
        x.atan() / x
    }
}

/// `atan(x) acot(x) / x`, with `acot(x) = pi/2 - atan(x)` on `(0, 1]`.
pub fn atan_acot_integrand(x: f64) -> f64 {
    atan_over_x(x) * (FRAC_PI_2 - x.atan())
}

/// `int_0^1 atan(x) acot(x) / x dx`.
pub fn arctan_arccot_integral(cfg: &QuadratureConfig) -> Result<QuadResult> {
    integrate(atan_acot_integrand, 0.0, 1.0, cfg, "atan*acot/x")
}

/// `int_0^1 atan(x) / x dx`.
pub fn arctan_over_x_integral(cfg: &QuadratureConfig) -> Result<QuadResult> {
    integrate(atan_over_x, 0.0, 1.0, cfg, "atan/x")
}

/// `int_0^1 atan(x)^2 / x dx`.
pub fn arctan_sq_over_x_integral(cfg: &QuadratureConfig) -> Result<QuadResult> {
    integrate(|x| atan_over_x(x) * x.atan(), 0.0, 1.0, cfg, "atan^2/x")
}
