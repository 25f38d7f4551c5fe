//! Truncated Maclaurin expansions of powers of `arcsin` and `arsinh`.
//!
//! Coefficients are stored as plain `t^i` coefficients with every prefactor
//! folded in. `arcsin^3` and `arcsin^4` come from closed forms in the
//! odd harmonic numbers `O_n^(2)` and `H_{n-1}^(2)`; [`convolve`] rebuilds the
//! same coefficients independently as Cauchy products.

use serde::Serialize;

use crate::compensated::{compensated_dot, compensated_horner, KahanSum};
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::special::wallis_table;

/// Truncation order used across the crate when none is given.
pub const DEFAULT_ORDER: usize = 400;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum SeriesSource {
    ArcsinPow1,
    ArcsinPow2,
    ArcsinPow3,
    ArcsinPow4,
    Arsinh,
    ArsinhSq,
    ConvolutionOracle,
    IntegratedKernel,
    /// Image of an expansion under the Wallis operator.
    WallisImage,
    /// Linear combination of other expansions.
    Combination,
}

/// `coefficients[i]` multiplies `t^i`; the expansion has degree `order()`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SeriesExpansion {
    coefficients: Vec<f64>,
    source: SeriesSource,
}

impl SeriesExpansion {
    pub fn new(coefficients: Vec<f64>, source: SeriesSource) -> Self {
        assert!(
            !coefficients.is_empty(),
            "expansion needs at least one coefficient"
        );
        Self {
            coefficients,
            source,
        }
    }

    pub fn zero(order: usize) -> Self {
        Self::new(vec![0.0; order + 1], SeriesSource::Combination)
    }

    pub fn coefficients(&self) -> &[f64] {
        &self.coefficients
    }

    pub fn coefficient(&self, i: usize) -> f64 {
        self.coefficients.get(i).copied().unwrap_or(0.0)
    }

    pub fn order(&self) -> usize {
        self.coefficients.len() - 1
    }

    pub fn source(&self) -> SeriesSource {
        self.source
    }

    /// `a * self + b * other`, truncated to the shorter order.
    pub fn combine(&self, a: f64, other: &SeriesExpansion, b: f64) -> SeriesExpansion {
        let coefficients = self
            .coefficients
            .iter()
            .zip(&other.coefficients)
            .map(|(&x, &y)| a * x + b * y)
            .collect();
        SeriesExpansion::new(coefficients, SeriesSource::Combination)
    }

    pub fn scale(&self, a: f64) -> SeriesExpansion {
        SeriesExpansion::new(
            self.coefficients.iter().map(|&x| a * x).collect(),
            SeriesSource::Combination,
        )
    }
}

fn check_order(what: &'static str, power: u8, order: usize) -> Result<()> {
    if order < power as usize || order == 0 {
        return Err(Error::Range {
            what,
            value: order as i64,
            range: "order >= power",
        });
    }
    Ok(())
}

/// Expansion of `(arcsin t)^power` for `power` in `1..=4`, degree `order`.
pub fn arcsin_series(power: u8, order: usize) -> Result<SeriesExpansion> {
    if !(1..=4).contains(&power) {
        return Err(Error::Range {
            what: "arcsin_series power",
            value: power as i64,
            range: "1..=4",
        });
    }
    check_order("arcsin_series order", power, order)?;
    let w = wallis_table(order + 1);
    let mut c = vec![0.0; order + 1];
    let source = match power {
        1 => {
            for (n, i) in odd_indices(order) {
                c[i] = w[2 * n] / i as f64;
            }
            SeriesSource::ArcsinPow1
        }
        2 => {
            for (n, i) in even_indices(order) {
                let nf = n as f64;
                c[i] = 0.5 / (w[2 * n] * nf * nf);
            }
            SeriesSource::ArcsinPow2
        }
        3 => {
            // 6 O_n^(2) w_2n / (2n+1); O_n accumulates 1/(2k+1)^2 for k < n
            let mut odd = KahanSum::new();
            for (n, i) in odd_indices(order) {
                c[i] = 6.0 * odd.value() * w[2 * n] / i as f64;
                let d = (2 * n + 1) as f64;
                odd.add(1.0 / (d * d));
            }
            SeriesSource::ArcsinPow3
        }
        _ => {
            // (3/2) H_{n-1}^(2) / (w_2n n^2)
            let mut h = KahanSum::new();
            for (n, i) in even_indices(order) {
                let nf = n as f64;
                c[i] = 1.5 * h.value() / (w[2 * n] * nf * nf);
                h.add(1.0 / (nf * nf));
            }
            SeriesSource::ArcsinPow4
        }
    };
    Ok(SeriesExpansion::new(c, source))
}

/// Expansion of `(arsinh t)^power` for `power` in `{1, 2}`: the arcsin
/// coefficients with alternating signs.
pub fn arsinh_series(power: u8, order: usize) -> Result<SeriesExpansion> {
    if !(1..=2).contains(&power) {
        return Err(Error::Range {
            what: "arsinh_series power",
            value: power as i64,
            range: "1..=2",
        });
    }
    let base = arcsin_series(power, order)?;
    let coefficients = base
        .coefficients
        .iter()
        .enumerate()
        .map(|(i, &x)| {
            // t^(2n+1) gets (-1)^n, t^(2n) gets (-1)^(n-1)
            let n = if power == 1 {
                i / 2
            } else {
                (i / 2).saturating_sub(1)
            };
            if n % 2 == 0 {
                x
            } else {
                -x
            }
        })
        .collect();
    let source = if power == 1 {
        SeriesSource::Arsinh
    } else {
        SeriesSource::ArsinhSq
    };
    Ok(SeriesExpansion::new(coefficients, source))
}

/// Termwise `int_0^t f(y)/y dy`: coefficient `i` is divided by `i`.
pub fn integrate_over_y(s: &SeriesExpansion) -> Result<SeriesExpansion> {
    let c0 = s.coefficients[0];
    if c0 != 0.0 {
        return Err(Error::Domain {
            what: "integrate_over_y constant term",
            value: c0,
            domain: "{0}",
        });
    }
    let coefficients = s
        .coefficients
        .iter()
        .enumerate()
        .map(|(i, &x)| if i == 0 { 0.0 } else { x / i as f64 })
        .collect();
    Ok(SeriesExpansion::new(
        coefficients,
        SeriesSource::IntegratedKernel,
    ))
}

/// Applies the Wallis operator coefficientwise: `t^m` maps to
/// `(pi/2) w_m t^m` for even `m` and `w_m t^m` for odd `m`.
pub fn wallis_image(s: &SeriesExpansion) -> SeriesExpansion {
    let w = wallis_table(s.order());
    let coefficients = s
        .coefficients
        .iter()
        .zip(&w)
        .enumerate()
        .map(|(m, (&a, &wm))| {
            if m % 2 == 0 {
                a * std::f64::consts::FRAC_PI_2 * wm
            } else {
                a * wm
            }
        })
        .collect();
    SeriesExpansion::new(coefficients, SeriesSource::WallisImage)
}

/// Truncated power series value at `t` in `[-1, 1]`.
pub fn evaluate_series(s: &SeriesExpansion, t: f64) -> f64 {
    compensated_horner(&s.coefficients, t)
}

/// Cauchy product truncated to the smaller of the two orders.
pub fn convolve(a: &SeriesExpansion, b: &SeriesExpansion) -> SeriesExpansion {
    convolve_with(a, b, Execution::default())
}

pub fn convolve_with(a: &SeriesExpansion, b: &SeriesExpansion, exec: Execution) -> SeriesExpansion {
    let order = a.order().min(b.order());
    let coefficients = exec.map_range(order + 1, |k| {
        let lhs = &a.coefficients[..=k];
        let rhs: Vec<f64> = b.coefficients[..=k].iter().rev().copied().collect();
        compensated_dot(lhs, &rhs)
    });
    SeriesExpansion::new(coefficients, SeriesSource::ConvolutionOracle)
}

/// `(n, 2n+1)` for every odd index up to `order`.
fn odd_indices(order: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..)
        .map(|n| (n, 2 * n + 1))
        .take_while(move |&(_, i)| i <= order)
}

/// `(n, 2n)` for every positive even index up to `order`.
fn even_indices(order: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..)
        .map(|n| (n, 2 * n))
        .take_while(move |&(_, i)| i <= order)
}
