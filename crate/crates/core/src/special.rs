//! Combinatorial quantities and series evaluation of the polylogarithm
//! family on the unit interval.
//!
//! All six functions share one summation loop parameterised by
//! [`Family`]: `Li_s` sums every power, the Legendre `chi_s` keeps the odd
//! powers, and `Ti_s` is the sign-alternating odd part.

use serde::Serialize;

use crate::compensated::{DoubleDouble, KahanSum};
use crate::constants::constants;
use crate::error::{Error, Result};

/// Summation stops once the remainder bound drops below this.
pub const TAIL_TOLERANCE: f64 = 1e-14;
/// Arguments above `1 - NEAR_ONE_GAP` (and below 1) carry a precision warning.
pub const NEAR_ONE_GAP: f64 = 1e-3;
/// Hard cap on the number of summed terms.
pub const MAX_TERMS: u64 = 1_000_000;
/// Terms used by the direct alternating sum for `Ti_3(1)`.
pub const TI3_UNIT_TERMS: u64 = 100_000;

const DOUBLE_FACTORIAL_MAX: i64 = 300;

/// `n!!` with the conventions `(-1)!! = 0!! = 1`.
pub fn double_factorial(n: i64) -> Result<f64> {
    if !(-1..=DOUBLE_FACTORIAL_MAX).contains(&n) {
        return Err(Error::Range {
            what: "double_factorial",
            value: n,
            range: "-1..=300",
        });
    }
    let mut acc = 1.0;
    let mut k = n;
    while k > 1 {
        acc *= k as f64;
        k -= 2;
    }
    Ok(acc)
}

/// `w_n = (n-1)!!/n!!`, the normalised Wallis integral of `sin^n`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct WallisCoefficient {
    pub n: usize,
    pub value: f64,
}

/// Running product `w_n = w_{n-2} (n-1)/n` carried in double-double, so
/// each returned value is rounded exactly once.
fn wallis_running(max_n: usize) -> impl Iterator<Item = f64> {
    let mut even = DoubleDouble::ONE;
    let mut odd = DoubleDouble::ONE;
    (0..=max_n).map(move |n| {
        if n < 2 {
            return 1.0;
        }
        let slot = if n % 2 == 0 { &mut even } else { &mut odd };
        *slot = slot.mul_f64((n - 1) as f64).div_f64(n as f64);
        slot.to_f64()
    })
}

pub fn wallis_coefficient(n: usize) -> WallisCoefficient {
    let value = wallis_running(n).last().unwrap_or(1.0);
    WallisCoefficient { n, value }
}

/// `[w_0, w_1, ..., w_max_n]`.
pub fn wallis_table(max_n: usize) -> Vec<f64> {
    wallis_running(max_n).collect()
}

/// `int_0^{pi/2} sin^n x dx`, i.e. `(pi/2) w_n` for even `n` and `w_n` for odd.
pub fn wallis_integral(n: usize) -> f64 {
    let w = wallis_coefficient(n).value;
    if n.is_multiple_of(2) {
        std::f64::consts::FRAC_PI_2 * w
    } else {
        w
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct HarmonicNumber {
    pub n: u64,
    pub m: u32,
    pub value: f64,
}

impl HarmonicNumber {
    pub fn new(n: u64, m: u32) -> Self {
        Self {
            n,
            m,
            value: harmonic(n, m),
        }
    }
}

/// `H_n^(m) = sum_{k=1}^n 1/k^m`, forward summation.
pub fn harmonic(n: u64, m: u32) -> f64 {
    (1..=n)
        .map(|k| (k as f64).powi(-(m as i32)))
        .collect::<KahanSum>()
        .value()
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct OddHarmonic {
    pub n: u64,
    pub value: f64,
}

impl OddHarmonic {
    pub fn new(n: u64) -> Self {
        Self {
            n,
            value: odd_harmonic2(n),
        }
    }
}

/// `O_n^(2) = sum_{k=0}^{n-1} 1/(2k+1)^2`.
pub fn odd_harmonic2(n: u64) -> f64 {
    (0..n)
        .map(|k| {
            let d = (2 * k + 1) as f64;
            1.0 / (d * d)
        })
        .collect::<KahanSum>()
        .value()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Li2,
    Li3,
    Chi2,
    Chi3,
    Ti2,
    Ti3,
}

impl Family {
    pub const ALL: [Family; 6] = [
        Family::Li2,
        Family::Li3,
        Family::Chi2,
        Family::Chi3,
        Family::Ti2,
        Family::Ti3,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Li2 => "li2",
            Family::Li3 => "li3",
            Family::Chi2 => "chi2",
            Family::Chi3 => "chi3",
            Family::Ti2 => "ti2",
            Family::Ti3 => "ti3",
        }
    }

    pub fn from_name(name: &str) -> Option<Family> {
        Family::ALL.into_iter().find(|f| f.name() == name)
    }

    fn order(self) -> i32 {
        match self {
            Family::Li2 | Family::Chi2 | Family::Ti2 => 2,
            Family::Li3 | Family::Chi3 | Family::Ti3 => 3,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub enum PrecisionWarning {
    /// `t` lies in `(1 - 1e-3, 1)`: the geometric tail bound is weak and
    /// the term count may have hit [`MAX_TERMS`].
    NearUnitArgument { t: f64, tail_bound: f64 },
}

/// A series value together with how it was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SeriesValue {
    pub value: f64,
    pub terms: u64,
    /// Bound on the omitted remainder (0 for closed forms).
    pub tail_bound: f64,
    pub warning: Option<PrecisionWarning>,
}

impl SeriesValue {
    fn exact(value: f64) -> Self {
        Self {
            value,
            terms: 0,
            tail_bound: 0.0,
            warning: None,
        }
    }
}

fn check_unit(what: &'static str, t: f64) -> Result<()> {
    if (0.0..=1.0).contains(&t) {
        Ok(())
    } else {
        Err(Error::Domain {
            what,
            value: t,
            domain: "[0, 1]",
        })
    }
}

/// Evaluates one member of the family at `t` in `[0, 1]`.
pub fn evaluate(family: Family, t: f64) -> Result<SeriesValue> {
    check_unit(family.name(), t)?;
    if t == 0.0 {
        return Ok(SeriesValue::exact(0.0));
    }
    if t == 1.0 {
        return Ok(at_unit(family));
    }
    let (value, terms, tail_bound) = sum_series(family, t, MAX_TERMS);
    let warning =
        (t > 1.0 - NEAR_ONE_GAP).then_some(PrecisionWarning::NearUnitArgument { t, tail_bound });
    Ok(SeriesValue {
        value,
        terms,
        tail_bound,
        warning,
    })
}

fn at_unit(family: Family) -> SeriesValue {
    let c = constants();
    match family {
        Family::Li2 => SeriesValue::exact(c.zeta2.value),
        Family::Li3 => SeriesValue::exact(c.zeta3.value),
        Family::Chi2 => SeriesValue::exact(0.75 * c.zeta2.value),
        Family::Chi3 => SeriesValue::exact(0.875 * c.zeta3.value),
        Family::Ti2 => SeriesValue {
            value: c.catalan.value,
            terms: CATALAN_EULER_TERMS as u64,
            tail_bound: 0.0,
            warning: None,
        },
        Family::Ti3 => {
            let (value, terms, tail_bound) = sum_series(Family::Ti3, 1.0, TI3_UNIT_TERMS);
            SeriesValue {
                value,
                terms,
                tail_bound,
                warning: None,
            }
        }
    }
}

/// Bound on the remainder after `n` terms.
fn tail_bound(family: Family, t: f64, n: u64) -> f64 {
    let s = family.order();
    match family {
        Family::Li2 | Family::Li3 => {
            let next = (n + 1) as f64;
            let geometric = if t < 1.0 {
                t.powf(next) / ((1.0 - t) * next.powi(s))
            } else {
                f64::INFINITY
            };
            let plain = 1.0 / ((s - 1) as f64 * (n as f64).powi(s - 1));
            geometric.min(plain)
        }
        Family::Chi2 | Family::Chi3 => {
            let next = (2 * n + 1) as f64;
            let geometric = if t < 1.0 {
                t.powf(next) / ((1.0 - t * t) * next.powi(s))
            } else {
                f64::INFINITY
            };
            let last = (2 * n - 1) as f64;
            let plain = 1.0 / (2.0 * (s - 1) as f64 * last.powi(s - 1));
            geometric.min(plain)
        }
        // alternating with decreasing magnitudes: first omitted term
        Family::Ti2 | Family::Ti3 => {
            let next = (2 * n + 1) as f64;
            t.powf(next) / next.powi(s)
        }
    }
}

fn sum_series(family: Family, t: f64, cap: u64) -> (f64, u64, f64) {
    let s = family.order();
    let odd_only = !matches!(family, Family::Li2 | Family::Li3);
    let alternating = matches!(family, Family::Ti2 | Family::Ti3);
    let step = if odd_only { t * t } else { t };
    let mut power = t;
    let mut acc = KahanSum::new();
    let mut n = 0u64;
    let mut bound = f64::INFINITY;
    while n < cap {
        n += 1;
        let index = if odd_only { 2 * n - 1 } else { n } as f64;
        let mut term = power / index.powi(s);
        if alternating && n.is_multiple_of(2) {
            term = -term;
        }
        acc.add(term);
        power *= step;
        // checking every step is cheap next to the powi above
        if n.is_multiple_of(8) || n == cap {
            bound = tail_bound(family, t, n);
            if bound < TAIL_TOLERANCE {
                break;
            }
        }
    }
    if !n.is_multiple_of(8) && n != cap {
        bound = tail_bound(family, t, n);
    }
    (acc.value(), n, bound)
}

macro_rules! family_fn {
    ($(#[$doc:meta])* $name:ident, $family:expr) => {
        $(#[$doc])*
        pub fn $name(t: f64) -> Result<f64> {
            evaluate($family, t).map(|v| v.value)
        }
    };
}

family_fn!(
    /// Dilogarithm `sum t^n/n^2` on `[0, 1]`.
    li2,
    Family::Li2
);
family_fn!(
    /// Trilogarithm `sum t^n/n^3` on `[0, 1]`.
    li3,
    Family::Li3
);
family_fn!(
    /// Legendre chi of order 2: `sum t^(2n-1)/(2n-1)^2`.
    chi2,
    Family::Chi2
);
family_fn!(
    /// Legendre chi of order 3.
    chi3,
    Family::Chi3
);
family_fn!(
    /// Inverse tangent integral `sum (-1)^(n-1) t^(2n-1)/(2n-1)^2`.
    ti2,
    Family::Ti2
);
family_fn!(ti3, Family::Ti3);

pub(crate) const CATALAN_EULER_TERMS: usize = 96;

/// `sum_{n>=0} (-1)^n a(n)` for a completely monotone `a` via Euler's
/// transformation, realised as repeated averaging of consecutive partial
/// sums. Averaging never subtracts nearby values, so it is stable.
pub fn euler_transformed_alternating<F: Fn(usize) -> f64>(a: F, terms: usize) -> f64 {
    let mut partial = Vec::with_capacity(terms + 1);
    let mut acc = KahanSum::new();
    for n in 0..=terms {
        let term = if n % 2 == 0 { a(n) } else { -a(n) };
        acc.add(term);
        partial.push(acc.value());
    }
    while partial.len() > 1 {
        for i in 0..partial.len() - 1 {
            partial[i] = 0.5 * (partial[i] + partial[i + 1]);
        }
        partial.pop();
    }
    partial[0]
}

/// Catalan's constant `G = sum (-1)^n/(2n+1)^2`.
pub(crate) fn catalan_series() -> f64 {
    euler_transformed_alternating(
        |n| {
            let d = (2 * n + 1) as f64;
            1.0 / (d * d)
        },
        CATALAN_EULER_TERMS,
    )
}

/// `zeta(s)` for `s` in `{2, 3, 4, 5}`. Even arguments use `pi`; odd ones a
/// 10^5-term partial sum plus the Euler–Maclaurin remainder
/// `N^(1-s)/(s-1) - N^(-s)/2 + s N^(-s-1)/12`.
pub fn zeta_oracle(s: u32) -> Result<f64> {
    use std::f64::consts::PI;
    match s {
        2 => Ok(PI * PI / 6.0),
        4 => Ok(PI.powi(4) / 90.0),
        3 | 5 => Ok(zeta_odd_tail_corrected(s as i32, 100_000)),
        _ => Err(Error::Range {
            what: "zeta_oracle",
            value: s as i64,
            range: "{2, 3, 4, 5}",
        }),
    }
}

fn zeta_odd_tail_corrected(s: i32, n: u64) -> f64 {
    // smallest terms first
    let mut acc: KahanSum = (1..=n).rev().map(|k| (k as f64).powi(-s)).collect();
    let nf = n as f64;
    let sf = s as f64;
    acc.add(nf.powi(1 - s) / (sf - 1.0));
    acc.add(-0.5 * nf.powi(-s));
    acc.add(sf / 12.0 * nf.powi(-s - 1));
    acc.value()
}
