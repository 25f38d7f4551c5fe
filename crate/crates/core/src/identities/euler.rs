//! Slowly converging Euler sums: compensated partial sum plus an analytic
//! estimate of the remainder.
//!
//! The remainders below are second-order expansions. With `O_n^(2) =
//! pi^2/8 - 1/(4n) + O(n^-3)` and `H_{n-1}^(2) = zeta(2) - 1/n - 1/(2n^2) + ...`
//! the first omitted order is `N^-3`, far below the 1e-6 budget at `N = 10^6`.

use std::f64::consts::PI;
use std::fmt;
use std::sync::Arc;

use crate::compensated::KahanSum;
use crate::constants::constants;
use crate::error::{Error, Result};
use crate::exec::Execution;

pub const DEFAULT_TERMS: u64 = 1_000_000;

const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

type TermFn = Arc<dyn Fn(u64) -> f64 + Send + Sync>;
type TailFn = Arc<dyn Fn(u64) -> f64 + Send + Sync>;

/// How the summand is produced. The harmonic-type sequences carry a running
/// prefix sum, so they are generated in one sequential pass.
#[derive(Clone)]
pub enum EulerTerm {
    /// `O_n^(2) / (2n+1)^2`, summed over `n = 0..=N`.
    OddHarmonicOverOddSquare,
    /// `H_{n-1}^(2) / n^2`, summed over `n = 1..=N`.
    ShiftedHarmonicOverSquare,
    /// `(1 + 1/3 + ... + 1/(2n-1))^2 / n^2`, summed over `n = 1..=N`.
    SquaredOddHarmonicOverSquare,
    /// `H_n^(2) / n^2`, summed over `n = 1..=N`.
    HarmonicOverSquare,
    /// Any stateless summand `n -> a(n)`, summed over `n = 1..=N` in parallel chunks.
    Custom(TermFn),
}

impl fmt::Debug for EulerTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EulerTerm::OddHarmonicOverOddSquare => f.write_str("OddHarmonicOverOddSquare"),
            EulerTerm::ShiftedHarmonicOverSquare => f.write_str("ShiftedHarmonicOverSquare"),
            EulerTerm::SquaredOddHarmonicOverSquare => f.write_str("SquaredOddHarmonicOverSquare"),
            EulerTerm::HarmonicOverSquare => f.write_str("HarmonicOverSquare"),
            EulerTerm::Custom(_) => f.write_str("Custom(..)"),
        }
    }
}

#[derive(Clone)]
pub struct EulerSumSpec {
    pub name: String,
    pub term: EulerTerm,
    /// Remainder estimate as a function of the last summed index.
    pub tail_correction: Option<TailFn>,
    pub terms: u64,
    pub target: f64,
}

impl fmt::Debug for EulerSumSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("EulerSumSpec")
            .field("name", &self.name)
            .field("term", &self.term)
            .field("tail_correction", &self.tail_correction.is_some())
            .field("terms", &self.terms)
            .field("target", &self.target)
            .finish()
    }
}

fn zeta2() -> f64 {
    constants().zeta2.value
}

fn zeta4() -> f64 {
    constants().zeta4.value
}

/// `zeta(2)/N - (zeta(2) + 1)/(2N^2)`, the remainder shared by both
/// `H^(2)`-weighted sums.
fn harmonic_square_tail(n: u64) -> f64 {
    let n = n as f64;
    zeta2() / n - (zeta2() + 1.0) / (2.0 * n * n)
}

impl EulerSumSpec {
    /// `sum_{n>=0} O_n^(2)/(2n+1)^2 = pi^4/384`.
    pub fn odd_harmonic_over_odd_square() -> Self {
        let c = PI * PI / 8.0;
        Self {
            name: "sum O_n/(2n+1)^2".into(),
            term: EulerTerm::OddHarmonicOverOddSquare,
            tail_correction: Some(Arc::new(move |n| {
                let n = n as f64;
                c * (1.0 / (4.0 * n) - 1.0 / (4.0 * n * n)) - 1.0 / (32.0 * n * n)
            })),
            terms: DEFAULT_TERMS,
            target: PI.powi(4) / 384.0,
        }
    }

    /// `sum_{n>=1} H_{n-1}^(2)/n^2 = pi^4/120`.
    pub fn shifted_harmonic_over_square() -> Self {
        Self {
            name: "sum H_{n-1}^(2)/n^2".into(),
            term: EulerTerm::ShiftedHarmonicOverSquare,
            tail_correction: Some(Arc::new(harmonic_square_tail)),
            terms: DEFAULT_TERMS,
            target: PI.powi(4) / 120.0,
        }
    }

    /// De Doelder: `sum_{n>=1} (1 + 1/3 + ... + 1/(2n-1))^2 / n^2 = pi^4/32`.
    ///
    /// The odd harmonic number grows like `L(n) = ln(n)/2 + ln 2 + gamma/2`,
    /// so the remainder is `(L^2 + L + 1/2)/N - L^2/(2N^2)` with `L = L(N)`.
    pub fn squared_odd_harmonic_over_square() -> Self {
        Self {
            name: "sum O_n^2/n^2".into(),
            term: EulerTerm::SquaredOddHarmonicOverSquare,
            tail_correction: Some(Arc::new(|n| {
                let nf = n as f64;
                let l = 0.5 * nf.ln() + std::f64::consts::LN_2 + 0.5 * EULER_GAMMA;
                (l * l + l + 0.5) / nf - l * l / (2.0 * nf * nf)
            })),
            terms: DEFAULT_TERMS,
            target: PI.powi(4) / 32.0,
        }
    }

    /// `sum_{n>=1} H_n^(2)/n^2 = (7/4) zeta(4)`.
    pub fn harmonic_over_square() -> Self {
        Self {
            name: "sum H_n^(2)/n^2".into(),
            term: EulerTerm::HarmonicOverSquare,
            tail_correction: Some(Arc::new(harmonic_square_tail)),
            terms: DEFAULT_TERMS,
            target: 1.75 * zeta4(),
        }
    }

    pub fn custom<F>(name: impl Into<String>, term: F, terms: u64, target: f64) -> Self
    where
        F: Fn(u64) -> f64 + Send + Sync + 'static,
    {
        Self {
            name: name.into(),
            term: EulerTerm::Custom(Arc::new(term)),
            tail_correction: None,
            terms,
            target,
        }
    }

    pub fn with_terms(mut self, terms: u64) -> Self {
        self.terms = terms;
        self
    }

    pub fn with_tail<F>(mut self, tail: F) -> Self
    where
        F: Fn(u64) -> f64 + Send + Sync + 'static,
    {
        self.tail_correction = Some(Arc::new(tail));
        self
    }

    pub fn without_tail(mut self) -> Self {
        self.tail_correction = None;
        self
    }

    /// The compensated partial sum up to index `terms`, no correction.
    pub fn partial_sum(&self, exec: Execution) -> f64 {
        let n_max = self.terms;
        match &self.term {
            EulerTerm::OddHarmonicOverOddSquare => {
                let mut odd = KahanSum::new();
                let mut acc = KahanSum::new();
                for n in 0..=n_max {
                    let d = (2 * n + 1) as f64;
                    let inv = 1.0 / (d * d);
                    acc.add(odd.value() * inv);
                    odd.add(inv);
                }
                acc.value()
            }
            EulerTerm::ShiftedHarmonicOverSquare | EulerTerm::HarmonicOverSquare => {
                let inclusive = matches!(self.term, EulerTerm::HarmonicOverSquare);
                let mut h = KahanSum::new();
                let mut acc = KahanSum::new();
                for n in 1..=n_max {
                    let nf = n as f64;
                    let inv = 1.0 / (nf * nf);
                    if inclusive {
                        h.add(inv);
                        acc.add(h.value() * inv);
                    } else {
                        acc.add(h.value() * inv);
                        h.add(inv);
                    }
                }
                acc.value()
            }
            EulerTerm::SquaredOddHarmonicOverSquare => {
                let mut odd = KahanSum::new();
                let mut acc = KahanSum::new();
                for n in 1..=n_max {
                    odd.add(1.0 / (2 * n - 1) as f64);
                    let (o, nf) = (odd.value(), n as f64);
                    acc.add(o * o / (nf * nf));
                }
                acc.value()
            }
            EulerTerm::Custom(f) => exec.sum_range(1, n_max, |n| f(n)),
        }
    }
}

pub fn euler_sum(spec: &EulerSumSpec) -> Result<f64> {
    euler_sum_with(spec, Execution::default())
}

/// Partial sum to `spec.terms` plus the tail correction, if any.
pub fn euler_sum_with(spec: &EulerSumSpec, exec: Execution) -> Result<f64> {
    if spec.terms < 10 {
        return Err(Error::Range {
            what: "euler_sum terms",
            value: spec.terms as i64,
            range: ">= 10",
        });
    }
    let mut acc = KahanSum::new();
    acc.add(spec.partial_sum(exec));
    if let Some(tail) = &spec.tail_correction {
        acc.add(tail(spec.terms));
    }
    let value = acc.value();
    if !value.is_finite() {
        return Err(Error::Evaluation {
            tag: spec.name.clone(),
            node: spec.terms as f64,
            value,
        });
    }
    Ok(value)
}
