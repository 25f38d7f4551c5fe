//! Error-free transformations and compensated accumulation.
//!
//! Every series loop in the crate accumulates through [`KahanSum`]; the
//! Wallis recurrence runs in [`DoubleDouble`] so that a coefficient is
//! rounded once, at the end.

/// `a + b = s + e` exactly.
#[inline]
pub fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let e = (a - (s - bb)) + (b - bb);
    (s, e)
}

/// `a * b = p + e` exactly (needs a fused multiply-add).
#[inline]
pub fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    let e = a.mul_add(b, -p);
    (p, e)
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let e = b - (s - a);
    (s, e)
}

/// Compensated running sum (Kahan–Babuška/Neumaier variant).
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct KahanSum {
    sum: f64,
    compensation: f64,
}

impl KahanSum {
    pub const fn new() -> Self {
        Self {
            sum: 0.0,
            compensation: 0.0,
        }
    }

    #[inline]
    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.compensation += (self.sum - t) + x;
        } else {
            self.compensation += (x - t) + self.sum;
        }
        self.sum = t;
    }

    /// Merges another partial sum, keeping both compensation terms.
    pub fn merge(&mut self, other: KahanSum) {
        self.add(other.sum);
        self.add(other.compensation);
    }

    #[inline]
    pub fn value(&self) -> f64 {
        self.sum + self.compensation
    }
}

impl Extend<f64> for KahanSum {
    fn extend<I: IntoIterator<Item = f64>>(&mut self, iter: I) {
        for x in iter {
            self.add(x);
        }
    }
}

impl FromIterator<f64> for KahanSum {
    fn from_iter<I: IntoIterator<Item = f64>>(iter: I) -> Self {
        let mut s = KahanSum::new();
        s.extend(iter);
        s
    }
}

/// Unevaluated sum `hi + lo` with `|lo| <= ulp(hi)/2`; roughly 106 bits.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DoubleDouble {
    pub hi: f64,
    pub lo: f64,
}

impl DoubleDouble {
    pub const ONE: DoubleDouble = DoubleDouble { hi: 1.0, lo: 0.0 };

    pub fn mul_f64(self, b: f64) -> Self {
        let (p, e) = two_prod(self.hi, b);
        let e = e + self.lo * b;
        let (hi, lo) = quick_two_sum(p, e);
        Self { hi, lo }
    }

    pub fn div_f64(self, b: f64) -> Self {
        let q1 = self.hi / b;
        let (p, pe) = two_prod(q1, b);
        let (s, se) = two_sum(self.hi, -p);
        let se = se - pe + self.lo;
        let q2 = (s + se) / b;
        let (hi, lo) = quick_two_sum(q1, q2);
        Self { hi, lo }
    }

    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }
}

/// Compensated Horner scheme: evaluates `sum coeffs[i] * x^i` with an
/// error comparable to working in twice the precision.
pub fn compensated_horner(coeffs: &[f64], x: f64) -> f64 {
    let Some((&last, rest)) = coeffs.split_last() else {
        return 0.0;
    };
    let mut acc = last;
    let mut err = 0.0f64;
    for &c in rest.iter().rev() {
        let (p, pe) = two_prod(acc, x);
        let (s, se) = two_sum(p, c);
        acc = s;
        err = err.mul_add(x, pe + se);
    }
    acc + err
}

/// Dot product with compensated accumulation of products and sums.
pub fn compensated_dot(a: &[f64], b: &[f64]) -> f64 {
    let mut s = 0.0;
    let mut c = 0.0;
    for (&x, &y) in a.iter().zip(b) {
        let (p, pe) = two_prod(x, y);
        let (t, te) = two_sum(s, p);
        s = t;
        c += pe + te;
    }
    s + c
}
