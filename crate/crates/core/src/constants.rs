//! Reference constants. Zeta values at odd arguments and Catalan's constant
//! are computed by series on first use; everything else is a closed form.

use std::sync::OnceLock;

use serde::Serialize;

use crate::special::{catalan_series, zeta_oracle};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    ClosedForm,
    SeriesOracle,
}

impl Provenance {
    pub fn as_str(self) -> &'static str {
        match self {
            Provenance::ClosedForm => "closed-form",
            Provenance::SeriesOracle => "series-oracle",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Constant {
    pub value: f64,
    pub provenance: Provenance,
}

impl Constant {
    const fn closed(value: f64) -> Self {
        Self {
            value,
            provenance: Provenance::ClosedForm,
        }
    }

    const fn series(value: f64) -> Self {
        Self {
            value,
            provenance: Provenance::SeriesOracle,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConstantsTable {
    pub pi: Constant,
    pub zeta2: Constant,
    pub zeta3: Constant,
    pub zeta4: Constant,
    pub zeta5: Constant,
    pub catalan: Constant,
    pub ln2: Constant,
    pub phi: Constant,
    pub ln_phi: Constant,
}

impl ConstantsTable {
    fn compute() -> Self {
        use std::f64::consts::{LN_2, PI};
        let phi = (1.0 + 5f64.sqrt()) / 2.0;
        let oracle = |s| zeta_oracle(s).expect("supported zeta argument");
        Self {
            pi: Constant::closed(PI),
            zeta2: Constant::closed(PI * PI / 6.0),
            zeta3: Constant::series(oracle(3)),
            zeta4: Constant::closed(PI.powi(4) / 90.0),
            zeta5: Constant::series(oracle(5)),
            catalan: Constant::series(catalan_series()),
            ln2: Constant::closed(LN_2),
            phi: Constant::closed(phi),
            ln_phi: Constant::closed(phi.ln()),
        }
    }

    /// `(name, constant)` in display order.
    pub fn entries(&self) -> [(&'static str, Constant); 9] {
        [
            ("pi", self.pi),
            ("zeta2", self.zeta2),
            ("zeta3", self.zeta3),
            ("zeta4", self.zeta4),
            ("zeta5", self.zeta5),
            ("catalan", self.catalan),
            ("ln2", self.ln2),
            ("phi", self.phi),
            ("ln_phi", self.ln_phi),
        ]
    }
}

/// Process-wide table, computed once.
pub fn constants() -> &'static ConstantsTable {
    static TABLE: OnceLock<ConstantsTable> = OnceLock::new();
    TABLE.get_or_init(ConstantsTable::compute)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn ulps(a: f64, b: f64) -> f64 {
        (a - b).abs() / (f64::EPSILON * b.abs())
    }

    #[test]
    fn closed_form_relations() {
        let c = constants();
        assert!(ulps(c.zeta2.value, c.pi.value.powi(2) / 6.0) <= 2.0);
        assert!(ulps(c.zeta4.value, c.pi.value.powi(4) / 90.0) <= 2.0);
        let phi = c.phi.value;
        assert!(ulps(phi * phi, phi + 1.0) <= 2.0);
        assert!(ulps(1.0 / phi, (5f64.sqrt() - 1.0) / 2.0) <= 2.0);
        assert!(ulps(1.0 / (phi * phi), (3.0 - 5f64.sqrt()) / 2.0) <= 2.0);
        assert_eq!(c.pi.value, PI);
    }

    #[test]
    fn provenance_tags() {
        let c = constants();
        assert_eq!(c.zeta4.provenance, Provenance::ClosedForm);
        assert_eq!(c.catalan.provenance, Provenance::SeriesOracle);
        assert_eq!(c.zeta3.provenance, Provenance::SeriesOracle);
        assert_eq!(c.entries().len(), 9);
    }

    #[test]
    fn series_constants_match_known_digits() {
        let c = constants();
        assert!((c.catalan.value - 0.915_965_594_177_219).abs() < 2e-16);
        assert!((c.zeta3.value - 1.202_056_903_159_594_2).abs() < 1e-13);
        assert!((c.zeta5.value - 1.036_927_755_143_37).abs() < 1e-13);
    }
}
