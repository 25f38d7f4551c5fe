//! Registry of verifiable identities and the runner that checks them.
//!
//! Every case pairs two independently computed sides over a parameter grid.
//! Equalities and sums pass when the worst deviation stays within the
//! case tolerance; inequalities (`lhs >= rhs`) pass when no grid point
//! violates the bound by more than the tolerance.

mod euler;
mod registry;

use std::fmt;
use std::sync::Arc;
use std::time::Instant;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exec::Execution;

pub use euler::{euler_sum, euler_sum_with, EulerSumSpec, EulerTerm, DEFAULT_TERMS};
pub use registry::{
    dense_grid, register_all, register_all_with, standard_grid, QUADRATURE_TOL, SERIES_TOL, SUM_TOL,
};

/// Version tag written into serialized reports.
pub const SUITE_VERSION: &str = concat!("dilogkit-", env!("CARGO_PKG_VERSION"));

/// A grid point; `None` for parameter-free (constant) identities.
pub type Param = Option<f64>;

pub type Recipe = Arc<dyn Fn(Param) -> Result<f64> + Send + Sync>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CaseKind {
    Equality,
    /// Holds when `lhs >= rhs` at every grid point.
    Inequality,
    Sum,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ErrorMetric {
    Absolute,
    /// `|lhs - rhs| / max(|lhs|, |rhs|)`, zero when both sides vanish.
    Relative,
}

#[derive(Clone)]
pub struct IdentityCase {
    pub id: String,
    pub description: String,
    pub paper_anchor: String,
    pub kind: CaseKind,
    pub metric: ErrorMetric,
    pub grid: Vec<Param>,
    pub tolerance: f64,
    lhs: Recipe,
    rhs: Recipe,
}

impl fmt::Debug for IdentityCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("IdentityCase")
            .field("id", &self.id)
            .field("kind", &self.kind)
            .field("grid_len", &self.grid.len())
            .field("tolerance", &self.tolerance)
            .finish()
    }
}

impl IdentityCase {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        id: impl Into<String>,
        description: impl Into<String>,
        paper_anchor: impl Into<String>,
        kind: CaseKind,
        grid: Vec<Param>,
        tolerance: f64,
        lhs: Recipe,
        rhs: Recipe,
    ) -> Self {
        let case = Self {
            id: id.into(),
            description: description.into(),
            paper_anchor: paper_anchor.into(),
            kind,
            metric: ErrorMetric::Absolute,
            grid,
            tolerance,
            lhs,
            rhs,
        };
        assert!(
            case.tolerance > 0.0,
            "{}: tolerance must be positive",
            case.id
        );
        assert!(!case.grid.is_empty(), "{}: grid must be nonempty", case.id);
        case
    }

    pub fn with_metric(mut self, metric: ErrorMetric) -> Self {
        self.metric = metric;
        self
    }

    pub fn lhs(&self, p: Param) -> Result<f64> {
        (self.lhs)(p)
    }

    pub fn rhs(&self, p: Param) -> Result<f64> {
        (self.rhs)(p)
    }

    /// Deviation at one point: `|lhs - rhs|` (or relative), or for
    /// inequalities the amount by which `rhs` exceeds `lhs`.
    fn deviation(&self, lhs: f64, rhs: f64) -> f64 {
        match (self.kind, self.metric) {
            (CaseKind::Inequality, _) => (rhs - lhs).max(0.0),
            (_, ErrorMetric::Absolute) => (lhs - rhs).abs(),
            (_, ErrorMetric::Relative) => {
                let scale = lhs.abs().max(rhs.abs());
                if scale == 0.0 {
                    0.0
                } else {
                    (lhs - rhs).abs() / scale
                }
            }
        }
    }

    fn evaluate_point(&self, p: Param) -> std::result::Result<f64, String> {
        let describe = |side: &str, e: Error| format!("{side} at {}: {e}", fmt_param(p));
        let lhs = self.lhs(p).map_err(|e| describe("lhs", e))?;
        let rhs = self.rhs(p).map_err(|e| describe("rhs", e))?;
        if !lhs.is_finite() || !rhs.is_finite() {
            return Err(format!(
                "non-finite evaluation at {}: lhs={lhs}, rhs={rhs}",
                fmt_param(p)
            ));
        }
        Ok(self.deviation(lhs, rhs))
    }

    /// Evaluates the whole grid.
    pub fn verify(&self, exec: Execution) -> VerificationReport {
        let start = Instant::now();
        let outcomes = exec.map(&self.grid, |&p| (p, self.evaluate_point(p)));
        let mut worst = 0.0f64;
        let mut worst_point = self.grid[0];
        let mut diagnostic = None;
        let mut evaluations = 0u64;
        for (p, outcome) in outcomes {
            evaluations += 1;
            match outcome {
                Ok(dev) => {
                    if dev > worst {
                        worst = dev;
                        worst_point = p;
                    }
                }
                Err(msg) => {
                    diagnostic.get_or_insert(msg);
                    worst_point = p;
                    worst = f64::NAN;
                    break;
                }
            }
        }
        let passed = diagnostic.is_none() && worst <= self.tolerance;
        VerificationReport {
            case_id: self.id.clone(),
            paper_anchor: self.paper_anchor.clone(),
            worst_abs_error: worst,
            worst_point,
            tolerance: self.tolerance,
            passed,
            evaluations,
            wall_time: start.elapsed().as_secs_f64(),
            diagnostic,
        }
    }
}

fn fmt_param(p: Param) -> String {
    match p {
        Some(t) => format!("t={t}"),
        None => "constant".to_string(),
    }
}

/// Outcome of one case. Field names follow the JSON report schema.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    #[serde(rename = "id")]
    pub case_id: String,
    pub paper_anchor: String,
    pub worst_abs_error: f64,
    pub worst_point: Param,
    pub tolerance: f64,
    pub passed: bool,
    pub evaluations: u64,
    #[serde(rename = "wall_time_s")]
    pub wall_time: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub diagnostic: Option<String>,
}

/// Ordered collection of cases with unique ids.
#[derive(Debug, Clone, Default)]
pub struct Registry {
    cases: Vec<IdentityCase>,
}

impl Registry {
    pub fn new() -> Self {
        Self::default()
    }

    /// Panics on a duplicate id.
    pub fn push(&mut self, case: IdentityCase) {
        assert!(
            self.lookup(&case.id).is_none(),
            "duplicate identity id {}",
            case.id
        );
        self.cases.push(case);
    }

    pub fn len(&self) -> usize {
        self.cases.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cases.is_empty()
    }

    pub fn cases(&self) -> &[IdentityCase] {
        &self.cases
    }

    pub fn ids(&self) -> impl Iterator<Item = &str> {
        self.cases.iter().map(|c| c.id.as_str())
    }

    pub fn lookup(&self, id: &str) -> Option<&IdentityCase> {
        self.cases.iter().find(|c| c.id == id)
    }

    /// Resolves ids, failing on the first unknown one before anything runs.
    pub fn select<'a>(&'a self, ids: Option<&[&str]>) -> Result<Vec<&'a IdentityCase>> {
        match ids {
            None => Ok(self.cases.iter().collect()),
            Some(ids) => ids
                .iter()
                .map(|id| {
                    self.lookup(id)
                        .ok_or_else(|| Error::UnknownCase(id.to_string()))
                })
                .collect(),
        }
    }

    pub fn run(&self, ids: Option<&[&str]>) -> Result<Vec<VerificationReport>> {
        self.run_with(ids, Execution::default())
    }

    /// Runs the selected cases (all when `ids` is `None`). Reports come back
    /// in selection order whatever the execution policy.
    pub fn run_with(
        &self,
        ids: Option<&[&str]>,
        exec: Execution,
    ) -> Result<Vec<VerificationReport>> {
        let selected = self.select(ids)?;
        Ok(exec.map(&selected, |case| case.verify(exec)))
    }
}
