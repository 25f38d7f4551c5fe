use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use dilogkit::identities::{register_all_with, SUITE_VERSION};
use dilogkit::quadrature::{
    arccos_kernel_transform, arctan_arccot_integral, cot_kernel_integral, lemma4_transform,
    wallis_transform, Integrand, QuadratureConfig,
};
use dilogkit::special::{evaluate, Family, PrecisionWarning};
use dilogkit::{constants, Execution, VerificationReport};

#[derive(Parser)]
#[command(name = "dilogkit", version)]
#[command(
    about = "Evaluate dilogarithm-family functions and Wallis-type transforms, and verify identities"
)]
struct Cli {
    /// Quadrature panel count (overrides DILOGKIT_PANELS)
    #[arg(long, global = true)]
    panels: Option<usize>,

    /// Run everything on the calling thread
    #[arg(long, global = true)]
    sequential: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a function or transform at t
    Eval {
        /// li2, li3, chi2, chi3, ti2, ti3, W:<integrand>, K:<integrand>, lemma4, cot3, cot4, atan-acot
        function: String,
        /// Argument in [0, 1]; omitted for cot3, cot4 and atan-acot
        t: Option<f64>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run identity cases (all of them with --all or no ids)
    Verify {
        ids: Vec<String>,
        #[arg(long, conflicts_with = "ids")]
        all: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long, short)]
        output: Option<PathBuf>,
        /// Write 0 for wall_time_s so repeated runs are byte-identical
        #[arg(long)]
        no_timing: bool,
    },
    /// Tabulate a function on from, from+step, ..., to
    Table {
        function: String,
        from: f64,
        to: f64,
        step: f64,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Print the constants table with provenance
    Constants {
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

/// Exit status plus message for anything that stops a command early.
struct Failure {
    code: u8,
    message: String,
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        message: message.into(),
    }
}

fn io_failure(e: io::Error) -> Failure {
    Failure {
        code: 1,
        message: format!("i/o error: {e}"),
    }
}

/// 15 significant digits, printed as the shortest decimal that reads back
/// to the rounded value.
fn fmt15(v: f64) -> String {
    if !v.is_finite() {
        return v.to_string();
    }
    let rounded: f64 = format!("{v:.14e}").parse().expect("formatted float parses");
    let a = rounded.abs();
    if rounded != 0.0 && !(1e-5..1e16).contains(&a) {
        format!("{rounded:e}")
    } else {
        format!("{rounded}")
    }
}

#[derive(Debug, Clone, Serialize)]
struct Evaluation {
    function: String,
    t: Option<f64>,
    value: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    error_estimate: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    terms: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    warning: Option<String>,
}

enum Target {
    Series(Family),
    Wallis(Integrand),
    Kernel(Integrand),
    Lemma4,
    Cot(u32),
    AtanAcot,
}

impl Target {
    fn parse(name: &str) -> Result<Self, Failure> {
        if let Some(family) = Family::from_name(name) {
            return Ok(Target::Series(family));
        }
        let integrand = |spec: &str| {
            Integrand::from_name(spec).ok_or_else(|| {
                usage(format!(
                    "unknown integrand `{spec}`; expected one of {}",
                    Integrand::NAMES.join(", ")
                ))
            })
        };
        match name {
            "lemma4" => Ok(Target::Lemma4),
            "cot3" => Ok(Target::Cot(3)),
            "cot4" => Ok(Target::Cot(4)),
            "atan-acot" => Ok(Target::AtanAcot),
            _ => {
                if let Some(spec) = name.strip_prefix("W:") {
                    Ok(Target::Wallis(integrand(spec)?))
                } else if let Some(spec) = name.strip_prefix("K:") {
                    Ok(Target::Kernel(integrand(spec)?))
                } else {
                    Err(usage(format!("unknown function `{name}`")))
                }
            }
        }
    }

    fn takes_argument(&self) -> bool {
        !matches!(self, Target::Cot(_) | Target::AtanAcot)
    }

    fn evaluate(
        &self,
        name: &str,
        t: Option<f64>,
        cfg: &QuadratureConfig,
    ) -> Result<Evaluation, Failure> {
        let t = match (self.takes_argument(), t) {
            (true, Some(t)) => Some(t),
            (true, None) => return Err(usage(format!("`{name}` needs an argument t in [0, 1]"))),
            (false, Some(_)) => return Err(usage(format!("`{name}` takes no argument"))),
            (false, None) => None,
        };
        let arg = t.unwrap_or(0.0);
        let mut out = Evaluation {
            function: name.to_string(),
            t,
            value: 0.0,
            error_estimate: None,
            terms: None,
            warning: None,
        };
        let quad = match self {
            Target::Series(family) => {
                let v = evaluate(*family, arg).map_err(|e| usage(e.to_string()))?;
                out.value = v.value;
                out.terms = Some(v.terms);
                out.warning =
                    v.warning
                        .map(|PrecisionWarning::NearUnitArgument { t, tail_bound }| {
                            format!("t = {t} is within 1e-3 of 1; remainder bound {tail_bound:e}")
                        });
                return Ok(out);
            }
            Target::Wallis(f) => wallis_transform(f, arg, cfg),
            Target::Kernel(f) => arccos_kernel_transform(f, arg, cfg),
            Target::Lemma4 => lemma4_transform(arg, cfg),
            Target::Cot(k) => cot_kernel_integral(*k, cfg),
            Target::AtanAcot => arctan_arccot_integral(cfg),
        };
        let r = quad.map_err(|e| match e {
            dilogkit::Error::Domain { .. } => usage(e.to_string()),
            e => Failure {
                code: 1,
                message: e.to_string(),
            },
        })?;
        out.value = r.value;
        out.error_estimate = Some(r.error_estimate);
        Ok(out)
    }
}

fn emit(output: Option<&PathBuf>, body: &str) -> Result<(), Failure> {
    match output {
        Some(path) => fs::write(path, body).map_err(io_failure),
        None => io::stdout()
            .lock()
            .write_all(body.as_bytes())
            .map_err(io_failure),
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report serializes");
    s.push('\n');
    s
}

fn cmd_eval(
    function: &str,
    t: Option<f64>,
    format: Format,
    cfg: &QuadratureConfig,
) -> Result<(), Failure> {
    let target = Target::parse(function)?;
    let ev = target.evaluate(function, t, cfg)?;
    if let Some(w) = &ev.warning {
        eprintln!("warning: {w}");
    }
    let body = match format {
        Format::Json => to_json(&ev),
        Format::Text => match ev.error_estimate {
            Some(err) => format!("{}\nerror_estimate {}\n", fmt15(ev.value), fmt15(err)),
            None => format!("{}\n", fmt15(ev.value)),
        },
        Format::Csv => {
            let t = ev.t.map(fmt15).unwrap_or_default();
            let err = ev.error_estimate.map(fmt15).unwrap_or_default();
            format!(
                "function,t,value,error_estimate\n{},{t},{},{err}\n",
                ev.function,
                fmt15(ev.value)
            )
        }
    };
    emit(None, &body)
}

#[derive(Serialize)]
struct SuiteReport<'a> {
    suite_version: &'static str,
    cases: &'a [VerificationReport],
}

fn verify_text(reports: &[VerificationReport]) -> String {
    let mut s = String::new();
    for r in reports {
        let point = match r.worst_point {
            Some(t) => fmt15(t),
            None => "-".to_string(),
        };
        s.push_str(&format!(
            "{} {:<20} worst {:<22} at {:<8} tol {:e}\n",
            if r.passed { "PASS" } else { "FAIL" },
            r.case_id,
            fmt15(r.worst_abs_error),
            point,
            r.tolerance,
        ));
        if let Some(d) = &r.diagnostic {
            s.push_str(&format!("     {d}\n"));
        }
    }
    if reports.len() > 1 {
        let passed = reports.iter().filter(|r| r.passed).count();
        s.push_str(&format!("{passed}/{} passed\n", reports.len()));
    }
    s
}

fn verify_csv(reports: &[VerificationReport]) -> String {
    let mut s =
        String::from("id,passed,worst_abs_error,worst_point,tolerance,evaluations,wall_time_s\n");
    for r in reports {
        s.push_str(&format!(
            "{},{},{},{},{},{},{}\n",
            r.case_id,
            r.passed,
            fmt15(r.worst_abs_error),
            r.worst_point.map(fmt15).unwrap_or_default(),
            r.tolerance,
            r.evaluations,
            r.wall_time,
        ));
    }
    s
}

fn cmd_verify(
    ids: &[String],
    format: Format,
    output: Option<&PathBuf>,
    no_timing: bool,
    cfg: &QuadratureConfig,
    exec: Execution,
) -> Result<bool, Failure> {
    let registry = register_all_with(cfg);
    let selection: Vec<&str> = ids.iter().map(String::as_str).collect();
    let selection = (!selection.is_empty()).then_some(selection.as_slice());
    let mut reports = registry
        .run_with(selection, exec)
        .map_err(|e| usage(e.to_string()))?;
    if no_timing {
        for r in &mut reports {
            r.wall_time = 0.0;
        }
    }
    let body = match format {
        Format::Text => verify_text(&reports),
        Format::Csv => verify_csv(&reports),
        Format::Json => to_json(&SuiteReport {
            suite_version: SUITE_VERSION,
            cases: &reports,
        }),
    };
    emit(output, &body)?;
    Ok(reports.iter().all(|r| r.passed))
}

/// `from, from + step, ..., to`; the last point snaps to `to` when the
/// range is a whole number of steps up to rounding.
fn grid(from: f64, to: f64, step: f64) -> Result<Vec<f64>, Failure> {
    if ![from, to, step].iter().all(|x| x.is_finite()) || !(0.0 <= from && from <= to && to <= 1.0)
    {
        return Err(usage(format!(
            "bad range {from}..{to}: need 0 <= from <= to <= 1"
        )));
    }
    if step <= 0.0 {
        return Err(usage(format!("step must be positive, got {step}")));
    }
    let steps = (to - from) / step;
    if steps > 1e6 {
        return Err(usage(format!("{steps:.0} rows requested; at most 1e6")));
    }
    let n = (steps + 1e-9).floor() as usize;
    let mut pts: Vec<f64> = (0..=n).map(|i| from + i as f64 * step).collect();
    if let Some(last) = pts.last_mut() {
        if (*last - to).abs() <= 1e-9 * step.max(1.0) || *last > to {
            *last = to;
        }
    }
    Ok(pts)
}

#[allow(clippy::too_many_arguments)]
fn cmd_table(
    function: &str,
    from: f64,
    to: f64,
    step: f64,
    format: Format,
    output: Option<&PathBuf>,
    cfg: &QuadratureConfig,
    exec: Execution,
) -> Result<(), Failure> {
    let target = Target::parse(function)?;
    if !target.takes_argument() {
        return Err(usage(format!(
            "`{function}` takes no argument and cannot be tabulated"
        )));
    }
    let pts = grid(from, to, step)?;
    let rows = exec.map(&pts, |&t| target.evaluate(function, Some(t), cfg));
    let rows: Vec<Evaluation> = rows.into_iter().collect::<Result<_, _>>()?;
    let body = match format {
        Format::Json => to_json(&rows),
        Format::Csv | Format::Text => {
            let mut s = String::from("t,value\n");
            for r in &rows {
                s.push_str(&format!(
                    "{},{}\n",
                    fmt15(r.t.unwrap_or_default()),
                    fmt15(r.value)
                ));
            }
            s
        }
    };
    emit(output, &body)
}

fn cmd_constants(format: Format) -> Result<(), Failure> {
    let entries = constants().entries();
    let body = match format {
        Format::Text => entries
            .iter()
            .map(|(name, c)| {
                format!(
                    "{name:<8} {:<20} {}\n",
                    fmt15(c.value),
                    c.provenance.as_str()
                )
            })
            .collect(),
        Format::Csv => {
            let mut s = String::from("name,value,provenance\n");
            for (name, c) in &entries {
                s.push_str(&format!(
                    "{name},{},{}\n",
                    fmt15(c.value),
                    c.provenance.as_str()
                ));
            }
            s
        }
        Format::Json => {
            let map: serde_json::Map<String, serde_json::Value> = entries
                .iter()
                .map(|(name, c)| {
                    (
                        name.to_string(),
                        serde_json::to_value(c).expect("constant serializes"),
                    )
                })
                .collect();
            to_json(&map)
        }
    };
    emit(None, &body)
}

fn quadrature_config(panels: Option<usize>) -> Result<QuadratureConfig, Failure> {
    let cfg = QuadratureConfig::from_env().map_err(|e| usage(e.to_string()))?;
    match panels {
        Some(p) => {
            let cfg = cfg.with_panels(p);
            cfg.validate().map_err(|e| usage(e.to_string()))?;
            Ok(cfg)
        }
        None => Ok(cfg),
    }
}

fn run(cli: Cli) -> Result<bool, Failure> {
    let cfg = quadrature_config(cli.panels)?;
    let exec = if cli.sequential {
        Execution::Sequential
    } else {
        Execution::default()
    };
    match cli.command {
        Command::Eval {
            function,
            t,
            format,
        } => cmd_eval(&function, t, format, &cfg).map(|_| true),
        Command::Verify {
            ids,
            all: _,
            format,
            output,
            no_timing,
        } => cmd_verify(&ids, format, output.as_ref(), no_timing, &cfg, exec),
        Command::Table {
            function,
            from,
            to,
            step,
            format,
            output,
        } => cmd_table(
            &function,
            from,
            to,
            step,
            format,
            output.as_ref(),
            &cfg,
            exec,
        )
        .map(|_| true),
        Command::Constants { format } => cmd_constants(format).map(|_| true),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
