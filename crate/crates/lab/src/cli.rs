//! The `dioph` command line: configuration ingestion, experiment
//! orchestration, and report emission.
//!
//! Exit codes: 0 success, 1 verification failure (any failed report or
//! witness), 2 configuration error, 3 precision exhaustion.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::Value;

use dioph_core::bounds::{full_report, Lambda, ReportInput};
use dioph_core::lift::{default_tolerance, lift_and_verify, required_tau, LiftError};
use dioph_core::liouville::LiouvilleSeries;
use dioph_core::rational::{parse_rational, Rational};
use dioph_core::real::{RefinableReal, DEFAULT_PRECISION_CAP};
use dioph_core::scan::ScanConfig;

use crate::config::{load_manifold, load_point, ManifoldDoc};
use crate::parallel::{scan_records_parallel, verify_lcm_parallel, verify_lemma_parallel};
use crate::report;

#[derive(Parser)]
#[command(
    name = "dioph",
    version,
    about = "Exact-arithmetic experiments in simultaneous rational approximation on products of polynomial curves"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Structured,
    Csv,
}

#[derive(Subcommand)]
pub enum Command {
    /// Dimension bounds for a manifold at a parameter λ
    Bounds {
        /// Manifold document (variables, or {"general":{"s":…,"d_max":…}})
        #[arg(long)]
        manifold: PathBuf,
        /// Approximation parameter, an exact decimal or fraction
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Best-approximation record scan of a point
    Scan {
        /// Point document (rational vector or constructed series)
        #[arg(long)]
        point: PathBuf,
        #[arg(long)]
        qmax: u64,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Divisibility-criterion verification on a single curve
    VerifyLemma {
        /// Manifold document with exactly one variable group
        #[arg(long)]
        curve: PathBuf,
        #[arg(long)]
        point: PathBuf,
        #[arg(long)]
        xmax: u64,
        /// Explicit threshold constant; exceeding the derived valid constant
        /// marks the run heuristic
        #[arg(long)]
        c_override: Option<String>,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Lcm-structure verification on a product manifold
    VerifyLcm {
        #[arg(long)]
        manifold: PathBuf,
        #[arg(long)]
        point: PathBuf,
        #[arg(long)]
        lambda: String,
        #[arg(long, default_value = "0.05")]
        epsilon: String,
        #[arg(long)]
        qmax: u64,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Construct a number of prescribed approximation exponent
    Liouville {
        #[arg(long, default_value_t = 2)]
        base: u32,
        /// Target exponent, an exact decimal or fraction (> 1)
        #[arg(long)]
        tau: String,
        #[arg(long)]
        terms: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Lift witness: a schedule denominator q raised to q^d approximates
    /// every polynomial coordinate
    Lift {
        #[arg(long)]
        manifold: PathBuf,
        #[arg(long)]
        lambda: String,
        /// Series terms to build; the witness sits at index terms - 1
        #[arg(long)]
        terms: usize,
        #[arg(long, default_value_t = 2)]
        base: u32,
        /// Exponent tolerance (default 0.1 up to index 3, 0.02 beyond)
        #[arg(long)]
        epsilon: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Config(String),
    #[error("cannot write output: {0}")]
    Io(#[from] std::io::Error),
    #[error("precision exhausted: {0}")]
    Precision(String),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) | CliError::Io(_) => 2,
            CliError::Precision(_) => 3,
        }
    }
}

impl From<crate::config::ConfigError> for CliError {
    fn from(e: crate::config::ConfigError) -> Self {
        CliError::Config(e.to_string())
    }
}

/// Outcome of a successfully executed command.
#[derive(Default)]
struct RunStatus {
    verification_failed: bool,
    precision_exhausted: bool,
}

impl RunStatus {
    fn exit_code(&self) -> i32 {
        if self.verification_failed {
            1
        } else if self.precision_exhausted {
            3
        } else {
            0
        }
    }
}

/// Parses the arguments and runs the selected command, returning the process
/// exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return 2;
        }
    };
    match execute(cli.command) {
        Ok(status) => status.exit_code(),
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

fn parse_decimal_arg(field: &str, s: &str) -> Result<Rational, CliError> {
    parse_rational(s).map_err(|e| CliError::Config(format!("--{field}: {e}")))
}

fn parse_lambda(s: &str) -> Result<Lambda, CliError> {
    Lambda::new(parse_decimal_arg("lambda", s)?)
        .map_err(|e| CliError::Config(format!("--lambda: {e}")))
}

fn emit(out: Option<&Path>, content: &str) -> Result<(), CliError> {
    match out {
        Some(path) => {
            std::fs::write(path, content)?;
        }
        None => {
            let stdout = std::io::stdout();
            let mut lock = stdout.lock();
            lock.write_all(content.as_bytes())?;
            if !content.ends_with('\n') {
                lock.write_all(b"\n")?;
            }
        }
    }
    Ok(())
}

fn emit_json(out: Option<&Path>, value: &Value) -> Result<(), CliError> {
    emit(out, &serde_json::to_string_pretty(value).unwrap())
}

fn structured_only(command: &str, format: Format) -> Result<(), CliError> {
    if format == Format::Csv {
        return Err(CliError::Config(format!(
            "--format csv is not available for `{command}`; its report is a structured object"
        )));
    }
    Ok(())
}

fn execute(command: Command) -> Result<RunStatus, CliError> {
    match command {
        Command::Bounds {
            manifold,
            lambda,
            out,
            format,
        } => {
            structured_only("bounds", format)?;
            let lambda = parse_lambda(&lambda)?;
            let doc = load_manifold(&manifold)?;
            let report = match &doc {
                ManifoldDoc::General { general } => {
                    if general.s == 0 || general.d_max == 0 {
                        return Err(CliError::Config(
                            "field `general`: s and d_max must be positive".into(),
                        ));
                    }
                    full_report(
                        ReportInput::General {
                            s: general.s,
                            d_max: general.d_max,
                        },
                        &lambda,
                    )
                }
                ManifoldDoc::Product { .. } => {
                    let spec = doc.to_spec()?;
                    let profile = spec.degree_profile();
                    full_report(ReportInput::Product(&profile), &lambda)
                }
            };
            emit_json(out.as_deref(), &report::bound_report_json(&report))?;
            Ok(RunStatus::default())
        }

        Command::Scan {
            point,
            qmax,
            workers,
            out,
            format,
        } => {
            let zeta = load_point(&point)?.to_reals()?;
            let config = ScanConfig::records(qmax)
                .map_err(|e| CliError::Config(format!("--qmax: {e}")))?;
            let outcome = scan_records_parallel(&zeta, &config, workers)
                .map_err(|e| CliError::Config(e.to_string()))?;
            match format {
                Format::Csv => emit(out.as_deref(), &report::scan_csv(&outcome, zeta.len()))?,
                Format::Structured => emit_json(out.as_deref(), &report::scan_json(&outcome))?,
            }
            Ok(RunStatus {
                precision_exhausted: !outcome.unresolved.is_empty(),
                ..Default::default()
            })
        }

        Command::VerifyLemma {
            curve,
            point,
            xmax,
            c_override,
            workers,
            out,
            format,
        } => {
            let spec = load_manifold(&curve)?.to_spec()?;
            if spec.s() != 1 {
                return Err(CliError::Config(format!(
                    "--curve: expected one variable group, got {}",
                    spec.s()
                )));
            }
            let group = &spec.groups()[0];
            let zeta = single_coordinate(&point)?;
            let c = c_override
                .map(|s| parse_decimal_arg("c-override", &s))
                .transpose()?;
            let outcome = verify_lemma_parallel(
                group,
                &zeta,
                xmax,
                c,
                DEFAULT_PRECISION_CAP,
                workers,
            )
            .map_err(|e| CliError::Config(e.to_string()))?;
            match format {
                Format::Csv => emit(out.as_deref(), &report::lemma_csv(&outcome))?,
                Format::Structured => emit_json(out.as_deref(), &report::lemma_json(&outcome))?,
            }
            Ok(RunStatus {
                verification_failed: !outcome.all_passed,
                precision_exhausted: !outcome.unresolved.is_empty(),
            })
        }

        Command::VerifyLcm {
            manifold,
            point,
            lambda,
            epsilon,
            qmax,
            workers,
            out,
            format,
        } => {
            let spec = load_manifold(&manifold)?.to_spec()?;
            let lambda = parse_lambda(&lambda)?;
            let eps = parse_decimal_arg("epsilon", &epsilon)?;
            let zeta = load_point(&point)?.to_reals()?;
            if zeta.len() != spec.s() as usize {
                return Err(CliError::Config(format!(
                    "--point: expected {} coordinates, got {}",
                    spec.s(),
                    zeta.len()
                )));
            }
            let outcome = verify_lcm_parallel(
                &spec,
                &zeta,
                &lambda,
                &eps,
                qmax,
                DEFAULT_PRECISION_CAP,
                workers,
            )
            .map_err(|e| CliError::Config(e.to_string()))?;
            match format {
                Format::Csv => emit(
                    out.as_deref(),
                    &report::lcm_csv(&outcome, spec.s() as usize),
                )?,
                Format::Structured => emit_json(out.as_deref(), &report::lcm_json(&outcome))?,
            }
            Ok(RunStatus {
                verification_failed: !outcome.all_passed,
                precision_exhausted: !outcome.unresolved.is_empty(),
            })
        }

        Command::Liouville {
            base,
            tau,
            terms,
            out,
            format,
        } => {
            let tau = parse_decimal_arg("tau", &tau)?;
            if terms < 2 {
                return Err(CliError::Config("--terms: need at least 2".into()));
            }
            let series = LiouvilleSeries::with_unit_digits(base, tau)
                .map_err(|e| CliError::Config(format!("--base/--tau: {e}")))?;
            match format {
                Format::Csv => emit(out.as_deref(), &report::liouville_csv(&series, terms))?,
                Format::Structured => {
                    emit_json(out.as_deref(), &report::liouville_json(&series, terms))?
                }
            }
            Ok(RunStatus::default())
        }

        Command::Lift {
            manifold,
            lambda,
            terms,
            base,
            epsilon,
            out,
            format,
        } => {
            structured_only("lift", format)?;
            let spec = load_manifold(&manifold)?.to_spec()?;
            let lambda = parse_lambda(&lambda)?;
            if terms < 3 {
                return Err(CliError::Config(
                    "--terms: need at least 3 (the witness sits at terms - 1 ≥ 2)".into(),
                ));
            }
            let n = terms - 1;
            let eps_tol = match epsilon {
                Some(s) => parse_decimal_arg("epsilon", &s)?,
                None => default_tolerance(n),
            };
            let tau = required_tau(&spec, &lambda);
            let zeta = lift_coordinates(&spec, base, &tau)?;
            let witness = match lift_and_verify(&spec, &zeta, &lambda, n, &eps_tol) {
                Ok(w) => w,
                Err(e @ LiftError::PrecisionExhausted { .. }) => {
                    return Err(CliError::Precision(e.to_string()))
                }
                Err(e) => return Err(CliError::Config(e.to_string())),
            };
            emit_json(out.as_deref(), &report::lift_json(&witness))?;
            Ok(RunStatus {
                verification_failed: !witness.passed,
                ..Default::default()
            })
        }
    }
}

fn single_coordinate(point: &Path) -> Result<RefinableReal, CliError> {
    let mut reals = load_point(point)?.to_reals()?;
    if reals.len() != 1 {
        return Err(CliError::Config(format!(
            "--point: expected a single coordinate, got {}",
            reals.len()
        )));
    }
    Ok(reals.remove(0))
}

/// Coordinate series for the lift: distinct digits when the base offers
/// them, cycling through the available digits otherwise (duplicated
/// coordinates still witness the simultaneous system).
fn lift_coordinates(
    spec: &dioph_core::manifold::ManifoldSpec,
    base: u32,
    tau: &Rational,
) -> Result<Vec<RefinableReal>, CliError> {
    if base < 2 {
        return Err(CliError::Config("--base: must be at least 2".into()));
    }
    (0..spec.s())
        .map(|i| {
            let digit = 1 + i % (base - 1);
            LiouvilleSeries::new(base, tau.clone(), vec![], digit)
                .map(RefinableReal::Liouville)
                .map_err(|e| CliError::Config(e.to_string()))
        })
        .collect()
}
