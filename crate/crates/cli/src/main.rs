use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand};
use taxicab_cli::commands::{self, Subject};
use taxicab_cli::plot::{self, PlotOptions};
use taxicab_cli::report::{MeasureReport, Quantity};
use taxicab_cli::verify::{self, Suite, VerifyRow};
use taxicab_cli::{CliError, CliResult};

#[derive(Debug, Parser)]
#[command(name = "taxicab", version, about = "Measures of curves and solids under the taxicab metric")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Compute one quantity for a shape, a profile or a pair of tilt angles.
    #[command(group(ArgGroup::new("input").args(["shape", "profile"])))]
    Measure {
        #[arg(long, value_enum)]
        quantity: Quantity,
        /// Shape spec, e.g. '{"shape":"sphere","params":{"r":1}}'
        #[arg(long)]
        shape: Option<String>,
        /// Profile spec, e.g. '{"catalog":"taxicab_parabola","params":{"a":1,"h":3}}'
        #[arg(long)]
        profile: Option<String>,
        /// Tilt about the first axis (area_scale only)
        #[arg(long, allow_negative_numbers = true)]
        alpha: Option<f64>,
        /// Tilt about the second axis (area_scale only)
        #[arg(long, allow_negative_numbers = true)]
        beta: Option<f64>,
        /// Read --alpha and --beta in degrees instead of radians
        #[arg(long)]
        degrees: bool,
        /// Add a brute-force oracle with this many cells
        #[arg(long, value_name = "N")]
        oracle: Option<usize>,
        /// Emit a JSON report instead of CSV
        #[arg(long)]
        json: bool,
    },
    /// Cross-check closed forms against quadrature and oracles.
    Verify {
        #[arg(long, value_enum)]
        suite: Option<Suite>,
        /// Bound on |analytic - quadrature|
        #[arg(long, default_value_t = verify::DEFAULT_QUAD_TOL)]
        tol: f64,
    },
    /// Print an oracle convergence table for a profile.
    Table {
        #[arg(long, value_enum)]
        quantity: Quantity,
        #[arg(long)]
        profile: String,
        /// Comma-separated, strictly ascending cell counts
        #[arg(long)]
        ns: String,
    },
    /// Write an SVG plot of a profile or of a shape's generating profile.
    #[command(group(ArgGroup::new("input").args(["shape", "profile"]).required(true)))]
    Plot {
        #[arg(long)]
        shape: Option<String>,
        #[arg(long)]
        profile: Option<String>,
        /// Second profile drawn dashed on the same axes
        #[arg(long)]
        overlay: Option<String>,
        /// Also draw the mirror image below the axis
        #[arg(long)]
        mirror: bool,
        #[arg(long)]
        out: PathBuf,
    },
}

fn emit(lines: &[String]) -> CliResult<()> {
    let mut out = io::stdout().lock();
    for l in lines {
        writeln!(out, "{l}").map_err(|e| CliError::Io(e.to_string()))?;
    }
    out.flush().map_err(|e| CliError::Io(e.to_string()))
}

fn run(cli: Cli) -> CliResult<()> {
    let cfg = commands::quadrature_config()?;
    match cli.command {
        Command::Measure { quantity, shape, profile, alpha, beta, degrees, oracle, json } => {
            let angles_given = alpha.is_some() || beta.is_some() || degrees;
            let (subject, params) = match (shape, profile) {
                (Some(s), None) => {
                    let (s, v) = commands::parse_shape(&s)?;
                    (Subject::Shape(s), v)
                }
                (None, Some(p)) => {
                    let (f, v) = commands::parse_profile(&p)?;
                    (Subject::Profile(f), v)
                }
                _ if quantity == Quantity::AreaScale => {
                    let (alpha, beta) = (alpha.unwrap_or(0.0), beta.unwrap_or(0.0));
                    (Subject::Angles { alpha, beta, degrees }, commands::angle_params(alpha, beta, degrees))
                }
                _ => return Err(CliError::Parse("measure needs --shape or --profile".into())),
            };
            if angles_given && !matches!(subject, Subject::Angles { .. }) {
                return Err(CliError::Parse("--alpha, --beta and --degrees apply only to area_scale".into()));
            }
            let report = commands::measure(quantity, &subject, params, oracle, &cfg)?;
            if json {
                emit(&[report.to_json()])
            } else {
                emit(&[MeasureReport::CSV_HEADER.to_string(), report.csv_row()])
            }
        }
        Command::Verify { suite, tol } => {
            if !(tol >= 0.0 && tol.is_finite()) {
                return Err(CliError::Parse(format!("--tol must be a finite non-negative number, got {tol}")));
            }
            let rows = verify::run(suite, tol, &cfg)?;
            let mut lines = vec![VerifyRow::CSV_HEADER.to_string()];
            lines.extend(rows.iter().map(VerifyRow::csv_row));
            emit(&lines)?;
            match rows.iter().filter(|r| !r.pass).count() {
                0 => Ok(()),
                n => Err(CliError::VerifyFailed(n)),
            }
        }
        Command::Table { quantity, profile, ns } => {
            let (f, _) = commands::parse_profile(&profile)?;
            let ns = commands::parse_ns(&ns)?;
            let rows = commands::table(quantity, &f, &ns, &cfg)?;
            let mut lines = vec![commands::TABLE_HEADER.to_string()];
            lines.extend(rows.iter().map(commands::table_csv_row));
            emit(&lines)
        }
        Command::Plot { shape, profile, overlay, mirror, out } => {
            let primary = match (shape, profile) {
                (Some(s), _) => commands::parse_shape(&s)?.0.profile()?,
                (None, Some(p)) => commands::parse_profile(&p)?.0,
                (None, None) => unreachable!("clap requires one input"),
            };
            let overlay = overlay.map(|o| commands::parse_profile(&o)).transpose()?.map(|(f, _)| f);
            let svg = plot::render(&primary, overlay.as_ref(), &PlotOptions { mirror });
            plot::write(&out, &svg)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("taxicab: {e}");
            e.into()
        }
    }
}
