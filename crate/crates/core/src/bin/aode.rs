use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use serde_json::json;

use aode::curve::{import_parametrization, PlaneCurve};
use aode::harness::{generate, MAX_GEN_DEGREE};
use aode::parse::{parse_instance, parse_ratfunc};
use aode::report::{certificates_hold, fmt_integer_form, solve_document};
use aode::solver::{solve_autonomous, verify_solution, Options, Status, DEFAULT_MAX_DEGREE};
use aode::Error;

/// Rational solutions of autonomous first-order difference equations
/// F(y(x), y(x+1)) = 0.
#[derive(Parser)]
#[command(name = "aode", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve the equation in FILE.
    Solve {
        file: PathBuf,
        /// Use the parametrization in this file instead of computing one.
        #[arg(long)]
        parametrization: Option<PathBuf>,
    },
    /// Compute the degree bounds N and M only.
    Bound { file: PathBuf },
    /// Print a random instance with a planted solution.
    Gen {
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 2)]
        deg: usize,
    },
    /// Check whether a rational function solves the equation in FILE.
    Verify {
        file: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        candidate: String,
    },
    /// Solve with an imported parametrization.
    ParamImport {
        file: PathBuf,
        #[arg(long)]
        parametrization: PathBuf,
    },
}

const EXIT_NULL: u8 = 1;
const EXIT_UNSUPPORTED: u8 = 2;
const EXIT_INPUT: u8 = 3;
const EXIT_INTERNAL: u8 = 4;

fn max_degree() -> u64 {
    std::env::var("AODE_MAX_DEGREE").ok().and_then(|v| v.parse().ok()).unwrap_or(DEFAULT_MAX_DEGREE)
}

fn read(path: &Path) -> Result<String, Error> {
    std::fs::read_to_string(path).map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())))
}

fn print(v: &serde_json::Value) {
    // a closed pipe is not worth a panic
    let _ = writeln!(std::io::stdout().lock(), "{}", serde_json::to_string_pretty(v).expect("serializable"));
}

fn fail(e: &Error) -> ExitCode {
    print(&json!({ "status": "Error", "error": e.code(), "message": e.to_string() }));
    ExitCode::from(if e.is_internal() { EXIT_INTERNAL } else { EXIT_INPUT })
}

fn solve(file: &Path, param: Option<&Path>, bound_only: bool) -> Result<ExitCode, Error> {
    let start = Instant::now();
    let f = parse_instance(&read(file)?)?;
    let mut opts = Options { max_degree: max_degree(), bound_only, ..Options::default() };
    if let Some(p) = param {
        let curve = PlaneCurve::new(f.clone())?;
        opts.parametrization = Some(import_parametrization(&curve, &read(p)?)?);
    }
    let report = solve_autonomous(&f, &opts)?;
    if !certificates_hold(&f, &report) {
        return Err(Error::Internal("a reported solution failed re-verification".into()));
    }
    let mut doc = solve_document(&f, &report, start.elapsed().as_millis());
    if bound_only && report.bounds.is_some() && report.status == Status::Solved {
        doc["status"] = json!("Bounded");
    }
    print(&doc);
    Ok(match report.status {
        Status::Solved | Status::ConstantsOnly => ExitCode::SUCCESS,
        Status::Null => ExitCode::from(EXIT_NULL),
        Status::UnsupportedParametrization => ExitCode::from(EXIT_UNSUPPORTED),
    })
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Solve { file, parametrization } => solve(&file, parametrization.as_deref(), false),
        Command::Bound { file } => solve(&file, None, true),
        Command::ParamImport { file, parametrization } => solve(&file, Some(&parametrization), false),
        Command::Gen { seed, deg } => {
            if !(1..=MAX_GEN_DEGREE).contains(&deg) {
                return Err(Error::InvalidInput(format!("--deg must be between 1 and {MAX_GEN_DEGREE}")));
            }
            let _ = write!(std::io::stdout().lock(), "{}", generate(seed, deg)?.to_text());
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { file, candidate } => {
            let f = parse_instance(&read(&file)?)?;
            let y = parse_ratfunc(&candidate, "x")?;
            let ok = verify_solution(&f, &y);
            let (num, den) = fmt_integer_form(&y, "x");
            print(&json!({ "num": num, "den": den, "verified": ok }));
            Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(EXIT_NULL) })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => fail(&e),
    }
}
