//! `colombeau`: exact computations with generalized numbers and quaternions.
//!
//! Exit codes: 0 for a verdict, 1 for usage errors, 2 for computation errors
//! (and for a failing `selftest`).

mod commands;
mod config;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use colombeau::gennum::default_window;
use num_rational::BigRational;

use crate::config::{parse_list, parse_window, Config};
use crate::report::{render_human, CliError, Outcome};

#[derive(Parser, Debug)]
#[command(name = "colombeau", version, about = "Exact arithmetic for Colombeau generalized numbers and quaternions")]
struct Cli {
    /// Relative order W for inverses and square roots (default 16).
    #[arg(long, global = true, value_parser = parse_window)]
    window: Option<BigRational>,
    /// Print the JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// `key=value` file with `default_window` and `verify_n_list`.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Comma-separated sample indices for counterexample checks.
    #[arg(long = "verify-n", global = true, value_parser = |s: &str| parse_list(s).map(SampleList))]
    verify_n: Option<SampleList>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate an expression and print its canonical form.
    Eval {
        #[arg(long = "expr", short = 'e')]
        expr: String,
    },
    /// Unit / zero-divisor classification.
    Classify { expr: String },
    /// Sharp valuation and norm.
    Norm { expr: String },
    /// Sharp distance between two values.
    Dist { a: String, b: String },
    /// q-positivity of `a`, or `a >= b` when `b` is given.
    Order { a: String, b: Option<String> },
    /// Quaternion operations.
    Quat {
        #[arg(value_enum)]
        op: QuatOp,
        x: String,
        y: Option<String>,
    },
    /// Finitely generated ideals.
    Ideal {
        #[arg(value_enum)]
        op: IdealOp,
        /// Generators separated by `;`.
        #[arg(long)]
        gens: String,
        /// Element for `member`.
        #[arg(long)]
        elem: Option<String>,
    },
    /// Identity-theorem checks for generalized polynomials.
    Holo {
        #[arg(value_enum)]
        op: HoloOp,
        /// Coefficients `a0;a1;...` in increasing degree.
        #[arg(long)]
        poly: String,
        #[arg(long)]
        at: String,
    },
    /// Constant annihilator of a multivariate polynomial.
    Polyann {
        #[arg(long)]
        vars: usize,
        /// Terms `(<expr>)*x1^a*x2^b` separated by commas.
        #[arg(long)]
        poly: String,
        /// Random sandwich trials for verification.
        #[arg(long, default_value_t = 20)]
        trials: usize,
    },
    /// Run the conformance suites.
    Selftest,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum QuatOp {
    Mul,
    Conj,
    Norm,
    Classify,
    Decompose,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum IdealOp {
    Dense,
    Ann,
    Member,
    Whole,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum HoloOp {
    Check,
    Quadratic,
}

/// One `--verify-n` value holding the whole comma-separated list.
#[derive(Clone, Debug)]
struct SampleList(Vec<BigRational>);

/// Settings after merging flags over the config file over defaults.
pub struct Settings {
    pub window: BigRational,
    pub verify_n: Vec<BigRational>,
}

fn settings(cli: &Cli) -> Result<Settings, CliError> {
    let file = match &cli.config {
        Some(path) => Config::load(path).map_err(CliError::Usage)?,
        None => Config::default(),
    };
    let window = cli.window.clone().or(file.default_window).unwrap_or_else(default_window);
    let verify_n = cli
        .verify_n
        .clone()
        .map(|l| l.0)
        .or(file.verify_n_list)
        .unwrap_or_else(|| [1, 2, 5, 16].into_iter().map(|n| BigRational::from_integer(n.into())).collect());
    Ok(Settings { window, verify_n })
}

fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let s = settings(cli)?;
    match &cli.command {
        Command::Eval { expr } => commands::eval(expr, &s),
        Command::Classify { expr } => commands::classify(expr, &s),
        Command::Norm { expr } => commands::norm(expr, &s),
        Command::Dist { a, b } => commands::dist(a, b, &s),
        Command::Order { a, b } => commands::order(a, b.as_deref(), &s),
        Command::Quat { op, x, y } => commands::quat(*op, x, y.as_deref(), &s),
        Command::Ideal { op, gens, elem } => commands::ideal(*op, gens, elem.as_deref(), &s),
        Command::Holo { op, poly, at } => commands::holo(*op, poly, at, &s),
        Command::Polyann { vars, poly, trials } => commands::polyann(*vars, poly, *trials, &s),
        Command::Selftest => Ok(commands::selftest()),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(outcome) => {
            if cli.json {
                println!("{}", serde_json::to_string(&outcome.report).expect("report serializes"));
            } else {
                print!("{}", render_human(&outcome.report));
            }
            ExitCode::from(if outcome.ok { 0 } else { 2 })
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Compute(e)) => {
            let report = report::error_report(&e);
            if cli.json {
                println!("{}", serde_json::to_string(&report).expect("report serializes"));
            } else {
                eprintln!("error ({}): {e}", e.kind());
            }
            ExitCode::from(2)
        }
    }
}
