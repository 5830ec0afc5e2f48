//! CLI for the generalized statistical complexity library: single-state
//! computation, figure-data emission, the square-well table and the
//! property-verification suites.
//!
//! Exit codes: 0 success, 1 verification failure, 2 argument error,
//! 3 numerical divergence, 4 I/O error.

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use renyic::complexity::{complexity, complexity_error};
use renyic::error::Error;
use renyic::order::OrderParam;
use renyic::quadrature::QuadratureSpec;
use renyic::quantum::{
    hydrogen_density, oscillator_density, square_well_density, HydrogenState, OscillatorState,
    Space, SquareWellState,
};
use renyic::sweep::{figure_rows, sqwell_table, FigureId};
use renyic::verify::{run_suite, Suite};

const EXIT_VERIFY_FAIL: u8 = 1;
const EXIT_ARGS: u8 = 2;
const EXIT_DIVERGENT: u8 = 3;
const EXIT_IO: u8 = 4;

#[derive(Parser)]
#[command(name = "renyic", version, about = "Generalized statistical complexity of probability densities")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the complexity of one quantum state; JSON on stdout.
    Compute(ComputeArgs),
    /// Emit one figure's sweep data as CSV.
    Figure(FigureArgs),
    /// Emit the square-well table alpha -> 2 g(alpha).
    TableSqwell(TableArgs),
    /// Run a property-verification suite.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SystemArg {
    Hydrogen,
    Oscillator,
    Sqwell,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SpaceArg {
    Position,
    Momentum,
}

impl From<SpaceArg> for Space {
    fn from(s: SpaceArg) -> Space {
        match s {
            SpaceArg::Position => Space::Position,
            SpaceArg::Momentum => Space::Momentum,
        }
    }
}

#[derive(Args)]
struct ComputeArgs {
    #[arg(long, value_enum)]
    system: SystemArg,
    /// Principal (hydrogen) or radial (oscillator) quantum number.
    #[arg(long)]
    n: Option<u32>,
    #[arg(long)]
    l: Option<u32>,
    #[arg(long)]
    m: Option<i64>,
    /// Square-well excitation index.
    #[arg(long)]
    k: Option<u32>,
    /// Oscillator potential strength.
    #[arg(long)]
    lambda: Option<f64>,
    #[arg(long, value_enum, default_value = "position")]
    space: SpaceArg,
    /// Entropy order alpha: a nonnegative float or `inf`.
    #[arg(long)]
    alpha: String,
    /// Entropy order beta: a nonnegative float or `inf`.
    #[arg(long)]
    beta: String,
    /// Relative quadrature tolerance.
    #[arg(long, default_value_t = 1e-10)]
    tol: f64,
}

#[derive(Args)]
struct FigureArgs {
    /// One of fig1a fig1b fig2a fig2b fig3a fig3b.
    id: String,
    /// Output CSV path (stdout when omitted).
    #[arg(short, long)]
    output: Option<PathBuf>,
    #[arg(long, default_value_t = 1e-10)]
    tol: f64,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
}

#[derive(Args)]
struct TableArgs {
    #[arg(short, long)]
    output: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "csv")]
    format: FormatArg,
    #[arg(long, default_value_t = 1e-10)]
    tol: f64,
}

#[derive(Args)]
struct VerifyArgs {
    /// symmetry | bounds | scaling | replica | nearcont | extremal | quantum | all
    #[arg(long, default_value = "all")]
    suite: String,
    /// Override every check tolerance.
    #[arg(long)]
    tol: Option<f64>,
}

#[derive(Serialize)]
struct ComputeOutput {
    system: String,
    state: String,
    space: String,
    alpha: String,
    beta: String,
    complexity: f64,
    r_alpha: f64,
    r_beta: f64,
    error_estimate: f64,
    units: &'static str,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Compute(args) => cmd_compute(&args),
        Command::Figure(args) => cmd_figure(&args),
        Command::TableSqwell(args) => cmd_table(&args),
        Command::Verify(args) => cmd_verify(&args),
    }
}

fn quad_spec(tol: f64) -> QuadratureSpec {
    QuadratureSpec {
        rel_tol: tol,
        ..QuadratureSpec::default()
    }
}

fn fail(code: u8, msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(code)
}

fn error_exit(err: &Error) -> ExitCode {
    let code = match err {
        Error::Divergent { .. } => EXIT_DIVERGENT,
        Error::Domain(_) | Error::Unsupported(_) => EXIT_ARGS,
        Error::NonFiniteSample { .. } => EXIT_DIVERGENT,
    };
    fail(code, &err.to_string())
}

fn cmd_compute(args: &ComputeArgs) -> ExitCode {
    let alpha = match OrderParam::parse(&args.alpha) {
        Ok(a) => a,
        Err(e) => return fail(EXIT_ARGS, &e.to_string()),
    };
    let beta = match OrderParam::parse(&args.beta) {
        Ok(b) => b,
        Err(e) => return fail(EXIT_ARGS, &e.to_string()),
    };
    let space: Space = args.space.into();

    let built = match args.system {
        SystemArg::Hydrogen => {
            let (n, l, m) = (
                args.n.unwrap_or(1),
                args.l.unwrap_or(0),
                args.m.unwrap_or(0),
            );
            HydrogenState::new(n, l, m, space)
                .and_then(|s| hydrogen_density(&s))
                .map(|d| (d, format!("(n={n}, l={l}, m={m})")))
        }
        SystemArg::Oscillator => {
            let (n, l, m) = (
                args.n.unwrap_or(0),
                args.l.unwrap_or(0),
                args.m.unwrap_or(0),
            );
            let lambda = args.lambda.unwrap_or(1.0);
            OscillatorState::new(n, l, m, lambda, space)
                .and_then(|s| oscillator_density(&s))
                .map(|d| (d, format!("(n={n}, l={l}, m={m}, lambda={lambda})")))
        }
        SystemArg::Sqwell => {
            let k = args.k.unwrap_or(1);
            SquareWellState::new(k, 1.0, 1)
                .and_then(|s| square_well_density(&s))
                .map(|d| (d, format!("(k={k}, L=1)")))
        }
    };
    let (density, state_label) = match built {
        Ok(x) => x,
        Err(e) => return fail(EXIT_ARGS, &e.to_string()),
    };

    let result = match complexity(&density, alpha, beta, &quad_spec(args.tol)) {
        Ok(r) => r,
        Err(e) => return error_exit(&e),
    };
    let out = ComputeOutput {
        system: match args.system {
            SystemArg::Hydrogen => "hydrogen".into(),
            SystemArg::Oscillator => "oscillator".into(),
            SystemArg::Sqwell => "sqwell".into(),
        },
        state: state_label,
        space: match space {
            Space::Position => "position".into(),
            Space::Momentum => "momentum".into(),
        },
        alpha: alpha.label(),
        beta: beta.label(),
        complexity: result.value,
        r_alpha: result.r_alpha.value,
        r_beta: result.r_beta.value,
        error_estimate: complexity_error(&result),
        units: "atomic",
    };
    match serde_json::to_string_pretty(&out) {
        Ok(s) => {
            println!("{s}");
            ExitCode::SUCCESS
        }
        Err(e) => fail(EXIT_IO, &e.to_string()),
    }
}

/// Full round-trip precision: 17 significant decimal digits.
fn fmt17(v: f64) -> String {
    format!("{v:.16e}")
}

fn write_out(path: Option<&PathBuf>, content: &str) -> ExitCode {
    match path {
        Some(p) => match std::fs::write(p, content) {
            Ok(()) => ExitCode::SUCCESS,
            Err(e) => fail(EXIT_IO, &format!("writing {}: {e}", p.display())),
        },
        None => {
            let mut stdout = std::io::stdout();
            match stdout.write_all(content.as_bytes()) {
                Ok(()) => ExitCode::SUCCESS,
                Err(e) => fail(EXIT_IO, &e.to_string()),
            }
        }
    }
}

fn cmd_figure(args: &FigureArgs) -> ExitCode {
    let id = match FigureId::parse(&args.id) {
        Ok(id) => id,
        Err(e) => return fail(EXIT_ARGS, &e.to_string()),
    };
    let rows = match figure_rows(id, &quad_spec(args.tol)) {
        Ok(rows) => rows,
        Err(e) => return error_exit(&e),
    };
    let mut csv = String::from("l,abs_m,complexity,r_alpha,sup_norm\n");
    for r in &rows {
        let _ = writeln!(
            csv,
            "{},{},{},{},{}",
            r.l,
            r.abs_m,
            fmt17(r.value),
            fmt17(r.r_alpha),
            fmt17(r.sup_norm)
        );
    }
    write_out(args.output.as_ref(), &csv)
}

fn cmd_table(args: &TableArgs) -> ExitCode {
    let rows = match sqwell_table(&quad_spec(args.tol)) {
        Ok(rows) => rows,
        Err(e) => return error_exit(&e),
    };
    let content = match args.format {
        FormatArg::Csv => {
            let mut csv = String::from("alpha,complexity\n");
            for (a, c) in &rows {
                let _ = writeln!(csv, "{a},{}", fmt17(*c));
            }
            csv
        }
        FormatArg::Json => {
            #[derive(Serialize)]
            struct Row {
                alpha: f64,
                complexity: f64,
            }
            let rows: Vec<Row> = rows
                .into_iter()
                .map(|(alpha, complexity)| Row { alpha, complexity })
                .collect();
            match serde_json::to_string_pretty(&rows) {
                Ok(mut s) => {
                    s.push('\n');
                    s
                }
                Err(e) => return fail(EXIT_IO, &e.to_string()),
            }
        }
    };
    write_out(args.output.as_ref(), &content)
}

fn cmd_verify(args: &VerifyArgs) -> ExitCode {
    let suite = match Suite::parse(&args.suite) {
        Ok(s) => s,
        Err(e) => return fail(EXIT_ARGS, &e.to_string()),
    };
    let checks = match run_suite(suite, args.tol, &QuadratureSpec::default()) {
        Ok(c) => c,
        Err(e) => return error_exit(&e),
    };
    let mut all_pass = true;
    for c in &checks {
        all_pass &= c.pass;
        println!(
            "{} {} {:.6e} {:.6e}",
            if c.pass { "PASS" } else { "FAIL" },
            c.name,
            c.measured,
            c.tol
        );
    }
    if all_pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_VERIFY_FAIL)
    }
}
