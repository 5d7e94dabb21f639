//! Command-line front end for the vertex-operator library.
//!
//! Four subcommands: `apply` evaluates an operator expression on a Schur
//! literal, `hl` builds Hall-Littlewood polynomials by rows or columns,
//! `kostka` prints transition tables, and `verify` runs the named identity
//! suites.  Exit codes: 0 success, 1 an identity suite found a failing
//! case, 2 malformed expression text, 3 structurally invalid input
//! (non-partition indices, unknown suite, degree guard exceeded).

mod format;
mod parse;
mod verify;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use parse::ParseError;
use ribbonfn_core::hall::{self, HlRoute};
use ribbonfn_core::suite;
use ribbonfn_core::SymFunc;

/// Environment variable bounding the largest symmetric-function degree any
/// command may touch.
const MAX_DEGREE_VAR: &str = "RIBBONFN_MAX_DEGREE";
const DEFAULT_MAX_DEGREE: i64 = 24;

#[derive(Parser)]
#[command(
    name = "ribbonfn",
    version,
    about = "Vertex operators on symmetric functions, exactly, over Z[q]"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Apply an operator expression to a symmetric function.
    Apply {
        /// Operator expression, e.g. "hat(R{3:{1,2}} . S[1])".
        #[arg(long)]
        op: String,
        /// Schur-basis input, e.g. "s[2,1] + (q+q^2)*s[3]".
        #[arg(long)]
        to: String,
        #[arg(long, value_enum, default_value_t = ValueFormat::Text)]
        format: ValueFormat,
    },
    /// Build a Hall-Littlewood polynomial H_lambda[X;q].
    Hl {
        /// Partition as comma-separated parts, e.g. "2,2,1".
        #[arg(long)]
        shape: String,
        /// Build by row operators or by column-adding operators.
        #[arg(long, value_enum)]
        via: Route,
        #[arg(long, value_enum, default_value_t = ValueFormat::Text)]
        format: ValueFormat,
    },
    /// Print the Kostka-Foulkes table of one shape against all others.
    Kostka {
        /// Partition as comma-separated parts.
        #[arg(long)]
        lambda: String,
        #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
        format: TableFormat,
    },
    /// Run a named verification suite.
    Verify {
        /// Suite name; see the library documentation for the registry.
        #[arg(long)]
        suite: String,
        /// Largest row-operator index to sweep.
        #[arg(long)]
        max_m: Option<i64>,
        /// Largest column height / ribbon size to sweep.
        #[arg(long)]
        max_k: Option<u32>,
        /// Largest partition size for test inputs.
        #[arg(long)]
        max_size: Option<u32>,
        /// Series window override for generating-function suites.
        #[arg(long)]
        window: Option<u32>,
        /// Worker threads; defaults to the available parallelism.
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Route {
    Rows,
    Columns,
}

#[derive(Clone, Copy, ValueEnum)]
enum ValueFormat {
    Text,
    Json,
    Latex,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

/// Everything a subcommand can do wrong, tagged with its exit code.
enum CmdError {
    Syntax(String),
    Invalid(String),
}

impl From<ParseError> for CmdError {
    fn from(e: ParseError) -> Self {
        match e {
            ParseError::Syntax { .. } => CmdError::Syntax(e.to_string()),
            ParseError::Semantic { .. } => CmdError::Invalid(e.to_string()),
        }
    }
}

fn max_degree() -> Result<i64, CmdError> {
    match std::env::var(MAX_DEGREE_VAR) {
        Ok(text) => text.parse().map_err(|_| {
            CmdError::Invalid(format!("{MAX_DEGREE_VAR} must be an integer, got {text:?}"))
        }),
        Err(_) => Ok(DEFAULT_MAX_DEGREE),
    }
}

/// Refuses work whose output degree would exceed the guard; `reach` is the
/// largest symmetric-function degree the command can touch.
fn guard_degree(reach: i64) -> Result<(), CmdError> {
    let bound = max_degree()?;
    if reach > bound {
        return Err(CmdError::Invalid(format!(
            "refusing to compute up to degree {reach}: the limit is {bound} (set {MAX_DEGREE_VAR} to raise it)"
        )));
    }
    Ok(())
}

fn print_value(f: &SymFunc, format: ValueFormat) {
    match format {
        ValueFormat::Text => println!("{f}"),
        ValueFormat::Json => println!("{}", format::symfunc_json(f)),
        ValueFormat::Latex => println!("{}", format::symfunc_latex(f)),
    }
}

fn cmd_apply(op: &str, to: &str, format: ValueFormat) -> Result<(), CmdError> {
    let op = parse::parse_expr(op)?;
    let input = parse::parse_symfunc(to)?;
    let reach = input.max_degree().unwrap_or(0) as i64 + op.max_rise().max(0);
    guard_degree(reach)?;
    print_value(&op.apply(&input), format);
    Ok(())
}

fn cmd_hl(shape: &str, via: Route, format: ValueFormat) -> Result<(), CmdError> {
    let shape = parse::parse_partition(shape)?;
    guard_degree(shape.size() as i64)?;
    let route = match via {
        Route::Rows => HlRoute::Rows,
        Route::Columns => HlRoute::Columns,
    };
    print_value(&hall::hl_build(&shape, route), format);
    Ok(())
}

fn cmd_kostka(lambda: &str, format: TableFormat) -> Result<(), CmdError> {
    let lambda = parse::parse_partition(lambda)?;
    guard_degree(lambda.size() as i64)?;
    let table = hall::kostka_table(&lambda);
    match format {
        TableFormat::Csv => print!("{}", format::kostka_csv(&lambda, &table)),
        TableFormat::Json => println!("{}", format::kostka_json(&lambda, &table)),
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn cmd_verify(
    name: &str,
    max_m: Option<i64>,
    max_k: Option<u32>,
    max_size: Option<u32>,
    window: Option<u32>,
    jobs: Option<usize>,
    format: ReportFormat,
) -> Result<bool, CmdError> {
    let mut bounds = suite::default_bounds(name).map_err(|e| CmdError::Invalid(e.to_string()))?;
    if let Some(m) = max_m {
        bounds.max_m = m;
    }
    if let Some(k) = max_k {
        bounds.max_k = k;
    }
    if let Some(n) = max_size {
        bounds.max_size = n;
    }
    if let Some(w) = window {
        bounds.window = Some(w);
    }
    // Conservative reach estimate: an input of max_size acted on by the
    // deepest operator chains any suite builds (a row, a column, and the
    // two-cell corrections of the four-term expansion).
    let reach = bounds.max_size as i64 + bounds.max_m.max(0) + bounds.max_k as i64 + 2;
    guard_degree(reach)?;
    let report =
        verify::run_parallel(name, &bounds, jobs).map_err(|e| CmdError::Invalid(e.to_string()))?;
    match format {
        ReportFormat::Text => print!("{}", format::report_text(&report)),
        ReportFormat::Json => println!("{}", format::report_json(&report)),
    }
    Ok(report.pass())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Apply { op, to, format } => cmd_apply(op, to, *format).map(|()| true),
        Command::Hl { shape, via, format } => cmd_hl(shape, *via, *format).map(|()| true),
        Command::Kostka { lambda, format } => cmd_kostka(lambda, *format).map(|()| true),
        Command::Verify {
            suite,
            max_m,
            max_k,
            max_size,
            window,
            jobs,
            format,
        } => cmd_verify(suite, *max_m, *max_k, *max_size, *window, *jobs, *format),
    };
    match outcome {
        Ok(true) => ExitCode::from(0),
        Ok(false) => ExitCode::from(1),
        Err(CmdError::Syntax(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CmdError::Invalid(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
