//! `primebias`: evaluate bias integrals, run the verification suite, and
//! emit integral series for plotting.

mod config;
mod render;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use primebias::bias::bias_integral_series;
use primebias::verify::{self, VerifyOptions};
use primebias::zeros::ZERO_TABLE_ENV;
use primebias::{bias_integral, BiasIntegralSpec, CountingFunction, SieveConfig, SignCertificate, SmoothFn};

#[derive(Parser)]
#[command(
    name = "primebias",
    version,
    about = "Exact prime-counting bias integrals and explicit inequality checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one integral of (F(t) - G(t))/t^c from 2 to x.
    Compute(ComputeArgs),
    /// Run the registered checks and emit a report.
    Verify(VerifyArgs),
    /// Evaluate one integral over a grid of x values.
    Report(ReportArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Args)]
struct IntegralArgs {
    /// Counting function: pi, theta, psi or bigpi.
    #[arg(long = "fn", value_name = "F")]
    counting: CountingFunction,
    /// Smooth comparison function: li or t.
    #[arg(long, value_name = "G")]
    smooth: SmoothFn,
    /// Weight exponent, at most 2.
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    c: f64,
}

#[derive(Args)]
struct ComputeArgs {
    #[command(flatten)]
    integral: IntegralArgs,
    /// Upper limit of integration.
    #[arg(long)]
    x: f64,
    /// Sieve limit; defaults to x rounded up.
    #[arg(long, value_parser = config::parse_limit)]
    x_max: Option<u64>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Args)]
struct VerifyArgs {
    /// Sieve limit [default: 1e7].
    #[arg(long, value_parser = config::parse_limit)]
    x_max: Option<u64>,
    /// Zero table; falls back to the config file, then $PRIMEBIAS_ZEROS.
    #[arg(long)]
    zeros: Option<PathBuf>,
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Comma-separated check ids to run.
    #[arg(long, value_delimiter = ',')]
    checks: Option<Vec<String>>,
    /// Write the report here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
    /// key=value file merged under the flags.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Points in log-spaced grids for pointwise identities.
    #[arg(long)]
    grid_points: Option<usize>,
    /// Points in the li bound grid.
    #[arg(long)]
    li_grid_points: Option<usize>,
    /// Sieve worker threads.
    #[arg(long)]
    workers: Option<usize>,
    /// Print the registered checks and exit.
    #[arg(long)]
    list: bool,
}

#[derive(Args)]
struct ReportArgs {
    #[command(flatten)]
    integral: IntegralArgs,
    /// Explicit comma-separated x values.
    #[arg(long, value_delimiter = ',')]
    grid: Vec<f64>,
    /// Number of log-spaced points from --from to --to.
    #[arg(long, default_value_t = 0)]
    points: usize,
    #[arg(long, default_value_t = 100.0)]
    from: f64,
    #[arg(long, default_value_t = 1e6)]
    to: f64,
    /// Sieve limit; defaults to the largest grid point rounded up.
    #[arg(long, value_parser = config::parse_limit)]
    x_max: Option<u64>,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

/// Process failure, mapped onto the exit-code contract.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Io(String),
}

impl From<primebias::Error> for Failure {
    fn from(e: primebias::Error) -> Self {
        match e {
            primebias::Error::Io { .. } => Failure::Io(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_IO: u8 = 3;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Compute(a) => compute(a),
        Command::Verify(a) => run_verify(a),
        Command::Report(a) => report(a),
    };
    match result {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            eprintln!("primebias: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Io(msg)) => {
            eprintln!("primebias: {msg}");
            ExitCode::from(EXIT_IO)
        }
    }
}

fn sieve_for(x_max: u64) -> Result<SieveConfig, Failure> {
    Ok(SieveConfig::new(x_max)?.with_workers(std::thread::available_parallelism().map_or(1, |n| n.get()))?)
}

fn compute(a: ComputeArgs) -> Result<ExitCode, Failure> {
    let spec = BiasIntegralSpec::new(a.integral.counting, a.integral.smooth, a.integral.c, a.x);
    if !a.x.is_finite() {
        return Err(Failure::Usage(format!("x = {} is not finite", a.x)));
    }
    let x_max = a.x_max.unwrap_or_else(|| (a.x.ceil().max(2.0)) as u64);
    let result = bias_integral(&spec, &sieve_for(x_max)?)?;
    let text = match a.format {
        Format::Json => render::json(&result)?,
        Format::Csv => render::compute_csv(&result)?,
    };
    render::emit(&text, None)?;
    Ok(ExitCode::SUCCESS)
}

fn run_verify(a: VerifyArgs) -> Result<ExitCode, Failure> {
    if a.list {
        let mut out = std::io::stdout().lock();
        for d in verify::registry() {
            writeln!(out, "{}\t{}", d.id, d.anchor).map_err(|e| Failure::Io(e.to_string()))?;
        }
        return Ok(ExitCode::SUCCESS);
    }
    let file = match &a.config {
        Some(path) => config::load(path)?,
        None => config::FileConfig::default(),
    };
    let mut opts = VerifyOptions::new(a.x_max.or(file.x_max).unwrap_or(10_000_000));
    opts.zero_table_path = a
        .zeros
        .or(file.zeros)
        .or_else(|| std::env::var_os(ZERO_TABLE_ENV).map(PathBuf::from));
    opts.checks = a.checks.or(file.checks);
    if let Some(n) = a.grid_points.or(file.grid_points) {
        opts.grid_points = n;
    }
    if let Some(n) = a.li_grid_points.or(file.li_grid_points) {
        opts.li_grid_points = n;
    }
    if let Some(n) = a.workers.or(file.workers) {
        opts.worker_count = n;
    }
    let format = a.format.or(file.format).unwrap_or(Format::Csv);
    let out = a.out.or(file.out);

    let report = verify::run(&opts)?;
    let text = match format {
        Format::Json => render::verify_json(&report)?,
        Format::Csv => render::verify_csv(&report)?,
    };
    render::emit(&text, out.as_deref())?;
    let count = |s| report.checks.iter().filter(|c| c.status == s).count();
    eprintln!(
        "{} passed, {} failed, {} skipped in {:.2}s",
        count(verify::CheckStatus::Pass),
        count(verify::CheckStatus::Fail),
        count(verify::CheckStatus::Skipped),
        report.runtime_seconds
    );
    Ok(if report.all_pass() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_FAIL)
    })
}

fn report(a: ReportArgs) -> Result<ExitCode, Failure> {
    let mut grid = a.grid.clone();
    if a.points > 0 {
        if !(a.from >= 2.0 && a.to >= a.from) {
            return Err(Failure::Usage(format!(
                "need 2 <= --from <= --to, got {} and {}",
                a.from, a.to
            )));
        }
        grid.extend(verify::log_grid(a.from, a.to, a.points));
    }
    if let Some(bad) = grid.iter().find(|x| !x.is_finite()) {
        return Err(Failure::Usage(format!("grid value {bad} is not finite")));
    }
    grid.sort_by(f64::total_cmp);
    let rows = match grid.last() {
        None => Vec::new(),
        Some(&hi) => {
            let x_max = a.x_max.unwrap_or_else(|| hi.ceil().max(2.0) as u64);
            let cfg = sieve_for(x_max)?;
            bias_integral_series(a.integral.counting, a.integral.smooth, a.integral.c, &grid, &cfg)?
        }
    };
    let rows: Vec<render::SeriesRow> = rows
        .iter()
        .map(|p| render::SeriesRow {
            x: p.x,
            value: p.value,
            error_bound: p.error_bound,
            sign: SignCertificate::from_bounds(p.value, p.error_bound),
        })
        .collect();
    let text = match a.format {
        Format::Json => render::json(&rows)?,
        Format::Csv => render::series_csv(&rows)?,
    };
    render::emit(&text, a.out.as_deref())?;
    Ok(ExitCode::SUCCESS)
}
