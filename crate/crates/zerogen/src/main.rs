use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;

/// Write the first N nontrivial zeta zero ordinates as an ASCII table.
#[derive(Parser)]
#[command(version)]
struct Args {
    /// Number of zeros to compute.
    #[arg(short = 'n', long, default_value_t = 100_000)]
    count: usize,
    /// Absolute accuracy of each ordinate.
    #[arg(long, default_value_t = 1e-10)]
    tolerance: f64,
    /// Output file; standard output if omitted.
    #[arg(short, long)]
    out: Option<PathBuf>,
}

fn main() -> ExitCode {
    let args = Args::parse();
    let result = zerogen::zeros(args.count, args.tolerance).and_then(|g| match &args.out {
        Some(path) => zerogen::write_table_file(path, &g),
        None => zerogen::write_table(std::io::stdout().lock(), &g).map_err(|source| zerogen::Error::Io {
            path: "<stdout>".into(),
            source,
        }),
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("zerogen: {e}");
            ExitCode::FAILURE
        }
    }
}
