use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use gsp4_zeta::driver::{run, Command, Format, RunConfig};

/// Verification suites for the GSp(4) × GL(2) zeta integral.
#[derive(Parser, Debug)]
#[command(version)]
struct Cli {
    #[arg(value_enum)]
    command: Command,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long, default_value_t = 100)]
    trials: usize,
    /// Truncation order in `t`.
    #[arg(long, default_value_t = 25)]
    order: usize,
    #[arg(long, default_value_t = 1e-6)]
    tol: f64,
    /// JSON scenario file.
    #[arg(long)]
    input: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Prime for the coset audit (2 or 3).
    #[arg(long)]
    p: Option<u8>,
    /// Largest prime in truncated Euler products.
    #[arg(long, default_value_t = 50)]
    pmax: u64,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cfg = RunConfig {
        command: cli.command,
        seed: cli.seed,
        trials: cli.trials,
        order: cli.order,
        tol: cli.tol,
        input: cli.input,
        format: cli.format,
        p: cli.p,
        pmax: cli.pmax,
    };
    match run(&cfg) {
        Ok(report) => {
            print!("{}", report.render(cfg.format));
            ExitCode::from(report.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
