//! Runs a suite through the library driver and prints machine records.
//!
//! `cargo run --example driver -- lfactor examples/data/global.json`

use clap::ValueEnum;
use gsp4_zeta::driver::{run, Command, Format, RunConfig};

fn main() -> gsp4_zeta::Result<()> {
    let mut args = std::env::args().skip(1);
    let command = args
        .next()
        .map(|a| Command::from_str(&a, true).map_err(gsp4_zeta::Error::Invalid))
        .transpose()?
        .unwrap_or(Command::VerifyVolumes);
    let mut cfg = RunConfig::new(command);
    cfg.input = args.next().map(Into::into);
    let report = run(&cfg)?;
    print!("{}", report.render(Format::Machine));
    std::process::exit(report.exit_code());
}
