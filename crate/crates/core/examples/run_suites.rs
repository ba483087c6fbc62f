//! Run verification suites programmatically and serialize the reports.
//!
//! cargo run --example run_suites -- [suite]

use bpuverify::cli::{render, run, Format, RunArgs, Suite};
use clap::ValueEnum;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "spectral".into());
    let suite = Suite::from_str(&name, true)?;
    let args = RunArgs {
        suite,
        max_degree: None,
        prime: 3,
        format: Format::Json,
        out: None,
        presentation: None,
    };
    let reports = run(&args)?;
    print!("{}", render(&reports, Format::Text, false));
    println!("{}", render(&reports, Format::Json, suite == Suite::All));
    Ok(())
}
