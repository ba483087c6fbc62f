//! Command-line runner: `bpuverify run <suite> [options]`.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::dga::{verify_dga, DgaError};
use crate::mod2alg::{self, verify_bpu2_images, verify_reduction_claims, verify_steenrod_theorem, AlgebraLibrary, Mod2Error};
use crate::report::VerificationReport;
use crate::ssverify::verify_spectral;
use crate::symfun::{certify_k4_presentation, coker_suite, vistoli_delta_check, SymError};

/// Suites in registry order; `all` runs them in this order.
pub const SUITES: [Suite; 8] = [
    Suite::K4,
    Suite::Coker,
    Suite::Vistoli,
    Suite::Steenrod,
    Suite::Bpu2,
    Suite::Section10,
    Suite::Dga,
    Suite::Spectral,
];

pub const THREADS_ENV: &str = "BPUVERIFY_THREADS";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    K4,
    Coker,
    Vistoli,
    Steenrod,
    Bpu2,
    Section10,
    Dga,
    Spectral,
    All,
}

impl Suite {
    fn default_max_degree(self) -> u32 {
        match self {
            Suite::K4 | Suite::Coker => 16,
            Suite::Dga => 40,
            _ => 24,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "bpuverify", about = "Exact verification suites for the cohomology of BPU(4)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run one suite, or all of them in registry order.
    Run(RunArgs),
}

#[derive(Debug, Clone, clap::Args)]
pub struct RunArgs {
    #[arg(value_enum)]
    pub suite: Suite,
    /// Degree bound for sweeps (default: 16 for k4/coker, 40 for dga, 24 otherwise).
    #[arg(long)]
    pub max_degree: Option<u32>,
    /// Prime for the vistoli suite.
    #[arg(long, default_value_t = 3)]
    pub prime: u64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write the report here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Also check the internal consistency of an algebra library file.
    #[arg(long)]
    pub presentation: Option<PathBuf>,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Mod2(#[from] Mod2Error),
    #[error(transparent)]
    Sym(#[from] SymError),
    #[error(transparent)]
    Dga(#[from] DgaError),
    #[error("{0}")]
    Io(#[from] std::io::Error),
    #[error("{0}")]
    Usage(String),
}

/// Run a single (non-`all`) suite.
pub fn run_suite(suite: Suite, args: &RunArgs) -> Result<VerificationReport, CliError> {
    let max = args.max_degree.unwrap_or(suite.default_max_degree());
    Ok(match suite {
        Suite::K4 => certify_k4_presentation(max),
        Suite::Coker => coker_suite(),
        Suite::Vistoli => vistoli_delta_check(args.prime)?,
        Suite::Steenrod => verify_steenrod_theorem(max)?,
        Suite::Bpu2 => verify_bpu2_images(mod2alg::bpu2::MAX_K)?,
        Suite::Section10 => verify_reduction_claims(max)?,
        Suite::Dga => verify_dga(max)?,
        Suite::Spectral => verify_spectral()?,
        Suite::All => return Err(CliError::Usage("`all` is not a single suite".into())),
    })
}

/// All reports requested by `args`, in registry order, followed by the
/// presentation check when a library file is given.
pub fn run(args: &RunArgs) -> Result<Vec<VerificationReport>, CliError> {
    let suites: Vec<Suite> = if args.suite == Suite::All { SUITES.to_vec() } else { vec![args.suite] };
    let mut reports = suites.iter().map(|&s| run_suite(s, args)).collect::<Result<Vec<_>, _>>()?;
    if let Some(path) = &args.presentation {
        let text = std::fs::read_to_string(path)?;
        reports.push(AlgebraLibrary::parse(&text)?.verify()?);
    }
    Ok(reports)
}

pub fn render(reports: &[VerificationReport], format: Format, aggregate: bool) -> String {
    match format {
        Format::Text => reports.iter().map(VerificationReport::to_text).collect(),
        Format::Json if aggregate || reports.len() > 1 => {
            format!("{}\n", serde_json::to_string(reports).expect("reports serialize"))
        }
        Format::Json => format!("{}\n", reports[0].to_json()),
    }
}

fn configure_threads() -> Result<(), CliError> {
    let Ok(v) = std::env::var(THREADS_ENV) else {
        return Ok(());
    };
    let n: usize = v
        .parse()
        .map_err(|_| CliError::Usage(format!("{THREADS_ENV} must be a positive integer, got {v:?}")))?;
    // a pool configured earlier in the same process stays in place
    let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    Ok(())
}

/// Parse arguments, run, write the output; returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let Command::Run(args) = cli.command;
    let outcome = configure_threads().and_then(|()| {
        let reports = run(&args)?;
        let text = render(&reports, args.format, args.suite == Suite::All);
        match &args.out {
            Some(path) => std::fs::write(path, &text)?,
            None => std::io::stdout().write_all(text.as_bytes())?,
        }
        Ok(reports.iter().all(VerificationReport::passed))
    });
    match outcome {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            eprintln!("bpuverify: {e}");
            2
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_suite_is_a_usage_error() {
        assert_eq!(main_with_args(["bpuverify", "run", "nonsense"]), 2);
        assert_eq!(main_with_args(["bpuverify"]), 2);
    }

    #[test]
    fn help_exits_zero() {
        assert_eq!(main_with_args(["bpuverify", "--help"]), 0);
    }

    #[test]
    fn registry_excludes_all() {
        assert!(!SUITES.contains(&Suite::All));
        assert_eq!(Suite::Dga.default_max_degree(), 40);
    }
}
