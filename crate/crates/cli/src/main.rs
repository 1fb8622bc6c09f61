use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use nashjet_cli::{render, selftest, CliError, ProblemSpec, RunOptions};

/// Jet-scheme ideals of Nash transformations, computed exactly.
#[derive(Debug, Parser)]
#[command(name = "nashjet", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// Compute only this jet order, ignoring the document's list.
    #[arg(long, global = true)]
    jet_order: Option<u32>,

    /// Keep every maximal minor instead of trimming redundant generators.
    #[arg(long, global = true)]
    no_interreduce: bool,

    /// Worker threads (defaults to the number of cores).
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Report per-order wall-clock times (makes output non-reproducible).
    #[arg(long, global = true)]
    timings: bool,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Compute the ideals for a problem document.
    Compute { file: PathBuf },
    /// Compute and check against the document's expected presentations.
    Verify { file: PathBuf },
    /// Run the golden problem and the randomized property suites.
    Selftest {
        #[arg(long, default_value_t = selftest::DEFAULT_SEED)]
        seed: u64,
        /// Problem document to use instead of the bundled golden one.
        #[arg(long)]
        golden: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn execute(cli: Cli) -> Result<bool, CliError> {
    if let Some(n) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| CliError::Input(format!("cannot start {n} threads: {e}")))?;
    }
    let opts = RunOptions { interreduce: !cli.no_interreduce, jet_order: cli.jet_order, timings: cli.timings };
    match cli.command {
        Command::Compute { file } => {
            let problem = ProblemSpec::from_json(&read(&file)?)?.validate()?;
            let doc = nashjet_cli::run(&problem, opts)?;
            match cli.format {
                Format::Text => print!("{}", render::text(&doc)),
                Format::Json => print!("{}", render::json(&doc)),
            }
            Ok(doc.verified != Some(false))
        }
        Command::Verify { file } => {
            let spec = ProblemSpec::from_json(&read(&file)?)?;
            if spec.expected.is_empty() {
                return Err(CliError::Input(format!("{}: no expected presentations to verify", file.display())));
            }
            let doc = nashjet_cli::run(&spec.validate()?, opts)?;
            if doc.verified.is_none() {
                return Err(CliError::Input("no expected presentation matches the requested jet orders".into()));
            }
            match cli.format {
                Format::Text => print!("{}", render::verdicts(&doc)),
                Format::Json => print!("{}", render::json(&doc)),
            }
            Ok(doc.verified == Some(true))
        }
        Command::Selftest { seed, golden } => {
            let golden = golden.as_deref().map(read).transpose()?;
            let report = selftest::run(seed, golden.as_deref())?;
            print!("{}", report.render());
            Ok(report.ok())
        }
    }
}

fn main() -> ExitCode {
    match execute(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
