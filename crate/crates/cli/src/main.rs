//! `ordual` — batch front door for the order-duality workbench.
//!
//! Reads JSON structure files (posets, distributive lattices, relation
//! spaces, modal and tense algebras), runs constructions and verification
//! suites over them, and emits verdict-tree reports, canonical structure
//! artifacts, and DOT diagrams.
//!
//! Exit codes: 0 all verdicts true, 1 a verdict failed, 2 input error,
//! 3 capacity bound hit.

mod commands;
mod report;
mod schema;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use ordual::corpus::DEFAULT_SEED;

/// Errors that end the run before any verdict is reached.
#[derive(Debug)]
pub enum CliError {
    /// Unreadable, unparsable, or ill-typed input — exit 2.
    Input(String),
    /// A documented size bound was exceeded — exit 3.
    Capacity(String),
}

impl CliError {
    pub fn from_core(e: ordual::Error) -> Self {
        match e {
            ordual::Error::CapacityExceeded { .. }
            | ordual::Error::GeneratorLimit { .. }
            | ordual::Error::ChainIndexTooLarge { .. } => CliError::Capacity(e.to_string()),
            other => CliError::Input(other.to_string()),
        }
    }
}

#[derive(Parser)]
#[command(
    name = "ordual",
    version,
    about = "Finite order-duality and maximality workbench",
    arg_required_else_help = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Seed for the deterministic sweeps
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Cap on generated instance sizes (posets/worlds/generators)
    #[arg(long, global = true)]
    max_size: Option<usize>,
    /// Write the JSON verdict-tree report to this path
    #[arg(long, global = true)]
    report: Option<PathBuf>,
    /// What to print on stdout instead of the human report
    #[arg(long, global = true, value_enum)]
    format: Option<OutFormat>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutFormat {
    /// DOT diagram of the object at hand
    Dot,
    /// The JSON verdict tree (with any artifact embedded)
    JsonReport,
}

#[derive(Subcommand)]
enum Command {
    /// Dualize: poset ↔ lattice, algebra ↔ relation space
    Dual { file: PathBuf },
    /// Generate the free distributive lattice on n generators
    Free { n: usize },
    /// Maximal/prime filters and ideals with separation witnesses
    Maximal { file: PathBuf },
    /// Quasi-maximal and eventually quasi-maximal points of a subset
    Qmax {
        file: PathBuf,
        /// Element names, comma separated (default: all)
        #[arg(long, value_delimiter = ',')]
        subset: Vec<String>,
    },
    /// Relativize the complex algebra to a nonempty subset
    Relativize {
        file: PathBuf,
        /// Element names, comma separated
        #[arg(long, value_delimiter = ',', required = true)]
        subset: Vec<String>,
    },
    /// Pull maximal ideals of the ideal lattice back to the base
    Clmax { file: PathBuf },
    /// Regular elements, Boolean retract, and the maximal-filter bijection
    Booleanize { file: PathBuf },
    /// Verify the symbolic two-chain example end to end
    OmegaDemo,
    /// Run every property suite over the built-in seeded corpus
    Check,
    /// Emit a DOT diagram (Hasse for orders, full digraph for relations)
    Dot { file: PathBuf },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(CliError::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Capacity(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    let seed = cli.seed.unwrap_or(DEFAULT_SEED);
    let outcome = match &cli.command {
        Command::Dual { file } => commands::dual(&schema::read_structure(file)?)?,
        Command::Free { n } => commands::free(*n, seed)?,
        Command::Maximal { file } => commands::maximal(&schema::read_structure(file)?)?,
        Command::Qmax { file, subset } => {
            commands::qmax(&schema::read_structure(file)?, subset)?
        }
        Command::Relativize { file, subset } => {
            commands::relativize_cmd(&schema::read_structure(file)?, subset)?
        }
        Command::Clmax { file } => commands::clmax(&schema::read_structure(file)?)?,
        Command::Booleanize { file } => commands::booleanize(&schema::read_structure(file)?)?,
        Command::OmegaDemo => commands::omega_demo(cli.max_size.unwrap_or(10))?,
        Command::Check => commands::check(seed, cli.max_size.unwrap_or(6))?,
        Command::Dot { file } => commands::dot(&schema::read_structure(file)?)?,
    };

    let stdout_format = match cli.format {
        Some(OutFormat::Dot) => OutFormat::Dot,
        Some(OutFormat::JsonReport) => OutFormat::JsonReport,
        None if outcome.prefer_dot => OutFormat::Dot,
        None => {
            print!("{}", outcome.report.render_human());
            if let Some(path) = &cli.report {
                write_report(path, &outcome.report)?;
            }
            return Ok(exit_for(&outcome.report));
        }
    };
    match stdout_format {
        OutFormat::Dot => match &outcome.dot {
            Some(d) => print!("{d}"),
            None => return Err(CliError::Input("this command has no diagram output".into())),
        },
        OutFormat::JsonReport => print!("{}", outcome.report.to_json()),
    }
    if let Some(path) = &cli.report {
        write_report(path, &outcome.report)?;
    }
    Ok(exit_for(&outcome.report))
}

fn write_report(path: &PathBuf, report: &report::Report) -> Result<(), CliError> {
    std::fs::write(path, report.to_json())
        .map_err(|e| CliError::Input(format!("cannot write {}: {e}", path.display())))
}

fn exit_for(report: &report::Report) -> ExitCode {
    if report.ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
