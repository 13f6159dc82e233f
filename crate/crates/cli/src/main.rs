//! `confpoly`: graph and configuration polynomials, singularities and
//! tangent cones from the command line.
//!
//! Exit status: 0 on success, 2 for parse or validation errors, 3 when a
//! mathematical cross-check fails.

mod commands;
mod input;
mod output;
mod suites;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use commands::{PhiMethod, PsiMethod};
use suites::Suite;

/// Environment variable holding the worker count for verification suites.
const THREADS_VAR: &str = "CONFPOLY_THREADS";

#[derive(Debug)]
pub enum CliError {
    /// Unreadable or malformed input, or a rejected argument.
    Invalid(String),
    /// Two computations of the same quantity disagreed.
    Check(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Invalid(_) => 2,
            CliError::Check(_) => 3,
        }
    }
}

impl From<confpoly::Error> for CliError {
    fn from(e: confpoly::Error) -> Self {
        match e {
            confpoly::Error::Check(_) | confpoly::Error::SamplingExhausted { .. } => CliError::Check(e.to_string()),
            _ => CliError::Invalid(e.to_string()),
        }
    }
}

#[derive(Parser)]
#[command(name = "confpoly", version, about = "Exact graph and configuration polynomials")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// First graph polynomial of a graph, or the polynomial of a configuration.
    Psi {
        input: PathBuf,
        #[arg(long, value_enum, default_value = "all")]
        method: PsiMethod,
    },
    /// Second graph polynomial of a graph with a momentum.
    Phi {
        graph: PathBuf,
        momentum: PathBuf,
        #[arg(long, value_enum, default_value = "all")]
        method: PhiMethod,
    },
    /// Nonzero Plücker coordinates.
    Plucker {
        input: PathBuf,
        /// Use H_1(G, p) for a graph input.
        #[arg(long)]
        momentum: Option<PathBuf>,
    },
    /// Restriction to a set of coordinates and its polynomial.
    Restrict {
        input: PathBuf,
        /// Comma-separated 1-based indices or edge names.
        #[arg(long)]
        edges: String,
        #[arg(long)]
        momentum: Option<PathBuf>,
    },
    /// Rank, corank and multiplicity at a point.
    Analyze {
        input: PathBuf,
        /// Comma-separated rationals, e.g. 1,0,-1/2.
        #[arg(long, allow_hyphen_values = true)]
        point: String,
        /// Also compute the tangent cone when the point is on the hypersurface.
        #[arg(long)]
        tangent_cone: bool,
        #[arg(long)]
        momentum: Option<PathBuf>,
    },
    /// Tangent cone at a point, by Taylor expansion and by restrictions.
    TangentCone {
        input: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        point: String,
        #[arg(long)]
        momentum: Option<PathBuf>,
    },
    /// Seeded randomized verification suite.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        #[arg(long, default_value_t = 50)]
        trials: usize,
        #[arg(long, default_value_t = 8)]
        max_edges: usize,
        /// Fixed configuration or graph for the restriction, theorem, cones
        /// and generic suites.
        #[arg(long)]
        input: Option<PathBuf>,
    },
}

fn configure_threads() -> Result<(), CliError> {
    let Ok(value) = std::env::var(THREADS_VAR) else { return Ok(()) };
    let threads: usize = value
        .parse()
        .ok()
        .filter(|&t| t > 0)
        .ok_or_else(|| CliError::Invalid(format!("{THREADS_VAR} must be a positive integer, got `{value}`")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| CliError::Invalid(e.to_string()))
}

fn run(cli: Cli) -> Result<(), CliError> {
    configure_threads()?;
    let json = cli.json;
    match cli.command {
        Command::Psi { input, method } => commands::psi(&input, method, json),
        Command::Phi { graph, momentum, method } => commands::phi(&graph, &momentum, method, json),
        Command::Plucker { input, momentum } => commands::plucker(&input, momentum.as_deref(), json),
        Command::Restrict { input, edges, momentum } => commands::restrict(&input, momentum.as_deref(), &edges, json),
        Command::Analyze { input, point, tangent_cone, momentum } => {
            commands::analyze_point(&input, momentum.as_deref(), &point, tangent_cone, json)
        }
        Command::TangentCone { input, point, momentum } => commands::cone(&input, momentum.as_deref(), &point, json),
        Command::Verify { suite, seed, trials, max_edges, input } => {
            let input = input.map(|p| input::configuration(input::load(&p)?, None)).transpose()?;
            suites::run(&suites::Options { suite, seed, trials, max_edges, input }, json)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            match &e {
                CliError::Invalid(msg) => eprintln!("error: {msg}"),
                CliError::Check(msg) => eprintln!("check failed: {msg}"),
            }
            ExitCode::from(e.exit_code())
        }
    }
}
