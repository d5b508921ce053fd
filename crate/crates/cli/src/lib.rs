//! Front end of the `shavis` binary: argument parsing, JSON documents and
//! one function per subcommand. Output is a pretty-printed JSON document
//! that depends only on the input, the flags and the crate version.

pub mod commands;
pub mod docs;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use shavis_core::{Error, ErrorClass};

pub const EXIT_PARSE: i32 = 2;
pub const EXIT_MATH: i32 = 3;
pub const EXIT_PRECISION: i32 = 4;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{0}")]
    Core(Error),
    /// A check ran to completion and reported failure.
    #[error("check failed: {0}")]
    Check(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => EXIT_PARSE,
            CliError::Check(_) => EXIT_MATH,
            CliError::Core(e) => match e.class() {
                ErrorClass::Input => EXIT_PARSE,
                ErrorClass::Math => EXIT_MATH,
                ErrorClass::Precision => EXIT_PRECISION,
            },
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "shavis",
    version,
    about = "Plane cubic invariants and visible Sha on E1 x E2, as JSON"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct Global {
    /// Working precision in bits for all numeric stages.
    #[arg(long, global = true, default_value_t = 512, value_parser = clap::value_parser!(u32).range(64..))]
    pub precision_bits: u32,
    /// Seed for sampling on D.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Height bound for rational point searches.
    #[arg(long, global = true, default_value_t = 100)]
    pub height_bound: i64,
    /// Target j-invariant "p/q" for pencil-solve and visualize.
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub target_j: Option<String>,
    /// Target model of E2 as "a1,a2,a3,a4,a6".
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub target_e2: Option<String>,
    /// Initial number of samples of D.
    #[arg(long, global = true, default_value_t = 24)]
    pub samples: usize,
    /// Fresh samples for verifying the recovered form.
    #[arg(long, global = true, default_value_t = 20)]
    pub fresh: usize,
    /// Primes up to this bound are tried for a non-isogeny certificate.
    #[arg(long, global = true, default_value_t = 500)]
    pub iso_bound: u64,
}

/// A cubic from a document file (`-` for stdin) or inline coefficients.
#[derive(Debug, Clone, Args)]
pub struct CubicInput {
    /// CubicDocument JSON file, or `-` for stdin.
    #[arg(long, short)]
    pub input: Option<PathBuf>,
    /// Ten comma-separated coefficients in the order x3,x2y,x2z,xy2,xyz,xz2,y3,y2z,yz2,z3.
    #[arg(long, conflicts_with = "input", allow_hyphen_values = true)]
    pub coeffs: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Hessian, Caylean and invariants of a cubic.
    Covariants(CubicInput),
    /// Basis of the dual pencil and its singular members.
    DualPencil(CubicInput),
    /// The nine flexes with their Hesse labels, and the rational ones.
    Flexes {
        #[command(flatten)]
        cubic: CubicInput,
        /// Significant digits printed per real number.
        #[arg(long, default_value_t = 30)]
        digits: usize,
    },
    /// Theta stabilizers of the flexes and of the dual scheme, and the anti-isometry.
    ThetaCheck(CubicInput),
    /// Members of the dual pencil with a given j-invariant.
    PencilSolve(CubicInput),
    /// Rational points up to the height bound.
    PointSearch(CubicInput),
    /// The full pipeline: E1 x E2, the curve D and the recovered bilinear form.
    Visualize {
        /// VisualizeDocument JSON file, or `-` for stdin.
        #[arg(long, short)]
        input: PathBuf,
    },
}

/// Runs a parsed command line and returns the JSON text to print.
pub fn run(cli: &Cli) -> Result<String, CliError> {
    match &cli.command {
        Command::Covariants(c) => commands::covariants(c),
        Command::DualPencil(c) => commands::dual_pencil(c, &cli.global),
        Command::Flexes { cubic, digits } => commands::flexes(cubic, *digits, &cli.global),
        Command::ThetaCheck(c) => commands::theta_check(c, &cli.global),
        Command::PencilSolve(c) => commands::pencil_solve(c, &cli.global),
        Command::PointSearch(c) => commands::point_search(c, &cli.global),
        Command::Visualize { input } => commands::visualize(input, &cli.global),
    }
}

/// Pretty JSON with a trailing newline.
pub fn emit<T: serde::Serialize>(v: &T) -> Result<String, CliError> {
    let mut text = serde_json::to_string_pretty(v).expect("serializable");
    text.push('\n');
    Ok(text)
}
