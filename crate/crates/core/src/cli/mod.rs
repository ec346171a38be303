//! The `cone-hull` command line: JSON problem documents in, JSON or CSV out.
//!
//! Exit codes: 0 success, 1 internal failure, 2 schema or precondition
//! violation, 3 enumeration budget exceeded.

mod commands;
pub mod input;
pub mod output;

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;

use crate::error::Error;
pub use input::{GridAxis, Problem};
pub use output::{Artifact, Table};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("schema violation at `{path}`: {message}")]
    Schema { path: String, message: String },

    #[error("{0}")]
    Usage(String),

    #[error("cannot read {path}: {message}")]
    MissingInput { path: String, message: String },

    #[error("i/o failure: {0}")]
    Io(String),

    #[error(transparent)]
    Math(#[from] Error),
}

impl CliError {
    pub fn schema(path: &str, message: &str) -> Self {
        let path = if path.is_empty() { "." } else { path };
        CliError::Schema {
            path: path.to_string(),
            message: message.to_string(),
        }
    }

    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Schema { .. } | CliError::Usage(_) | CliError::MissingInput { .. } => 2,
            CliError::Io(_) => 1,
            CliError::Math(Error::BudgetExceeded { .. }) => 3,
            CliError::Math(e) if e.is_precondition() => 2,
            CliError::Math(_) => 1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Csv,
}

/// Everything one invocation needs.
#[derive(Debug, Clone, Parser)]
#[command(name = "cone-hull", version, about = "Cone-restricted polynomial approximation toolkit")]
pub struct ExperimentConfig {
    #[command(subcommand)]
    pub command: Command,

    /// Problem document (JSON); `-` reads standard input.
    #[arg(long, global = true)]
    pub input: Option<PathBuf>,

    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// Tolerance override: hull half-space slack for `approx domain`,
    /// minimal monomial gap for `lattice separate`, relative norm slack for
    /// `approx run`.
    #[arg(long, global = true)]
    pub tol: Option<f64>,

    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    /// Same as `--format json`.
    #[arg(long, global = true, conflicts_with_all = ["format", "csv"])]
    pub json: bool,

    /// Same as `--format csv`.
    #[arg(long, global = true, conflicts_with = "format")]
    pub csv: bool,

    /// Write the artifact here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Scaling factor, overriding `m` in the document.
    #[arg(long, global = true)]
    pub m: Option<u64>,

    /// `xmin:xmax:steps`, once per coordinate or once for all.
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub grid: Vec<GridAxis>,
}

impl ExperimentConfig {
    pub fn format(&self) -> Format {
        if self.csv {
            Format::Csv
        } else if self.json {
            Format::Json
        } else {
            self.format.unwrap_or_default()
        }
    }
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Rational polytopes S and their lattice points.
    #[command(subcommand)]
    Polytope(PolytopeCmd),
    /// Lattice exponents, separation and fiber maps.
    #[command(subcommand)]
    Lattice(LatticeCmd),
    /// The extremal function V^S_K and S-hulls.
    #[command(subcommand)]
    Vsk(VskCmd),
    /// Truncation experiments for cone-supported series.
    #[command(subcommand)]
    Approx(ApproxCmd),
}

#[derive(Debug, Clone, Copy, Subcommand)]
pub enum PolytopeCmd {
    /// `φ_S(x)` at `x` or each of `points`.
    Support,
    /// Exact membership with a convex-weight or separating certificate.
    Contains,
    /// `ch(mS ∩ N^n) / m`.
    Refine,
    /// The lattice points of `mS`.
    Exponents,
    /// Lattice distance of an integral polytope, or its growth for `m = 1..=M`.
    Distance,
    /// Half-spaces of `R_+ S` and rays of its dual.
    Dual,
    /// `S ∩ R^J` for the 1-based index set `J`.
    Section,
}

#[derive(Debug, Clone, Copy, Subcommand)]
pub enum LatticeCmd {
    /// `n` linearly independent exponents in the cone.
    Independent,
    /// A monomial separating `z` from `w`.
    Separate,
    /// The lattice map `L`, kernel generators and fiber points.
    Fibers,
    /// Log box bounding the preimage of a polyannulus.
    Pullback,
}

#[derive(Debug, Clone, Copy, Subcommand)]
pub enum VskCmd {
    /// Extremal function at `x` or each of `points`.
    Eval,
    /// Extremal function over `--grid`.
    Grid,
    /// Membership in `ch A - Γ°` with certificates.
    Hull,
    /// Monomial lower bound at scaling `m`.
    Siciak,
    /// Extremal function restricted to the coordinates `J`.
    Axes,
    /// Seeded points of the hull.
    Sample,
}

#[derive(Debug, Clone, Copy, Subcommand)]
pub enum ApproxCmd {
    /// Truncation report and error-vs-N curve.
    Run,
    /// Escape direction for an exponent outside the cone.
    Escape,
    /// Half-spaces of `ch D - Γ°`.
    Domain,
}

fn read_problem(config: &ExperimentConfig) -> Result<Problem, CliError> {
    let Some(path) = &config.input else {
        return Ok(Problem::default());
    };
    let text = if path.as_os_str() == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| CliError::Io(e.to_string()))?;
        buf
    } else {
        std::fs::read_to_string(path).map_err(|e| CliError::MissingInput {
            path: path.display().to_string(),
            message: e.to_string(),
        })?
    };
    input::parse_problem(&text)
}

/// Runs one command and renders its artifact in the requested format.
pub fn run(config: &ExperimentConfig) -> Result<String, CliError> {
    let problem = read_problem(config)?;
    let artifact = commands::dispatch(config, &problem)?;
    match config.format() {
        Format::Json => Ok(output::to_json(&artifact.json)),
        Format::Csv => artifact
            .table
            .map(|t| t.render())
            .ok_or_else(|| CliError::Usage("this command has no CSV form; use --format json".into())),
    }
}

/// Parses the process arguments, runs, writes the artifact, and maps
/// failures to exit codes.
pub fn main() -> ExitCode {
    let config = ExperimentConfig::parse();
    let result = run(&config).and_then(|text| match &config.out {
        Some(path) => std::fs::write(path, text).map_err(|e| CliError::Io(e.to_string())),
        None => {
            print!("{text}");
            Ok(())
        }
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
