//! `frieze`: T-paths, gluing, frieze checks and frieze patterns from JSON
//! documents.
//!
//! Output goes to stdout. Errors go to stderr as
//! `{"error": {"kind": …, "message": …}}`; the exit status is 2 for invalid
//! input and 3 when a mathematical hypothesis fails (pieces disagreeing on a
//! shared diagonal, an edge value other than 1 in a unimodular check).

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use frieze_core::FriezeError;

#[derive(Parser)]
#[command(name = "frieze", version, about = "Friezes, weak friezes and T-paths on dissected polygons")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate the T-paths between two vertices, with weights when values are given.
    Tpaths(TpathsArgs),
    /// Glue per-cell pieces into the unique weak frieze on the whole polygon.
    Glue(CommonArgs),
    /// Check frieze, weak-frieze, T-path-formula or unimodular conditions.
    Check(CheckArgs),
    /// Render a map as a frieze pattern.
    Pattern(PatternArgs),
    /// Build the integer frieze of a triangulation.
    Cc(PatternArgs),
    /// Seeded random campaign comparing weak friezes with the T-path formula.
    Fuzz(FuzzArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
    Svg,
}

#[derive(Args)]
pub struct CommonArgs {
    /// Input JSON document, `-` for stdin.
    #[arg(long, short)]
    pub input: PathBuf,

    #[arg(long, short, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    /// Worker threads for per-pair checks.
    #[arg(long, short, default_value_t = 1)]
    pub jobs: usize,
}

#[derive(Args)]
pub struct TpathsArgs {
    #[command(flatten)]
    pub common: CommonArgs,

    /// Start vertex; defaults to the document's `from`.
    #[arg(long)]
    pub from: Option<usize>,

    /// End vertex; defaults to the document's `to`.
    #[arg(long)]
    pub to: Option<usize>,

    /// Separate document supplying `values` for weights.
    #[arg(long)]
    pub values: Option<PathBuf>,
}

#[derive(Args)]
pub struct CheckArgs {
    #[command(flatten)]
    pub common: CommonArgs,

    /// Ptolemy relation at crossings with dissection diagonals.
    #[arg(long)]
    pub weak: bool,

    /// Ptolemy relation at every crossing.
    #[arg(long)]
    pub frieze: bool,

    /// The T-path formula for every ordered pair of vertices.
    #[arg(long)]
    pub tpath: bool,

    /// Weak frieze and T-path formula, computed independently, and whether they agree.
    #[arg(long = "theorem-a")]
    pub theorem_a: bool,

    /// Diamond rule f(i,j)f(i+1,j+1) = 1 + f(i,j+1)f(i+1,j).
    #[arg(long)]
    pub unimodular: bool,
}

#[derive(Args)]
pub struct PatternArgs {
    #[command(flatten)]
    pub common: CommonArgs,

    /// Copies of the fundamental domain in text output.
    #[arg(long, default_value_t = 1)]
    pub repeat_columns: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SemifieldName {
    Rational,
    Tropical,
}

#[derive(Args)]
pub struct FuzzArgs {
    #[arg(long, default_value_t = 0)]
    pub seed: u64,

    /// Number of random instances.
    #[arg(long, default_value_t = 100)]
    pub count: usize,

    /// Largest polygon size.
    #[arg(long, default_value_t = 8)]
    pub max_n: usize,

    #[arg(long, value_enum, default_value_t = SemifieldName::Rational)]
    pub semifield: SemifieldName,

    #[arg(long, short, default_value_t = 1)]
    pub jobs: usize,
}

/// Anything that stops a command before it produces output.
#[derive(Debug)]
pub enum Failure {
    Frieze(FriezeError),
    Io { path: PathBuf, message: String },
    Usage(String),
}

impl From<FriezeError> for Failure {
    fn from(e: FriezeError) -> Self {
        Failure::Frieze(e)
    }
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Frieze(e) if e.is_hypothesis_violation() => 3,
            _ => 2,
        }
    }

    fn to_json(&self) -> Value {
        let mut error = match self {
            Failure::Frieze(e) => json!({ "kind": e.kind(), "message": e.to_string() }),
            Failure::Io { path, message } => {
                json!({ "kind": "io", "message": format!("{}: {message}", path.display()) })
            }
            Failure::Usage(message) => json!({ "kind": "usage", "message": message }),
        };
        if let Failure::Frieze(
            FriezeError::SharedValueMismatch(d)
            | FriezeError::NonUnitEdge(d)
            | FriezeError::PropagationStalled(d)
            | FriezeError::PropagationConflict(d),
        ) = self
        {
            error["diagonal"] = json!([d.lo(), d.hi()]);
        }
        json!({ "error": error })
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Tpaths(args) => commands::tpaths(&args),
        Command::Glue(args) => commands::glue(&args),
        Command::Check(args) => commands::check(&args),
        Command::Pattern(args) => commands::pattern(&args),
        Command::Cc(args) => commands::cc(&args),
        Command::Fuzz(args) => commands::fuzz(&args),
    };
    match result {
        Ok(out) => {
            print!("{out}");
            if !out.ends_with('\n') {
                println!();
            }
            ExitCode::SUCCESS
        }
        Err(failure) => {
            eprintln!("{}", failure.to_json());
            ExitCode::from(failure.exit_code())
        }
    }
}
