use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use qnatural::transform::Transform;

#[derive(Debug, Parser)]
#[command(
    name = "qnatural",
    version,
    about = "Evaluate q-analogues of the Natural transform"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate one transform of one function over a grid of points.
    Eval(EvalArgs),
    /// Compare series values against closed-form right-hand sides.
    Compare(CompareArgs),
    /// Track the approach to the classical transform as q -> 1.
    Sweep(SweepArgs),
    /// Print the function catalog.
    List(ListArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Variant {
    Calibrated,
    Printed,
}

#[derive(Debug, Clone, Args)]
pub struct Common {
    /// Bases in (0, 1), comma separated.
    #[arg(long = "q", value_delimiter = ',', default_value = "0.5")]
    pub q: Vec<f64>,
    /// Settle tolerance.
    #[arg(long, env = "QNATURAL_TOL", default_value_t = qnatural::context::DEFAULT_TOL)]
    pub tol: f64,
    #[arg(long, default_value_t = qnatural::context::DEFAULT_MAX_TERMS)]
    pub max_terms: usize,
    #[arg(long, default_value_t = qnatural::context::DEFAULT_SETTLE_COUNT)]
    pub settle_count: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write to this file instead of standard output.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

fn transform(s: &str) -> Result<Transform, String> {
    Transform::from_name(s).ok_or_else(|| {
        let names: Vec<_> = Transform::ALL.iter().map(|t| t.name()).collect();
        format!("unknown transform '{s}' (one of {})", names.join(", "))
    })
}

#[derive(Debug, Clone, Args)]
pub struct EvalArgs {
    #[arg(long, value_parser = transform, default_value = "Nq")]
    pub transform: Transform,
    /// Function selector, e.g. `eexp:a=0.5`.
    #[arg(long = "fn")]
    pub function: String,
    #[arg(long, value_delimiter = ',', required = true)]
    pub u: Vec<f64>,
    #[arg(long, value_delimiter = ',', required = true)]
    pub v: Vec<f64>,
    /// Pochhammer base of the second-type series.
    #[arg(long, value_enum, default_value_t = Variant::Calibrated)]
    pub variant: Variant,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Clone, Args)]
pub struct CompareArgs {
    /// Named suite; replaces --fn, --oracle and the grid.
    #[arg(long, conflicts_with_all = ["function", "oracle"])]
    pub suite: Option<String>,
    #[arg(long = "fn", requires = "oracle")]
    pub function: Option<String>,
    #[arg(long, requires = "function")]
    pub oracle: Option<String>,
    #[arg(long, value_parser = transform, default_value = "Nq")]
    pub transform: Transform,
    /// Exponent for oracles that leave it unbound.
    #[arg(long)]
    pub alpha: Option<f64>,
    #[arg(long, value_delimiter = ',')]
    pub u: Vec<f64>,
    #[arg(long, value_delimiter = ',')]
    pub v: Vec<f64>,
    /// Also write the discrepancy report (JSON) to this file.
    #[arg(long)]
    pub report: Option<PathBuf>,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Clone, Args)]
pub struct SweepArgs {
    #[arg(long = "fn")]
    pub function: String,
    #[arg(long, required = true)]
    pub u: f64,
    #[arg(long, required = true)]
    pub v: f64,
    /// Bases q = 1 - 2^-j for j from --j-min to --j-max.
    #[arg(long, default_value_t = 3)]
    pub j_min: u32,
    #[arg(long, default_value_t = 10)]
    pub j_max: u32,
    /// Gauss-Laguerre nodes of the classical reference.
    #[arg(long, default_value_t = 64)]
    pub quad_nodes: usize,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Clone, Args)]
pub struct ListArgs {
    /// Restrict to one family.
    #[arg(long = "fn")]
    pub function: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[arg(long)]
    pub output: Option<PathBuf>,
}
