//! Command-line syntax.

use clap::{Args, Parser, Subcommand, ValueEnum};
use std::path::PathBuf;

pub const DEFAULT_SEED: u64 = 20_240_917;

#[derive(Debug, Parser)]
#[command(
    name = "hsym",
    version,
    about = "Exact verification of so(n+2) symmetries of powers of the Laplacian"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalOpts {
    /// Seed for every randomized property test.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Worker threads (default: available parallelism).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Disable the per-suite time budget.
    #[arg(long, global = true)]
    pub no_timeout: bool,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run verification suites.
    Verify(VerifyArgs),
    /// Produce data reports.
    Report {
        #[command(subcommand)]
        what: ReportCmd,
    },
    /// Test whether an operator is a symmetry of a power of the Laplacian (or `□_p`).
    SymmetryCheck(SymmetryArgs),
    /// Harmonic decomposition `p = Σ h_k Fᵏ` of a polynomial.
    Decompose(DecomposeArgs),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, ValueEnum, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SuiteSel {
    Lie,
    Module,
    Duality,
    Symmetry,
    Ambient,
    All,
}

#[derive(Debug, Clone, Default, Args)]
pub struct ParamArgs {
    /// Restrict to this dimension.
    #[arg(long)]
    pub n: Option<usize>,
    /// Restrict to this power.
    #[arg(long)]
    pub r: Option<usize>,
    /// Signature for the real-form checks.
    #[arg(long)]
    pub p: Option<usize>,
    /// Degree bound D.
    #[arg(long = "max-degree")]
    pub max_degree: Option<usize>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub suite: SuiteSel,
    #[command(flatten)]
    pub params: ParamArgs,
    /// Cases per randomized property.
    #[arg(long, default_value_t = 200)]
    pub cases: usize,
}

#[derive(Debug, Subcommand)]
pub enum ReportCmd {
    /// Weight-space dimensions of `R_r` and the socle/quotient structure.
    WeightDims {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[arg(long = "max-degree", default_value_t = 6)]
        max_degree: usize,
    },
}

#[derive(Debug, Args)]
pub struct SymmetryArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub r: usize,
    /// Signature; omit for the Laplacian.
    #[arg(long)]
    pub p: Option<usize>,
    /// Operator text on the X frame, or a path to a file holding it.
    #[arg(long)]
    pub expr: String,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum FrameArg {
    X,
    U,
}

#[derive(Debug, Args)]
pub struct DecomposeArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_enum, default_value_t = FrameArg::X)]
    pub frame: FrameArg,
    /// Polynomial text, or a path to a file holding it.
    #[arg(long)]
    pub expr: String,
}
