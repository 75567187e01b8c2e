use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use std::path::PathBuf;

#[derive(Debug, Parser)]
#[command(
    name = "moduli-numerics",
    version,
    about = "Exact numerics for rank-2 bundles on surfaces in P^3"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,

    /// Write the report to FILE instead of standard output.
    #[arg(long, value_name = "FILE", global = true)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Numerics of a degree-delta surface: chi(O_X(n)), beta, gamma.
    Surface(SurfaceArgs),
    /// Cohomology table and invariants of the determinantal curve of index s.
    Curve(CurveArgs),
    /// Construction certificate; (s, sigma) default to the optimal pair.
    Construct(ConstructArgs),
    /// All c2 intervals for a given degree.
    Intervals(DeltaArgs),
    /// Degree thresholds from which each interval is nonempty.
    Thresholds,
    /// Predicted natural-cohomology profile of the general bundle.
    Natural(NaturalArgs),
    /// Check resolution-derived h0 against finite-field brute force.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
pub struct DeltaArgs {
    #[arg(long)]
    pub delta: i64,
}

#[derive(Debug, Args)]
pub struct SurfaceArgs {
    #[arg(long)]
    pub delta: i64,
    #[arg(long, allow_hyphen_values = true)]
    pub n_min: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    pub n_max: Option<i64>,
}

#[derive(Debug, Args)]
pub struct CurveArgs {
    #[arg(long)]
    pub s: i64,
    #[arg(long, allow_hyphen_values = true)]
    pub n_min: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    pub n_max: Option<i64>,
}

#[derive(Debug, Args)]
pub struct ConstructArgs {
    #[arg(long)]
    pub delta: i64,
    #[arg(long, requires = "sigma")]
    pub s: Option<i64>,
    #[arg(long, requires = "s")]
    pub sigma: Option<i64>,
}

#[derive(Debug, Args)]
pub struct NaturalArgs {
    #[arg(long)]
    pub delta: i64,
    #[arg(long, allow_hyphen_values = true)]
    pub c2: BigInt,
    #[arg(long, allow_hyphen_values = true)]
    pub n_min: i64,
    #[arg(long, allow_hyphen_values = true)]
    pub n_max: i64,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Largest curve index s to check.
    #[arg(long, default_value_t = 4)]
    pub max_s: i64,
    /// Largest twist; defaults to 3s for each s.
    #[arg(long)]
    pub max_n: Option<i64>,
    #[arg(long, default_value_t = 101)]
    pub prime: u64,
    /// First of three consecutive seeds.
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
}
