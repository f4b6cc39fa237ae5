use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Deserialize;

/// Extremal primes, Sato-Tate approximations and symmetric-power sums.
///
/// Every flag except --config may also be set in a TOML config file; flags
/// given on the command line take precedence over the file.
#[derive(Debug, Parser)]
#[command(name = "extremal", version)]
pub struct Cli {
    /// Worker threads for prime scans and sums (default: available cores)
    #[arg(long, global = true, value_parser = clap::value_parser!(u32).range(1..))]
    pub threads: Option<u32>,

    /// TOML file supplying values for flags not given on the command line
    #[arg(long, global = true, value_name = "PATH")]
    pub config: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute a_p over a prime range and count extremal primes
    Scan(ScanArgs),
    /// Conjectured number of maximal primes up to x
    Predict(PredictArgs),
    /// Histogram of Frobenius angles against the Sato-Tate measure (CSV)
    StHist(StHistArgs),
    /// Check coefficient bounds and the pointwise sandwich for both approximations
    ApproxVerify(ApproxVerifyArgs),
    /// Dump the coefficients of one approximating polynomial (JSON)
    FourierDump(FourierDumpArgs),
    /// Conductor exponents and first coefficient at each bad prime (JSON lines)
    SympowDump(SympowDumpArgs),
    /// Smoothed prime sum of U_n(cos theta_p) log p with the bump weight (CSV)
    SmoothedSum(SmoothedSumArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SideArg {
    Maj,
    Min,
}

#[derive(Debug, Args)]
pub struct ScanArgs {
    /// Curve file, one JSON object per line
    #[arg(long, value_name = "F")]
    pub curves: Option<PathBuf>,
    /// Lower end of the range (inclusive)
    #[arg(long, value_name = "N")]
    pub lo: Option<u64>,
    /// Upper end of the range (exclusive)
    #[arg(long, value_name = "N")]
    pub hi: Option<u64>,
    /// Include per-prime records in JSON output (CSV always has them)
    #[arg(long)]
    pub records: bool,
    /// Output path, or - for standard output
    #[arg(long, value_name = "P")]
    pub out: Option<PathBuf>,
    /// Output format [default: csv]
    #[arg(long, value_enum)]
    pub format: Option<Format>,
}

#[derive(Debug, Args)]
pub struct PredictArgs {
    /// Bound x (> e)
    #[arg(long, value_name = "R")]
    pub x: Option<f64>,
    /// Use the CM rate x^{3/4}/log x
    #[arg(long, conflicts_with = "no_cm")]
    pub cm: bool,
    /// Use the non-CM rate x^{1/4}/log x (default)
    #[arg(long)]
    pub no_cm: bool,
}

#[derive(Debug, Args)]
pub struct StHistArgs {
    #[arg(long, value_name = "F")]
    pub curves: Option<PathBuf>,
    #[arg(long, value_name = "N")]
    pub lo: Option<u64>,
    #[arg(long, value_name = "N")]
    pub hi: Option<u64>,
    /// Number of equal-width bins on [0, pi] [default: 64]
    #[arg(long, value_name = "K")]
    pub bins: Option<usize>,
}

#[derive(Debug, Args)]
pub struct ApproxVerifyArgs {
    /// Polynomial degree
    #[arg(long = "M", value_name = "K")]
    pub m: Option<usize>,
    /// Left endpoint of the interval [default: 0]
    #[arg(long, value_name = "R", requires = "beta")]
    pub alpha: Option<f64>,
    /// Right endpoint of the interval [default: 1/M]
    #[arg(long, value_name = "R", requires = "alpha")]
    pub beta: Option<f64>,
}

#[derive(Debug, Args)]
pub struct FourierDumpArgs {
    #[arg(long = "M", value_name = "K")]
    pub m: Option<usize>,
    #[arg(long, value_name = "R")]
    pub alpha: Option<f64>,
    #[arg(long, value_name = "R")]
    pub beta: Option<f64>,
    /// Majorant or minorant [default: maj]
    #[arg(long, value_enum)]
    pub side: Option<SideArg>,
}

#[derive(Debug, Args)]
pub struct SympowDumpArgs {
    #[arg(long, value_name = "F")]
    pub curves: Option<PathBuf>,
    /// Symmetric power
    #[arg(long, value_name = "K")]
    pub n: Option<u32>,
}

#[derive(Debug, Args)]
pub struct SmoothedSumArgs {
    #[arg(long, value_name = "F")]
    pub curves: Option<PathBuf>,
    #[arg(long, value_name = "K")]
    pub n: Option<usize>,
    /// Scale of the bump weight (>= 100)
    #[arg(long, value_name = "R")]
    pub x: Option<f64>,
}
