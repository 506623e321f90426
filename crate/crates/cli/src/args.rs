use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

/// Exact invariants of monomial quotients and numerical semigroup rings.
#[derive(Parser, Debug, Serialize)]
#[command(name = "ainvariant", version)]
pub struct Cli {
    /// Output format; `table` and `csv` are renderings of the JSON document.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,

    #[command(subcommand)]
    #[serde(flatten)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
    Table,
}

#[derive(Subcommand, Debug, Serialize)]
#[serde(tag = "subcommand", rename_all = "kebab-case")]
pub enum Command {
    /// Hilbert series, dimension, multiplicity and Hilbert polynomial of k[x]/I.
    Hilbert(QuotientArgs),
    /// Graded local cohomology table, depth, a-invariant and EG of k[x]/I.
    Cohomology(QuotientArgs),
    /// Reduction number, multiplicity and Ratliff-Rush data of an m-primary ideal.
    Reduction(ReductionArgs),
    /// Check bounds on one instance, or on a seeded corpus when no ideal is given.
    Verify(VerifyArgs),
    /// Rerun a worked example and compare against its expected values.
    Reproduce(ReproduceArgs),
}

#[derive(Args, Debug, Serialize)]
pub struct QuotientArgs {
    /// Comma-separated variable names, e.g. `a,b,c,d`.
    #[arg(long)]
    pub ring: String,
    /// Comma-separated monomial generators, e.g. `b*d, b*c, b^2, c^3`.
    #[arg(long)]
    pub ideal: String,
    /// Report degrees `-window..=window` (default: the sum of the top exponents).
    #[arg(long)]
    pub window: Option<i64>,
}

#[derive(Args, Debug, Clone, Serialize)]
pub struct ReductionFlags {
    /// Seed of the first generic reduction; trial `t` uses `seed + t`.
    #[arg(long, env = "AINVARIANT_SEED", default_value_t = 0)]
    pub seed: u64,
    /// Number of seeded generic reductions tried.
    #[arg(long, default_value_t = 3)]
    pub trials: u32,
    /// Coefficients of generic combinations are drawn from `[1, coeff_bound]`.
    #[arg(long, default_value_t = 100)]
    pub coeff_bound: u32,
    /// Largest reduction number searched (default: `e(I) + 2`).
    #[arg(long)]
    pub n_bound: Option<u32>,
    /// Largest truncation level allowed (default: `k * maxdeg * (n + 2)`).
    #[arg(long)]
    pub max_truncation: Option<u32>,
}

#[derive(Args, Debug, Serialize)]
pub struct ReductionArgs {
    /// Comma-separated variable names.
    #[arg(long, conflicts_with = "semigroup", required_unless_present = "semigroup")]
    pub ring: Option<String>,
    /// Generators of a numerical semigroup, e.g. `4,5,6,7`.
    #[arg(long)]
    pub semigroup: Option<String>,
    /// Monomials over `--ring`, or semigroup elements over `--semigroup`.
    #[arg(long)]
    pub ideal: String,
    /// Report powers `1..=window`.
    #[arg(long, default_value_t = 3)]
    pub window: u32,
    #[command(flatten)]
    #[serde(flatten)]
    pub flags: ReductionFlags,
}

#[derive(Args, Debug, Serialize)]
pub struct VerifyArgs {
    /// Bounds to check: thm2.1, eg-lower, prop3.1, prop3.3, prop3.4.
    #[arg(long, value_delimiter = ',')]
    pub bound: Vec<String>,
    /// Comma-separated variable names (single-instance mode).
    #[arg(long, conflicts_with = "semigroup", requires = "ideal")]
    pub ring: Option<String>,
    /// Numerical semigroup generators (single-instance mode).
    #[arg(long, requires = "ideal")]
    pub semigroup: Option<String>,
    /// Monomials over `--ring`, or semigroup elements over `--semigroup`.
    #[arg(long)]
    pub ideal: Option<String>,
    /// Corpus seed (corpus mode).
    #[arg(long, default_value_t = 0)]
    pub corpus_seed: u64,
    /// Corpus size.
    #[arg(long, default_value_t = 100)]
    pub count: usize,
    /// Fewest variables in generated ideals.
    #[arg(long, default_value_t = 2)]
    pub min_vars: usize,
    /// Most variables in generated ideals.
    #[arg(long, default_value_t = 4)]
    pub max_vars: usize,
    /// Largest exponent in generated ideals (default: 6, or 3 for prop3.4).
    #[arg(long)]
    pub max_exponent: Option<u32>,
    #[command(flatten)]
    #[serde(flatten)]
    pub flags: ReductionFlags,
}

#[derive(Args, Debug, Serialize)]
pub struct ReproduceArgs {
    #[arg(value_enum)]
    pub example: Example,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
pub enum Example {
    #[value(name = "example-2.2")]
    #[serde(rename = "example-2.2")]
    FiberCone,
    #[value(name = "example-3.2")]
    #[serde(rename = "example-3.2")]
    Semigroup,
}
