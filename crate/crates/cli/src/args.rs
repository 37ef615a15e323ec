//! Command-line arguments.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::output::Format;

#[derive(Debug, Parser)]
#[command(
    name = "xpt",
    version,
    about = "Exchange perturbation theory tables: integrals, cross-sections, toy amplitudes"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalOpts {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Csv, global = true)]
    pub format: Format,
    /// Write to this file instead of standard output.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
    /// TOML file with orbital exponents (alpha1, alpha2, alpha_star, beta).
    #[arg(long, global = true)]
    pub params: Option<PathBuf>,
    /// Li 1s exponent override.
    #[arg(long, global = true)]
    pub alpha1: Option<f64>,
    /// Li 2s exponent override.
    #[arg(long, global = true)]
    pub alpha2: Option<f64>,
    /// Li+ 1s exponent override.
    #[arg(long = "alpha-star", global = true)]
    pub alpha_star: Option<f64>,
    /// Hydrogen 1s exponent override.
    #[arg(long, global = true)]
    pub beta: Option<f64>,
    /// Evaluate the normalization factor at zero momentum transfer.
    #[arg(long = "f0-frozen", global = true)]
    pub f0_frozen: bool,
    /// Value of the lithium normalization in the matrix element.
    #[arg(long = "f-li", value_enum, default_value_t = FLiArg::Adopted, global = true)]
    pub f_li: FLiArg,
    /// Closed expression of the exchange kernel.
    #[arg(long, value_enum, default_value_t = KernelArg::Factored, global = true)]
    pub kernel: KernelArg,
    /// Integral closed forms used by the cross-section.
    #[arg(long = "integral-form", value_enum, default_value_t = FormArg::Corrected, global = true)]
    pub integral_form: FormArg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FLiArg {
    /// f_Li = 2.
    Adopted,
    /// f_Li from the Young operators.
    Computed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum KernelArg {
    Factored,
    Printed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormArg {
    Corrected,
    Printed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PrefactorArg {
    /// Each link uses its bra state's normalization.
    BraState,
    /// Every link uses the global `--f0`.
    Global,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// The eight one-electron integrals on a distance grid.
    Integrals(IntegralsArgs),
    /// Differential cross-section on a (k, theta) grid.
    Dcs(DcsArgs),
    /// Total cross-section on a k grid.
    Sigma(SigmaArgs),
    /// Total cross-sections at the published wave vectors, side by side.
    Table1,
    /// Oracle and invariant checks with a pass/fail report.
    Verify(VerifyArgs),
    /// Perturbative amplitudes of a toy system against the exact propagator.
    Toy(ToyArgs),
}

#[derive(Debug, Args)]
pub struct IntegralsArgs {
    /// Smallest internuclear distance (bohr).
    #[arg(long = "R-min")]
    pub r_min: f64,
    /// Largest internuclear distance (bohr).
    #[arg(long = "R-max")]
    pub r_max: f64,
    #[arg(long, default_value_t = 20)]
    pub steps: usize,
    /// Add quadrature-oracle columns and relative errors.
    #[arg(long)]
    pub oracle: bool,
    #[arg(long = "oracle-tol", default_value_t = 1e-12)]
    pub oracle_tol: f64,
}

#[derive(Debug, Args)]
pub struct DcsArgs {
    /// Explicit wave vectors (1/bohr), comma separated.
    #[arg(long, value_delimiter = ',', conflicts_with_all = ["k_min", "k_max"])]
    pub k: Vec<f64>,
    #[arg(long = "k-min", requires = "k_max")]
    pub k_min: Option<f64>,
    #[arg(long = "k-max", requires = "k_min")]
    pub k_max: Option<f64>,
    #[arg(long = "k-steps", default_value_t = 10)]
    pub k_steps: usize,
    /// Space the k grid logarithmically.
    #[arg(long)]
    pub log: bool,
    /// Points uniformly spaced on [0, pi].
    #[arg(long = "theta-steps", default_value_t = 91)]
    pub theta_steps: usize,
    /// Extra forward angles, uniform in momentum transfer up to `--forward-q-max`.
    #[arg(long = "forward-steps", default_value_t = 0)]
    pub forward_steps: usize,
    #[arg(long = "forward-q-max", default_value_t = 3.0)]
    pub forward_q_max: f64,
}

#[derive(Debug, Args)]
pub struct SigmaArgs {
    #[arg(long = "k-min")]
    pub k_min: f64,
    #[arg(long = "k-max")]
    pub k_max: f64,
    #[arg(long, default_value_t = 20)]
    pub steps: usize,
    #[arg(long)]
    pub log: bool,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Relative tolerance of the oracle comparisons.
    #[arg(long, default_value_t = 1e-6)]
    pub tol: f64,
}

#[derive(Debug, Args)]
pub struct ToyArgs {
    /// TOML toy configuration.
    #[arg(long)]
    pub config: PathBuf,
    /// Highest perturbative order; defaults to the configuration's.
    #[arg(long)]
    pub order: Option<usize>,
    #[arg(long, value_enum, default_value_t = PrefactorArg::BraState)]
    pub prefactor: PrefactorArg,
    /// Global normalization for `--prefactor global`.
    #[arg(long, default_value_t = 1.0)]
    pub f0: f64,
}
