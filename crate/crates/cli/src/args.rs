use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use fermix_core::circuit::parse_angle;
use fermix_core::sim::DEFAULT_MAX_QUBITS;
use fermix_core::{ExcitationKind, Method};
use serde::Serialize;

/// Synthesize, verify and tabulate CNOT-efficient excitation circuits.
#[derive(Debug, Parser)]
#[command(name = "fermix", version, about)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build one excitation circuit and print it as OpenQASM 2 or JSON.
    Synth(SynthArgs),
    /// Build one circuit and compare its unitary with the exact exponential.
    Verify(VerifyArgs),
    /// Measured CNOT count/depth of both constructions against the formulas.
    Stats(RangeArgs),
    /// Baseline-to-optimized CNOT ratios over a range of spans.
    Compare(RangeArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Qasm,
    Json,
    Csv,
    Table,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum MethodArg {
    #[default]
    Optimized,
    Standard,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Optimized => Method::Optimized,
            MethodArg::Standard => Method::Standard,
        }
    }
}

/// Parse `sq`, `dq`, `sf` or `df`.
pub fn parse_kind(s: &str) -> Result<ExcitationKind, String> {
    ExcitationKind::from_code(s)
        .ok_or_else(|| format!("unknown kind `{s}` (expected sq, dq, sf or df)"))
}

/// Parse radians or `pi`, `pi/k` and their negations.
pub fn parse_theta(s: &str) -> Result<f64, String> {
    let theta = parse_angle(s)?;
    if theta.is_finite() {
        Ok(theta)
    } else {
        Err(format!("angle `{s}` is not finite"))
    }
}

#[derive(Debug, Clone, Args)]
pub struct ExcitationArgs {
    /// Excitation kind: sq, dq, sf or df.
    #[arg(long, value_parser = parse_kind)]
    pub kind: ExcitationKind,
    /// Comma-separated ascending orbital indices, `i,k` or `i,j,k,l`.
    #[arg(long, value_delimiter = ',', required = true, num_args = 1)]
    pub indices: Vec<usize>,
    /// Excitation angle in radians; `pi`, `pi/k` and negations are accepted.
    #[arg(long, default_value = "0", value_parser = parse_theta, allow_hyphen_values = true)]
    pub theta: f64,
    /// Register size; defaults to the largest index plus one.
    #[arg(long)]
    pub n_qubits: Option<usize>,
    #[arg(long, value_enum, default_value_t)]
    pub method: MethodArg,
}

#[derive(Debug, Clone, Args)]
pub struct SynthArgs {
    #[command(flatten)]
    pub excitation: ExcitationArgs,
    /// qasm or json.
    #[arg(long, value_enum, default_value = "qasm")]
    pub format: Format,
    /// Write to this file instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub excitation: ExcitationArgs,
    /// Equivalence tolerance; defaults to $FERMIX_TOL, then 1e-10.
    #[arg(long)]
    pub tol: Option<f64>,
    /// Largest register the dense simulator accepts.
    #[arg(long, default_value_t = DEFAULT_MAX_QUBITS)]
    pub max_qubits: usize,
    /// json or table.
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct RangeArgs {
    /// sf or df.
    #[arg(long, value_parser = parse_kind)]
    pub kind: ExcitationKind,
    /// Smallest span; defaults to 2 for sf and 4 for df.
    #[arg(long)]
    pub n_min: Option<usize>,
    /// Largest span; defaults to 10 for stats and 20 for compare.
    #[arg(long)]
    pub n_max: Option<usize>,
    /// table, csv or json.
    #[arg(long, value_enum, default_value = "table")]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
}
