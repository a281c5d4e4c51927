use std::path::PathBuf;

use fermix_core::oracle::exact_unitary_checked;
use fermix_core::report::{self, min_span, Comparison, StatsRow};
use fermix_core::sim::DEFAULT_TOLERANCE;
use fermix_core::{
    equal_up_to_global_phase, synthesize, Circuit, ExcitationKind, ExcitationSpec, Method,
    ResourceReport, Simulator,
};
use serde::Serialize;

use crate::args::{Command, ExcitationArgs, Format, RangeArgs};
use crate::Failure;

const STATS_DEFAULT_MAX: usize = 10;
const COMPARE_DEFAULT_MAX: usize = 20;
/// Largest span the tables accept; beyond this only the formulas matter.
pub const MAX_SPAN: usize = 512;

/// The fully resolved configuration of one invocation, echoed in JSON output.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunConfig {
    pub command: &'static str,
    pub kind: ExcitationKind,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub indices: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub theta: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n_qubits: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub method: Option<Method>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tol: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_qubits: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n_min: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n_max: Option<usize>,
    pub format: Format,
    #[serde(skip)]
    pub out: Option<PathBuf>,
}

/// One gate as written in JSON output.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GateRecord {
    pub kind: &'static str,
    pub angle: Option<f64>,
    pub operands: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SynthResult {
    #[serde(skip)]
    pub circuit: Circuit,
    pub n_qubits: usize,
    pub resources: ResourceReport,
    pub gates: Vec<GateRecord>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifyResult {
    pub distance: f64,
    pub pass: bool,
    pub cnot_count: usize,
    pub cnot_depth: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(untagged)]
pub enum Results {
    Synth(SynthResult),
    Verify(VerifyResult),
    Stats(Vec<StatsRow>),
    Compare(Comparison),
}

/// Everything a command produced, ready for rendering.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub command: &'static str,
    pub config: RunConfig,
    pub results: Results,
}

impl Report {
    /// False only for a verification whose distance exceeded the tolerance.
    pub fn passed(&self) -> bool {
        !matches!(&self.results, Results::Verify(v) if !v.pass)
    }
}

fn check_format(command: &str, format: Format, allowed: &[Format]) -> Result<(), Failure> {
    if allowed.contains(&format) {
        Ok(())
    } else {
        let names: Vec<String> = allowed
            .iter()
            .map(|f| format!("{f:?}").to_lowercase())
            .collect();
        Err(Failure::Usage(format!(
            "{command} supports --format {}, got {}",
            names.join("|"),
            format!("{format:?}").to_lowercase()
        )))
    }
}

fn excitation_spec(args: &ExcitationArgs) -> Result<ExcitationSpec, Failure> {
    let n = args
        .n_qubits
        .unwrap_or_else(|| args.indices.iter().max().map_or(0, |m| m + 1));
    Ok(ExcitationSpec::new(
        args.kind,
        &args.indices,
        args.theta,
        n,
    )?)
}

/// Tolerance from the flag, else the environment value, else the default.
pub fn resolve_tol(flag: Option<f64>, env: Option<&str>) -> Result<f64, Failure> {
    let tol = match (flag, env) {
        (Some(t), _) => t,
        (None, Some(text)) => text
            .trim()
            .parse()
            .map_err(|_| Failure::Usage(format!("{} is not a number: `{text}`", crate::TOL_ENV)))?,
        (None, None) => DEFAULT_TOLERANCE,
    };
    if tol.is_finite() && tol > 0.0 {
        Ok(tol)
    } else {
        Err(Failure::Usage(format!(
            "tolerance must be positive and finite, got {tol}"
        )))
    }
}

fn excitation_config(
    command: &'static str,
    args: &ExcitationArgs,
    spec: &ExcitationSpec,
    format: Format,
) -> RunConfig {
    RunConfig {
        command,
        kind: spec.kind(),
        indices: Some(spec.indices().to_vec()),
        theta: Some(spec.theta()),
        n_qubits: Some(spec.n_qubits()),
        method: Some(args.method.into()),
        tol: None,
        max_qubits: None,
        n_min: None,
        n_max: None,
        format,
        out: None,
    }
}

fn range_config(
    command: &'static str,
    args: &RangeArgs,
    default_max: usize,
) -> Result<RunConfig, Failure> {
    check_format(
        command,
        args.format,
        &[Format::Table, Format::Csv, Format::Json],
    )?;
    let n_min = match args.n_min {
        Some(n) => n,
        None => min_span(args.kind)?,
    };
    let n_max = args.n_max.unwrap_or(default_max);
    if n_max > MAX_SPAN {
        return Err(Failure::Usage(format!(
            "--n-max is capped at {MAX_SPAN}, got {n_max}"
        )));
    }
    Ok(RunConfig {
        command,
        kind: args.kind,
        indices: None,
        theta: None,
        n_qubits: None,
        method: None,
        tol: None,
        max_qubits: None,
        n_min: Some(n_min),
        n_max: Some(n_max),
        format: args.format,
        out: args.out.clone(),
    })
}

fn range_of(config: &RunConfig) -> std::ops::RangeInclusive<usize> {
    config.n_min.unwrap_or_default()..=config.n_max.unwrap_or_default()
}

/// Run one parsed command.
pub fn execute(command: &Command, tol_env: Option<&str>) -> Result<Report, Failure> {
    match command {
        Command::Synth(args) => {
            check_format("synth", args.format, &[Format::Qasm, Format::Json])?;
            let spec = excitation_spec(&args.excitation)?;
            let circuit = synthesize(&spec, args.excitation.method.into())?;
            let config = RunConfig {
                out: args.out.clone(),
                ..excitation_config("synth", &args.excitation, &spec, args.format)
            };
            let gates = circuit
                .gates()
                .iter()
                .map(|g| GateRecord {
                    kind: g.kind().name(),
                    angle: g.angle(),
                    operands: g.qubits(),
                })
                .collect();
            let results = Results::Synth(SynthResult {
                n_qubits: circuit.n_qubits(),
                resources: circuit.resources(),
                gates,
                circuit,
            });
            Ok(Report {
                command: "synth",
                config,
                results,
            })
        }
        Command::Verify(args) => {
            check_format("verify", args.format, &[Format::Json, Format::Table])?;
            let tol = resolve_tol(args.tol, tol_env)?;
            let spec = excitation_spec(&args.excitation)?;
            let simulator = Simulator::with_max_qubits(args.max_qubits);
            let circuit = synthesize(&spec, args.excitation.method.into())?;
            let exact = exact_unitary_checked(&spec, args.max_qubits)?;
            let u = simulator.unitary_of(&circuit)?;
            let equivalence = equal_up_to_global_phase(&u, &exact.unitary, tol)?;
            let resources = circuit.resources();
            let config = RunConfig {
                tol: Some(tol),
                max_qubits: Some(args.max_qubits),
                out: args.out.clone(),
                ..excitation_config("verify", &args.excitation, &spec, args.format)
            };
            let results = Results::Verify(VerifyResult {
                distance: equivalence.distance,
                pass: equivalence.equal,
                cnot_count: resources.cnot_count,
                cnot_depth: resources.cnot_depth,
            });
            Ok(Report {
                command: "verify",
                config,
                results,
            })
        }
        Command::Stats(args) => {
            let config = range_config("stats", args, STATS_DEFAULT_MAX)?;
            let rows = report::stats(args.kind, range_of(&config))?;
            Ok(Report {
                command: "stats",
                config,
                results: Results::Stats(rows),
            })
        }
        Command::Compare(args) => {
            let config = range_config("compare", args, COMPARE_DEFAULT_MAX)?;
            let comparison = report::compare(args.kind, range_of(&config))?;
            Ok(Report {
                command: "compare",
                config,
                results: Results::Compare(comparison),
            })
        }
    }
}
