//! OpenQASM 2.0 emission for the seven-gate subset, plus a reader for the
//! same subset used to self-check emitted text.

use std::fmt::Write;

use super::{Circuit, Gate, GateKind};
use crate::error::{Error, Result};

pub const HEADER: &str = "OPENQASM 2.0;\ninclude \"qelib1.inc\";\n";

/// Render `circuit` as OpenQASM 2.0 with a single register `q`.
///
/// Angles are written in scientific notation with 17 significant digits so
/// that they round-trip exactly through `f64`.
pub fn emit_qasm(circuit: &Circuit) -> String {
    let mut out = String::from(HEADER);
    writeln!(out, "qreg q[{}];", circuit.n_qubits()).unwrap();
    for gate in circuit.gates() {
        let name = gate.kind().name();
        match *gate {
            Gate::H(q) | Gate::X(q) => writeln!(out, "{name} q[{q}];"),
            Gate::Rx(a, q) | Gate::Ry(a, q) | Gate::Rz(a, q) => {
                writeln!(out, "{name}({a:.16e}) q[{q}];")
            }
            Gate::Cnot { control, target } => writeln!(out, "{name} q[{control}],q[{target}];"),
            Gate::Cz(a, b) => writeln!(out, "{name} q[{a}],q[{b}];"),
        }
        .unwrap();
    }
    out
}

/// Parse text in exactly the dialect [`emit_qasm`] produces.
///
/// Comments (`//`) and blank lines are skipped; `pi` is accepted inside
/// angle expressions of the form `[-]pi[/k]` or plain reals.
pub fn read_qasm(text: &str) -> Result<Circuit> {
    let mut circuit: Option<Circuit> = None;
    let mut saw_version = false;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let err = |message: String| Error::Qasm {
            line: line_no,
            message,
        };
        let line = raw.split("//").next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let stmt = line
            .strip_suffix(';')
            .ok_or_else(|| err("missing terminating ';'".into()))?
            .trim();
        if stmt == "OPENQASM 2.0" {
            saw_version = true;
            continue;
        }
        if !saw_version {
            return Err(err("expected 'OPENQASM 2.0;' header".into()));
        }
        if stmt == "include \"qelib1.inc\"" {
            continue;
        }
        if let Some(rest) = stmt.strip_prefix("qreg ") {
            if circuit.is_some() {
                return Err(err("only one register is supported".into()));
            }
            let n = parse_operand(rest.trim(), "q").map_err(&err)?;
            circuit = Some(Circuit::new(n).map_err(|e| err(e.to_string()))?);
            continue;
        }
        let circuit = circuit
            .as_mut()
            .ok_or_else(|| err("gate before qreg".into()))?;

        let (head, args) = stmt
            .split_once(' ')
            .ok_or_else(|| err(format!("cannot parse statement '{stmt}'")))?;
        let (name, angle) = match head.split_once('(') {
            Some((name, expr)) => {
                let expr = expr
                    .strip_suffix(')')
                    .ok_or_else(|| err("unclosed '('".into()))?;
                (name, Some(parse_angle(expr).map_err(&err)?))
            }
            None => (head, None),
        };
        let kind = match name {
            "h" => GateKind::H,
            "x" => GateKind::X,
            "rx" => GateKind::Rx,
            "ry" => GateKind::Ry,
            "rz" => GateKind::Rz,
            "cx" => GateKind::Cnot,
            "cz" => GateKind::Cz,
            other => return Err(err(format!("unsupported gate '{other}'"))),
        };
        if kind.is_rotation() != angle.is_some() {
            return Err(err(format!("wrong parameter list for '{name}'")));
        }
        let operands = args
            .split(',')
            .map(|a| parse_operand(a.trim(), "q"))
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(&err)?;
        let gate = Gate::from_parts(kind, angle, &operands).map_err(|e| err(e.to_string()))?;
        circuit.append(gate).map_err(|e| err(e.to_string()))?;
    }
    circuit.ok_or(Error::Qasm {
        line: 0,
        message: "no qreg declaration".into(),
    })
}

fn parse_operand(text: &str, register: &str) -> std::result::Result<usize, String> {
    text.strip_prefix(register)
        .and_then(|s| s.strip_prefix('['))
        .and_then(|s| s.strip_suffix(']'))
        .and_then(|s| s.parse().ok())
        .ok_or_else(|| format!("bad operand '{text}'"))
}

/// Parse an angle written in radians or as `pi`, `-pi`, `pi/k`, `-pi/k`.
pub fn parse_angle(expr: &str) -> std::result::Result<f64, String> {
    let expr = expr.trim();
    let (sign, body) = match expr.strip_prefix('-') {
        Some(rest) => (-1.0, rest.trim()),
        None => (1.0, expr),
    };
    if let Some(rest) = body.strip_prefix("pi") {
        let rest = rest.trim();
        if rest.is_empty() {
            return Ok(sign * std::f64::consts::PI);
        }
        let den: f64 = rest
            .strip_prefix('/')
            .and_then(|d| d.trim().parse().ok())
            .ok_or_else(|| format!("bad angle '{expr}'"))?;
        return Ok(sign * std::f64::consts::PI / den);
    }
    body.parse::<f64>()
        .map(|v| sign * v)
        .map_err(|_| format!("bad angle '{expr}'"))
}
