use std::fmt;

use crate::error::{Error, Result};

/// The seven primitive gate kinds understood by the IR.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GateKind {
    H,
    X,
    Rx,
    Ry,
    Rz,
    Cnot,
    Cz,
}

impl GateKind {
    pub fn is_rotation(self) -> bool {
        matches!(self, GateKind::Rx | GateKind::Ry | GateKind::Rz)
    }

    pub fn is_two_qubit(self) -> bool {
        matches!(self, GateKind::Cnot | GateKind::Cz)
    }

    /// Lower-case mnemonic, identical to the OpenQASM 2.0 gate name.
    pub fn name(self) -> &'static str {
        match self {
            GateKind::H => "h",
            GateKind::X => "x",
            GateKind::Rx => "rx",
            GateKind::Ry => "ry",
            GateKind::Rz => "rz",
            GateKind::Cnot => "cx",
            GateKind::Cz => "cz",
        }
    }
}

/// One primitive gate application.
///
/// Rotations follow `R_P(θ) = exp(-iθP/2)`. `Cnot` flips `target` when
/// `control` is `|1⟩`; `Cz` is symmetric in its operands.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Gate {
    H(usize),
    X(usize),
    Rx(f64, usize),
    Ry(f64, usize),
    Rz(f64, usize),
    Cnot { control: usize, target: usize },
    Cz(usize, usize),
}

impl Gate {
    pub fn cnot(control: usize, target: usize) -> Self {
        Gate::Cnot { control, target }
    }

    pub fn kind(&self) -> GateKind {
        match self {
            Gate::H(_) => GateKind::H,
            Gate::X(_) => GateKind::X,
            Gate::Rx(..) => GateKind::Rx,
            Gate::Ry(..) => GateKind::Ry,
            Gate::Rz(..) => GateKind::Rz,
            Gate::Cnot { .. } => GateKind::Cnot,
            Gate::Cz(..) => GateKind::Cz,
        }
    }

    pub fn angle(&self) -> Option<f64> {
        match *self {
            Gate::Rx(a, _) | Gate::Ry(a, _) | Gate::Rz(a, _) => Some(a),
            _ => None,
        }
    }

    /// Operands in canonical order: `[q]`, `[control, target]` or the CZ pair as built.
    pub fn qubits(&self) -> Vec<usize> {
        match *self {
            Gate::H(q) | Gate::X(q) | Gate::Rx(_, q) | Gate::Ry(_, q) | Gate::Rz(_, q) => vec![q],
            Gate::Cnot { control, target } => vec![control, target],
            Gate::Cz(a, b) => vec![a, b],
        }
    }

    pub fn acts_on(&self, qubit: usize) -> bool {
        match *self {
            Gate::H(q) | Gate::X(q) | Gate::Rx(_, q) | Gate::Ry(_, q) | Gate::Rz(_, q) => {
                q == qubit
            }
            Gate::Cnot { control, target } => control == qubit || target == qubit,
            Gate::Cz(a, b) => a == qubit || b == qubit,
        }
    }

    pub fn is_two_qubit(&self) -> bool {
        self.kind().is_two_qubit()
    }

    /// Self-inverse gates map to themselves; rotations negate their angle.
    pub fn inverse(&self) -> Self {
        match *self {
            Gate::Rx(a, q) => Gate::Rx(-a, q),
            Gate::Ry(a, q) => Gate::Ry(-a, q),
            Gate::Rz(a, q) => Gate::Rz(-a, q),
            g => g,
        }
    }

    /// Build a gate from its kind, optional angle and operand list.
    pub fn from_parts(kind: GateKind, angle: Option<f64>, operands: &[usize]) -> Result<Self> {
        let arity = if kind.is_two_qubit() { 2 } else { 1 };
        if operands.len() != arity {
            return Err(Error::InvalidGate(format!(
                "{} expects {arity} operand(s), got {}",
                kind.name(),
                operands.len()
            )));
        }
        let q = operands[0];
        let rotation = |a: Option<f64>| {
            a.ok_or_else(|| Error::InvalidGate(format!("{} requires an angle", kind.name())))
        };
        Ok(match kind {
            GateKind::H => Gate::H(q),
            GateKind::X => Gate::X(q),
            GateKind::Rx => Gate::Rx(rotation(angle)?, q),
            GateKind::Ry => Gate::Ry(rotation(angle)?, q),
            GateKind::Rz => Gate::Rz(rotation(angle)?, q),
            GateKind::Cnot => Gate::cnot(q, operands[1]),
            GateKind::Cz => Gate::Cz(q, operands[1]),
        })
    }

    /// Check operands and angle against a register of `n_qubits`.
    pub fn validate(&self, n_qubits: usize) -> Result<()> {
        let qubits = self.qubits();
        for &q in &qubits {
            if q >= n_qubits {
                return Err(Error::QubitOutOfRange { qubit: q, n_qubits });
            }
        }
        if qubits.len() == 2 && qubits[0] == qubits[1] {
            return Err(Error::DuplicateOperand(qubits[0]));
        }
        match self.angle() {
            Some(a) if !a.is_finite() => Err(Error::NonFiniteAngle(a)),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for Gate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Gate::H(q) | Gate::X(q) => write!(f, "{}(q{q})", self.kind().name()),
            Gate::Rx(a, q) | Gate::Ry(a, q) | Gate::Rz(a, q) => {
                write!(f, "{}({a}) q{q}", self.kind().name())
            }
            Gate::Cnot { control, target } => write!(f, "cx(q{control} -> q{target})"),
            Gate::Cz(a, b) => write!(f, "cz(q{a}, q{b})"),
        }
    }
}
