//! Gate-level circuit IR, resource metrics and OpenQASM 2.0 emission.

mod gate;
mod metrics;
mod qasm;

pub use gate::{Gate, GateKind};
pub use metrics::ResourceReport;
pub use qasm::{emit_qasm, parse_angle, read_qasm};

use crate::error::{Error, Result};

/// An ordered gate sequence over a fixed register.
///
/// Every stored gate has been validated against `n_qubits`.
#[derive(Debug, Clone, PartialEq)]
pub struct Circuit {
    n_qubits: usize,
    gates: Vec<Gate>,
}

impl Circuit {
    pub fn new(n_qubits: usize) -> Result<Self> {
        if n_qubits == 0 {
            return Err(Error::EmptyRegister);
        }
        Ok(Self {
            n_qubits,
            gates: Vec::new(),
        })
    }

    pub fn from_gates(n_qubits: usize, gates: impl IntoIterator<Item = Gate>) -> Result<Self> {
        let mut circuit = Self::new(n_qubits)?;
        circuit.extend(gates)?;
        Ok(circuit)
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }

    pub fn len(&self) -> usize {
        self.gates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gates.is_empty()
    }

    /// Append `gate` at the end of the sequence.
    pub fn append(&mut self, gate: Gate) -> Result<&mut Self> {
        gate.validate(self.n_qubits)?;
        self.gates.push(gate);
        Ok(self)
    }

    /// Consuming form of [`Circuit::append`].
    pub fn with_gate(mut self, gate: Gate) -> Result<Self> {
        self.append(gate)?;
        Ok(self)
    }

    pub fn extend(&mut self, gates: impl IntoIterator<Item = Gate>) -> Result<&mut Self> {
        for gate in gates {
            self.append(gate)?;
        }
        Ok(self)
    }

    /// Time-ordered concatenation `self ∥ other`.
    pub fn compose(&self, other: &Circuit) -> Result<Circuit> {
        if self.n_qubits != other.n_qubits {
            return Err(Error::QubitCountMismatch {
                expected: self.n_qubits,
                found: other.n_qubits,
            });
        }
        let mut out = self.clone();
        out.gates.extend_from_slice(&other.gates);
        Ok(out)
    }

    /// Reversed sequence with every rotation angle negated.
    pub fn inverse(&self) -> Circuit {
        Circuit {
            n_qubits: self.n_qubits,
            gates: self.gates.iter().rev().map(Gate::inverse).collect(),
        }
    }

    pub fn resources(&self) -> ResourceReport {
        ResourceReport::of(self)
    }
}
