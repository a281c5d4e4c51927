use std::f64::consts::FRAC_PI_2;

use super::calibration::STAIRCASE_RZ;
use crate::circuit::{Circuit, Gate};
use crate::error::{Error, Result};
use crate::oracle::{Pauli, PauliString};

/// CNOT ladder over `qubits` from the highest index down, accumulating their
/// joint parity on the lowest one.
pub fn parity_staircase(qubits: &[usize]) -> Vec<Gate> {
    let mut sorted = qubits.to_vec();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    sorted.windows(2).map(|w| Gate::cnot(w[0], w[1])).collect()
}

/// Circuit for `exp(−i(θ/2)·s·P)` where `p = s·P` with `s = ±1`.
///
/// Basis change (H for X, `R_x(π/2)` for Y), a CNOT staircase down to the
/// lowest non-identity qubit, `R_z` there, then everything mirrored.
pub fn build_pauli_exponential(p: &PauliString, theta: f64, n_qubits: usize) -> Result<Circuit> {
    if p.n_qubits() != n_qubits {
        return Err(Error::QubitCountMismatch {
            expected: n_qubits,
            found: p.n_qubits(),
        });
    }
    let c = p.coefficient();
    let sign = if (c.re.abs() - 1.0).abs() < 1e-12 && c.im.abs() < 1e-12 {
        c.re.signum()
    } else {
        return Err(Error::InvalidPauli(format!(
            "coefficient must be ±1, got {c}"
        )));
    };
    let support = p.support();
    let Some(&lowest) = support.first() else {
        return Err(Error::InvalidPauli("identity string has no circuit".into()));
    };

    let mut into_z = Vec::new();
    let mut out_of_z = Vec::new();
    for &q in &support {
        match p.letters()[q] {
            Pauli::X => {
                into_z.push(Gate::H(q));
                out_of_z.push(Gate::H(q));
            }
            Pauli::Y => {
                into_z.push(Gate::Rx(FRAC_PI_2, q));
                out_of_z.push(Gate::Rx(-FRAC_PI_2, q));
            }
            Pauli::Z | Pauli::I => {}
        }
    }
    let ladder = parity_staircase(&support);

    let mut circuit = Circuit::new(n_qubits)?;
    circuit
        .extend(into_z)?
        .extend(ladder.iter().copied())?
        .append(Gate::Rz(STAIRCASE_RZ * sign * theta, lowest))?
        .extend(ladder.iter().rev().copied())?
        .extend(out_of_z)?;
    Ok(circuit)
}
