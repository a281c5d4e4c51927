use std::f64::consts::FRAC_PI_2;

use crate::circuit::{Circuit, Gate};

/// One CNOT plus single-qubit rotations equal to `CZ(c,t)·CNOT(c→t)`, i.e.
/// CNOT first, then CZ, in time order.
pub fn cnot_then_cz(control: usize, target: usize) -> [Gate; 6] {
    [
        Gate::Ry(-FRAC_PI_2, target),
        Gate::Rz(-FRAC_PI_2, target),
        Gate::Rz(FRAC_PI_2, control),
        Gate::cnot(control, target),
        Gate::Rz(FRAC_PI_2, target),
        Gate::Ry(FRAC_PI_2, target),
    ]
}

/// The time-reverse of [`cnot_then_cz`]: CZ first, then CNOT.
pub fn cz_then_cnot(control: usize, target: usize) -> [Gate; 6] {
    let mut gates = cnot_then_cz(control, target);
    gates.reverse();
    gates.map(|g| g.inverse())
}

fn same_pair(a: &Gate, b: &Gate) -> bool {
    let (mut x, mut y) = (a.qubits(), b.qubits());
    x.sort_unstable();
    y.sort_unstable();
    x == y
}

/// Replace every CNOT and CZ on the same qubit pair that are adjacent on both
/// wires (no gate touches either qubit in between) by a single-CNOT
/// equivalent. The unitary is unchanged; the CNOT count drops by one per pair.
pub fn fuse_cnot_cz(circuit: &Circuit) -> Circuit {
    let gates = circuit.gates();
    let mut consumed = vec![false; gates.len()];
    let mut out = Vec::with_capacity(gates.len());
    for (a, gate) in gates.iter().enumerate() {
        if consumed[a] {
            continue;
        }
        if gate.is_two_qubit() {
            let wires = gate.qubits();
            let next = (a + 1..gates.len())
                .find(|&b| !consumed[b] && wires.iter().any(|&q| gates[b].acts_on(q)));
            if let Some(b) = next {
                let partner = &gates[b];
                let fused = match (gate, partner) {
                    (Gate::Cnot { control, target }, Gate::Cz(..)) if same_pair(gate, partner) => {
                        Some(cnot_then_cz(*control, *target))
                    }
                    (Gate::Cz(..), Gate::Cnot { control, target }) if same_pair(gate, partner) => {
                        Some(cz_then_cnot(*control, *target))
                    }
                    _ => None,
                };
                if let Some(replacement) = fused {
                    consumed[b] = true;
                    out.extend(replacement);
                    continue;
                }
            }
        }
        out.push(*gate);
    }
    Circuit::from_gates(circuit.n_qubits(), out).expect("fused gates use the same operands")
}
