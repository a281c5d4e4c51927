use serde::Serialize;

use super::{Circuit, GateKind};

/// Gate counts and the two-qubit ("CNOT") depth of a circuit.
///
/// `cnot_count` counts CZ gates as well as CNOTs; the split is kept in
/// `cx_count` / `cz_count`. `cnot_depth` is the layer count of an
/// as-soon-as-possible schedule in which only two-qubit gates occupy layers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ResourceReport {
    pub cnot_count: usize,
    pub cnot_depth: usize,
    pub cx_count: usize,
    pub cz_count: usize,
    pub single_qubit_count: usize,
    pub total_gates: usize,
}

impl ResourceReport {
    pub fn of(circuit: &Circuit) -> Self {
        let mut level = vec![0usize; circuit.n_qubits()];
        let mut report = ResourceReport {
            cnot_count: 0,
            cnot_depth: 0,
            cx_count: 0,
            cz_count: 0,
            single_qubit_count: 0,
            total_gates: circuit.len(),
        };
        for gate in circuit.gates() {
            match gate.kind() {
                GateKind::Cnot => report.cx_count += 1,
                GateKind::Cz => report.cz_count += 1,
                _ => {
                    report.single_qubit_count += 1;
                    continue;
                }
            }
            let qs = gate.qubits();
            let layer = level[qs[0]].max(level[qs[1]]) + 1;
            level[qs[0]] = layer;
            level[qs[1]] = layer;
            report.cnot_depth = report.cnot_depth.max(layer);
        }
        report.cnot_count = report.cx_count + report.cz_count;
        report
    }
}
