use std::f64::consts::FRAC_PI_2;

use super::calibration::{DOUBLE_CORE_EIGHTH, SINGLE_EXCHANGE_HALF};
use super::controlled::{controlled_ry_gates, ControlSpec, Entangler, Ordering};
use super::fuse::fuse_cnot_cz;
use super::staircase::parity_staircase;
use crate::circuit::{Circuit, Gate};
use crate::error::{Error, Result};
use crate::oracle::{ExcitationKind, ExcitationSpec};

fn expect_kind(spec: &ExcitationSpec, kind: ExcitationKind) -> Result<()> {
    if spec.kind() == kind {
        Ok(())
    } else {
        Err(Error::InvalidExcitation(format!(
            "expected a {kind} excitation, got {}",
            spec.kind()
        )))
    }
}

/// Three-CNOT exchange `|1_i 0_k⟩ → cos θ |1_i 0_k⟩ + sin θ |0_i 1_k⟩`.
/// The two `R_y` gates on `q_k` are at positions 4 and 7.
pub fn single_exchange_gates(i: usize, k: usize, theta: f64) -> Vec<Gate> {
    let half = SINGLE_EXCHANGE_HALF * theta;
    vec![
        Gate::Ry(-FRAC_PI_2, i),
        Gate::Rz(-FRAC_PI_2, i),
        Gate::Rz(FRAC_PI_2, k),
        Gate::cnot(k, i),
        Gate::Ry(half, k),
        Gate::Rz(-FRAC_PI_2, i),
        Gate::cnot(k, i),
        Gate::Ry(-half, k),
        Gate::H(i),
        Gate::cnot(k, i),
    ]
}

/// Double exchange before CNOT/CZ fusion: a parity-encoding CNOT layer, a
/// three-controlled `R_y` on `q_l` with CZ entanglers, and the decoding layer.
pub fn double_exchange_gates(i: usize, j: usize, k: usize, l: usize, theta: f64) -> Vec<Gate> {
    let encode = [
        Gate::cnot(l, k),
        Gate::cnot(j, i),
        Gate::X(k),
        Gate::X(i),
        Gate::cnot(l, j),
    ];
    let decode = [
        Gate::cnot(l, j),
        Gate::X(k),
        Gate::X(i),
        Gate::cnot(l, k),
        Gate::cnot(j, i),
    ];
    let controls = ControlSpec::positive(&[k, i, j], l).expect("indices are distinct");
    let core = controlled_ry_gates(
        8.0 * DOUBLE_CORE_EIGHTH * theta,
        &controls,
        Entangler::Cz,
        Ordering::RotationFirst,
    );
    encode.into_iter().chain(core).chain(decode).collect()
}

/// Surround the `R_y` rotations on `target` with `CZ(parity, target)` so their
/// angle flips sign when `parity` holds `|1⟩`.
fn condition_on_parity(gates: &mut Vec<Gate>, target: usize, parity: usize) {
    let is_rotation = |g: &Gate| matches!(g, Gate::Ry(_, q) if *q == target);
    let first = gates
        .iter()
        .position(is_rotation)
        .expect("exchange has a target rotation");
    let last = gates
        .iter()
        .rposition(is_rotation)
        .expect("exchange has a target rotation");
    gates.insert(last + 1, Gate::Cz(parity, target));
    gates.insert(first, Gate::Cz(parity, target));
}

/// Wrap `gates` in a CNOT staircase that collects the parity of `qubits` on
/// the lowest of them, conditioning the `R_y` gates on `target` on it.
fn with_parity(mut gates: Vec<Gate>, qubits: &[usize], target: usize) -> Vec<Gate> {
    let Some(&lowest) = qubits.iter().min() else {
        return gates;
    };
    condition_on_parity(&mut gates, target, lowest);
    let ladder = parity_staircase(qubits);
    ladder
        .iter()
        .copied()
        .chain(gates)
        .chain(ladder.iter().rev().copied())
        .collect()
}

/// Single-qubit excitation: 3 CNOTs, CNOT depth 3.
pub fn build_single_qubit_excitation(spec: &ExcitationSpec) -> Result<Circuit> {
    expect_kind(spec, ExcitationKind::SingleQubit)?;
    let (i, k) = spec.single_indices();
    Circuit::from_gates(spec.n_qubits(), single_exchange_gates(i, k, spec.theta()))
}

/// Double-qubit excitation: 13 CNOTs, CNOT depth 11.
pub fn build_double_qubit_excitation(spec: &ExcitationSpec) -> Result<Circuit> {
    expect_kind(spec, ExcitationKind::DoubleQubit)?;
    let (i, j, k, l) = spec.double_indices();
    let raw = Circuit::from_gates(
        spec.n_qubits(),
        double_exchange_gates(i, j, k, l, spec.theta()),
    )?;
    Ok(fuse_cnot_cz(&raw))
}

/// Single fermionic excitation over `n = k−i+1` qubits: `2n−1` CNOTs.
pub fn build_single_fermionic_excitation(spec: &ExcitationSpec) -> Result<Circuit> {
    expect_kind(spec, ExcitationKind::SingleFermionic)?;
    let (i, k) = spec.single_indices();
    let gates = with_parity(
        single_exchange_gates(i, k, spec.theta()),
        &spec.parity_qubits(),
        k,
    );
    Circuit::from_gates(spec.n_qubits(), gates)
}

/// Double fermionic excitation over `n = j−i+l−k+2` qubits: `2n+5` CNOTs.
pub fn build_double_fermionic_excitation(spec: &ExcitationSpec) -> Result<Circuit> {
    expect_kind(spec, ExcitationKind::DoubleFermionic)?;
    let (i, j, k, l) = spec.double_indices();
    let gates = with_parity(
        double_exchange_gates(i, j, k, l, spec.theta()),
        &spec.parity_qubits(),
        l,
    );
    let raw = Circuit::from_gates(spec.n_qubits(), gates)?;
    Ok(fuse_cnot_cz(&raw))
}

/// Dispatch on the excitation kind.
pub fn build_optimized(spec: &ExcitationSpec) -> Result<Circuit> {
    match spec.kind() {
        ExcitationKind::SingleQubit => build_single_qubit_excitation(spec),
        ExcitationKind::DoubleQubit => build_double_qubit_excitation(spec),
        ExcitationKind::SingleFermionic => build_single_fermionic_excitation(spec),
        ExcitationKind::DoubleFermionic => build_double_fermionic_excitation(spec),
    }
}
