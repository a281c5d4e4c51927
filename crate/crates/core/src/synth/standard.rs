use super::staircase::build_pauli_exponential;
use crate::circuit::Circuit;
use crate::error::{Error, Result};
use crate::oracle::{generator, ExcitationKind, ExcitationSpec};

/// Baseline construction: one staircase circuit per Pauli string of the
/// generator. The strings commute, so their product is exact.
///
/// The string set is taken from the generator at unit angle, so the gate
/// structure does not depend on θ (θ = 0 yields identity rotations, not an
/// empty circuit).
pub fn build_standard(spec: &ExcitationSpec) -> Result<Circuit> {
    let unit = generator(&spec.with_theta(1.0))?;
    let mut circuit = Circuit::new(spec.n_qubits())?;
    for term in unit.terms() {
        // Each term is −iβ·P; its exponential is exp(−i(θ·2|β|/2)·sign(β)·P).
        let c = term.coefficient();
        if c.re.abs() > 1e-12 {
            return Err(Error::InvalidPauli(format!(
                "generator term {term} is not anti-Hermitian"
            )));
        }
        let beta = -c.im;
        let signed = term.with_coefficient(num_complex::Complex64::new(beta.signum(), 0.0));
        let block =
            build_pauli_exponential(&signed, 2.0 * beta.abs() * spec.theta(), spec.n_qubits())?;
        circuit.extend(block.gates().iter().copied())?;
    }
    Ok(circuit)
}

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

/// Baseline single fermionic excitation: two strings, `4(n−1)` CNOTs.
pub fn build_standard_single_fermionic(spec: &ExcitationSpec) -> Result<Circuit> {
    expect_kind(spec, ExcitationKind::SingleFermionic)?;
    build_standard(spec)
}

/// Baseline double fermionic excitation: eight strings, `16(n−1)` CNOTs.
pub fn build_standard_double_fermionic(spec: &ExcitationSpec) -> Result<Circuit> {
    expect_kind(spec, ExcitationKind::DoubleFermionic)?;
    build_standard(spec)
}
