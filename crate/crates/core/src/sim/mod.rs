//! Dense statevector simulation, unitary extraction and equivalence up to a
//! global phase. Basis indices are little-endian: bit `r` is qubit `r`.

mod matrix;

use num_complex::Complex64;
use rayon::prelude::*;
use std::f64::consts::FRAC_1_SQRT_2;

pub use matrix::{ComplexMatrix, UnitaryMatrix};

use crate::circuit::{Circuit, Gate};
use crate::error::{Error, Result};

/// Default register cap for dense unitaries (a 2^12 × 2^12 complex matrix).
pub const DEFAULT_MAX_QUBITS: usize = 12;

/// Default tolerance for unitary equivalence checks.
pub const DEFAULT_TOLERANCE: f64 = 1e-10;

#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    n_qubits: usize,
    amplitudes: Vec<Complex64>,
}

impl StateVector {
    /// Computational basis state `|index⟩`.
    pub fn basis(n_qubits: usize, index: usize) -> Result<Self> {
        if n_qubits == 0 {
            return Err(Error::EmptyRegister);
        }
        let dim = 1usize << n_qubits;
        if index >= dim {
            return Err(Error::DimensionMismatch(index, dim));
        }
        let mut amplitudes = vec![Complex64::ZERO; dim];
        amplitudes[index] = Complex64::ONE;
        Ok(Self {
            n_qubits,
            amplitudes,
        })
    }

    pub fn from_amplitudes(amplitudes: Vec<Complex64>) -> Result<Self> {
        let dim = amplitudes.len();
        if dim < 2 || !dim.is_power_of_two() {
            return Err(Error::DimensionMismatch(
                dim,
                dim.next_power_of_two().max(2),
            ));
        }
        Ok(Self {
            n_qubits: dim.trailing_zeros() as usize,
            amplitudes,
        })
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn into_amplitudes(self) -> Vec<Complex64> {
        self.amplitudes
    }

    pub fn norm(&self) -> f64 {
        self.amplitudes
            .iter()
            .map(|a| a.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    fn apply_gate(&mut self, gate: &Gate) {
        let amps = &mut self.amplitudes;
        match *gate {
            Gate::H(q) => {
                let h = Complex64::new(FRAC_1_SQRT_2, 0.0);
                apply_single(amps, q, [[h, h], [h, -h]]);
            }
            Gate::X(q) => {
                let bit = 1 << q;
                for i in 0..amps.len() {
                    if i & bit == 0 {
                        amps.swap(i, i | bit);
                    }
                }
            }
            Gate::Rx(theta, q) => {
                let (s, c) = (theta / 2.0).sin_cos();
                let (c, ms) = (Complex64::new(c, 0.0), Complex64::new(0.0, -s));
                apply_single(amps, q, [[c, ms], [ms, c]]);
            }
            Gate::Ry(theta, q) => {
                let (s, c) = (theta / 2.0).sin_cos();
                let (c, s) = (Complex64::new(c, 0.0), Complex64::new(s, 0.0));
                apply_single(amps, q, [[c, -s], [s, c]]);
            }
            Gate::Rz(theta, q) => {
                let lo = Complex64::from_polar(1.0, -theta / 2.0);
                let hi = Complex64::from_polar(1.0, theta / 2.0);
                let bit = 1 << q;
                for (i, a) in amps.iter_mut().enumerate() {
                    *a *= if i & bit == 0 { lo } else { hi };
                }
            }
            Gate::Cnot { control, target } => {
                let (cb, tb) = (1 << control, 1 << target);
                for i in 0..amps.len() {
                    if i & cb != 0 && i & tb == 0 {
                        amps.swap(i, i | tb);
                    }
                }
            }
            Gate::Cz(a, b) => {
                let mask = (1 << a) | (1 << b);
                for (i, amp) in amps.iter_mut().enumerate() {
                    if i & mask == mask {
                        *amp = -*amp;
                    }
                }
            }
        }
    }
}

fn apply_single(amps: &mut [Complex64], q: usize, m: [[Complex64; 2]; 2]) {
    let bit = 1 << q;
    for i in 0..amps.len() {
        if i & bit == 0 {
            let (a0, a1) = (amps[i], amps[i | bit]);
            amps[i] = m[0][0] * a0 + m[0][1] * a1;
            amps[i | bit] = m[1][0] * a0 + m[1][1] * a1;
        }
    }
}

/// Apply the gates of `circuit` to `state`, left to right.
pub fn apply_circuit(circuit: &Circuit, mut state: StateVector) -> Result<StateVector> {
    if circuit.n_qubits() != state.n_qubits {
        return Err(Error::QubitCountMismatch {
            expected: circuit.n_qubits(),
            found: state.n_qubits,
        });
    }
    for gate in circuit.gates() {
        state.apply_gate(gate);
    }
    Ok(state)
}

/// Full unitary of `circuit` under the default register cap.
pub fn unitary_of(circuit: &Circuit) -> Result<UnitaryMatrix> {
    Simulator::default().unitary_of(circuit)
}

/// Dense simulator with a configurable register cap.
#[derive(Debug, Clone, Copy)]
pub struct Simulator {
    max_qubits: usize,
}

impl Default for Simulator {
    fn default() -> Self {
        Self {
            max_qubits: DEFAULT_MAX_QUBITS,
        }
    }
}

impl Simulator {
    pub fn with_max_qubits(max_qubits: usize) -> Self {
        Self { max_qubits }
    }

    pub fn max_qubits(&self) -> usize {
        self.max_qubits
    }

    /// Column `j` of the result is the image of basis state `j`.
    ///
    /// Columns are simulated independently (and in parallel); no reduction
    /// crosses columns, so the result does not depend on scheduling.
    pub fn unitary_of(&self, circuit: &Circuit) -> Result<UnitaryMatrix> {
        let n = circuit.n_qubits();
        if n > self.max_qubits {
            return Err(Error::TooManyQubits {
                n_qubits: n,
                cap: self.max_qubits,
            });
        }
        let columns = (0..1usize << n)
            .into_par_iter()
            .map(|j| {
                let state = StateVector::basis(n, j)?;
                Ok(apply_circuit(circuit, state)?.into_amplitudes())
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(ComplexMatrix::from_columns(&columns))
    }
}

/// Outcome of [`equal_up_to_global_phase`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhaseEquivalence {
    pub equal: bool,
    /// `‖U − e^{iφ}V‖_max` at the aligning phase.
    pub distance: f64,
    /// The aligning phase φ.
    pub phase: f64,
}

/// Compare two unitaries modulo a global phase.
///
/// The phase is taken from `tr(V†U)`; when that trace is too small to carry
/// a reliable phase, the first entry of `V` with magnitude above
/// `0.5/√dim` is used instead.
pub fn equal_up_to_global_phase(
    u: &UnitaryMatrix,
    v: &UnitaryMatrix,
    tol: f64,
) -> Result<PhaseEquivalence> {
    let dim = u.dim();
    if dim != v.dim() {
        return Err(Error::DimensionMismatch(dim, v.dim()));
    }
    let mut overlap = Complex64::ZERO;
    for i in 0..dim {
        for j in 0..dim {
            overlap += v[(i, j)].conj() * u[(i, j)];
        }
    }
    let phase = if overlap.norm() > 1e-6 * dim as f64 {
        overlap.arg()
    } else {
        let threshold = 0.5 / (dim as f64).sqrt();
        (0..dim * dim)
            .map(|k| (k / dim, k % dim))
            .find(|&ij| v[ij].norm() > threshold)
            .map(|ij| (u[ij] / v[ij]).arg())
            .unwrap_or(0.0)
    };
    let rotated = v.scale(Complex64::from_polar(1.0, phase));
    let distance = u.max_abs_diff(&rotated)?;
    Ok(PhaseEquivalence {
        equal: distance <= tol,
        distance,
        phase,
    })
}
