//! Excitation specifications, ladder operators and excitation generators.

use std::fmt;

use num_complex::Complex64;
use serde::Serialize;

use super::pauli::{Pauli, PauliString, PauliSum};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum ExcitationKind {
    #[serde(rename = "sq")]
    SingleQubit,
    #[serde(rename = "dq")]
    DoubleQubit,
    #[serde(rename = "sf")]
    SingleFermionic,
    #[serde(rename = "df")]
    DoubleFermionic,
}

impl ExcitationKind {
    pub const ALL: [ExcitationKind; 4] = [
        ExcitationKind::SingleQubit,
        ExcitationKind::DoubleQubit,
        ExcitationKind::SingleFermionic,
        ExcitationKind::DoubleFermionic,
    ];

    pub fn is_double(self) -> bool {
        matches!(
            self,
            ExcitationKind::DoubleQubit | ExcitationKind::DoubleFermionic
        )
    }

    pub fn is_fermionic(self) -> bool {
        matches!(
            self,
            ExcitationKind::SingleFermionic | ExcitationKind::DoubleFermionic
        )
    }

    /// Number of orbital indices the kind takes.
    pub fn arity(self) -> usize {
        if self.is_double() {
            4
        } else {
            2
        }
    }

    /// The qubit excitation with the same index pattern.
    pub fn qubit_counterpart(self) -> ExcitationKind {
        if self.is_double() {
            ExcitationKind::DoubleQubit
        } else {
            ExcitationKind::SingleQubit
        }
    }

    /// Short code used on the command line: `sq`, `dq`, `sf`, `df`.
    pub fn code(self) -> &'static str {
        match self {
            ExcitationKind::SingleQubit => "sq",
            ExcitationKind::DoubleQubit => "dq",
            ExcitationKind::SingleFermionic => "sf",
            ExcitationKind::DoubleFermionic => "df",
        }
    }

    pub fn from_code(code: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|k| k.code() == code)
    }
}

impl fmt::Display for ExcitationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

/// One excitation: kind, strictly ascending orbital indices, angle and register width.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExcitationSpec {
    kind: ExcitationKind,
    indices: Vec<usize>,
    theta: f64,
    n_qubits: usize,
}

impl ExcitationSpec {
    pub fn new(
        kind: ExcitationKind,
        indices: &[usize],
        theta: f64,
        n_qubits: usize,
    ) -> Result<Self> {
        if indices.len() != kind.arity() {
            return Err(Error::InvalidExcitation(format!(
                "{kind} takes {} indices, got {}",
                kind.arity(),
                indices.len()
            )));
        }
        if indices.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidExcitation(format!(
                "indices must be strictly ascending, got {indices:?}"
            )));
        }
        if let Some(&top) = indices.last() {
            if top >= n_qubits {
                return Err(Error::QubitOutOfRange {
                    qubit: top,
                    n_qubits,
                });
            }
        }
        if !theta.is_finite() {
            return Err(Error::NonFiniteAngle(theta));
        }
        Ok(Self {
            kind,
            indices: indices.to_vec(),
            theta,
            n_qubits,
        })
    }

    /// Same as [`ExcitationSpec::new`] with the smallest register holding every index.
    pub fn minimal(kind: ExcitationKind, indices: &[usize], theta: f64) -> Result<Self> {
        let n = indices.iter().max().map_or(0, |m| m + 1);
        Self::new(kind, indices, theta, n)
    }

    pub fn kind(&self) -> ExcitationKind {
        self.kind
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn with_theta(&self, theta: f64) -> Self {
        Self {
            theta,
            ..self.clone()
        }
    }

    /// Same indices and angle with a different kind of the same arity.
    pub fn with_kind(&self, kind: ExcitationKind) -> Result<Self> {
        Self::new(kind, &self.indices, self.theta, self.n_qubits)
    }

    /// `(i, k)`; panics on a double excitation.
    pub fn single_indices(&self) -> (usize, usize) {
        assert!(!self.kind.is_double(), "not a single excitation");
        (self.indices[0], self.indices[1])
    }

    /// `(i, j, k, l)`; panics on a single excitation.
    pub fn double_indices(&self) -> (usize, usize, usize, usize) {
        assert!(self.kind.is_double(), "not a double excitation");
        (
            self.indices[0],
            self.indices[1],
            self.indices[2],
            self.indices[3],
        )
    }

    /// Qubits spanned by the excitation: `k−i+1` for singles, `j−i+l−k+2` for doubles.
    pub fn involved_qubits(&self) -> usize {
        match self.indices[..] {
            [i, k] => k - i + 1,
            [i, j, k, l] => j - i + l - k + 2,
            _ => unreachable!("arity checked on construction"),
        }
    }

    /// Qubits whose joint parity flips the sign of θ for a fermionic excitation:
    /// `{i+1..k−1}` or `{i+1..j−1} ∪ {k+1..l−1}`, ascending.
    pub fn parity_qubits(&self) -> Vec<usize> {
        match self.indices[..] {
            [i, k] => (i + 1..k).collect(),
            [i, j, k, l] => (i + 1..j).chain(k + 1..l).collect(),
            _ => unreachable!("arity checked on construction"),
        }
    }
}

/// XOR of the bits of `basis_index` selected by `qubits`.
pub fn parity(basis_index: usize, qubits: &[usize]) -> u8 {
    qubits
        .iter()
        .fold(0, |acc, &q| acc ^ (basis_index >> q & 1) as u8)
}

fn ladder_terms(i: usize, n: usize, dagger: bool, z_string: bool) -> Result<PauliSum> {
    if i >= n {
        return Err(Error::QubitOutOfRange {
            qubit: i,
            n_qubits: n,
        });
    }
    let half = 0.5;
    let y_coeff = if dagger {
        Complex64::new(0.0, -half)
    } else {
        Complex64::new(0.0, half)
    };
    let string = |letter: Pauli, coefficient: Complex64| {
        let mut ops: Vec<(usize, Pauli)> = vec![(i, letter)];
        if z_string {
            ops.extend((0..i).map(|r| (r, Pauli::Z)));
        }
        PauliString::from_sparse(n, &ops, coefficient)
    };
    PauliSum::from_strings(
        n,
        [
            string(Pauli::X, Complex64::new(half, 0.0))?,
            string(Pauli::Y, y_coeff)?,
        ],
    )
}

/// Jordan–Wigner fermionic ladder operator on orbital `i` of an `n`-orbital register:
/// `(X_i ± iY_i)/2 · ∏_{r<i} Z_r`, `+` for annihilation, `−` for creation.
pub fn jw_ladder(i: usize, n: usize, dagger: bool) -> Result<PauliSum> {
    ladder_terms(i, n, dagger, true)
}

/// Qubit ladder operator `Q_i = (X_i + iY_i)/2`, or `Q_i† = (X_i − iY_i)/2`.
pub fn qubit_ladder(i: usize, n: usize, dagger: bool) -> Result<PauliSum> {
    ladder_terms(i, n, dagger, false)
}

/// Product of ladder operators, written left to right as `(orbital, dagger)`.
fn ladder_product(
    ops: &[(usize, bool)],
    n: usize,
    ladder: fn(usize, usize, bool) -> Result<PauliSum>,
) -> Result<PauliSum> {
    ops.iter()
        .try_fold(PauliSum::identity(n), |acc, &(q, dag)| {
            acc.mul(&ladder(q, n, dag)?)
        })
}

/// The skew-Hermitian generator `T` with `U = exp(T)`, as a canonical Pauli sum.
///
/// Singles: `θ(A†_k A_i − A†_i A_k)`. Fermionic doubles:
/// `θ(a†_k a†_l a_i a_j − a†_i a†_j a_k a_l)`.
///
/// The qubit double is `θ(Q†_i Q†_j Q_k Q_l − Q†_k Q†_l Q_i Q_j)`: this is the sign
/// of the fermionic double's Jordan–Wigner expansion with its Z strings
/// removed, so both doubles coincide on even-parity sectors and expand to
/// `−iθ/8 (X_i Y_j X_k X_l + Y_i X_j X_k X_l + …)`.
pub fn generator(spec: &ExcitationSpec) -> Result<PauliSum> {
    let n = spec.n_qubits();
    let ladder = if spec.kind().is_fermionic() {
        jw_ladder
    } else {
        qubit_ladder
    };
    let (forward, backward) = match (spec.kind(), spec.indices()) {
        (_, &[i, k]) => (
            ladder_product(&[(k, true), (i, false)], n, ladder)?,
            ladder_product(&[(i, true), (k, false)], n, ladder)?,
        ),
        (ExcitationKind::DoubleFermionic, &[i, j, k, l]) => (
            ladder_product(&[(k, true), (l, true), (i, false), (j, false)], n, ladder)?,
            ladder_product(&[(i, true), (j, true), (k, false), (l, false)], n, ladder)?,
        ),
        (ExcitationKind::DoubleQubit, &[i, j, k, l]) => (
            ladder_product(&[(i, true), (j, true), (k, false), (l, false)], n, ladder)?,
            ladder_product(&[(k, true), (l, true), (i, false), (j, false)], n, ladder)?,
        ),
        _ => unreachable!("arity checked on construction"),
    };
    Ok(forward
        .sub(&backward)?
        .scale(Complex64::new(spec.theta(), 0.0)))
}
