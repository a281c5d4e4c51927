//! Pauli strings and canonical Pauli sums.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::sim::ComplexMatrix;

/// Merged coefficients below this magnitude are dropped from a [`PauliSum`].
pub const COEFFICIENT_EPSILON: f64 = 1e-14;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Pauli {
    I,
    X,
    Y,
    Z,
}

impl Pauli {
    /// Single-qubit product `self · other = phase · letter`.
    pub fn product(self, other: Pauli) -> (Complex64, Pauli) {
        use Pauli::*;
        let i = Complex64::I;
        match (self, other) {
            (I, p) | (p, I) => (Complex64::ONE, p),
            (a, b) if a == b => (Complex64::ONE, I),
            (X, Y) => (i, Z),
            (Y, X) => (-i, Z),
            (Y, Z) => (i, X),
            (Z, Y) => (-i, X),
            (Z, X) => (i, Y),
            (X, Z) => (-i, Y),
            _ => unreachable!(),
        }
    }

    /// Action on a single basis bit: `P|bit⟩ = phase · |bit'⟩`.
    fn act(self, bit: bool) -> (Complex64, bool) {
        match (self, bit) {
            (Pauli::I, b) => (Complex64::ONE, b),
            (Pauli::X, b) => (Complex64::ONE, !b),
            (Pauli::Y, false) => (Complex64::I, true),
            (Pauli::Y, true) => (-Complex64::I, false),
            (Pauli::Z, false) => (Complex64::ONE, false),
            (Pauli::Z, true) => (-Complex64::ONE, true),
        }
    }

    fn symbol(self) -> char {
        match self {
            Pauli::I => 'I',
            Pauli::X => 'X',
            Pauli::Y => 'Y',
            Pauli::Z => 'Z',
        }
    }
}

/// Letters of a Pauli string; `letters[r]` acts on qubit `r`.
///
/// Ordered lexicographically with the highest qubit most significant, so
/// qubit 0 is the least significant position.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PauliKey(Vec<Pauli>);

impl PauliKey {
    pub fn letters(&self) -> &[Pauli] {
        &self.0
    }
}

impl Ord for PauliKey {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.iter().rev().cmp(other.0.iter().rev()))
    }
}

impl PartialOrd for PauliKey {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A complex-weighted tensor product of Pauli letters.
#[derive(Debug, Clone, PartialEq)]
pub struct PauliString {
    letters: Vec<Pauli>,
    coefficient: Complex64,
}

impl PauliString {
    pub fn identity(n_qubits: usize) -> Self {
        Self {
            letters: vec![Pauli::I; n_qubits],
            coefficient: Complex64::ONE,
        }
    }

    pub fn new(letters: Vec<Pauli>, coefficient: Complex64) -> Self {
        Self {
            letters,
            coefficient,
        }
    }

    /// Build from `(qubit, letter)` pairs; unspecified qubits are identity.
    pub fn from_sparse(
        n_qubits: usize,
        ops: &[(usize, Pauli)],
        coefficient: Complex64,
    ) -> Result<Self> {
        let mut letters = vec![Pauli::I; n_qubits];
        for &(q, p) in ops {
            if q >= n_qubits {
                return Err(Error::QubitOutOfRange { qubit: q, n_qubits });
            }
            letters[q] = p;
        }
        Ok(Self {
            letters,
            coefficient,
        })
    }

    /// Parse a label written with qubit 0 first, e.g. `"XYZI"` means `X₀Y₁Z₂`.
    pub fn parse(label: &str, coefficient: Complex64) -> Result<Self> {
        let letters = label
            .chars()
            .map(|c| match c {
                'I' => Ok(Pauli::I),
                'X' => Ok(Pauli::X),
                'Y' => Ok(Pauli::Y),
                'Z' => Ok(Pauli::Z),
                other => Err(Error::InvalidPauli(format!("unknown letter '{other}'"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            letters,
            coefficient,
        })
    }

    pub fn n_qubits(&self) -> usize {
        self.letters.len()
    }

    pub fn letters(&self) -> &[Pauli] {
        &self.letters
    }

    pub fn coefficient(&self) -> Complex64 {
        self.coefficient
    }

    pub fn with_coefficient(&self, coefficient: Complex64) -> Self {
        Self {
            letters: self.letters.clone(),
            coefficient,
        }
    }

    pub fn key(&self) -> PauliKey {
        PauliKey(self.letters.clone())
    }

    /// Qubits carrying a non-identity letter, ascending.
    pub fn support(&self) -> Vec<usize> {
        self.letters
            .iter()
            .enumerate()
            .filter(|(_, p)| **p != Pauli::I)
            .map(|(q, _)| q)
            .collect()
    }

    pub fn is_identity(&self) -> bool {
        self.letters.iter().all(|&p| p == Pauli::I)
    }

    pub fn dagger(&self) -> Self {
        self.with_coefficient(self.coefficient.conj())
    }

    /// Letterwise product with accumulated phase.
    pub fn mul(&self, other: &PauliString) -> Result<PauliString> {
        if self.n_qubits() != other.n_qubits() {
            return Err(Error::DimensionMismatch(self.n_qubits(), other.n_qubits()));
        }
        let mut coefficient = self.coefficient * other.coefficient;
        let letters = self
            .letters
            .iter()
            .zip(&other.letters)
            .map(|(&a, &b)| {
                let (phase, p) = a.product(b);
                coefficient *= phase;
                p
            })
            .collect();
        Ok(PauliString {
            letters,
            coefficient,
        })
    }

    /// Two strings commute iff they anticommute on an even number of qubits.
    pub fn commutes_with(&self, other: &PauliString) -> bool {
        let clashes = self
            .letters
            .iter()
            .zip(&other.letters)
            .filter(|(&a, &b)| a != Pauli::I && b != Pauli::I && a != b)
            .count();
        clashes % 2 == 0
    }

    /// Image of basis state `index`: `P|index⟩ = amplitude · |image⟩`.
    pub fn apply_to_basis(&self, index: usize) -> (Complex64, usize) {
        let mut amplitude = self.coefficient;
        let mut image = index;
        for (q, &p) in self.letters.iter().enumerate() {
            let (phase, bit) = p.act(index >> q & 1 == 1);
            amplitude *= phase;
            if bit {
                image |= 1 << q;
            } else {
                image &= !(1 << q);
            }
        }
        (amplitude, image)
    }

    /// Dense `2^n × 2^n` matrix, including the coefficient.
    pub fn to_matrix(&self) -> ComplexMatrix {
        let dim = 1usize << self.n_qubits();
        let mut m = ComplexMatrix::zeros(dim);
        for col in 0..dim {
            let (amp, row) = self.apply_to_basis(col);
            m[(row, col)] += amp;
        }
        m
    }

    /// Letters only, qubit 0 first.
    pub fn label(&self) -> String {
        self.letters.iter().map(|p| p.symbol()).collect()
    }
}

impl fmt::Display for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) ", self.coefficient)?;
        if self.is_identity() {
            return write!(f, "I");
        }
        let ops: Vec<String> = self
            .letters
            .iter()
            .enumerate()
            .filter(|(_, p)| **p != Pauli::I)
            .map(|(q, p)| format!("{}{q}", p.symbol()))
            .collect();
        write!(f, "{}", ops.join(" "))
    }
}

/// A canonical sum of Pauli strings over a fixed register.
///
/// Terms are kept sorted by [`PauliKey`], duplicates merged and terms with
/// `|c| < COEFFICIENT_EPSILON` dropped, so equal operators compare equal.
#[derive(Debug, Clone, PartialEq)]
pub struct PauliSum {
    n_qubits: usize,
    terms: BTreeMap<PauliKey, Complex64>,
}

impl PauliSum {
    pub fn zero(n_qubits: usize) -> Self {
        Self {
            n_qubits,
            terms: BTreeMap::new(),
        }
    }

    pub fn identity(n_qubits: usize) -> Self {
        Self::from_strings(n_qubits, [PauliString::identity(n_qubits)]).expect("width matches")
    }

    pub fn from_strings(
        n_qubits: usize,
        strings: impl IntoIterator<Item = PauliString>,
    ) -> Result<Self> {
        let mut sum = Self::zero(n_qubits);
        for s in strings {
            sum.add_term(s)?;
        }
        sum.prune();
        Ok(sum)
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical order.
    pub fn terms(&self) -> Vec<PauliString> {
        self.terms
            .iter()
            .map(|(k, &c)| PauliString::new(k.0.clone(), c))
            .collect()
    }

    fn add_term(&mut self, s: PauliString) -> Result<()> {
        if s.n_qubits() != self.n_qubits {
            return Err(Error::DimensionMismatch(self.n_qubits, s.n_qubits()));
        }
        *self
            .terms
            .entry(PauliKey(s.letters))
            .or_insert(Complex64::ZERO) += s.coefficient;
        Ok(())
    }

    fn prune(&mut self) {
        self.terms.retain(|_, c| c.norm() >= COEFFICIENT_EPSILON);
    }

    pub fn add(&self, other: &PauliSum) -> Result<PauliSum> {
        let mut out = self.clone();
        for s in other.terms() {
            out.add_term(s)?;
        }
        out.prune();
        Ok(out)
    }

    pub fn sub(&self, other: &PauliSum) -> Result<PauliSum> {
        self.add(&other.scale(-Complex64::ONE))
    }

    pub fn scale(&self, factor: Complex64) -> PauliSum {
        let mut out = PauliSum {
            n_qubits: self.n_qubits,
            terms: self
                .terms
                .iter()
                .map(|(k, &c)| (k.clone(), c * factor))
                .collect(),
        };
        out.prune();
        out
    }

    pub fn mul(&self, other: &PauliSum) -> Result<PauliSum> {
        if self.n_qubits != other.n_qubits {
            return Err(Error::DimensionMismatch(self.n_qubits, other.n_qubits));
        }
        let mut out = PauliSum::zero(self.n_qubits);
        for a in self.terms() {
            for b in other.terms() {
                out.add_term(a.mul(&b)?)?;
            }
        }
        out.prune();
        Ok(out)
    }

    /// Hermitian adjoint (Pauli strings are Hermitian, so only coefficients conjugate).
    pub fn dagger(&self) -> PauliSum {
        PauliSum {
            n_qubits: self.n_qubits,
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.clone(), c.conj()))
                .collect(),
        }
    }

    /// `{A, B} = AB + BA`.
    pub fn anticommutator(&self, other: &PauliSum) -> Result<PauliSum> {
        self.mul(other)?.add(&other.mul(self)?)
    }

    /// `[A, B] = AB − BA`.
    pub fn commutator(&self, other: &PauliSum) -> Result<PauliSum> {
        self.mul(other)?.sub(&other.mul(self)?)
    }

    pub fn is_skew_hermitian(&self) -> bool {
        self.dagger() == self.scale(-Complex64::ONE)
    }

    /// Dense matrix of the whole sum.
    pub fn to_matrix(&self) -> ComplexMatrix {
        let dim = 1usize << self.n_qubits;
        let mut m = ComplexMatrix::zeros(dim);
        for term in self.terms() {
            for col in 0..dim {
                let (amp, row) = term.apply_to_basis(col);
                m[(row, col)] += amp;
            }
        }
        m
    }
}

impl fmt::Display for PauliSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms().iter().map(ToString::to_string).collect();
        write!(f, "{}", parts.join(" + "))
    }
}
