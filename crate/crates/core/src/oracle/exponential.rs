//! Exact excitation unitaries, computed two independent ways.

use num_complex::Complex64;

use super::excitation::{generator, ExcitationSpec};
use super::pauli::PauliSum;
use crate::error::{Error, Result};
use crate::sim::{ComplexMatrix, UnitaryMatrix, DEFAULT_MAX_QUBITS};

/// Maximum tolerated disagreement between the two exponential routes.
pub const ROUTE_AGREEMENT_TOLERANCE: f64 = 1e-11;

/// Taylor degree used after scaling.
pub const TAYLOR_DEGREE: usize = 16;

/// The scaled matrix norm must fall below this before the series is summed.
const SCALED_NORM_BOUND: f64 = 0.5;

/// `exp(sum)` as an ordered product of per-term exponentials.
///
/// Valid only when every pair of terms commutes (checked) and every
/// coefficient is purely imaginary, so that `exp(cP) = cos|c| I + (c/|c|) sin|c| P`.
pub fn product_exponential(sum: &PauliSum) -> Result<UnitaryMatrix> {
    let terms = sum.terms();
    for (a, first) in terms.iter().enumerate() {
        for second in &terms[a + 1..] {
            if !first.commutes_with(second) {
                return Err(Error::NonCommutingTerms(
                    first.to_string(),
                    second.to_string(),
                ));
            }
        }
    }
    let dim = 1usize << sum.n_qubits();
    let mut u = ComplexMatrix::identity(dim);
    for term in &terms {
        let c = term.coefficient();
        if c.re.abs() > 1e-14 * c.norm().max(1.0) {
            return Err(Error::InvalidPauli(format!(
                "coefficient {c} is not purely imaginary"
            )));
        }
        let magnitude = c.norm();
        let (sin, cos) = magnitude.sin_cos();
        let unit = term.with_coefficient(c / magnitude);
        // U ← (cos|c| I + sin|c| · unit) U, applying `unit` as a phased permutation.
        let mut next = u.scale(Complex64::new(cos, 0.0));
        for row in 0..dim {
            let (amp, image) = unit.apply_to_basis(row);
            let amp = amp * sin;
            for col in 0..dim {
                next[(image, col)] += amp * u[(row, col)];
            }
        }
        u = next;
    }
    Ok(u)
}

/// `exp(m)` by scaling and squaring with a truncated Taylor series.
///
/// The squaring count `s` is the smallest with `‖m‖₁ / 2^s < 0.5`; the series
/// is then summed to degree [`TAYLOR_DEGREE`] and squared `s` times.
pub fn series_exponential(m: &ComplexMatrix) -> ComplexMatrix {
    let norm = m.one_norm();
    let mut squarings = 0u32;
    while norm / f64::from(1u32 << squarings) >= SCALED_NORM_BOUND {
        squarings += 1;
    }
    let scaled = m.scale(Complex64::new(1.0 / f64::from(1u32 << squarings), 0.0));

    let dim = m.dim();
    let mut sum = ComplexMatrix::identity(dim);
    let mut power = ComplexMatrix::identity(dim);
    for k in 1..=TAYLOR_DEGREE {
        power = power
            .matmul(&scaled)
            .scale(Complex64::new(1.0 / k as f64, 0.0));
        sum = sum.add(&power);
    }
    for _ in 0..squarings {
        sum = sum.matmul(&sum);
    }
    sum
}

/// Both exponential routes for one excitation.
#[derive(Debug, Clone)]
pub struct ExactUnitary {
    /// Product-of-exponentials result (the returned reference).
    pub unitary: UnitaryMatrix,
    /// `‖product − series‖_max`.
    pub route_distance: f64,
}

/// Reference unitary `exp(generator(spec))`.
///
/// Fails if the register exceeds `max_qubits`, the generator terms do not
/// commute, or the two routes disagree by more than
/// [`ROUTE_AGREEMENT_TOLERANCE`].
pub fn exact_unitary_checked(spec: &ExcitationSpec, max_qubits: usize) -> Result<ExactUnitary> {
    if spec.n_qubits() > max_qubits {
        return Err(Error::TooManyQubits {
            n_qubits: spec.n_qubits(),
            cap: max_qubits,
        });
    }
    let g = generator(spec)?;
    let unitary = product_exponential(&g)?;
    let series = series_exponential(&g.to_matrix());
    let route_distance = unitary.max_abs_diff(&series)?;
    if route_distance > ROUTE_AGREEMENT_TOLERANCE {
        return Err(Error::OracleDisagreement(route_distance));
    }
    Ok(ExactUnitary {
        unitary,
        route_distance,
    })
}

/// [`exact_unitary_checked`] with the default cap, returning only the matrix.
pub fn exact_unitary(spec: &ExcitationSpec) -> Result<UnitaryMatrix> {
    exact_unitary_checked(spec, DEFAULT_MAX_QUBITS).map(|e| e.unitary)
}
