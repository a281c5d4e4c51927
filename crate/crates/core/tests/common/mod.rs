#![allow(dead_code)]

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};

use fermix_core::oracle::exact_unitary;
use fermix_core::sim::{ComplexMatrix, DEFAULT_TOLERANCE};
use fermix_core::synth::{ControlSpec, Polarity};
use fermix_core::{equal_up_to_global_phase, unitary_of, Circuit, ExcitationKind, ExcitationSpec};
use num_complex::Complex64;

/// The angle grid every builder is checked on.
pub const THETA_GRID: [f64; 9] = [
    0.0, 0.1, -0.1, FRAC_PI_4, -FRAC_PI_4, FRAC_PI_2, 1.7, PI, 2.1,
];

/// Index patterns with registers of at most 10 qubits, contiguous and not,
/// some embedded in a wider register than they span.
pub fn index_patterns(kind: ExcitationKind) -> Vec<(Vec<usize>, usize)> {
    let singles = || {
        vec![
            (vec![0, 1], 2),
            (vec![0, 2], 3),
            (vec![1, 4], 6),
            (vec![2, 3], 5),
            (vec![0, 9], 10),
        ]
    };
    let doubles = || {
        vec![
            (vec![0, 1, 2, 3], 4),
            (vec![0, 1, 2, 4], 5),
            (vec![0, 2, 3, 5], 6),
            (vec![1, 2, 4, 6], 8),
            (vec![0, 1, 3, 4], 5),
            (vec![0, 3, 4, 9], 10),
        ]
    };
    if kind.is_double() {
        doubles()
    } else {
        singles()
    }
}

/// Max-entry distance between the circuit unitary and `exp(generator)`,
/// modulo a global phase.
pub fn oracle_distance(circuit: &Circuit, spec: &ExcitationSpec) -> f64 {
    let u = unitary_of(circuit).expect("register within the simulator cap");
    let v = exact_unitary(spec).expect("oracle routes agree");
    equal_up_to_global_phase(&u, &v, DEFAULT_TOLERANCE)
        .unwrap()
        .distance
}

/// Distance between two unitaries modulo a global phase.
pub fn phase_distance(u: &ComplexMatrix, v: &ComplexMatrix) -> f64 {
    equal_up_to_global_phase(u, v, DEFAULT_TOLERANCE)
        .unwrap()
        .distance
}

/// The controlled rotation built entry by entry: `R_y(θ)` on the target in
/// the basis states where every control matches, identity elsewhere.
pub fn direct_controlled_ry(theta: f64, spec: &ControlSpec, n: usize) -> ComplexMatrix {
    let dim = 1 << n;
    let t = spec.target();
    let (c, s) = ((theta / 2.0).cos(), (theta / 2.0).sin());
    let mut m = ComplexMatrix::zeros(dim);
    for col in 0..dim {
        let active = spec.controls().iter().all(|&(q, p)| {
            let bit = col >> q & 1 == 1;
            bit == (p == Polarity::Positive)
        });
        if !active {
            m[(col, col)] = Complex64::ONE;
            continue;
        }
        let zero = col & !(1 << t);
        let one = col | 1 << t;
        if col >> t & 1 == 0 {
            m[(zero, col)] = Complex64::new(c, 0.0);
            m[(one, col)] = Complex64::new(s, 0.0);
        } else {
            m[(zero, col)] = Complex64::new(-s, 0.0);
            m[(one, col)] = Complex64::new(c, 0.0);
        }
    }
    m
}
