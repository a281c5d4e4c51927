//! Angle calibration for the explicit excitation circuits.
//!
//! Each circuit is drawn with symbolic rotation slots (`θ/2`, `θ/8`, `θ`).
//! The factors below map a slot to a concrete multiple of the excitation
//! angle θ so that the circuit reproduces `exp(generator)` under the gate
//! conventions of this crate (`R_P(φ) = exp(−iφP/2)`, qubit 0 least
//! significant). They were fixed by matching the exact exponential on a
//! two-point θ grid; `tests/calibration.rs` re-derives them.

/// Exchange circuit: the slot drawn as `R_y(θ/2)` on `q_k` becomes `R_y(−θ)`.
pub const SINGLE_EXCHANGE_HALF: f64 = -1.0;

/// Double-excitation core: each slot drawn as `R_y(θ/8)` on `q_l` becomes `R_y(−θ/4)`.
pub const DOUBLE_CORE_EIGHTH: f64 = -0.25;

/// Pauli-string exponential `exp(−i(θ/2)·P)`: the central slot becomes `R_z(θ)`.
pub const STAIRCASE_RZ: f64 = 1.0;

/// The full table, `(slot, factor)`.
pub const TABLE: [(&str, f64); 3] = [
    ("single exchange R_y(θ/2)", SINGLE_EXCHANGE_HALF),
    ("double core R_y(θ/8)", DOUBLE_CORE_EIGHTH),
    ("staircase R_z(θ)", STAIRCASE_RZ),
];
