//! Reference semantics: Pauli algebra, Jordan–Wigner and qubit ladder
//! operators, excitation generators and their exact exponentials.

pub mod excitation;
pub mod exponential;
pub mod pauli;

pub use excitation::{generator, jw_ladder, parity, qubit_ladder, ExcitationKind, ExcitationSpec};
pub use exponential::{
    exact_unitary, exact_unitary_checked, product_exponential, series_exponential, ExactUnitary,
    ROUTE_AGREEMENT_TOLERANCE,
};
pub use pauli::{Pauli, PauliString, PauliSum};
