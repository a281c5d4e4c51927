//! Synthesis and verification of excitation circuits.
//!
//! * [`circuit`]: gates, circuits, CNOT count/depth metrics, OpenQASM 2.
//! * [`sim`]: dense statevector simulation and global-phase equivalence.
//! * [`oracle`]: Pauli algebra, ladder operators, excitation generators and
//!   their exact exponentials.
//! * [`synth`]: the explicit excitation circuits, staircase baselines,
//!   multi-controlled rotations and the CNOT/CZ fusion pass.
//! * [`report`]: resource formulas and measured-versus-formula tables.

pub mod circuit;
pub mod error;
pub mod oracle;
pub mod report;
pub mod sim;
pub mod synth;

pub use circuit::{emit_qasm, read_qasm, Circuit, Gate, GateKind, ResourceReport};
pub use error::{Error, Result};
pub use oracle::{exact_unitary, generator, ExcitationKind, ExcitationSpec, PauliString, PauliSum};
pub use sim::{equal_up_to_global_phase, unitary_of, PhaseEquivalence, Simulator, StateVector};
pub use synth::{synthesize, Method};
