use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("qubit index {qubit} out of range for a {n_qubits}-qubit register")]
    QubitOutOfRange { qubit: usize, n_qubits: usize },

    #[error("gate operands must be distinct, got qubit {0} twice")]
    DuplicateOperand(usize),

    #[error("rotation angle must be finite, got {0}")]
    NonFiniteAngle(f64),

    #[error("register must contain at least one qubit")]
    EmptyRegister,

    #[error("qubit count mismatch: expected {expected}, found {found}")]
    QubitCountMismatch { expected: usize, found: usize },

    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),

    #[error("{n_qubits} qubits exceeds the dense simulation cap of {cap}")]
    TooManyQubits { n_qubits: usize, cap: usize },

    #[error("invalid excitation: {0}")]
    InvalidExcitation(String),

    #[error("invalid gate: {0}")]
    InvalidGate(String),

    #[error("invalid control specification: {0}")]
    InvalidControls(String),

    #[error("invalid Pauli string: {0}")]
    InvalidPauli(String),

    #[error("generator terms do not commute: {0} and {1}")]
    NonCommutingTerms(String, String),

    #[error("exponential routes disagree by {0:e}")]
    OracleDisagreement(f64),

    #[error("invalid range: {0}")]
    InvalidRange(String),

    #[error("qasm parse error on line {line}: {message}")]
    Qasm { line: usize, message: String },
}
