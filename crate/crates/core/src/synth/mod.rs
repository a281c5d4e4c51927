//! Circuit synthesis: explicit excitation circuits, the Pauli-staircase
//! baseline, multi-controlled rotations and the CNOT/CZ fusion pass.

pub mod calibration;
pub mod controlled;
pub mod excitation;
pub mod fuse;
pub mod staircase;
pub mod standard;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

pub use controlled::{
    build_multi_controlled_ry, build_multi_controlled_ry_with, ControlSpec, Entangler, Ordering,
    Polarity,
};
pub use excitation::{
    build_double_fermionic_excitation, build_double_qubit_excitation, build_optimized,
    build_single_fermionic_excitation, build_single_qubit_excitation,
};
pub use fuse::fuse_cnot_cz;
pub use staircase::build_pauli_exponential;
pub use standard::{
    build_standard, build_standard_double_fermionic, build_standard_single_fermionic,
};

use crate::circuit::Circuit;
use crate::error::{Error, Result};
use crate::oracle::ExcitationSpec;

/// Which construction to synthesize.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    /// The explicit excitation circuits.
    #[default]
    Optimized,
    /// One Pauli-string staircase per generator term.
    Standard,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Optimized => "optimized",
            Method::Standard => "standard",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "optimized" => Ok(Method::Optimized),
            "standard" => Ok(Method::Standard),
            other => Err(Error::InvalidExcitation(format!(
                "unknown method `{other}`"
            ))),
        }
    }
}

/// Build the circuit for `spec` with `method`.
pub fn synthesize(spec: &ExcitationSpec, method: Method) -> Result<Circuit> {
    match method {
        Method::Optimized => build_optimized(spec),
        Method::Standard => build_standard(spec),
    }
}
