//! Quantum Reed-Muller codes: construction, validation, exact distance
//! computation and table decoding in the binary symplectic picture.

pub mod construct;
pub mod decode;
pub mod distance;
pub mod error;
pub mod format;
pub mod gf2;
pub mod pauli;
pub mod reed_muller;
pub mod scan;

pub use construct::{
    build_generator, build_generator_with, css_code, cross_derivation, derive_stabilizer, dual_parameter,
    puncture, qrm_params, rotation_check, six04, stabilizer_direct, validate, QrmParams, QuantumCode,
    RotationRule, ValidationReport,
};
pub use error::{Error, Result};
pub use gf2::{BitVector, Gf2Matrix};
pub use pauli::{or_weight, symplectic_product, Letter, PauliVector};

/// Whether an enumeration may be split across the rayon pool. Results are
/// identical either way.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Execution {
    Serial,
    #[default]
    Parallel,
}
