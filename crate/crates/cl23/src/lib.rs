//! Real Clifford algebra Cl(2,3) and a matrix-free formulation of the Dirac
//! equation built on it.
//!
//! The five generators `{e0, e1, e2, e3, e5}` carry the metric
//! `(+, -, -, -, +)`. The four spacetime vectors give Lorentz structure; the
//! fifth generator is a reflection direction whose presence makes the unit
//! pseudoscalar `I = e01235` central with `I^2 = -1`, so the algebra carries
//! its own complex structure without any matrix representation.
//!
//! What lives where:
//!
//! - [`algebra`]: blades, multivectors, the geometric product, grade and
//!   conjugation operations.
//! - [`rep`]: the left-regular 32x32 matrix representation, used as an
//!   independent cross-check of the product and of exponentials.
//! - [`lorentz`]: rotors, boosts, the generator algebra, frame transforms.
//! - [`spinor`]: the Dirac spinor as an element of the minimal left ideal
//!   `Cl(2,3) P` with `P = (1 + e0)(1 + sigma_3)/4`.
//! - [`dirac`]: momentum-space Dirac equation and its free solutions.
//! - [`field`]: exact symbolic position-dependent fields (polynomials and
//!   plane waves with multivector values).
//! - [`em`]: minimal coupling, the Faraday bivector, the squared equation,
//!   and the Pauli reduction with its g = 2 Zeeman splitting.
//! - [`bilinear`]: Dirac conjugate and the 16 bilinear covariants, each
//!   computed along two independent paths.
//! - [`symmetry`]: parity, time reversal, charge conjugation, CPT, and the
//!   Lagrangian invariance checks.
//! - [`verify`]: deterministic property suites behind the `cl23` binary.

pub mod algebra;
pub mod bilinear;
pub mod dirac;
pub mod em;
pub mod field;
pub mod lorentz;
pub mod rep;
pub mod spinor;
pub mod symmetry;
pub mod verify;

pub use algebra::{Blade, Multivector};
pub use spinor::{Cx, Spinor};

/// Crate-wide error type.
#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    #[error("invalid generator label {0} (valid: 0, 1, 2, 3, 5)")]
    InvalidGenerator(u8),
    #[error("invalid spatial axis {0} (valid: 1, 2, 3)")]
    InvalidAxis(usize),
    #[error("parse error at offset {pos}: {what}")]
    Parse { what: String, pos: usize },
    #[error("state is off shell: E^2 - m^2 - |p|^2 = {residual}")]
    OffShell { residual: f64 },
    #[error("mass must be non-negative, got {0}")]
    BadMass(f64),
    #[error("multivector lies outside the spinor ideal (distance {distance})")]
    OutsideIdeal { distance: f64 },
    #[error("cannot normalize: probability density is {density}")]
    ZeroNorm { density: f64 },
    #[error("bilinear paths disagree: direct {direct:?}, expanded {expanded:?}")]
    BilinearMismatch { direct: (f64, f64), expanded: (f64, f64) },
    #[error("charge conjugation forms disagree by {residual}")]
    ChargeConjMismatch { residual: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
