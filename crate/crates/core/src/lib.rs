//! Exact polynomial algebra over the rational quaternions `H_Q`.
//!
//! The crate is organized bottom-up:
//!
//! - [`scalar`]: rationals, quaternions, centralizer descriptors and exact
//!   linear solving over `Q` and over centralizer subfields.
//! - [`upoly`]: `H_Q[x]` with a central indeterminate; evaluation, division,
//!   GCRD/LCLM, right roots, exponent spaces `E(p, a)`, minimal left/right
//!   polynomials and Wedderburn polynomials.
//! - [`ratexpr`]: the recursive rational expressions `L_n`, `F_n` and the
//!   linear-algebra oracles they are checked against.
//! - [`mpoly`]: `H_Q[x_1..x_n]`, commuting points, point ideals, module
//!   presentations, eigen-tuple extraction and Rabinowitsch certificates.
//!
//! Everything is exact. Where `H_Q` lacks a root that would exist over a
//! real-closed base field, operations report it as a distinct outcome instead
//! of approximating.

pub mod error;
pub mod mpoly;
pub mod parse;
pub mod random;
pub mod ratexpr;
pub mod scalar;
pub mod selfcheck;
pub mod upoly;

pub use error::{Error, Result};
pub use mpoly::{
    CommutingPoint, EigenTuple, LeftIdealGens, MPoly, ModulePresentation, RabinowitschCertificate,
};
pub use ratexpr::{EvalOutcome, RatExpr};
pub use scalar::{CentralizerDesc, Quat, Rat};
pub use upoly::{ESpaceBasis, RootClass, RootSet, RootStatus, UPoly};
