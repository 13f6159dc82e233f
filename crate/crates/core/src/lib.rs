//! Exact computation of graph polynomials and configuration polynomials over
//! ℚ, together with checks of their singular structure: multiplicity against
//! corank of the evaluated bilinear form, derivatives against restrictions,
//! and tangent cones.
//!
//! The crate is organised bottom-up:
//!
//! * [`exactalg`]: rationals, sparse polynomials, fraction-free matrices;
//! * [`graphhom`]: multigraphs, forests, cut sets, cycles, momenta and the
//!   enumerative graph polynomials;
//! * [`config`]: configurations `W ⊆ ℚ^E`, Plücker coordinates,
//!   configuration polynomials and restrictions;
//! * [`singular`]: evaluated forms, multiplicities, singularity ideals and
//!   tangent cones;
//! * [`random`]: seeded generators for property checks.

pub mod config;
pub mod error;
pub mod exactalg;
pub mod graphhom;
pub mod random;
pub mod singular;

pub use error::{Error, Result};
