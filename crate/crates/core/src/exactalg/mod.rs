//! Exact arithmetic: rationals, sparse multivariate polynomials over ℚ and
//! fraction-free dense linear algebra.
//!
//! Everything here is an immutable value type; all operations are pure.

mod matrix;
mod monomial;
mod polynomial;
mod rational;
mod symdet;

pub use matrix::RatMatrix;
pub use monomial::Monomial;
pub use polynomial::Polynomial;
pub use rational::{clear_denominators, denominator_lcm, is_integral, parse_rational, rat, ratio, Rational};
pub use symdet::{poly_det, MAX_POLY_DET_DIM};
