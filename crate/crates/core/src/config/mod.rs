//! Configurations `W ⊆ K^E`: subspaces of a based vector space, given by a
//! basis matrix whose columns are the coordinates `X_e`.
//!
//! The configuration polynomial is computed two ways, as the determinant of
//! the restricted diagonal form [`Configuration::psi_det`] and as the
//! weighted sum of squared Plücker coordinates
//! [`Configuration::psi_plucker`]. The two agree exactly in the stored basis.
//! Graphs enter through [`h1_configuration`] and [`h1p_configuration`].

mod form;
mod graphs;
mod plucker;
mod restrict;

use std::fmt::Write as _;

use num::Zero;

use crate::error::{Error, Result};
use crate::exactalg::{parse_rational, RatMatrix, Rational};
use crate::graphhom::io::content_lines;
use crate::graphhom::{EdgeSubset, MAX_EDGES};

pub use form::SymbolicForm;
pub use graphs::{h1_configuration, h1p_configuration, h1p_configuration_with_lift, phi_config};
pub use plucker::PluckerVector;

/// A nonzero subspace `W ⊆ K^E` with a fixed basis.
///
/// Invariant: `basis` is `ℓ × n` with full row rank `ℓ ≥ 1`, `n ≤ 64`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Configuration {
    basis: RatMatrix,
}

impl Configuration {
    pub fn new(basis: RatMatrix) -> Result<Self> {
        if basis.cols() > MAX_EDGES {
            return Err(Error::EdgeCap(basis.cols()));
        }
        if basis.rows() == 0 || basis.is_zero() {
            return Err(Error::ZeroConfiguration("the basis spans the zero subspace".into()));
        }
        let rank = basis.rank();
        if rank != basis.rows() {
            return Err(Error::arg(format!(
                "{} basis rows span only a {rank}-dimensional subspace",
                basis.rows()
            )));
        }
        Ok(Self { basis })
    }

    pub fn from_i64(rows: &[&[i64]]) -> Result<Self> {
        Self::new(RatMatrix::from_i64(rows))
    }

    /// `W = K^E` with the standard basis.
    pub fn trivial(n: usize) -> Result<Self> {
        Self::new(RatMatrix::identity(n))
    }

    /// Ground-set size `|E|`.
    pub fn n(&self) -> usize {
        self.basis.cols()
    }

    /// `ℓ = dim W`.
    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn basis(&self) -> &RatMatrix {
        &self.basis
    }

    /// The same subspace in the basis `T · basis`.
    pub fn change_basis(&self, t: &RatMatrix) -> Result<Self> {
        if !t.is_square() || t.rows() != self.dim() {
            return Err(Error::dim(format!(
                "{}x{} basis change for dimension {}",
                t.rows(),
                t.cols(),
                self.dim()
            )));
        }
        Self::new(t.mul(&self.basis)?)
    }

    /// The same basis vectors in a larger ground set; new coordinates are 0.
    pub fn extend_ground_set(&self, n: usize) -> Result<Self> {
        if n < self.n() {
            return Err(Error::dim(format!("cannot shrink a ground set of {} to {n}", self.n())));
        }
        let rows = self
            .basis
            .row_vecs()
            .into_iter()
            .map(|mut r| {
                r.resize(n, Rational::zero());
                r
            })
            .collect();
        Self::new(RatMatrix::from_rows(n, rows)?)
    }

    /// Whether `W ⊆ K^H`, i.e. every basis vector vanishes off `H`.
    pub fn is_supported_on(&self, h: EdgeSubset) -> bool {
        (0..self.n())
            .filter(|&e| !h.contains(e))
            .all(|e| (0..self.dim()).all(|r| self.basis.get(r, e).is_zero()))
    }

    /// Whether `self` and `other` are the same subspace of the same `K^E`.
    pub fn same_subspace(&self, other: &Configuration) -> bool {
        self.n() == other.n()
            && self.dim() == other.dim()
            && self.basis.row_space_contains(&other.basis).unwrap_or(false)
    }

    /// Parses the text format: `n <int>`, then one basis row per line.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = content_lines(text);
        let (line, header) = lines
            .next()
            .ok_or_else(|| Error::parse(1, "empty configuration file"))?;
        let n = match header.as_slice() {
            ["n", n] => n
                .parse::<usize>()
                .map_err(|_| Error::parse(line, format!("`{n}` is not a ground-set size")))?,
            _ => return Err(Error::parse(line, "expected `n <int>`")),
        };
        let mut rows = Vec::new();
        for (line, words) in lines {
            if words.len() != n {
                return Err(Error::parse(line, format!("row has {} entries, expected {n}", words.len())));
            }
            rows.push(
                words
                    .iter()
                    .map(|w| parse_rational(w, line))
                    .collect::<Result<Vec<_>>>()?,
            );
        }
        Self::new(RatMatrix::from_rows(n, rows)?)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("n {}\n", self.n());
        for r in 0..self.dim() {
            let row: Vec<String> = self.basis.row(r).iter().map(ToString::to_string).collect();
            writeln!(out, "{}", row.join(" ")).unwrap();
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::ratio;

    #[test]
    fn construction_checks() {
        assert!(matches!(
            Configuration::from_i64(&[&[0, 0, 0]]),
            Err(Error::ZeroConfiguration(_))
        ));
        assert!(matches!(
            Configuration::new(RatMatrix::zeros(0, 3)),
            Err(Error::ZeroConfiguration(_))
        ));
        assert!(matches!(
            Configuration::from_i64(&[&[1, 2], &[2, 4]]),
            Err(Error::Argument(_))
        ));
        let w = Configuration::from_i64(&[&[1, 1, 0], &[0, -1, 2]]).unwrap();
        assert_eq!((w.n(), w.dim()), (3, 2));
    }

    #[test]
    fn text_round_trip() {
        let text = "# example\nn 3\n1 1 0\n0 -1/2 2  # second row\n";
        let w = Configuration::parse(text).unwrap();
        assert_eq!(w.basis().get(1, 1), &ratio(-1, 2));
        assert_eq!(w.to_text(), "n 3\n1 1 0\n0 -1/2 2\n");
        assert_eq!(Configuration::parse(&w.to_text()).unwrap(), w);
    }

    #[test]
    fn text_errors() {
        assert!(matches!(Configuration::parse(""), Err(Error::Parse { .. })));
        assert!(matches!(Configuration::parse("m 3\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(Configuration::parse("n 3\n1 2\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(Configuration::parse("n 2\n1 x\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(Configuration::parse("n 2\n"), Err(Error::ZeroConfiguration(_))));
    }

    #[test]
    fn supports_and_subspaces() {
        let w = Configuration::from_i64(&[&[0, 1, 1], &[0, 1, -1]]).unwrap();
        assert!(w.is_supported_on(EdgeSubset::from_indices([1, 2])));
        assert!(!w.is_supported_on(EdgeSubset::singleton(1)));
        let v = Configuration::from_i64(&[&[0, 1, 0], &[0, 0, 1]]).unwrap();
        assert!(w.same_subspace(&v));
        let big = w.extend_ground_set(4).unwrap();
        assert_eq!(big.n(), 4);
        assert!(big.is_supported_on(EdgeSubset::from_indices([0, 1, 2])));
    }
}
