use itertools::Itertools;
use num::Zero;
use rayon::prelude::*;

use super::Configuration;
use crate::exactalg::Rational;
use crate::graphhom::EdgeSubset;

/// Ground sets up to this size store every Plücker coordinate.
pub const DENSE_PLUCKER_MAX_N: usize = 16;

/// Plücker coordinates of a configuration in its stored basis: the `ℓ × ℓ`
/// minors, keyed by the `ℓ`-subset of columns.
///
/// Entries are kept in lexicographic subset order. Dense storage holds all
/// `C(n, ℓ)` entries; sparse storage only the nonzero ones.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PluckerVector {
    dim: usize,
    dense: bool,
    entries: Vec<(EdgeSubset, Rational)>,
}

impl PluckerVector {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_dense(&self) -> bool {
        self.dense
    }

    pub fn get(&self, subset: EdgeSubset) -> Rational {
        self.entries
            .binary_search_by(|(s, _)| s.cmp(&subset))
            .map(|i| self.entries[i].1.clone())
            .unwrap_or_else(|_| Rational::zero())
    }

    /// Stored entries in lexicographic order (zeros included when dense).
    pub fn entries(&self) -> &[(EdgeSubset, Rational)] {
        &self.entries
    }

    pub fn nonzero(&self) -> impl Iterator<Item = &(EdgeSubset, Rational)> {
        self.entries.iter().filter(|(_, v)| !v.is_zero())
    }
}

impl Configuration {
    /// All `ℓ × ℓ` minors of the basis matrix.
    pub fn plucker(&self) -> PluckerVector {
        let subsets: Vec<Vec<usize>> = (0..self.n()).combinations(self.dim()).collect();
        let minors: Vec<(EdgeSubset, Rational)> = subsets
            .into_par_iter()
            .map(|cols| {
                let minor = self
                    .basis()
                    .select_columns(&cols)
                    .det()
                    .expect("square selection");
                (EdgeSubset::from_indices(cols), minor)
            })
            .collect();
        let dense = self.n() <= DENSE_PLUCKER_MAX_N;
        let entries = if dense {
            minors
        } else {
            minors.into_iter().filter(|(_, v)| !v.is_zero()).collect()
        };
        PluckerVector {
            dim: self.dim(),
            dense,
            entries,
        }
    }
}
