use itertools::Itertools;
use num::{One, Zero};

use crate::config::Configuration;
use crate::error::{Error, Result};
use crate::exactalg::{Polynomial, Rational};
use crate::graphhom::EdgeSubset;

/// How a pair `(Ψ_{W^{E−F}}, ∂_F Ψ_W)` relates.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum PairClass {
    /// `∂_F Ψ_W = C · Ψ_{W^{E−F}}` with `C ≠ 0`.
    Proportional { constant: Rational },
    /// `∂_F Ψ_W = 0` and `W^{E−F} = W^{E−F'}` for the smaller set `F' ⊊ F`.
    Vanishing { matched: EdgeSubset },
    Inconsistent,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IdealPair {
    pub subset: EdgeSubset,
    pub restriction: Option<Polynomial>,
    pub partial: Polynomial,
    pub class: PairClass,
}

/// Generators `Ψ_{W^{E−F}}` and `∂_F Ψ_W` for `1 ≤ |F| ≤ k`, paired by `F`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SingularIdealGens {
    pub order: usize,
    pub pairs: Vec<IdealPair>,
}

impl SingularIdealGens {
    pub fn is_consistent(&self) -> bool {
        self.pairs.iter().all(|p| p.class != PairClass::Inconsistent)
    }

    /// Every proportional pair has `C = 1`.
    pub fn constants_are_one(&self) -> bool {
        self.pairs.iter().all(|p| match &p.class {
            PairClass::Proportional { constant } => constant.is_one(),
            _ => true,
        })
    }
}

pub fn singular_ideal_gens(w: &Configuration, k: usize) -> Result<SingularIdealGens> {
    if k == 0 || k >= w.dim() {
        return Err(Error::arg(format!(
            "order {k} is outside 1..={} for a configuration of dimension {}",
            w.dim().saturating_sub(1),
            w.dim()
        )));
    }
    let n = w.n();
    let psi = w.psi_det()?;
    // subsets of size ≤ k in order of size, so every F' ⊊ F precedes F
    let subsets: Vec<EdgeSubset> = (0..=k)
        .flat_map(|s| (0..n).combinations(s).map(EdgeSubset::from_indices))
        .collect();
    let restrictions: Vec<Option<Configuration>> =
        subsets.iter().map(|f| w.restrict(f.complement(n))).collect();

    let mut pairs = Vec::new();
    for (idx, &f) in subsets.iter().enumerate().skip(1) {
        let partial = psi.partial(&f.to_vec())?;
        let restricted = &restrictions[idx];
        let restriction = restricted.as_ref().map(Configuration::psi_det).transpose()?;
        let class = match &restriction {
            Some(r) if !partial.is_zero() => match partial.proportional(r) {
                Some(constant) if !constant.is_zero() => PairClass::Proportional { constant },
                _ => PairClass::Inconsistent,
            },
            Some(_) => subsets[..idx]
                .iter()
                .zip(&restrictions[..idx])
                .find(|(g, r)| g.is_subset(f) && r.as_ref() == restricted.as_ref())
                .map(|(&matched, _)| PairClass::Vanishing { matched })
                .unwrap_or(PairClass::Inconsistent),
            None => PairClass::Inconsistent,
        };
        pairs.push(IdealPair {
            subset: f,
            restriction,
            partial,
            class,
        });
    }
    Ok(SingularIdealGens { order: k, pairs })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::h1_configuration;
    use crate::exactalg::rat;
    use crate::graphhom::Multigraph;

    #[test]
    fn cfg1_order_one() {
        let cfg1 = Configuration::from_i64(&[&[1, 1, 0], &[0, -1, 2]]).unwrap();
        let gens = singular_ideal_gens(&cfg1, 1).unwrap();
        assert_eq!(gens.pairs.len(), 3);
        let first = &gens.pairs[0];
        assert_eq!(first.subset, EdgeSubset::singleton(0));
        assert_eq!(first.partial.to_string(), "A2 + 4*A3");
        assert_eq!(first.restriction.as_ref().unwrap().to_string(), "A2 + 4*A3");
        assert_eq!(first.class, PairClass::Proportional { constant: rat(1) });
        assert!(gens.is_consistent());
    }

    #[test]
    fn unused_element_vanishes() {
        let cfg1 = Configuration::from_i64(&[&[1, 1, 0], &[0, -1, 2]]).unwrap();
        let big = cfg1.extend_ground_set(4).unwrap();
        let gens = singular_ideal_gens(&big, 1).unwrap();
        let last = gens.pairs.last().unwrap();
        assert_eq!(last.subset, EdgeSubset::singleton(3));
        assert!(last.partial.is_zero());
        assert_eq!(last.class, PairClass::Vanishing { matched: EdgeSubset::empty() });
        assert!(big.restrict(EdgeSubset::full(3)).unwrap().same_subspace(&big));
        assert!(gens.is_consistent());
    }

    #[test]
    fn banana_constants_are_one() {
        let w = h1_configuration(&Multigraph::from_pairs(2, &[(0, 1); 4])).unwrap();
        let gens = singular_ideal_gens(&w, 1).unwrap();
        assert_eq!(gens.pairs.len(), 4);
        assert!(gens
            .pairs
            .iter()
            .all(|p| p.class == PairClass::Proportional { constant: rat(1) }));
        let gens = singular_ideal_gens(&w, 2).unwrap();
        assert!(gens.is_consistent() && gens.constants_are_one());
    }

    #[test]
    fn order_range() {
        let w = Configuration::trivial(3).unwrap();
        assert!(singular_ideal_gens(&w, 0).is_err());
        assert!(singular_ideal_gens(&w, 3).is_err());
        assert!(singular_ideal_gens(&w, 2).unwrap().is_consistent());
    }
}
