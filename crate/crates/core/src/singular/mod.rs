//! Singular structure of configuration hypersurfaces.
//!
//! At a point `a`, the rank of the evaluated form `B_E(a)|_W` is compared
//! with the multiplicity of `X_W = V(Ψ_W)` at `a`: the least order of a
//! nonvanishing partial derivative. Tangent cones are produced by a direct
//! Taylor expansion and independently from the restrictions `W^{E−J}`.

mod cone;
mod generic;
mod ideals;
mod sampling;

use itertools::Itertools;
use num::Zero;

use crate::config::Configuration;
use crate::error::{Error, Result};
use crate::exactalg::{Polynomial, RatMatrix, Rational};

pub use cone::{tangent_cone, tangent_cone_by_restriction, tangent_cone_taylor, ConeTerm, TangentCone};
pub use generic::{
    generic_cone_check, generic_det_pullback, generic_symmetric_det, generic_variable_names, GenericConeCheck,
    GenericPullback, MAX_GENERIC_DIM,
};
pub use ideals::{singular_ideal_gens, IdealPair, PairClass, SingularIdealGens};
pub use sampling::{sample_corank_points, SAMPLING_ATTEMPTS_PER_POINT};

/// The form `B_E(a)|_W` in the stored basis, with its rank data.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FormAt {
    pub matrix: RatMatrix,
    pub rank: usize,
    pub corank: usize,
    /// Basis of the radical, as rows of coefficients on the basis of `W`.
    pub radical: RatMatrix,
}

impl FormAt {
    /// The radical as vectors of `K^E`.
    pub fn radical_vectors(&self, w: &Configuration) -> RatMatrix {
        self.radical.mul(w.basis()).expect("radical rows have length dim W")
    }

    pub fn is_degenerate(&self) -> bool {
        self.corank > 0
    }
}

pub fn form_at(w: &Configuration, a: &[Rational]) -> Result<FormAt> {
    let matrix = w.form_at(a)?;
    let radical = matrix.kernel();
    let corank = radical.rows();
    Ok(FormAt {
        rank: w.dim() - corank,
        corank,
        radical,
        matrix,
    })
}

fn check_point(n: usize, a: &[Rational]) -> Result<()> {
    if a.len() != n {
        return Err(Error::dim(format!("point of length {} for {n} coordinates", a.len())));
    }
    if a.iter().all(Zero::is_zero) {
        return Err(Error::arg("the zero vector is not a projective point"));
    }
    Ok(())
}

/// Index of the first nonzero coordinate.
pub fn chart_of(a: &[Rational]) -> Option<usize> {
    a.iter().position(|x| !x.is_zero())
}

/// Least `|F|` with `∂_F f(a) ≠ 0`, over square-free `F`. Only valid for
/// multilinear `f`, where repeated derivatives vanish identically.
pub fn multilinear_multiplicity(f: &Polynomial, a: &[Rational]) -> Result<usize> {
    if !f.is_multilinear() {
        return Err(Error::arg("multiplicity by square-free partials needs a multilinear polynomial"));
    }
    if f.is_zero() {
        return Err(Error::arg("the zero polynomial has no multiplicity"));
    }
    let n = f.nvars();
    let max = f.degree().unwrap_or(0) as usize;
    for k in 0..=max {
        for vars in (0..n).combinations(k) {
            if !f.partial(&vars)?.eval(a)?.is_zero() {
                return Ok(k);
            }
        }
    }
    unreachable!("a nonzero polynomial of degree d has a nonzero partial of order d")
}

/// Multiplicity of `X_W` at `a`; 0 when `Ψ_W(a) ≠ 0`.
pub fn multiplicity_at(w: &Configuration, a: &[Rational]) -> Result<usize> {
    check_point(w.n(), a)?;
    multilinear_multiplicity(&w.psi_det()?, a)
}

/// Per-point comparison of corank and multiplicity.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AnalysisReport {
    pub point: Vec<Rational>,
    pub dim: usize,
    pub rank: usize,
    pub corank: usize,
    pub multiplicity: usize,
    /// `multiplicity == corank`.
    pub theorem_ok: bool,
    /// `1 ≤ corank ≤ dim − 1`, the range where the identity is a theorem.
    pub in_theorem_range: bool,
    pub psi_value: Rational,
    pub chart: usize,
    pub tangent_cone: Option<TangentCone>,
}

/// Compares the multiplicity of `X_W` at `a` with the corank of `B_E(a)|_W`.
pub fn verify_theorem(w: &Configuration, a: &[Rational]) -> Result<AnalysisReport> {
    check_point(w.n(), a)?;
    let psi = w.psi_det()?;
    let form = form_at(w, a)?;
    let multiplicity = multilinear_multiplicity(&psi, a)?;
    Ok(AnalysisReport {
        point: a.to_vec(),
        dim: w.dim(),
        rank: form.rank,
        corank: form.corank,
        multiplicity,
        theorem_ok: multiplicity == form.corank,
        in_theorem_range: form.corank >= 1 && form.corank < w.dim(),
        psi_value: psi.eval(a)?,
        chart: chart_of(a).expect("nonzero point"),
        tangent_cone: None,
    })
}

/// [`verify_theorem`] plus the tangent cone when `a` lies on `X_W`.
pub fn analyze(w: &Configuration, a: &[Rational]) -> Result<AnalysisReport> {
    let mut report = verify_theorem(w, a)?;
    if report.multiplicity > 0 {
        report.tangent_cone = Some(tangent_cone(w, a)?);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::h1_configuration;
    use crate::exactalg::rat;
    use crate::graphhom::Multigraph;

    fn pt(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| rat(x)).collect()
    }

    fn ban4() -> Configuration {
        h1_configuration(&Multigraph::from_pairs(2, &[(0, 1); 4])).unwrap()
    }

    #[test]
    fn form_at_examples() {
        let f = form_at(&ban4(), &pt(&[1, 0, 0, 0])).unwrap();
        assert_eq!((f.rank, f.corank), (1, 2));

        let f = form_at(&Configuration::trivial(3).unwrap(), &pt(&[1, 1, 1])).unwrap();
        assert_eq!(f.matrix, RatMatrix::identity(3));
        assert_eq!(f.corank, 0);

        let cfg1 = Configuration::from_i64(&[&[1, 1, 0], &[0, -1, 2]]).unwrap();
        let f = form_at(&cfg1, &pt(&[0, 0, 1])).unwrap();
        assert_eq!(f.matrix, RatMatrix::from_i64(&[&[0, 0], &[0, 4]]));
        assert_eq!(f.rank, 1);
        assert_eq!(f.radical_vectors(&cfg1), RatMatrix::from_i64(&[&[1, 1, 0]]));
    }

    #[test]
    fn multiplicity_examples() {
        assert_eq!(multiplicity_at(&ban4(), &pt(&[1, 0, 0, 0])).unwrap(), 2);
        assert_eq!(multiplicity_at(&ban4(), &pt(&[1, 2, 3, 4])).unwrap(), 0);
        let triv = Configuration::trivial(3).unwrap();
        assert_eq!(multiplicity_at(&triv, &pt(&[0, 0, 1])).unwrap(), 2);
        assert_eq!(multiplicity_at(&triv, &pt(&[0, 0, -7])).unwrap(), 2);
        assert!(multiplicity_at(&triv, &pt(&[0, 0, 0])).is_err());
        assert!(multiplicity_at(&triv, &pt(&[0, 1])).is_err());
    }

    #[test]
    fn theorem_examples() {
        let r = verify_theorem(&ban4(), &pt(&[1, 0, 0, 0])).unwrap();
        assert_eq!((r.corank, r.multiplicity, r.theorem_ok, r.in_theorem_range), (2, 2, true, true));

        let cfg1 = Configuration::from_i64(&[&[1, 1, 0], &[0, -1, 2]]).unwrap();
        let r = verify_theorem(&cfg1, &pt(&[1, 1, 1])).unwrap();
        assert_eq!((r.corank, r.multiplicity, r.theorem_ok), (0, 0, true));
        assert_eq!(r.psi_value, rat(9));

        let r = verify_theorem(&Configuration::trivial(4).unwrap(), &pt(&[0, 0, 1, 1])).unwrap();
        assert_eq!((r.corank, r.multiplicity, r.theorem_ok), (2, 2, true));
    }

    #[test]
    fn analyze_attaches_cone_on_hypersurface() {
        let r = analyze(&ban4(), &pt(&[1, 0, 0, 0])).unwrap();
        assert_eq!(r.tangent_cone.unwrap().projective.to_string(), "A2*A3 + A2*A4 + A3*A4");
        let cfg1 = Configuration::from_i64(&[&[1, 1, 0], &[0, -1, 2]]).unwrap();
        assert!(analyze(&cfg1, &pt(&[1, 1, 1])).unwrap().tangent_cone.is_none());
    }
}
