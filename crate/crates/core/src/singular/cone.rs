use itertools::Itertools;
use num::Zero;

use super::{chart_of, check_point, multilinear_multiplicity};
use crate::config::Configuration;
use crate::error::{Error, Result};
use crate::exactalg::{Monomial, Polynomial, Rational};
use crate::graphhom::EdgeSubset;

/// Tangent cone at a point `a` of a hypersurface, dehomogenized in the chart
/// `A_chart = 1` (`affine`, in which `A_chart` does not occur) and as the
/// homogeneous form of the leading Taylor term (`projective`).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TangentCone {
    pub chart: usize,
    pub order: usize,
    pub affine: Polynomial,
    pub projective: Polynomial,
}

/// One summand `C_J Ψ_{W^{E−J}}(a/a_i) (A/A_i − a/a_i)^J` of the cone.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ConeTerm {
    pub subset: EdgeSubset,
    /// `∂_J Ψ_W = C_J Ψ_{W^{E−J}}`.
    pub constant: Rational,
    /// `Ψ_{W^{E−J}}(a/a_i)`.
    pub value: Rational,
}

/// `y_l ↦ A_l − a_l/a_i` and `y_l ↦ a_i A_l − a_l A_i`; both vanish at `l = i`.
fn chart_images(a: &[Rational], i: usize) -> (Vec<Polynomial>, Vec<Polynomial>) {
    let n = a.len();
    let mut affine = Vec::with_capacity(n);
    let mut projective = Vec::with_capacity(n);
    for (l, al) in a.iter().enumerate() {
        if l == i {
            affine.push(Polynomial::zero(n));
            projective.push(Polynomial::zero(n));
            continue;
        }
        let shift = Polynomial::constant(n, al / &a[i]);
        affine.push(&Polynomial::var(n, l) - &shift);
        projective.push(
            &Polynomial::var(n, l).scale(&a[i]) - &Polynomial::var(n, i).scale(al),
        );
    }
    (affine, projective)
}

/// Cone of `V(f)` at `a` from the lowest homogeneous part of
/// `f(a/a_i + y)` with `y_i = 0`. Works for any homogeneous `f`.
pub fn tangent_cone_taylor(f: &Polynomial, a: &[Rational]) -> Result<TangentCone> {
    check_point(f.nvars(), a)?;
    let i = chart_of(a).expect("nonzero point");
    let local: Vec<Rational> = a.iter().map(|x| x / &a[i]).collect();
    let shifted = f.translate(&local)?;
    let in_chart = Polynomial::from_terms(
        f.nvars(),
        shifted
            .terms()
            .filter(|(m, _)| m.exponent(i) == 0)
            .map(|(m, c)| (m.clone(), c.clone())),
    );
    let order = in_chart
        .min_degree()
        .ok_or_else(|| Error::arg("the polynomial vanishes identically near the point"))?;
    if order == 0 {
        return Err(Error::arg("the point is not on the hypersurface"));
    }
    let leading = in_chart.homogeneous_part(order);
    let (affine, projective) = chart_images(a, i);
    Ok(TangentCone {
        chart: i,
        order: order as usize,
        affine: leading.substitute(&affine)?,
        projective: leading.substitute(&projective)?,
    })
}

/// Cone of `X_W` at `a` summed over the restrictions `W^{E−J}` with
/// `|J| = k` and `dim W^{E−J} = ℓ − k`, `k` the multiplicity.
///
/// Each `C_J` is read off from `∂_J Ψ_W`; a `J` whose restriction has the
/// wrong dimension must have `∂_J Ψ_W = 0`. Either failure is an error.
pub fn tangent_cone_by_restriction(w: &Configuration, a: &[Rational]) -> Result<(TangentCone, Vec<ConeTerm>)> {
    check_point(w.n(), a)?;
    let psi = w.psi_det()?;
    let k = multilinear_multiplicity(&psi, a)?;
    if k == 0 {
        return Err(Error::arg("the point is not on the hypersurface"));
    }
    let n = w.n();
    let i = chart_of(a).expect("nonzero point");
    let local: Vec<Rational> = a.iter().map(|x| x / &a[i]).collect();
    let (affine_images, projective_images) = chart_images(a, i);

    let mut terms = Vec::new();
    let mut affine = Polynomial::zero(n);
    let mut projective = Polynomial::zero(n);
    for j in (0..n).combinations(k) {
        let subset = EdgeSubset::from_indices(j.iter().copied());
        let partial = psi.partial(&j)?;
        // W^{E−J} = 0 when k = ℓ, with Ψ of the zero configuration equal to 1
        let restricted_psi = match w.restrict(subset.complement(n)) {
            Some(r) if r.dim() + k == w.dim() => r.psi_det()?,
            None if k == w.dim() => Polynomial::one(n),
            _ => {
                if !partial.is_zero() {
                    return Err(Error::Check(format!(
                        "partial by {subset} is nonzero but the restriction has the wrong dimension"
                    )));
                }
                continue;
            }
        };
        let constant = match partial.proportional(&restricted_psi) {
            Some(c) if !c.is_zero() => c,
            _ => {
                return Err(Error::Check(format!(
                    "partial by {subset} is not a nonzero multiple of the restricted polynomial"
                )))
            }
        };
        let value = restricted_psi.eval(&local)?;
        if !value.is_zero() {
            let coefficient = &constant * &value;
            let monomial = Polynomial::from_terms(n, [(Monomial::product_of(j.iter().copied()), coefficient)]);
            affine = &affine + &monomial.substitute(&affine_images)?;
            projective = &projective + &monomial.substitute(&projective_images)?;
        }
        terms.push(ConeTerm {
            subset,
            constant,
            value,
        });
    }
    let cone = TangentCone {
        chart: i,
        order: k,
        affine,
        projective,
    };
    Ok((cone, terms))
}

/// The tangent cone of `X_W` at `a`, computed both ways; disagreement is a
/// [`Error::Check`] failure.
pub fn tangent_cone(w: &Configuration, a: &[Rational]) -> Result<TangentCone> {
    let direct = tangent_cone_taylor(&w.psi_det()?, a)?;
    let (formula, _) = tangent_cone_by_restriction(w, a)?;
    if direct != formula {
        return Err(Error::Check(format!(
            "Taylor cone {} differs from restriction cone {}",
            direct.projective, formula.projective
        )));
    }
    Ok(direct)
}
