use super::{check_point, form_at};
use crate::config::Configuration;
use crate::error::{Error, Result};
use crate::exactalg::{poly_det, Polynomial, Rational};

/// Largest `ℓ` for the generic symmetric determinant.
pub const MAX_GENERIC_DIM: usize = 5;

/// Variables of the generic symmetric `ℓ × ℓ` matrix: the diagonal
/// `B1..Bℓ`, then `Bij` for `i < j` in lexicographic order.
pub fn generic_variable_names(l: usize) -> Vec<String> {
    let mut names: Vec<String> = (1..=l).map(|i| format!("B{i}")).collect();
    for i in 1..=l {
        for j in i + 1..=l {
            names.push(format!("B{i}{j}"));
        }
    }
    names
}

/// Variable index of the `(i, j)` entry.
fn generic_index(l: usize, i: usize, j: usize) -> usize {
    let (i, j) = if i <= j { (i, j) } else { (j, i) };
    if i == j {
        return i;
    }
    // pairs (r, s), r < s, before (i, j)
    let before: usize = (0..i).map(|r| l - 1 - r).sum();
    l + before + (j - i - 1)
}

/// `det` of the generic symmetric `ℓ × ℓ` matrix.
pub fn generic_symmetric_det(l: usize) -> Result<Polynomial> {
    if l == 0 || l > MAX_GENERIC_DIM {
        return Err(Error::Size(format!(
            "generic symmetric determinant needs 1 <= dim <= {MAX_GENERIC_DIM}, got {l}"
        )));
    }
    let nvars = l * (l + 1) / 2;
    let entries: Vec<Polynomial> = (0..l * l)
        .map(|idx| Polynomial::var(nvars, generic_index(l, idx / l, idx % l)))
        .collect();
    poly_det(l, nvars, &entries)
}

/// The generic determinant `f(B)` and its pullback along `B ↦ π(B_E(A))`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GenericPullback {
    pub names: Vec<String>,
    pub generic: Polynomial,
    pub pullback: Polynomial,
    /// `pullback == Ψ_W`.
    pub matches: bool,
}

impl GenericPullback {
    pub fn generic_text(&self) -> String {
        let names = &self.names;
        self.generic.display_with(&|i| names[i].clone()).to_string()
    }
}

/// The images `B_ii ↦ entry(i, i)`, `B_ij ↦ entry(i, j)`.
fn pullback_images(w: &Configuration) -> Vec<Polynomial> {
    let l = w.dim();
    let form = w.symbolic_form();
    let mut images = vec![Polynomial::zero(w.n()); l * (l + 1) / 2];
    for i in 0..l {
        for j in i..l {
            images[generic_index(l, i, j)] = form.entry(i, j).clone();
        }
    }
    images
}

pub fn generic_det_pullback(w: &Configuration) -> Result<GenericPullback> {
    let generic = generic_symmetric_det(w.dim())?;
    let pullback = generic.substitute(&pullback_images(w))?;
    let matches = pullback == w.psi_det()?;
    Ok(GenericPullback {
        names: generic_variable_names(w.dim()),
        generic,
        pullback,
        matches,
    })
}

/// Comparison at `a` of the generic locus at `b = π(a)` with `X_W` at `a`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GenericConeCheck {
    /// Lowest degree of `f(b + z)`.
    pub generic_multiplicity: usize,
    pub corank: usize,
    /// `(lowest part of f at b) ∘ π` equals the lowest part of `Ψ_W(a + y)`.
    pub cones_match: bool,
}

pub fn generic_cone_check(w: &Configuration, a: &[Rational]) -> Result<GenericConeCheck> {
    check_point(w.n(), a)?;
    let l = w.dim();
    let generic = generic_symmetric_det(l)?;
    let form = form_at(w, a)?;
    let mut b = vec![Rational::from_integer(0.into()); l * (l + 1) / 2];
    for i in 0..l {
        for j in i..l {
            b[generic_index(l, i, j)] = form.matrix.get(i, j).clone();
        }
    }
    let local = generic.translate(&b)?;
    let order = local.min_degree().expect("determinant is nonzero");
    let generic_lead = local.homogeneous_part(order).substitute(&pullback_images(w))?;
    let psi_local = w.psi_det()?.translate(a)?;
    let psi_order = psi_local.min_degree().expect("configuration polynomial is nonzero");
    let psi_lead = psi_local.homogeneous_part(psi_order);
    Ok(GenericConeCheck {
        generic_multiplicity: order as usize,
        corank: form.corank,
        cones_match: order == psi_order && generic_lead == psi_lead,
    })
}
