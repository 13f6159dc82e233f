use std::fmt;

use num::Zero;

use super::Configuration;
use crate::error::{Error, Result};
use crate::exactalg::{poly_det, Monomial, Polynomial, RatMatrix, Rational};

/// The restricted diagonal form `Σ_e A_e X_e²|_W` as a symmetric `ℓ × ℓ`
/// matrix of linear forms: `entry(i, j) = Σ_e A_e X_e(w_i) X_e(w_j)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SymbolicForm {
    dim: usize,
    entries: Vec<Polynomial>,
}

impl SymbolicForm {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entry(&self, i: usize, j: usize) -> &Polynomial {
        &self.entries[i * self.dim + j]
    }

    /// Row-major entries.
    pub fn entries(&self) -> &[Polynomial] {
        &self.entries
    }

    /// Every entry is zero or a linear form.
    pub fn is_linear(&self) -> bool {
        self.entries
            .iter()
            .all(|p| p.is_zero() || (p.is_homogeneous() && p.degree() == Some(1)))
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.dim).all(|i| (0..i).all(|j| self.entry(i, j) == self.entry(j, i)))
    }

    /// The numeric form at `A = a`.
    pub fn evaluate(&self, a: &[Rational]) -> Result<RatMatrix> {
        let values = self.entries.iter().map(|p| p.eval(a)).collect::<Result<Vec<_>>>()?;
        RatMatrix::new(self.dim, self.dim, values)
    }
}

impl fmt::Display for SymbolicForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.dim {
            let row: Vec<String> = (0..self.dim).map(|j| self.entry(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl Configuration {
    pub fn symbolic_form(&self) -> SymbolicForm {
        let (l, n) = (self.dim(), self.n());
        let b = self.basis();
        let mut entries = Vec::with_capacity(l * l);
        for i in 0..l {
            for j in 0..l {
                entries.push(Polynomial::from_terms(
                    n,
                    (0..n).map(|e| (Monomial::var(e), b.get(i, e) * b.get(j, e))),
                ));
            }
        }
        SymbolicForm { dim: l, entries }
    }

    /// `Ψ_W = det(symbolic_form)`, by cofactor expansion over polynomials.
    pub fn psi_det(&self) -> Result<Polynomial> {
        let form = self.symbolic_form();
        poly_det(form.dim, self.n(), &form.entries)
    }

    /// `Ψ_W = Σ_{|F|=ℓ} Plücker_F(W)² ∏_{f∈F} A_f`.
    pub fn psi_plucker(&self) -> Polynomial {
        Polynomial::from_terms(
            self.n(),
            self.plucker()
                .nonzero()
                .map(|(s, v)| (Monomial::product_of(s.iter()), v * v)),
        )
    }

    /// The evaluated form `B_E(a)|_W = M diag(a) Mᵀ`.
    pub fn form_at(&self, a: &[Rational]) -> Result<RatMatrix> {
        if a.len() != self.n() {
            return Err(Error::dim(format!("point of length {} for {} coordinates", a.len(), self.n())));
        }
        let b = self.basis();
        let l = self.dim();
        let mut m = RatMatrix::zeros(l, l);
        for i in 0..l {
            for j in i..l {
                let mut s = Rational::zero();
                for (e, ae) in a.iter().enumerate() {
                    if !ae.is_zero() {
                        s += ae * b.get(i, e) * b.get(j, e);
                    }
                }
                m.set(j, i, s.clone());
                m.set(i, j, s);
            }
        }
        Ok(m)
    }

    /// `Ψ_W(a)` computed as a numeric determinant.
    pub fn psi_value(&self, a: &[Rational]) -> Result<Rational> {
        self.form_at(a)?.det()
    }
}
