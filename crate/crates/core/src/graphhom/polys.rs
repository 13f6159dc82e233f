use num::One;

use super::graph::Multigraph;
use super::momentum::Momentum;
use crate::error::Result;
use crate::exactalg::{Monomial, Polynomial, Rational};

impl Multigraph {
    /// Kirchhoff polynomial `Ψ_G = Σ_F ∏_{e∉F} A_e` over spanning forests `F`.
    pub fn first_graph_polynomial_forests(&self) -> Polynomial {
        let n = self.edge_count();
        Polynomial::from_terms(
            n,
            self.spanning_forests()
                .into_iter()
                .map(|f| (Monomial::product_of(f.complement(n).iter()), Rational::one())),
        )
    }

    /// `Φ_G(p, A) = Σ_C s_C(p) ∏_{f∈C} A_f` over cut sets `C`.
    pub fn second_graph_polynomial_cutsets(&self, p: &Momentum) -> Result<Polynomial> {
        p.validate_nonzero(self)?;
        let n = self.edge_count();
        let mut terms = Vec::new();
        for qsf in self.quasi_spanning_forests() {
            let m = self.stranded_momentum(qsf, p)?;
            terms.push((Monomial::product_of(qsf.complement(n).iter()), &m * &m));
        }
        Ok(Polynomial::from_terms(n, terms))
    }
}
