use num::One;

use super::Configuration;
use crate::exactalg::{clear_denominators, RatMatrix, Rational};
use crate::graphhom::EdgeSubset;

impl Configuration {
    /// The restriction `W^H = W ∩ K^H`, or `None` when it is zero.
    ///
    /// The basis returned is the Hermite normal form basis of the lattice
    /// `W^H ∩ ℤ^E`. It depends only on the subspace `W^H`, never on the
    /// stored basis of `W`, so equal restrictions have equal polynomials.
    pub fn restrict(&self, h: EdgeSubset) -> Option<Configuration> {
        let n = self.n();
        // W = ker N with N an integral basis of W^⊥; add x_e = 0 for e ∉ H
        let mut rows: Vec<Vec<Rational>> = self
            .basis()
            .kernel()
            .row_vecs()
            .into_iter()
            .map(|r| {
                let (ints, _) = clear_denominators(&r);
                ints.into_iter().map(Rational::from_integer).collect()
            })
            .collect();
        for e in (0..n).filter(|&e| !h.contains(e)) {
            let mut unit = vec![Rational::from_integer(0.into()); n];
            unit[e] = Rational::one();
            rows.push(unit);
        }
        let constraints = RatMatrix::from_rows(n, rows).expect("rows of length n");
        let lattice = constraints.integer_kernel();
        (lattice.rows() > 0).then(|| Configuration::new(lattice).expect("lattice basis is independent"))
    }
}
