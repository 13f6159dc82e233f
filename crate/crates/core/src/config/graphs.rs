use super::Configuration;
use crate::error::{Error, Result};
use crate::exactalg::{Polynomial, RatMatrix};
use crate::graphhom::{ChainVector, Momentum, Multigraph};

/// `H_1(G) ⊆ K^E` in the circuit basis of the first spanning forest.
pub fn h1_configuration(g: &Multigraph) -> Result<Configuration> {
    if g.h1() == 0 {
        return Err(Error::ZeroConfiguration("the graph is a forest, so H_1 is zero".into()));
    }
    Configuration::new(g.circuit_basis(g.first_spanning_forest())?)
}

/// `H_1(G, p) = H_1(G) ⊕ K q` with basis `q` followed by the circuit basis,
/// `q` the default lift of `p`.
pub fn h1p_configuration(g: &Multigraph, p: &Momentum) -> Result<Configuration> {
    p.validate_nonzero(g)?;
    let q = g.momentum_lift(p)?;
    h1p_configuration_with_lift(g, p, &q)
}

/// As [`h1p_configuration`] with an explicit lift `q` of `p`.
pub fn h1p_configuration_with_lift(g: &Multigraph, p: &Momentum, q: &ChainVector) -> Result<Configuration> {
    p.validate_nonzero(g)?;
    if q.values().len() != g.edge_count() || g.boundary_of(q)? != p.values() {
        return Err(Error::Momentum("the chain does not lift the momentum".into()));
    }
    let lift = RatMatrix::from_rows(g.edge_count(), vec![q.values().to_vec()])?;
    let cycles = g.circuit_basis(g.first_spanning_forest())?;
    Configuration::new(lift.vstack(&cycles)?)
}

/// `Φ_G(p, A)` as the configuration polynomial of `H_1(G, p)`.
pub fn phi_config(g: &Multigraph, p: &Momentum) -> Result<Polynomial> {
    h1p_configuration(g, p)?.psi_det()
}
