//! Multigraphs and their homology: spanning and quasi-spanning forests, cut
//! sets, the boundary map, fundamental cycle bases, momenta and their lifts,
//! and the enumerative forms of the first and second graph polynomials.

mod cycles;
mod forests;
mod graph;
pub mod io;
mod momentum;
mod polys;

pub use forests::SUBSET_FILTER_MAX_EDGES;
pub use graph::{Edge, EdgeSubset, Multigraph};
pub use momentum::{ChainVector, Momentum, QsfMomentum};

/// Largest supported edge count; edge subsets are 64-bit masks.
pub const MAX_EDGES: usize = 64;
