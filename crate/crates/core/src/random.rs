//! Seeded generators for test inputs: multigraphs with loops and parallel
//! edges, conserved momenta, and small integral configurations.

use rand::Rng;

use crate::config::Configuration;
use crate::exactalg::{rat, RatMatrix, Rational};
use crate::graphhom::{ChainVector, Edge, EdgeSubset, Momentum, Multigraph};

/// Random multigraph with `1..=max_edges` edges on up to 5 vertices. About
/// one edge in eight is a loop; parallel edges arise freely.
pub fn random_multigraph<R: Rng + ?Sized>(rng: &mut R, max_edges: usize) -> Multigraph {
    let vertices = rng.gen_range(1..=5);
    let edge_count = rng.gen_range(1..=max_edges.max(1));
    let edges = (0..edge_count)
        .map(|_| {
            let tail = rng.gen_range(0..vertices);
            let head = if vertices == 1 || rng.gen_ratio(1, 8) {
                tail
            } else {
                (tail + rng.gen_range(1..vertices)) % vertices
            };
            Edge::new(tail, head)
        })
        .collect();
    Multigraph::new(vertices, edges).expect("edge count below the cap")
}

/// Random multigraph with `h1 ≥ 1`.
pub fn random_cyclic_multigraph<R: Rng + ?Sized>(rng: &mut R, max_edges: usize) -> Multigraph {
    loop {
        let g = random_multigraph(rng, max_edges);
        if g.h1() > 0 {
            return g;
        }
    }
}

/// Random nonzero integral momentum conserved on every component, or `None`
/// when every component is a single vertex.
pub fn random_momentum<R: Rng + ?Sized>(rng: &mut R, g: &Multigraph) -> Option<Momentum> {
    let components = g.components();
    if components.iter().all(|c| c.len() < 2) {
        return None;
    }
    loop {
        let mut values = vec![rat(0); g.vertex_count()];
        for comp in &components {
            let mut total = 0i64;
            for &v in &comp[1..] {
                let x = rng.gen_range(-3..=3);
                values[v] = rat(x);
                total += x;
            }
            values[comp[0]] = rat(-total);
        }
        let p = Momentum(values);
        if !p.is_zero() {
            return Some(p);
        }
    }
}

/// A lift of `p` different in general from the default: along a random
/// spanning forest, plus a random integral cycle.
pub fn random_lift<R: Rng + ?Sized>(rng: &mut R, g: &Multigraph, p: &Momentum) -> ChainVector {
    let forests = g.spanning_forests();
    let forest = forests[rng.gen_range(0..forests.len())];
    let mut q = g.momentum_lift_along(forest, p).expect("valid momentum");
    let cycles = g.circuit_basis(g.first_spanning_forest()).expect("spanning forest");
    for r in 0..cycles.rows() {
        let c = rat(rng.gen_range(-2..=2));
        for (x, y) in q.0.iter_mut().zip(cycles.row(r)) {
            *x += y * &c;
        }
    }
    q
}

/// Random orientation flip of `g`.
pub fn random_flip<R: Rng + ?Sized>(rng: &mut R, g: &Multigraph) -> Multigraph {
    let bits = rng.gen::<u64>() & EdgeSubset::full(g.edge_count()).bits();
    g.with_flipped(EdgeSubset::from_bits(bits))
}

/// Random configuration with `1 ≤ ℓ ≤ max_dim`, `ℓ ≤ n ≤ max_n`, entries in
/// `-2..=2`, about a third of them zero.
pub fn random_configuration<R: Rng + ?Sized>(rng: &mut R, max_dim: usize, max_n: usize) -> Configuration {
    loop {
        let n = rng.gen_range(1..=max_n);
        let l = rng.gen_range(1..=max_dim.min(n));
        let rows: Vec<Vec<Rational>> = (0..l)
            .map(|_| {
                (0..n)
                    .map(|_| if rng.gen_ratio(1, 3) { rat(0) } else { rat(rng.gen_range(-2..=2)) })
                    .collect()
            })
            .collect();
        if let Ok(w) = Configuration::new(RatMatrix::from_rows(n, rows).expect("rows of length n")) {
            return w;
        }
    }
}

/// Random invertible integral `dim × dim` matrix.
pub fn random_invertible<R: Rng + ?Sized>(rng: &mut R, dim: usize) -> RatMatrix {
    loop {
        let rows = (0..dim)
            .map(|_| (0..dim).map(|_| rat(rng.gen_range(-2..=2))).collect())
            .collect();
        let t = RatMatrix::from_rows(dim, rows).expect("square");
        if t.rank() == dim {
            return t;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn generators_respect_invariants() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..50 {
            let g = random_multigraph(&mut rng, 10);
            assert!((1..=10).contains(&g.edge_count()));
            if let Some(p) = random_momentum(&mut rng, &g) {
                p.validate_nonzero(&g).unwrap();
                let q = random_lift(&mut rng, &g, &p);
                assert_eq!(g.boundary_of(&q).unwrap(), p.values());
            }
            assert!(random_cyclic_multigraph(&mut rng, 6).h1() > 0);
            let w = random_configuration(&mut rng, 5, 10);
            assert!(w.dim() <= 5 && w.n() <= 10);
            assert_eq!(random_invertible(&mut rng, 3).rank(), 3);
        }
    }

    #[test]
    fn deterministic_under_seed() {
        let a = random_multigraph(&mut ChaCha8Rng::seed_from_u64(9), 8);
        let b = random_multigraph(&mut ChaCha8Rng::seed_from_u64(9), 8);
        assert_eq!(a, b);
    }
}
