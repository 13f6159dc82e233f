use num::Zero;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::form_at;
use crate::config::Configuration;
use crate::error::{Error, Result};
use crate::exactalg::{rat, RatMatrix, Rational};
use crate::graphhom::EdgeSubset;

/// Retry budget per requested point.
pub const SAMPLING_ATTEMPTS_PER_POINT: usize = 200;

/// Rational points `a` with `corank B_E(a)|_W ≥ k`.
///
/// Each attempt picks a random coordinate subset `H`, a random
/// `k`-dimensional `R ⊆ W^H` with small integer coefficients, and a random
/// integral solution `a` of the linear conditions `B_E(a)(r, w) = 0` for all
/// `r ∈ R`, `w ∈ W`, which place `R` in the radical. Deterministic in `seed`.
pub fn sample_corank_points(w: &Configuration, k: usize, count: usize, seed: u64) -> Result<Vec<Vec<Rational>>> {
    if k == 0 || k >= w.dim() {
        return Err(Error::arg(format!(
            "corank {k} is outside 1..={} for a configuration of dimension {}",
            w.dim().saturating_sub(1),
            w.dim()
        )));
    }
    let n = w.n();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let budget = SAMPLING_ATTEMPTS_PER_POINT * count.max(1);
    let mut points = Vec::with_capacity(count);
    let mut attempts = 0;
    while points.len() < count {
        if attempts == budget {
            return Err(Error::SamplingExhausted { k, attempts });
        }
        attempts += 1;
        let mut order: Vec<usize> = (0..n).collect();
        order.shuffle(&mut rng);
        let keep = rng.gen_range(1..=n);
        let h = EdgeSubset::from_indices(order[..keep].iter().copied());
        let Some(sub) = w.restrict(h) else { continue };
        if sub.dim() < k {
            continue;
        }
        let Some(r) = random_subspace(&mut rng, sub.basis(), k) else {
            continue;
        };
        let Some(a) = random_solution(&mut rng, &r, w.basis()) else {
            continue;
        };
        if form_at(w, &a)?.corank >= k {
            points.push(a);
        }
    }
    Ok(points)
}

/// `k` random small-integer combinations of the rows of `basis`, if independent.
fn random_subspace(rng: &mut ChaCha8Rng, basis: &RatMatrix, k: usize) -> Option<RatMatrix> {
    let mut rows = Vec::with_capacity(k);
    for _ in 0..k {
        let mut v = vec![Rational::zero(); basis.cols()];
        for b in 0..basis.rows() {
            let c: i64 = if rng.gen_bool(0.5) { rng.gen_range(-2..=2) } else { 0 };
            if c != 0 {
                for (x, y) in v.iter_mut().zip(basis.row(b)) {
                    *x += y * rat(c);
                }
            }
        }
        rows.push(v);
    }
    let r = RatMatrix::from_rows(basis.cols(), rows).ok()?;
    (r.rank() == k).then_some(r)
}

/// A random nonzero integral `a` with `Σ_e a_e r_e w_e = 0` for every row
/// `r` of `radical` and `w` of `basis`.
fn random_solution(rng: &mut ChaCha8Rng, radical: &RatMatrix, basis: &RatMatrix) -> Option<Vec<Rational>> {
    let n = basis.cols();
    let mut rows = Vec::new();
    for t in 0..radical.rows() {
        for j in 0..basis.rows() {
            rows.push((0..n).map(|e| radical.get(t, e) * basis.get(j, e)).collect());
        }
    }
    let solutions = RatMatrix::from_rows(n, rows).ok()?.integer_kernel();
    if solutions.rows() == 0 {
        return None;
    }
    let mut a = vec![Rational::zero(); n];
    for s in 0..solutions.rows() {
        let c = rat(rng.gen_range(-3..=3));
        for (x, y) in a.iter_mut().zip(solutions.row(s)) {
            *x += y * &c;
        }
    }
    (!a.iter().all(Zero::is_zero)).then_some(a)
}
