use std::collections::VecDeque;

use num::One;

use super::graph::{EdgeSubset, Multigraph};
use crate::error::{Error, Result};
use crate::exactalg::{RatMatrix, Rational};

impl Multigraph {
    /// Fundamental-cycle basis of `H_1(G, ℤ)` with respect to the spanning
    /// forest `forest`.
    ///
    /// One row per non-forest edge `e`, in edge order: `+1` on `e` plus the
    /// unique forest path from `head(e)` back to `tail(e)`, each forest edge
    /// signed by whether the path traverses it along its orientation.
    pub fn circuit_basis(&self, forest: EdgeSubset) -> Result<RatMatrix> {
        if !self.is_spanning_forest(forest) {
            return Err(Error::arg(format!("{forest} is not a spanning forest")));
        }
        let n = self.edge_count();
        let mut adjacency: Vec<Vec<(usize, usize)>> = vec![Vec::new(); self.vertex_count()];
        for i in forest.iter() {
            let e = self.edge(i);
            adjacency[e.tail].push((i, e.head));
            adjacency[e.head].push((i, e.tail));
        }
        let mut rows = Vec::new();
        for i in forest.complement(n).iter() {
            let e = self.edge(i);
            let mut row = vec![Rational::from_integer(0.into()); n];
            row[i] = Rational::one();
            for (f, sign) in forest_path(&adjacency, e.head, e.tail, |f| self.edge(f).tail) {
                row[f] = Rational::from_integer(sign.into());
            }
            rows.push(row);
        }
        RatMatrix::from_rows(n, rows)
    }
}

/// Forest path from `from` to `to` as `(edge, ±1)` steps, `+1` when the step
/// runs from the edge's tail to its head.
fn forest_path(
    adjacency: &[Vec<(usize, usize)>],
    from: usize,
    to: usize,
    tail_of: impl Fn(usize) -> usize,
) -> Vec<(usize, i64)> {
    if from == to {
        return Vec::new();
    }
    let mut parent: Vec<Option<(usize, usize)>> = vec![None; adjacency.len()];
    let mut seen = vec![false; adjacency.len()];
    seen[from] = true;
    let mut queue = VecDeque::from([from]);
    while let Some(v) = queue.pop_front() {
        if v == to {
            break;
        }
        for &(edge, w) in &adjacency[v] {
            if !seen[w] {
                seen[w] = true;
                parent[w] = Some((edge, v));
                queue.push_back(w);
            }
        }
    }
    let mut steps = Vec::new();
    let mut cur = to;
    while cur != from {
        let (edge, prev) = parent[cur].expect("endpoints of a non-forest edge share a forest component");
        // step prev -> cur
        steps.push((edge, if tail_of(edge) == prev { 1 } else { -1 }));
        cur = prev;
    }
    steps.reverse();
    steps
}
