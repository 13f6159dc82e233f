use std::collections::VecDeque;

use num::Zero;

use super::graph::{EdgeSubset, Multigraph};
use crate::error::{Error, Result};
use crate::exactalg::Rational;

/// Vertex-indexed rational values. A momentum of a graph must sum to zero
/// over every connected component; that is checked by the operations that
/// consume it, not at construction.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Momentum(pub Vec<Rational>);

/// Edge-indexed rational vector, an element of `ℚ^E`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ChainVector(pub Vec<Rational>);

impl Momentum {
    pub fn zero(g: &Multigraph) -> Self {
        Self(vec![Rational::zero(); g.vertex_count()])
    }

    pub fn from_i64(values: &[i64]) -> Self {
        Self(values.iter().map(|&v| Rational::from_integer(v.into())).collect())
    }

    pub fn values(&self) -> &[Rational] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    /// Fails unless `self` is a momentum of `g` (right length, conserved on
    /// every component).
    pub fn validate(&self, g: &Multigraph) -> Result<()> {
        if self.0.len() != g.vertex_count() {
            return Err(Error::Momentum(format!(
                "{} values for {} vertices",
                self.0.len(),
                g.vertex_count()
            )));
        }
        for comp in g.components() {
            let total: Rational = comp.iter().map(|&v| &self.0[v]).sum();
            if !total.is_zero() {
                let names: Vec<&str> = comp.iter().map(|&v| g.vertex_names()[v].as_str()).collect();
                return Err(Error::Momentum(format!(
                    "momentum sums to {total} on component {{{}}}",
                    names.join(",")
                )));
            }
        }
        Ok(())
    }

    /// Like [`Momentum::validate`] but also rejects the zero momentum.
    pub fn validate_nonzero(&self, g: &Multigraph) -> Result<()> {
        self.validate(g)?;
        if self.is_zero() {
            return Err(Error::ZeroMomentum);
        }
        Ok(())
    }
}

impl ChainVector {
    pub fn values(&self) -> &[Rational] {
        &self.0
    }
}

impl Multigraph {
    /// `∂q` as a vertex vector.
    pub fn boundary_of(&self, q: &ChainVector) -> Result<Vec<Rational>> {
        self.boundary_matrix().apply(&q.0)
    }

    /// A chain `q` with `∂q = p`, routed along the lexicographically first
    /// spanning forest.
    pub fn momentum_lift(&self, p: &Momentum) -> Result<ChainVector> {
        self.momentum_lift_along(self.first_spanning_forest(), p)
    }

    /// A chain `q` with `∂q = p` supported on the spanning forest `forest`.
    ///
    /// Each forest edge carries the total momentum of the subtree hanging
    /// below it, signed by whether the edge points into that subtree.
    pub fn momentum_lift_along(&self, forest: EdgeSubset, p: &Momentum) -> Result<ChainVector> {
        p.validate(self)?;
        if !self.is_spanning_forest(forest) {
            return Err(Error::arg(format!("{forest} is not a spanning forest")));
        }
        let nv = self.vertex_count();
        let mut adjacency: Vec<Vec<(usize, usize)>> = vec![Vec::new(); nv];
        for i in forest.iter() {
            let e = self.edge(i);
            adjacency[e.tail].push((i, e.head));
            adjacency[e.head].push((i, e.tail));
        }
        let mut q = vec![Rational::zero(); self.edge_count()];
        let mut seen = vec![false; nv];
        for root in 0..nv {
            if seen[root] {
                continue;
            }
            // BFS order; parents precede children
            let mut order = Vec::new();
            let mut parent_edge: Vec<Option<usize>> = vec![None; nv];
            seen[root] = true;
            let mut queue = VecDeque::from([root]);
            while let Some(v) = queue.pop_front() {
                order.push(v);
                for &(edge, w) in &adjacency[v] {
                    if !seen[w] {
                        seen[w] = true;
                        parent_edge[w] = Some(edge);
                        queue.push_back(w);
                    }
                }
            }
            let mut subtree: Vec<Rational> = p.0.clone();
            for &v in order.iter().rev() {
                let Some(edge) = parent_edge[v] else { continue };
                let e = self.edge(edge);
                let parent = if e.head == v { e.tail } else { e.head };
                let m = subtree[v].clone();
                q[edge] = if e.head == v { m.clone() } else { -m.clone() };
                subtree[parent] += m;
            }
        }
        Ok(ChainVector(q))
    }

    /// Splits the quasi-spanning forest `qsf` into its two trees `(T1, T2)`
    /// that are not spanning trees of a component of the graph. `T1` holds
    /// the smaller vertex index.
    pub fn stranded_trees(&self, qsf: EdgeSubset) -> Result<(Vec<usize>, Vec<usize>)> {
        if !self.is_quasi_spanning_forest(qsf) {
            return Err(Error::arg(format!("{qsf} is not a quasi-spanning forest")));
        }
        let graph_labels = self.component_labels();
        let forest_labels = self.labels_for(qsf);
        for root in 0..self.vertex_count() {
            if graph_labels[root] != root {
                continue;
            }
            let members: Vec<usize> = (0..self.vertex_count()).filter(|&v| graph_labels[v] == root).collect();
            let t1_label = forest_labels[members[0]];
            let (t1, t2): (Vec<usize>, Vec<usize>) = members.iter().partition(|&&v| forest_labels[v] == t1_label);
            if !t2.is_empty() {
                return Ok((t1, t2));
            }
        }
        unreachable!("a quasi-spanning forest splits exactly one component")
    }

    /// `m_T1(p)`, the total momentum on the first stranded tree of `qsf`.
    pub fn stranded_momentum(&self, qsf: EdgeSubset, p: &Momentum) -> Result<Rational> {
        p.validate(self)?;
        let (t1, _) = self.stranded_trees(qsf)?;
        Ok(t1.iter().map(|&v| &p.0[v]).sum())
    }

    /// `s_F(p)` for the quasi-spanning forest `F`, evaluated from the vertex
    /// momenta and, independently, from the lift `q` across the cut set.
    pub fn forest_momentum(&self, qsf: EdgeSubset, p: &Momentum, q: &ChainVector) -> Result<QsfMomentum> {
        p.validate(self)?;
        if q.0.len() != self.edge_count() {
            return Err(Error::dim(format!(
                "chain of length {} for {} edges",
                q.0.len(),
                self.edge_count()
            )));
        }
        if self.boundary_of(q)? != p.0 {
            return Err(Error::Momentum("the chain does not lift the momentum".into()));
        }
        let (t1, t2) = self.stranded_trees(qsf)?;
        let cut = qsf.complement(self.edge_count());
        let vertex_sum = |t: &[usize]| -> Rational { t.iter().map(|&v| &p.0[v]).sum() };
        let edge_sum = |t: &[usize]| -> Rational {
            let mut total = Rational::zero();
            for i in cut.iter() {
                let e = self.edge(i);
                if t.contains(&e.head) {
                    total += &q.0[i];
                }
                if t.contains(&e.tail) {
                    total -= &q.0[i];
                }
            }
            total
        };
        Ok(QsfMomentum {
            vertex: [vertex_sum(&t1), vertex_sum(&t2)],
            edge: [edge_sum(&t1), edge_sum(&t2)],
            trees: (t1, t2),
        })
    }
}

/// Both evaluations of the momentum flowing between the stranded trees of a
/// quasi-spanning forest.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QsfMomentum {
    pub trees: (Vec<usize>, Vec<usize>),
    /// `Σ_{v∈T_i} p_v` for `i = 1, 2`.
    pub vertex: [Rational; 2],
    /// `Σ_{e∈C, h(e)∈T_i} q_e − Σ_{e∈C, t(e)∈T_i} q_e` for `i = 1, 2`.
    pub edge: [Rational; 2],
}

impl QsfMomentum {
    /// `s_F(p) = m_T1(p)²`.
    pub fn value(&self) -> Rational {
        &self.vertex[0] * &self.vertex[0]
    }

    /// Vertex and edge forms agree for both trees and `m_T1 = −m_T2`.
    pub fn is_consistent(&self) -> bool {
        self.vertex == self.edge && self.vertex[0] == -&self.vertex[1]
    }
}
