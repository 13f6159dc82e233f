use std::cmp::Ordering;
use std::fmt;

use num::One;
use petgraph::unionfind::UnionFind;

use super::MAX_EDGES;
use crate::error::{Error, Result};
use crate::exactalg::{RatMatrix, Rational};

/// An oriented edge `tail → head`; its boundary is `head − tail`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Edge {
    pub tail: usize,
    pub head: usize,
}

impl Edge {
    pub fn new(tail: usize, head: usize) -> Self {
        Self { tail, head }
    }

    pub fn is_loop(&self) -> bool {
        self.tail == self.head
    }

    pub fn reversed(&self) -> Self {
        Self {
            tail: self.head,
            head: self.tail,
        }
    }
}

/// Finite multigraph with oriented edges. Loops and parallel edges are
/// allowed. Edge `i` carries the variable `A{i+1}`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Multigraph {
    vertex_names: Vec<String>,
    edge_names: Vec<String>,
    edges: Vec<Edge>,
}

impl Multigraph {
    /// Graph with default names `v1, v2, …` and `e1, e2, …`.
    pub fn new(vertex_count: usize, edges: Vec<Edge>) -> Result<Self> {
        let vertex_names = (1..=vertex_count).map(|i| format!("v{i}")).collect();
        let edge_names = (1..=edges.len()).map(|i| format!("e{i}")).collect();
        Self::with_names(vertex_names, edge_names, edges)
    }

    /// Shorthand for `(tail, head)` pairs; panics on invalid input.
    pub fn from_pairs(vertex_count: usize, pairs: &[(usize, usize)]) -> Self {
        Self::new(
            vertex_count,
            pairs.iter().map(|&(t, h)| Edge::new(t, h)).collect(),
        )
        .expect("invalid graph")
    }

    pub fn with_names(vertex_names: Vec<String>, edge_names: Vec<String>, edges: Vec<Edge>) -> Result<Self> {
        if edges.len() > MAX_EDGES {
            return Err(Error::EdgeCap(edges.len()));
        }
        if edge_names.len() != edges.len() {
            return Err(Error::dim(format!(
                "{} edge names for {} edges",
                edge_names.len(),
                edges.len()
            )));
        }
        let n = vertex_names.len();
        if let Some((i, e)) = edges.iter().enumerate().find(|(_, e)| e.tail >= n || e.head >= n) {
            return Err(Error::arg(format!(
                "edge {} joins {} and {} but there are only {n} vertices",
                i + 1,
                e.tail,
                e.head
            )));
        }
        Ok(Self {
            vertex_names,
            edge_names,
            edges,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_names.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, i: usize) -> Edge {
        self.edges[i]
    }

    pub fn vertex_names(&self) -> &[String] {
        &self.vertex_names
    }

    pub fn edge_names(&self) -> &[String] {
        &self.edge_names
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.vertex_names.iter().position(|v| v == name)
    }

    pub fn edge_index(&self, name: &str) -> Option<usize> {
        self.edge_names.iter().position(|v| v == name)
    }

    /// Same graph with the orientation of every edge in `flip` reversed.
    pub fn with_flipped(&self, flip: EdgeSubset) -> Multigraph {
        let mut g = self.clone();
        for i in flip.iter() {
            g.edges[i] = g.edges[i].reversed();
        }
        g
    }

    pub fn all_edges(&self) -> EdgeSubset {
        EdgeSubset::full(self.edge_count())
    }

    /// Component label of every vertex; labels are the smallest vertex
    /// index of the component.
    pub fn component_labels(&self) -> Vec<usize> {
        self.labels_for(self.all_edges())
    }

    /// Component labels of the spanning subgraph with edges `subset`.
    pub fn labels_for(&self, subset: EdgeSubset) -> Vec<usize> {
        let n = self.vertex_count();
        let mut uf = UnionFind::<usize>::new(n);
        for i in subset.iter() {
            let e = self.edges[i];
            uf.union(e.tail, e.head);
        }
        let mut smallest = vec![usize::MAX; n];
        for v in 0..n {
            let root = uf.find(v);
            smallest[root] = smallest[root].min(v);
        }
        (0..n).map(|v| smallest[uf.find(v)]).collect()
    }

    /// Connected components as sorted vertex lists, ordered by smallest
    /// vertex. Isolated vertices are singleton components.
    pub fn components(&self) -> Vec<Vec<usize>> {
        group_by_label(&self.component_labels())
    }

    pub fn component_count(&self) -> usize {
        count_labels(&self.component_labels())
    }

    /// First Betti number `|E| − |V| + #components`.
    pub fn h1(&self) -> usize {
        self.edge_count() + self.component_count() - self.vertex_count()
    }

    /// Size of every spanning forest, `|V| − #components`.
    pub fn forest_size(&self) -> usize {
        self.vertex_count() - self.component_count()
    }

    /// `|V| × |E|` matrix of `∂`: column `e` is `head(e) − tail(e)`.
    pub fn boundary_matrix(&self) -> RatMatrix {
        let mut m = RatMatrix::zeros(self.vertex_count(), self.edge_count());
        for (j, e) in self.edges.iter().enumerate() {
            if e.is_loop() {
                continue;
            }
            m.set(e.head, j, Rational::one());
            m.set(e.tail, j, -Rational::one());
        }
        m
    }

    /// Whether `subset` contains no cycle (a loop counts as a cycle).
    pub fn is_acyclic(&self, subset: EdgeSubset) -> bool {
        let mut uf = UnionFind::<usize>::new(self.vertex_count());
        subset.iter().all(|i| {
            let e = self.edges[i];
            uf.union(e.tail, e.head)
        })
    }
}

pub(crate) fn group_by_label(labels: &[usize]) -> Vec<Vec<usize>> {
    let mut groups: Vec<Vec<usize>> = Vec::new();
    let mut slot = vec![usize::MAX; labels.len()];
    for (v, &l) in labels.iter().enumerate() {
        if slot[l] == usize::MAX {
            slot[l] = groups.len();
            groups.push(Vec::new());
        }
        groups[slot[l]].push(v);
    }
    groups
}

pub(crate) fn count_labels(labels: &[usize]) -> usize {
    labels.iter().enumerate().filter(|&(v, &l)| v == l).count()
}

/// Set of edge indices below [`MAX_EDGES`], stored as a bit mask.
///
/// Ordered lexicographically by the increasing list of members, so
/// `{1,2} < {1,3} < {2,3}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct EdgeSubset(u64);

impl EdgeSubset {
    pub fn empty() -> Self {
        Self(0)
    }

    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_EDGES);
        if n == 64 {
            Self(u64::MAX)
        } else {
            Self((1u64 << n) - 1)
        }
    }

    pub fn from_bits(bits: u64) -> Self {
        Self(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn singleton(i: usize) -> Self {
        Self(1u64 << i)
    }

    pub fn from_indices(indices: impl IntoIterator<Item = usize>) -> Self {
        let mut s = Self::empty();
        for i in indices {
            s = s.with(i);
        }
        s
    }

    pub fn contains(self, i: usize) -> bool {
        i < 64 && self.0 & (1u64 << i) != 0
    }

    pub fn with(self, i: usize) -> Self {
        assert!(i < MAX_EDGES, "edge index {i} out of range");
        Self(self.0 | (1u64 << i))
    }

    pub fn without(self, i: usize) -> Self {
        Self(self.0 & !(1u64 << i))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: Self) -> Self {
        Self(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        Self(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        Self(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Complement inside the ground set `0..n`.
    pub fn complement(self, n: usize) -> Self {
        Self::full(n).difference(self)
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let i = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            Some(i)
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// All subsets of `self`, including the empty set and `self`.
    pub fn subsets(self) -> impl Iterator<Item = EdgeSubset> {
        let full = self.0;
        let mut cur = Some(0u64);
        std::iter::from_fn(move || {
            let c = cur?;
            cur = if c == full { None } else { Some((c.wrapping_sub(full)) & full) };
            Some(EdgeSubset(c))
        })
    }
}

impl Ord for EdgeSubset {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for EdgeSubset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// `{1,3}` with 1-based edge numbers, matching the `A{i+1}` variables.
impl fmt::Display for EdgeSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.iter().map(|i| (i + 1).to_string()).collect();
        write!(f, "{{{}}}", items.join(","))
    }
}

impl fmt::Debug for EdgeSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rat;

    #[test]
    fn components_examples() {
        let ban4 = Multigraph::from_pairs(2, &[(0, 1); 4]);
        assert_eq!(ban4.components(), vec![vec![0, 1]]);
        let two = Multigraph::from_pairs(4, &[(0, 1), (2, 3)]);
        assert_eq!(two.components(), vec![vec![0, 1], vec![2, 3]]);
        let iso = Multigraph::from_pairs(3, &[(0, 1)]);
        assert_eq!(iso.components(), vec![vec![0, 1], vec![2]]);
    }

    #[test]
    fn boundary_examples() {
        let g = Multigraph::from_pairs(2, &[(0, 1)]);
        assert_eq!(g.boundary_matrix().column(0), vec![rat(-1), rat(1)]);
        let l = Multigraph::from_pairs(1, &[(0, 0)]);
        assert!(l.boundary_matrix().is_zero());
        let ban2 = Multigraph::from_pairs(2, &[(0, 1), (0, 1)]);
        let b = ban2.boundary_matrix();
        assert_eq!(b.column(1), vec![rat(-1), rat(1)]);
        let k = b.kernel();
        assert_eq!(k.rows(), 1);
        assert!(k.row_space_contains(&RatMatrix::from_i64(&[&[1, -1]])).unwrap());
    }

    #[test]
    fn edge_cap() {
        let edges = vec![Edge::new(0, 0); MAX_EDGES + 1];
        assert!(matches!(Multigraph::new(1, edges), Err(Error::EdgeCap(65))));
        assert!(Multigraph::new(1, vec![Edge::new(0, 0); MAX_EDGES]).is_ok());
        assert!(Multigraph::new(1, vec![Edge::new(0, 1)]).is_err());
    }

    #[test]
    fn subset_order_and_iteration() {
        let a = EdgeSubset::from_indices([0, 3]);
        let b = EdgeSubset::from_indices([1, 2]);
        assert!(a < b);
        assert_eq!(a.to_string(), "{1,4}");
        assert_eq!(EdgeSubset::from_indices([0, 2]).subsets().count(), 4);
        assert_eq!(EdgeSubset::empty().subsets().count(), 1);
        assert_eq!(b.complement(4), EdgeSubset::from_indices([0, 3]));
        assert_eq!(EdgeSubset::full(64).len(), 64);
    }
}
