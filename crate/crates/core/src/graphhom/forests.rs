use std::collections::BTreeSet;

use itertools::Itertools;
use petgraph::unionfind::UnionFind;

use super::graph::{count_labels, EdgeSubset, Multigraph};

/// Up to this many edges spanning forests are found by filtering all
/// subsets of the right size; above it by include/exclude recursion.
pub const SUBSET_FILTER_MAX_EDGES: usize = 20;

impl Multigraph {
    /// Whether `subset` is a spanning forest: acyclic, and a spanning tree on
    /// every connected component.
    pub fn is_spanning_forest(&self, subset: EdgeSubset) -> bool {
        subset.len() == self.forest_size() && self.is_acyclic(subset)
    }

    /// Whether `subset` is a spanning forest with one edge removed.
    pub fn is_quasi_spanning_forest(&self, subset: EdgeSubset) -> bool {
        self.forest_size() > 0 && subset.len() + 1 == self.forest_size() && self.is_acyclic(subset)
    }

    /// All spanning forests in lexicographic order. A graph whose only edges
    /// are loops has the single forest `∅`.
    pub fn spanning_forests(&self) -> Vec<EdgeSubset> {
        if self.edge_count() <= SUBSET_FILTER_MAX_EDGES {
            self.forests_by_filter()
        } else {
            self.forests_by_recursion()
        }
    }

    /// The lexicographically first spanning forest, found greedily.
    pub fn first_spanning_forest(&self) -> EdgeSubset {
        let mut uf = UnionFind::<usize>::new(self.vertex_count());
        EdgeSubset::from_indices((0..self.edge_count()).filter(|&i| {
            let e = self.edge(i);
            uf.union(e.tail, e.head)
        }))
    }

    pub(crate) fn forests_by_filter(&self) -> Vec<EdgeSubset> {
        (0..self.edge_count())
            .combinations(self.forest_size())
            .map(EdgeSubset::from_indices)
            .filter(|&s| self.is_acyclic(s))
            .collect()
    }

    /// Include/exclude recursion over the edges in index order (contract an
    /// edge joining two components, or delete it). Including first yields
    /// the same lexicographic order as the filter.
    pub(crate) fn forests_by_recursion(&self) -> Vec<EdgeSubset> {
        let mut out = Vec::new();
        let labels: Vec<usize> = (0..self.vertex_count()).collect();
        self.recurse(0, EdgeSubset::empty(), labels, self.forest_size(), &mut out);
        out
    }

    fn recurse(&self, next: usize, chosen: EdgeSubset, labels: Vec<usize>, needed: usize, out: &mut Vec<EdgeSubset>) {
        if needed == 0 {
            out.push(chosen);
            return;
        }
        if self.edge_count() - next < needed {
            return;
        }
        let e = self.edge(next);
        let (a, b) = (labels[e.tail], labels[e.head]);
        if a != b {
            let merged: Vec<usize> = labels.iter().map(|&l| if l == b { a } else { l }).collect();
            self.recurse(next + 1, chosen.with(next), merged, needed - 1, out);
        }
        self.recurse(next + 1, chosen, labels, needed, out);
    }

    /// Quasi-spanning forests (spanning forests minus one edge), deduplicated
    /// and in lexicographic order. Empty when spanning forests have no edges.
    pub fn quasi_spanning_forests(&self) -> Vec<EdgeSubset> {
        let mut set = BTreeSet::new();
        for f in self.spanning_forests() {
            for e in f.iter() {
                set.insert(f.without(e));
            }
        }
        set.into_iter().collect()
    }

    /// Complements of the quasi-spanning forests, in the same order.
    pub fn cut_sets(&self) -> Vec<EdgeSubset> {
        let n = self.edge_count();
        self.quasi_spanning_forests()
            .into_iter()
            .map(|f| f.complement(n))
            .collect()
    }

    /// Number of components of the spanning subgraph on `subset`.
    pub fn component_count_of(&self, subset: EdgeSubset) -> usize {
        count_labels(&self.labels_for(subset))
    }
}
