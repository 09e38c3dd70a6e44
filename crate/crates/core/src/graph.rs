//! Simple undirected graphs: chordality and clique complexes.

use crate::bitset::VertexSet;
use crate::complex::{check_vertex_count, SimplicialComplex};
use crate::error::{Error, Result};

/// Simple graph on `[n]`, kept as neighbourhood bit sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adjacency: Vec<VertexSet>,
}

impl Graph {
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        check_vertex_count(n)?;
        let mut adjacency = vec![VertexSet::EMPTY; n];
        for &(u, v) in edges {
            if u == v || u == 0 || v == 0 || u > n || v > n {
                return Err(Error::InvalidEdge((u, v)));
            }
            if adjacency[u - 1].contains(v) {
                return Err(Error::DuplicateEdge((u, v)));
            }
            adjacency[u - 1] = adjacency[u - 1].with(v);
            adjacency[v - 1] = adjacency[v - 1].with(u);
        }
        Ok(Self { n, adjacency })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adjacency[v - 1]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u - 1].contains(v)
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (1..=self.n).flat_map(|u| self.neighbors(u).iter().filter(move |&v| v > u).map(move |v| (u, v))).collect()
    }

    pub fn is_clique(&self, set: VertexSet) -> bool {
        set.iter().all(|v| set.without(v).is_subset(self.neighbors(v)))
    }

    /// Perfect elimination ordering by repeated removal of the smallest
    /// simplicial vertex; `None` when the graph is not chordal.
    pub fn perfect_elimination_order(&self) -> Option<Vec<usize>> {
        let mut remaining = VertexSet::first(self.n);
        let mut order = Vec::with_capacity(self.n);
        while !remaining.is_empty() {
            let v = remaining.iter().find(|&v| self.is_clique(self.neighbors(v).intersection(remaining)))?;
            order.push(v);
            remaining = remaining.without(v);
        }
        Some(order)
    }

    pub fn is_chordal(&self) -> bool {
        self.perfect_elimination_order().is_some()
    }

    /// All maximal cliques (Bron–Kerbosch with pivoting), sorted.
    pub fn maximal_cliques(&self) -> Vec<VertexSet> {
        let mut out = Vec::new();
        self.bron_kerbosch(VertexSet::EMPTY, VertexSet::first(self.n), VertexSet::EMPTY, &mut out);
        out.sort();
        out
    }

    fn bron_kerbosch(&self, r: VertexSet, p: VertexSet, x: VertexSet, out: &mut Vec<VertexSet>) {
        if p.is_empty() {
            if x.is_empty() {
                out.push(r);
            }
            return;
        }
        let pivot = p.union(x).iter().max_by_key(|&u| self.neighbors(u).intersection(p).len()).expect("p is non-empty");
        let (mut p, mut x) = (p, x);
        for v in p.difference(self.neighbors(pivot)).iter() {
            let nv = self.neighbors(v);
            self.bron_kerbosch(r.with(v), p.intersection(nv), x.intersection(nv), out);
            p = p.without(v);
            x = x.with(v);
        }
    }

    /// The clique complex `K(G)`; isolated vertices become 0-dimensional facets.
    pub fn clique_complex(&self) -> SimplicialComplex {
        SimplicialComplex::from_sets(self.n, self.maximal_cliques()).expect("maximal cliques cover every vertex")
    }
}
