//! Simplicial complexes on `[n]`, stored as their facet antichain.

mod clique_tree;
mod predicates;
mod shelling;

pub use clique_tree::{clique_tree, facet_graph, CliqueTree, FacetGraph};
pub use predicates::{is_clique_complex, is_matroid, is_shifted, shifted_pure_criterion};
pub use shelling::{is_shellable, is_tree_complex, SearchLimits, TreeOrder};

use crate::bitset::{k_subsets, VertexSet};
use crate::error::{Error, Result};
use crate::graph::Graph;
use std::collections::HashSet;

/// A simplicial complex on the vertex set `[n]`.
///
/// Every vertex is a face and the facets form an antichain, sorted
/// lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    n: usize,
    facets: Vec<VertexSet>,
}

/// An induced subcomplex re-indexed onto `1..=|W|`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedSubcomplex {
    pub complex: SimplicialComplex,
    /// `labels[k]` is the original vertex carried by new vertex `k + 1`.
    pub labels: Vec<usize>,
}

pub(crate) fn check_vertex_count(n: usize) -> Result<()> {
    if n == 0 || n > VertexSet::CAPACITY {
        return Err(Error::UnsupportedVertexCount(n));
    }
    Ok(())
}

/// Keeps the inclusion-maximal sets, deduplicated and sorted.
pub(crate) fn maximal_sets(mut sets: Vec<VertexSet>) -> Vec<VertexSet> {
    // Larger sets first, so each survivor only needs checking against earlier ones.
    sets.sort_by(|a, b| b.len().cmp(&a.len()).then(a.cmp(b)));
    sets.dedup();
    let mut kept: Vec<VertexSet> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|k| s.is_subset(*k)) {
            kept.push(s);
        }
    }
    kept.sort();
    kept
}

impl SimplicialComplex {
    /// Builds a complex from 1-based vertex lists.
    pub fn from_facets<F: AsRef<[usize]>>(n: usize, facets: &[F]) -> Result<Self> {
        check_vertex_count(n)?;
        let mut sets = Vec::with_capacity(facets.len());
        for facet in facets {
            let facet = facet.as_ref();
            if facet.is_empty() {
                return Err(Error::EmptyFacet);
            }
            let mut set = VertexSet::EMPTY;
            for &v in facet {
                if v == 0 || v > n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
                set = set.with(v);
            }
            sets.push(set);
        }
        Self::from_sets(n, sets)
    }

    pub fn from_sets<I: IntoIterator<Item = VertexSet>>(n: usize, facets: I) -> Result<Self> {
        check_vertex_count(n)?;
        let all = VertexSet::first(n);
        let mut sets = Vec::new();
        for set in facets {
            if set.is_empty() {
                return Err(Error::EmptyFacet);
            }
            if !set.is_subset(all) {
                let vertex = set.difference(all).min_element().unwrap_or(0);
                return Err(Error::VertexOutOfRange { vertex, n });
            }
            sets.push(set);
        }
        if sets.is_empty() {
            return Err(Error::EmptyInput);
        }
        let facets = maximal_sets(sets);
        let covered = facets.iter().fold(VertexSet::EMPTY, |acc, f| acc.union(*f));
        if let Some(v) = all.difference(covered).min_element() {
            return Err(Error::UncoveredVertex(v));
        }
        Ok(Self { n, facets })
    }

    /// The full simplex on `[n]`.
    pub fn simplex(n: usize) -> Result<Self> {
        check_vertex_count(n)?;
        Ok(Self { n, facets: vec![VertexSet::first(n)] })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn facets(&self) -> &[VertexSet] {
        &self.facets
    }

    pub fn facet_lists(&self) -> Vec<Vec<usize>> {
        self.facets.iter().map(|f| f.to_vec()).collect()
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::first(self.n)
    }

    /// `max |F| - 1` over facets.
    pub fn dimension(&self) -> isize {
        self.max_facet_size() as isize - 1
    }

    fn max_facet_size(&self) -> usize {
        self.facets.iter().map(|f| f.len()).max().unwrap_or(0)
    }

    pub fn is_pure(&self) -> bool {
        let d = self.max_facet_size();
        self.facets.iter().all(|f| f.len() == d)
    }

    /// `dimension + 1`, the facet size of a pure complex.
    pub fn rank(&self) -> usize {
        self.max_facet_size()
    }

    pub fn is_simplex(&self) -> bool {
        self.facets.len() == 1 && self.facets[0] == self.vertex_set()
    }

    pub fn is_face(&self, sigma: VertexSet) -> bool {
        self.facets.iter().any(|f| sigma.is_subset(*f))
    }

    /// All faces including the empty face, sorted by size then lexicographically.
    pub fn faces(&self) -> Vec<VertexSet> {
        let mut seen = HashSet::new();
        for f in &self.facets {
            seen.extend(f.subsets());
        }
        let mut faces: Vec<_> = seen.into_iter().collect();
        faces.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
        faces
    }

    /// Inclusion-minimal non-faces, sorted by size then lexicographically.
    ///
    /// A minimal non-face has every proper subset a face, so its size is at
    /// most `dim + 2`; larger candidates are never enumerated.
    pub fn minimal_nonfaces(&self) -> Vec<VertexSet> {
        let mut out = Vec::new();
        let cap = (self.rank() + 1).min(self.n);
        for k in 2..=cap {
            for sigma in k_subsets(self.n, k) {
                if self.is_face(sigma) {
                    continue;
                }
                if sigma.iter().all(|v| self.is_face(sigma.without(v))) {
                    out.push(sigma);
                }
            }
        }
        out.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
        out
    }

    /// `Γ_W = {σ ∈ Γ : σ ⊆ W}`, re-indexed onto `1..=|W|` in increasing order.
    pub fn induced_subcomplex(&self, w: VertexSet) -> Result<InducedSubcomplex> {
        if w.is_empty() {
            return Err(Error::EmptyVertexSet);
        }
        if !w.is_subset(self.vertex_set()) {
            let vertex = w.difference(self.vertex_set()).min_element().unwrap_or(0);
            return Err(Error::VertexOutOfRange { vertex, n: self.n });
        }
        let labels = w.to_vec();
        let restricted: Vec<_> = self
            .facets
            .iter()
            .map(|f| f.intersection(w))
            .filter(|f| !f.is_empty())
            .map(|f| {
                labels.iter().enumerate().filter(|(_, &v)| f.contains(v)).map(|(k, _)| k + 1).collect::<VertexSet>()
            })
            .collect();
        let complex = Self::from_sets(labels.len(), restricted)?;
        Ok(InducedSubcomplex { complex, labels })
    }

    /// `(f_{-1}, f_0, ..., f_dim)` by direct enumeration of faces.
    pub fn f_vector(&self) -> Vec<u64> {
        let mut f = vec![0u64; self.rank() + 1];
        for face in self.faces() {
            f[face.len()] += 1;
        }
        f
    }

    /// Closed-form f-vector of a tree complex on `[n]` with facets of `d`
    /// vertices: `f_{i-1} = (n-d+1)·C(d,i) - (n-d)·C(d-1,i)` for `1 ≤ i ≤ d`.
    pub fn tree_f_vector_formula(n: usize, d: usize) -> Vec<u64> {
        let binom = |a: usize, b: usize| -> i128 {
            if b > a {
                return 0;
            }
            (0..b).fold(1i128, |acc, k| acc * (a - k) as i128 / (k + 1) as i128)
        };
        let (n, d) = (n as i128, d as usize);
        let mut f = vec![1u64];
        for i in 1..=d {
            let v = (n - d as i128 + 1) * binom(d, i) - (n - d as i128) * binom(d - 1, i);
            f.push(v as u64);
        }
        f
    }

    /// Graph of vertices and the edges contained in some facet.
    pub fn one_skeleton(&self) -> Graph {
        let mut edges = HashSet::new();
        for f in &self.facets {
            let vs = f.to_vec();
            for (i, &u) in vs.iter().enumerate() {
                for &v in &vs[i + 1..] {
                    edges.insert((u, v));
                }
            }
        }
        let mut edges: Vec<_> = edges.into_iter().collect();
        edges.sort();
        Graph::from_edges(self.n, &edges).expect("skeleton edges are valid")
    }

    /// Applies the vertex map `v -> perm[v - 1]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.n {
            return Err(Error::DimensionMismatch { left: perm.len(), right: self.n });
        }
        let facets =
            self.facets.iter().map(|f| f.iter().map(|v| perm[v - 1]).collect::<VertexSet>()).collect::<Vec<_>>();
        Self::from_sets(self.n, facets)
    }
}
