//! Backtracking searches for shellings and new-vertex (tree) shellings.
//!
//! Whether a facet may follow a prefix depends only on the set of facets in
//! the prefix, so failed prefix sets are memoized. Candidates are tried in
//! canonical facet order, which makes the first witness found the
//! lexicographically least one.

use super::SimplicialComplex;
use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use std::collections::HashSet;

/// Bounds on the exhaustive searches.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchLimits {
    /// Largest facet count accepted by the shelling searches.
    pub max_facets: usize,
    /// Largest generator count accepted by Scarf complex construction.
    pub max_generators: usize,
}

impl Default for SearchLimits {
    fn default() -> Self {
        Self { max_facets: 12, max_generators: 20 }
    }
}

/// A tree-complex shelling: `introduced[k]` is the vertex that
/// `order[k + 1]` adds to the union of the facets before it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeOrder {
    pub order: Vec<VertexSet>,
    pub introduced: Vec<usize>,
}

/// Whether `facet` meets the complex generated by `prior` in a pure
/// codimension-one subcomplex of its boundary.
pub(crate) fn is_shelling_step(prior: &[VertexSet], facet: VertexSet) -> bool {
    if prior.is_empty() {
        return true;
    }
    let ridge = facet.len() - 1;
    let ridges: Vec<VertexSet> = prior.iter().map(|g| g.intersection(facet)).filter(|c| c.len() == ridge).collect();
    !ridges.is_empty()
        && prior.iter().all(|g| {
            let meet = g.intersection(facet);
            ridges.iter().any(|r| meet.is_subset(*r))
        })
}

struct Search<'a> {
    facets: &'a [VertexSet],
    new_vertex: bool,
    failed: HashSet<u64>,
    order: Vec<usize>,
}

impl Search<'_> {
    fn run(&mut self, used: u64, covered: VertexSet) -> bool {
        if self.order.len() == self.facets.len() {
            return true;
        }
        if self.failed.contains(&used) {
            return false;
        }
        let prior: Vec<VertexSet> = self.order.iter().map(|&i| self.facets[i]).collect();
        for (i, &facet) in self.facets.iter().enumerate() {
            if used >> i & 1 == 1 {
                continue;
            }
            if self.new_vertex && !prior.is_empty() && facet.is_subset(covered) {
                continue;
            }
            if !is_shelling_step(&prior, facet) {
                continue;
            }
            self.order.push(i);
            if self.run(used | 1 << i, covered.union(facet)) {
                return true;
            }
            self.order.pop();
        }
        self.failed.insert(used);
        false
    }
}

fn search(facets: &[VertexSet], new_vertex: bool) -> Option<Vec<VertexSet>> {
    let mut s = Search { facets, new_vertex, failed: HashSet::new(), order: Vec::new() };
    s.run(0, VertexSet::EMPTY).then(|| s.order.iter().map(|&i| facets[i]).collect())
}

/// Lexicographically least shelling order of a pure complex, if any.
pub fn is_shellable(k: &SimplicialComplex, limits: &SearchLimits) -> Result<Option<Vec<VertexSet>>> {
    if !k.is_pure() {
        return Err(Error::NotPure);
    }
    let count = k.facets().len();
    if count > limits.max_facets.min(64) {
        return Err(Error::TooLarge { count, limit: limits.max_facets });
    }
    Ok(search(k.facets(), false))
}

/// Lexicographically least shelling in which every facet after the first
/// introduces a vertex not seen before. `None` when there is none, including
/// for non-pure complexes.
pub fn is_tree_complex(k: &SimplicialComplex, limits: &SearchLimits) -> Result<Option<TreeOrder>> {
    if !k.is_pure() {
        return Ok(None);
    }
    let count = k.facets().len();
    // The first facet brings d vertices and each later one at least one more.
    if count > k.n() - k.rank() + 1 {
        return Ok(None);
    }
    if count > limits.max_facets.min(64) {
        return Err(Error::TooLarge { count, limit: limits.max_facets });
    }
    Ok(search(k.facets(), true).map(|order| {
        let mut covered = order[0];
        let introduced = order[1..]
            .iter()
            .map(|f| {
                let fresh = f.difference(covered);
                debug_assert_eq!(fresh.len(), 1);
                covered = covered.union(*f);
                fresh.min_element().expect("tree shelling step adds a vertex")
            })
            .collect();
        TreeOrder { order, introduced }
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complex<F: AsRef<[usize]>>(n: usize, facets: &[F]) -> SimplicialComplex {
        SimplicialComplex::from_facets(n, facets).unwrap()
    }

    fn vs(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    /// Shelling test straight from the definition: the intersection of the
    /// new facet's face set with the earlier faces is generated by faces of
    /// size |F| - 1.
    fn literal_shelling_check(order: &[VertexSet]) -> bool {
        for (k, &f) in order.iter().enumerate().skip(1) {
            let earlier: Vec<VertexSet> = order[..k].to_vec();
            let common: Vec<VertexSet> = f.subsets().filter(|s| earlier.iter().any(|g| s.is_subset(*g))).collect();
            let maximal: Vec<VertexSet> =
                common.iter().copied().filter(|s| !common.iter().any(|t| s.is_proper_subset(*t))).collect();
            if maximal.iter().any(|m| m.len() + 1 != f.len()) {
                return false;
            }
        }
        true
    }

    #[test]
    fn connected_graph_is_shellable() {
        let k = complex(5, &[[1, 2], [1, 3], [2, 3], [2, 5], [3, 4], [4, 5]]);
        let order = is_shellable(&k, &SearchLimits::default()).unwrap().unwrap();
        assert!(literal_shelling_check(&order));
        assert_eq!(order.len(), 6);
    }

    #[test]
    fn disjoint_edges_are_not_shellable() {
        let k = complex(4, &[[1, 2], [3, 4]]);
        assert_eq!(is_shellable(&k, &SearchLimits::default()).unwrap(), None);
    }

    #[test]
    fn shifted_example_is_shellable() {
        let k = complex(6, &[[1, 2, 3], [1, 2, 4], [1, 3, 4], [1, 2, 5], [1, 2, 6]]);
        let order = is_shellable(&k, &SearchLimits::default()).unwrap().unwrap();
        assert!(literal_shelling_check(&order));
    }

    #[test]
    fn shelling_errors() {
        let k = complex(3, &[vec![1, 2], vec![3]]);
        assert_eq!(is_shellable(&k, &SearchLimits::default()), Err(Error::NotPure));
        let big = complex(6, &[[1, 2], [1, 3], [1, 4], [1, 5], [1, 6], [2, 3], [2, 4]]);
        let tight = SearchLimits { max_facets: 5, ..SearchLimits::default() };
        assert_eq!(is_shellable(&big, &tight), Err(Error::TooLarge { count: 7, limit: 5 }));
    }

    #[test]
    fn shelling_skips_disconnected_candidates() {
        let k = complex(4, &[[1, 4], [2, 3], [3, 4]]);
        let order = is_shellable(&k, &SearchLimits::default()).unwrap().unwrap();
        assert_eq!(order, vec![vs(&[1, 4]), vs(&[3, 4]), vs(&[2, 3])]);
    }

    #[test]
    fn octahedron_boundary_shelling_is_valid() {
        // Boundary of the cross-polytope on pairs {1,2},{3,4},{5,6}.
        let mut facets = Vec::new();
        for a in [1, 2] {
            for b in [3, 4] {
                for c in [5, 6] {
                    facets.push(vec![a, b, c]);
                }
            }
        }
        let k = complex(6, &facets);
        let order = is_shellable(&k, &SearchLimits::default()).unwrap().unwrap();
        assert!(literal_shelling_check(&order));
    }

    #[test]
    fn tree_order_of_tree_example() {
        let k = complex(7, &[[1, 2, 3], [1, 2, 4], [1, 2, 5], [2, 5, 6], [5, 6, 7]]);
        let tree = is_tree_complex(&k, &SearchLimits::default()).unwrap().unwrap();
        assert_eq!(tree.order, vec![vs(&[1, 2, 3]), vs(&[1, 2, 4]), vs(&[1, 2, 5]), vs(&[2, 5, 6]), vs(&[5, 6, 7])]);
        assert_eq!(tree.introduced, vec![4, 5, 6, 7]);
    }

    #[test]
    fn four_cycle_is_not_a_tree_complex() {
        let k = complex(4, &[[1, 2], [2, 3], [3, 4], [1, 4]]);
        assert_eq!(is_tree_complex(&k, &SearchLimits::default()).unwrap(), None);
    }

    #[test]
    fn tree_graphs_are_tree_complexes() {
        // A path, a star and a caterpillar.
        let graphs: [&[[usize; 2]]; 3] = [
            &[[1, 2], [2, 3], [3, 4], [4, 5]],
            &[[1, 2], [1, 3], [1, 4], [1, 5]],
            &[[1, 2], [2, 3], [3, 4], [2, 5], [3, 6]],
        ];
        for edges in graphs {
            let n = edges.iter().flatten().copied().max().unwrap();
            let k = complex(n, edges);
            let tree = is_tree_complex(&k, &SearchLimits::default()).unwrap();
            assert!(tree.is_some(), "{edges:?}");
        }
    }
}
