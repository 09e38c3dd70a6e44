use super::{is_tree_complex, SearchLimits, SimplicialComplex};
use crate::bitset::VertexSet;
use crate::error::{Error, Result};

/// Facets of a pure complex, adjacent when they share all but one vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FacetGraph {
    pub nodes: Vec<VertexSet>,
    /// Index pairs `(i, j)` with `i < j` into `nodes`.
    pub edges: Vec<(usize, usize)>,
}

/// Spanning tree of the facet graph with the induced-subtree property.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueTree {
    /// Facets in the tree-complex shelling order.
    pub nodes: Vec<VertexSet>,
    /// `(i, j)` with `i < j`: facet `j` hangs off the earlier facet `i`.
    pub edges: Vec<(usize, usize)>,
}

impl CliqueTree {
    pub fn edge_facets(&self) -> impl Iterator<Item = (VertexSet, VertexSet)> + '_ {
        self.edges.iter().map(|&(i, j)| (self.nodes[i], self.nodes[j]))
    }

    /// For each vertex, the nodes containing it span a connected subtree.
    ///
    /// The edges form a forest, so a node set is connected exactly when it
    /// carries one edge fewer than it has nodes.
    pub fn check_induced_subtrees(&self) -> Result<()> {
        let support = self.nodes.iter().fold(VertexSet::EMPTY, |acc, f| acc.union(*f));
        for v in support.iter() {
            let holders = self.nodes.iter().filter(|f| f.contains(v)).count();
            let inner =
                self.edges.iter().filter(|&&(i, j)| self.nodes[i].contains(v) && self.nodes[j].contains(v)).count();
            if inner + 1 != holders {
                return Err(Error::CliqueTreePropertyViolated(v));
            }
        }
        Ok(())
    }
}

pub fn facet_graph(k: &SimplicialComplex) -> Result<FacetGraph> {
    if !k.is_pure() {
        return Err(Error::NotPure);
    }
    let nodes = k.facets().to_vec();
    let ridge = k.rank() - 1;
    let mut edges = Vec::new();
    for i in 0..nodes.len() {
        for j in i + 1..nodes.len() {
            if nodes[i].intersection(nodes[j]).len() == ridge {
                edges.push((i, j));
            }
        }
    }
    Ok(FacetGraph { nodes, edges })
}

/// Clique tree over the canonical tree-complex shelling: each facet after
/// the first joins the earliest prior facet it shares `|F| - 1` vertices with.
pub fn clique_tree(k: &SimplicialComplex, limits: &SearchLimits) -> Result<CliqueTree> {
    let order = is_tree_complex(k, limits)?.ok_or(Error::NotTreeComplex)?.order;
    let ridge = k.rank() - 1;
    let mut edges = Vec::with_capacity(order.len().saturating_sub(1));
    for (j, facet) in order.iter().enumerate().skip(1) {
        let i = order[..j].iter().position(|g| g.intersection(*facet).len() == ridge).ok_or(Error::NotTreeComplex)?;
        edges.push((i, j));
    }
    let tree = CliqueTree { nodes: order, edges };
    tree.check_induced_subtrees()?;
    Ok(tree)
}
