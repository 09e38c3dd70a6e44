//! Generic Cohen-Macaulay deformations of Stanley-Reisner ideals for
//! matroid, shifted and tree complexes.
//!
//! Each construction partitions the minimal non-faces into blocks, raises
//! every non-face in a block to the block's exponent and checks the result.

use crate::bitset::VertexSet;
use crate::complex::{clique_tree, is_matroid, is_shifted, is_tree_complex, SearchLimits, SimplicialComplex};
use crate::error::{Error, Result};
use crate::ideal::{stanley_reisner, Monomial, MonomialIdeal};
use crate::scarf::cm_test;
use std::fmt;
use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DeformMethod {
    Matroid,
    Shifted,
    Tree,
}

impl DeformMethod {
    pub fn name(self) -> &'static str {
        match self {
            DeformMethod::Matroid => "matroid",
            DeformMethod::Shifted => "shifted",
            DeformMethod::Tree => "tree",
        }
    }
}

impl fmt::Display for DeformMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for DeformMethod {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "matroid" => Ok(DeformMethod::Matroid),
            "shifted" => Ok(DeformMethod::Shifted),
            "tree" => Ok(DeformMethod::Tree),
            other => Err(format!("unknown method {other:?}")),
        }
    }
}

/// One block of the partition of minimal non-faces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionBlock {
    /// `i` for matroids and shifted complexes (from 1), `t` for trees (from 0).
    pub index: usize,
    pub exponent: u32,
    /// Sorted lexicographically, in original vertex labels.
    pub nonfaces: Vec<VertexSet>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DeformationChecks {
    pub is_deformation: bool,
    pub is_generic: bool,
    pub radical_matches: bool,
    pub cm: bool,
    pub dim_scarf: isize,
}

impl DeformationChecks {
    pub fn all_passed(&self) -> bool {
        self.is_deformation && self.is_generic && self.radical_matches && self.cm
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeformationReport {
    pub method: DeformMethod,
    pub n: usize,
    /// Number of vertices in a facet.
    pub d: usize,
    /// `relabeling[v - 1]` is the working label of original vertex `v`.
    pub relabeling: Vec<usize>,
    pub blocks: Vec<PartitionBlock>,
    pub ideal: MonomialIdeal,
    pub checks: DeformationChecks,
}

impl DeformationReport {
    pub fn all_passed(&self) -> bool {
        self.checks.all_passed()
    }

    /// Every pair of overlapping non-faces in one block has a generator
    /// from a block with smaller exponent strictly dividing their lcm.
    pub fn witness_structure_holds(&self) -> bool {
        self.blocks.iter().all(|b| {
            b.nonfaces.iter().enumerate().all(|(i, &s)| {
                b.nonfaces[i + 1..].iter().all(|&u| {
                    if s.intersection(u).is_empty() {
                        return true;
                    }
                    let span = s.union(u);
                    self.blocks
                        .iter()
                        .filter(|c| c.exponent < b.exponent)
                        .any(|c| c.nonfaces.iter().any(|g| g.is_subset(span)))
                })
            })
        })
    }
}

fn assemble(
    k: &SimplicialComplex,
    method: DeformMethod,
    relabeling: Vec<usize>,
    mut blocks: Vec<PartitionBlock>,
    limits: &SearchLimits,
) -> Result<DeformationReport> {
    let n = k.n();
    let base = stanley_reisner(k);
    check_partition(&blocks, &k.minimal_nonfaces())?;
    for b in &mut blocks {
        b.nonfaces.sort();
    }
    let gens: Vec<Monomial> =
        blocks.iter().flat_map(|b| b.nonfaces.iter().map(move |&s| Monomial::uniform(n, s, b.exponent))).collect();
    let count = gens.len();
    let ideal = MonomialIdeal::minimalize(n, gens)?;
    if ideal.len() != count {
        return Err(Error::Internal("deformed generators are not minimal".into()));
    }
    let verdict = cm_test(&ideal, limits);
    let is_generic = ideal.is_generic();
    let (cm, dim_scarf) = match verdict {
        Ok(v) => (v.is_cm, v.dim_scarf),
        Err(Error::NotGeneric) => (false, -1),
        Err(e) => return Err(e),
    };
    let checks = DeformationChecks {
        is_deformation: ideal.is_deformation_of(&base)?,
        is_generic,
        radical_matches: ideal.radical() == base,
        cm,
        dim_scarf,
    };
    Ok(DeformationReport { method, n, d: k.rank(), relabeling, blocks, ideal, checks })
}

/// Blocks are non-empty, pairwise disjoint and cover the minimal non-faces.
fn check_partition(blocks: &[PartitionBlock], nonfaces: &[VertexSet]) -> Result<()> {
    if blocks.iter().any(|b| b.nonfaces.is_empty()) {
        return Err(Error::Internal("empty partition block".into()));
    }
    let mut all: Vec<VertexSet> = blocks.iter().flat_map(|b| b.nonfaces.iter().copied()).collect();
    let total = all.len();
    all.sort();
    all.dedup();
    if all.len() != total {
        return Err(Error::Internal("partition blocks overlap".into()));
    }
    let mut expected = nonfaces.to_vec();
    expected.sort();
    if all != expected {
        return Err(Error::Internal("partition does not cover the minimal non-faces".into()));
    }
    Ok(())
}

fn identity(n: usize) -> Vec<usize> {
    (1..=n).collect()
}

/// Matroid construction: with the lex-least facet moved to `[d]`, block `i`
/// holds the circuits whose largest vertex is `d + i`, raised to power `i`.
pub fn matroid_deformation(k: &SimplicialComplex, limits: &SearchLimits) -> Result<DeformationReport> {
    if !is_matroid(k) {
        return Err(Error::NotMatroid);
    }
    if k.is_simplex() {
        return Err(Error::SimplexInput);
    }
    let (n, d) = (k.n(), k.rank());
    let sigma = k.facets()[0];
    let mut relabeling = vec![0; n];
    for (pos, v) in sigma.iter().chain(VertexSet::first(n).difference(sigma).iter()).enumerate() {
        relabeling[v - 1] = pos + 1;
    }
    let mut inverse = vec![0; n];
    for (v, &w) in relabeling.iter().enumerate() {
        inverse[w - 1] = v + 1;
    }
    let working = k.relabel(&relabeling)?;
    let circuits = working.minimal_nonfaces();
    let blocks = (1..=n - d)
        .map(|i| PartitionBlock {
            index: i,
            exponent: i as u32,
            nonfaces: circuits
                .iter()
                .filter(|c| c.max_element() == Some(d + i))
                .map(|c| c.iter().map(|w| inverse[w - 1]).collect())
                .collect(),
        })
        .collect();
    assemble(k, DeformMethod::Matroid, relabeling, blocks, limits)
}

/// `σ = A ∪ {d - |A| + j}` with every element of `A` above `d - |A| + j`.
fn in_shifted_block(sigma: VertexSet, j: usize, d: usize) -> bool {
    let a = sigma.len() - 1;
    let Some(pivot) = (d + j).checked_sub(a) else {
        return false;
    };
    sigma.contains(pivot) && sigma.without(pivot).iter().all(|v| v > pivot)
}

/// Shifted construction: block `j = min σ + |σ| - 1 - d` with exponent
/// `n - d - j + 1`.
pub fn shifted_deformation(k: &SimplicialComplex, limits: &SearchLimits) -> Result<DeformationReport> {
    if !is_shifted(k) {
        return Err(Error::NotShifted);
    }
    if !k.is_pure() {
        return Err(Error::NotPure);
    }
    if k.is_simplex() {
        return Err(Error::SimplexInput);
    }
    let (n, d) = (k.n(), k.rank());
    let mut blocks: Vec<PartitionBlock> = (1..=n - d)
        .map(|j| PartitionBlock { index: j, exponent: (n - d - j + 1) as u32, nonfaces: Vec::new() })
        .collect();
    for sigma in k.minimal_nonfaces() {
        let j = (sigma.min_element().expect("non-empty") + sigma.len() - 1)
            .checked_sub(d)
            .filter(|j| (1..=n - d).contains(j))
            .ok_or_else(|| Error::Internal(format!("non-face {sigma} outside the block range")))?;
        let members: Vec<usize> = (1..=n - d).filter(|&i| in_shifted_block(sigma, i, d)).collect();
        if members != [j] {
            return Err(Error::Internal(format!("block formula disagrees with membership for {sigma}")));
        }
        blocks[j - 1].nonfaces.push(sigma);
    }
    assemble(k, DeformMethod::Shifted, identity(n), blocks, limits)
}

/// Tree construction: round `t` turns each clique-tree edge between `A∪{p}` and `A∪{q}`
/// into the non-face `{p, q}` with exponent `n - d - t`, then merges the
/// two facets.
pub fn tree_deformation(k: &SimplicialComplex, limits: &SearchLimits) -> Result<DeformationReport> {
    if is_tree_complex(k, limits)?.is_none() {
        return Err(Error::NotTreeComplex);
    }
    if k.is_simplex() {
        return Err(Error::SimplexInput);
    }
    let (n, d) = (k.n(), k.rank());
    let mut delta = k.clone();
    let mut blocks = Vec::with_capacity(n - d);
    for t in 0..n - d {
        let tree = clique_tree(&delta, limits).map_err(|e| match e {
            Error::NotTreeComplex | Error::CliqueTreePropertyViolated(_) => {
                Error::Internal(format!("round {t} complex is not a tree complex"))
            }
            other => other,
        })?;
        let mut nonfaces = Vec::with_capacity(tree.edges.len());
        let mut merged = Vec::with_capacity(tree.edges.len());
        for (f, g) in tree.edge_facets() {
            let pair = f.symmetric_difference(g);
            if pair.len() != 2 {
                return Err(Error::Internal(format!("clique-tree edge {f}–{g} is not a ridge")));
            }
            nonfaces.push(pair);
            merged.push(f.union(g));
        }
        if nonfaces.len() + 1 != delta.facets().len() {
            return Err(Error::Internal(format!("round {t} tree does not span")));
        }
        blocks.push(PartitionBlock { index: t, exponent: (n - d - t) as u32, nonfaces });
        delta = SimplicialComplex::from_sets(n, merged)
            .map_err(|_| Error::Internal(format!("round {t} produced no facets")))?;
    }
    if !delta.is_simplex() {
        return Err(Error::Internal("iteration did not reach the simplex".into()));
    }
    assemble(k, DeformMethod::Tree, identity(n), blocks, limits)
}

/// Runs the first applicable construction: matroid, then pure shifted,
/// then tree.
pub fn auto_deform(k: &SimplicialComplex, limits: &SearchLimits) -> Result<DeformationReport> {
    if is_matroid(k) {
        return matroid_deformation(k, limits);
    }
    if is_shifted(k) && k.is_pure() {
        return shifted_deformation(k, limits);
    }
    if is_tree_complex(k, limits)?.is_some() {
        return tree_deformation(k, limits);
    }
    Err(Error::NoApplicableMethod)
}

/// `auto_deform` when `method` is `None`.
pub fn deform(k: &SimplicialComplex, method: Option<DeformMethod>, limits: &SearchLimits) -> Result<DeformationReport> {
    match method {
        None => auto_deform(k, limits),
        Some(DeformMethod::Matroid) => matroid_deformation(k, limits),
        Some(DeformMethod::Shifted) => shifted_deformation(k, limits),
        Some(DeformMethod::Tree) => tree_deformation(k, limits),
    }
}
