//! Exhaustive and randomized corpora shared by the integration tests.
#![allow(dead_code)]

use gcm_core::bitset::VertexSet;
use gcm_core::complex::{is_matroid, is_shifted, is_tree_complex, SearchLimits, SimplicialComplex};
use gcm_core::ideal::{Monomial, MonomialIdeal};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Bounds wide enough for every complex on at most six vertices.
pub fn wide_limits() -> SearchLimits {
    SearchLimits { max_facets: 64, max_generators: 64 }
}

pub fn complex<F: AsRef<[usize]>>(n: usize, facets: &[F]) -> SimplicialComplex {
    SimplicialComplex::from_facets(n, facets).unwrap()
}

pub fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
    MonomialIdeal::from_exponents(n, &gens.iter().map(|g| g.to_vec()).collect::<Vec<_>>()).unwrap()
}

pub fn vs(v: &[usize]) -> VertexSet {
    v.iter().copied().collect()
}

/// Non-empty subsets of `[n]` with larger sets first, so no set precedes
/// one of its supersets.
fn nonempty_subsets_desc(n: usize) -> Vec<VertexSet> {
    let mut all: Vec<VertexSet> = VertexSet::first(n).subsets().filter(|s| !s.is_empty()).collect();
    all.sort_by(|a, b| b.len().cmp(&a.len()).then(a.cmp(b)));
    all
}

/// Calls `visit` with every antichain (as index lists into `items`) of the
/// order whose strict down-sets are `below[i]`, a bitmask over indices.
/// Items must be listed so that nothing precedes an element above it.
fn for_each_antichain(below: &[u64], visit: &mut dyn FnMut(&[usize], u64)) {
    fn rec(below: &[u64], start: usize, covered: u64, chosen: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize], u64)) {
        visit(chosen, covered);
        for p in start..below.len() {
            if covered >> p & 1 == 1 {
                continue;
            }
            chosen.push(p);
            rec(below, p + 1, covered | below[p] | 1 << p, chosen, visit);
            chosen.pop();
        }
    }
    rec(below, 0, 0, &mut Vec::new(), visit);
}

/// Every simplicial complex on exactly the vertex set `[n]`, `n ≤ 6`.
pub fn for_each_complex(n: usize, mut visit: impl FnMut(&SimplicialComplex)) {
    assert!((1..=6).contains(&n));
    let items = nonempty_subsets_desc(n);
    let below: Vec<u64> = items
        .iter()
        .map(|s| {
            items.iter().enumerate().filter(|(_, t)| t.is_proper_subset(*s)).fold(0u64, |acc, (i, _)| acc | 1 << i)
        })
        .collect();
    let singletons = items.iter().enumerate().filter(|(_, s)| s.len() == 1).fold(0u64, |acc, (i, _)| acc | 1 << i);
    for_each_antichain(&below, &mut |chosen, covered| {
        if covered & singletons != singletons {
            return;
        }
        let k = SimplicialComplex::from_sets(n, chosen.iter().map(|&i| items[i])).unwrap();
        visit(&k);
    });
}

/// Every pure complex on `[n]`: each covering family of equal-size sets.
pub fn for_each_pure_complex(n: usize, mut visit: impl FnMut(&SimplicialComplex)) {
    assert!((1..=6).contains(&n));
    for d in 1..=n {
        let layer: Vec<VertexSet> = gcm_core::bitset::k_subsets(n, d).collect();
        for mask in 1u64..1 << layer.len() {
            let facets: Vec<VertexSet> = (0..layer.len()).filter(|i| mask >> i & 1 == 1).map(|i| layer[i]).collect();
            let covered = facets.iter().fold(VertexSet::EMPTY, |a, f| a.union(*f));
            if covered != VertexSet::first(n) {
                continue;
            }
            visit(&SimplicialComplex::from_sets(n, facets).unwrap());
        }
    }
}

/// `σ` arises from a subset of `τ` by lowering labels: with both sorted,
/// `σ_i ≤ τ_{|τ| - |σ| + i}`.
pub fn shift_below(sigma: VertexSet, tau: VertexSet) -> bool {
    if sigma.len() > tau.len() {
        return false;
    }
    let s = sigma.to_vec();
    let t = tau.to_vec();
    let offset = t.len() - s.len();
    s.iter().enumerate().all(|(i, &x)| x <= t[offset + i])
}

/// Every shifted complex on `[n]`, generated as the order ideals of the
/// shift order and independent of `is_shifted`.
pub fn shifted_complexes(n: usize) -> Vec<SimplicialComplex> {
    assert!((1..=6).contains(&n));
    let mut items = nonempty_subsets_desc(n);
    // Within a size, a set shifted below another has a smaller sum.
    items.sort_by_key(|s| (std::cmp::Reverse(s.len()), std::cmp::Reverse(s.iter().sum::<usize>()), *s));
    let below: Vec<u64> = items
        .iter()
        .map(|s| {
            items
                .iter()
                .enumerate()
                .filter(|(_, t)| *t != s && shift_below(**t, *s))
                .fold(0u64, |acc, (i, _)| acc | 1 << i)
        })
        .collect();
    let top_vertex = items.iter().position(|s| *s == VertexSet::singleton(n)).unwrap();
    let mut out = Vec::new();
    for_each_antichain(&below, &mut |chosen, covered| {
        let ideal = covered | chosen.iter().fold(0u64, |a, &i| a | 1 << i);
        if ideal >> top_vertex & 1 == 0 {
            return;
        }
        let faces = (0..items.len()).filter(|i| ideal >> i & 1 == 1).map(|i| items[i]);
        out.push(SimplicialComplex::from_sets(n, faces).unwrap());
    });
    out
}

/// Complexes on at most six vertices on which each construction applies.
pub struct ApplicableCorpus {
    pub matroids: Vec<SimplicialComplex>,
    pub pure_shifted: Vec<SimplicialComplex>,
    pub trees: Vec<SimplicialComplex>,
}

pub fn applicable_corpus(max_n: usize) -> ApplicableCorpus {
    let limits = wide_limits();
    let mut corpus = ApplicableCorpus { matroids: Vec::new(), pure_shifted: Vec::new(), trees: Vec::new() };
    for n in 1..=max_n {
        for_each_pure_complex(n, |k| {
            if k.is_simplex() {
                return;
            }
            if is_matroid(k) {
                corpus.matroids.push(k.clone());
            }
            if is_tree_complex(k, &limits).unwrap().is_some() {
                corpus.trees.push(k.clone());
            }
        });
        for k in shifted_complexes(n) {
            assert!(is_shifted(&k));
            if k.is_pure() && !k.is_simplex() {
                corpus.pure_shifted.push(k);
            }
        }
    }
    corpus
}

/// Generic ideals from random square-free supports (at least two variables
/// each) with random exponents in `1..=4`.
pub fn random_generic_ideals(count: usize, seed: u64) -> Vec<MonomialIdeal> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let n = rng.gen_range(2..=5);
        let t = rng.gen_range(1..=6);
        let gens: Vec<Monomial> = (0..t)
            .map(|_| loop {
                let e: Vec<u32> = (0..n).map(|_| if rng.gen_bool(0.5) { rng.gen_range(1..=4) } else { 0 }).collect();
                if e.iter().filter(|&&x| x > 0).count() >= 2 {
                    break Monomial::new(e);
                }
            })
            .collect();
        let m = MonomialIdeal::minimalize(n, gens).unwrap();
        if m.is_generic() {
            out.push(m);
        }
    }
    out
}
