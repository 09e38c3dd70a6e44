use super::SimplicialComplex;
use crate::bitset::VertexSet;

/// Circuit elimination: for distinct minimal non-faces `α`, `β` and any
/// `i ∈ α ∩ β`, some minimal non-face lies inside `(α ∪ β) ∖ {i}`.
pub fn is_matroid(k: &SimplicialComplex) -> bool {
    let circuits = k.minimal_nonfaces();
    for (a_idx, &alpha) in circuits.iter().enumerate() {
        for &beta in &circuits[a_idx + 1..] {
            let union = alpha.union(beta);
            for i in alpha.intersection(beta).iter() {
                let rest = union.without(i);
                if !circuits.iter().any(|gamma| gamma.is_subset(rest)) {
                    return false;
                }
            }
        }
    }
    true
}

/// Exchange condition over every face: `(σ ∖ {j}) ∪ {i}` is a face for all
/// `j ∈ σ` and `i < j`.
pub fn is_shifted(k: &SimplicialComplex) -> bool {
    for sigma in k.faces() {
        for j in sigma.iter() {
            let base = sigma.without(j);
            for i in 1..j {
                if !sigma.contains(i) && !k.is_face(base.with(i)) {
                    return false;
                }
            }
        }
    }
    true
}

/// For every face `σ` with `|σ| = t`, `σ ∪ [d - t]` is a face (`d = dim + 1`).
pub fn shifted_pure_criterion(k: &SimplicialComplex) -> bool {
    let d = k.rank();
    k.faces().into_iter().all(|sigma| {
        let prefix = VertexSet::first(d - sigma.len());
        k.is_face(sigma.union(prefix))
    })
}

/// Every minimal non-face has exactly two vertices.
pub fn is_clique_complex(k: &SimplicialComplex) -> bool {
    k.minimal_nonfaces().iter().all(|s| s.len() == 2)
}
