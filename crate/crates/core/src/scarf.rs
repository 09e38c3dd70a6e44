//! Scarf complexes, irreducible decomposition of generic ideals and the
//! Cohen-Macaulay dimension criterion.

use crate::bitset::{LabelSet, VertexSet};
use crate::complex::{maximal_sets, SearchLimits};
use crate::error::{Error, Result};
use crate::ideal::{v_complex, Monomial, MonomialIdeal};
use std::fmt;

/// Simplicial complex on generator labels whose faces have an lcm attained
/// by no other label subset.
///
/// Labels `0..num_generators` are the generators of the ideal in canonical
/// order; in the extended complex they are followed by `x_1^D, …, x_n^D`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScarfComplex {
    n: usize,
    labels: Vec<Monomial>,
    num_generators: usize,
    artinian_power: Option<u32>,
    /// Sorted by size, then lexicographically.
    faces: Vec<LabelSet>,
    lcms: Vec<Monomial>,
}

impl ScarfComplex {
    /// Assembles a complex from precomputed faces, sorting them canonically.
    pub(crate) fn from_parts(
        n: usize,
        labels: Vec<Monomial>,
        num_generators: usize,
        artinian_power: Option<u32>,
        faces: Vec<(LabelSet, Monomial)>,
    ) -> Self {
        let mut faces = faces;
        faces.sort_by(|a, b| a.0.len().cmp(&b.0.len()).then(a.0.cmp(&b.0)));
        let (faces, lcms) = faces.into_iter().unzip();
        Self { n, labels, num_generators, artinian_power, faces, lcms }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn labels(&self) -> &[Monomial] {
        &self.labels
    }

    pub fn num_generators(&self) -> usize {
        self.num_generators
    }

    /// `D` for an extended complex.
    pub fn artinian_power(&self) -> Option<u32> {
        self.artinian_power
    }

    pub fn faces(&self) -> &[LabelSet] {
        &self.faces
    }

    pub fn lcms(&self) -> &[Monomial] {
        &self.lcms
    }

    fn position(&self, face: LabelSet) -> Option<usize> {
        self.faces.binary_search_by(|f| f.len().cmp(&face.len()).then(f.cmp(&face))).ok()
    }

    pub fn face_lcm(&self, face: LabelSet) -> Option<&Monomial> {
        self.position(face).map(|i| &self.lcms[i])
    }

    pub fn contains(&self, face: LabelSet) -> bool {
        self.position(face).is_some()
    }

    pub fn dimension(&self) -> isize {
        self.faces.iter().map(|f| f.len()).max().unwrap_or(0) as isize - 1
    }

    /// Inclusion-maximal faces, sorted lexicographically.
    pub fn facets(&self) -> Vec<LabelSet> {
        let mut out: Vec<LabelSet> = self
            .faces
            .iter()
            .copied()
            .filter(|f| (0..self.labels.len()).all(|l| f.contains(l) || !self.contains(f.with(l))))
            .collect();
        out.sort();
        out
    }

    pub fn generator_labels(&self) -> LabelSet {
        (0..self.num_generators).collect()
    }

    pub fn artinian_labels(&self) -> LabelSet {
        (self.num_generators..self.labels.len()).collect()
    }

    /// Faces made of generator labels only.
    pub fn generator_restriction(&self) -> Vec<LabelSet> {
        let gens = self.generator_labels();
        self.faces.iter().copied().filter(|f| f.is_subset(gens)).collect()
    }

    /// Maximal faces made of artinian labels only, as vertex sets on `[n]`.
    /// For generic ideals these are the facets of `V(M)`.
    pub fn artinian_restriction(&self) -> Vec<VertexSet> {
        let art = self.artinian_labels();
        let offset = self.num_generators;
        let sets = self
            .faces
            .iter()
            .filter(|f| f.is_subset(art))
            .map(|f| f.iter().map(|l| l - offset + 1).collect::<VertexSet>())
            .filter(|s| !s.is_empty())
            .collect();
        maximal_sets(sets)
    }

    pub fn label_name(&self, label: usize) -> String {
        self.labels[label].to_string()
    }
}

fn check_generators(m: &MonomialIdeal, limits: &SearchLimits) -> Result<()> {
    if m.len() > limits.max_generators {
        return Err(Error::TooManyGenerators { count: m.len(), limit: limits.max_generators });
    }
    Ok(())
}

/// Whether `face` with lcm `lcm` is attained by no other label subset.
///
/// A competing subset exists iff some label outside `face` divides `lcm`
/// (add it) or some label inside is redundant (drop it); any other
/// competitor `τ` yields one of these two.
fn has_unique_lcm(labels: &[Monomial], face: LabelSet, lcm: &[u32]) -> bool {
    let outside_divides =
        labels.iter().enumerate().any(|(j, m)| !face.contains(j) && m.exponents().iter().zip(lcm).all(|(a, b)| a <= b));
    if outside_divides {
        return false;
    }
    // Dropping `i` keeps the lcm unless `i` alone attains some exponent.
    face.iter().all(|i| {
        lcm.iter().enumerate().any(|(s, &top)| {
            top > 0 && labels[i].exponents()[s] == top && face.iter().all(|j| j == i || labels[j].exponents()[s] < top)
        })
    })
}

/// Grows faces one label at a time; a candidate is tested only when all of
/// its codimension-one subsets are already faces.
fn grow_scarf(n: usize, labels: &[Monomial]) -> Vec<(LabelSet, Monomial)> {
    let mut found: Vec<(LabelSet, Monomial)> = vec![(LabelSet::EMPTY, Monomial::one(n))];
    let mut layer = found.clone();
    let mut scratch = vec![0u32; n];
    while !layer.is_empty() {
        let mut known: Vec<u128> = layer.iter().map(|(f, _)| f.bits()).collect();
        known.sort_unstable();
        let mut next = Vec::new();
        for (face, lcm) in &layer {
            let start = face.max_element().map_or(0, |m| m + 1);
            for l in start..labels.len() {
                let candidate = face.with(l);
                if !candidate.iter().all(|i| known.binary_search(&candidate.without(i).bits()).is_ok()) {
                    continue;
                }
                for ((out, a), b) in scratch.iter_mut().zip(lcm.exponents()).zip(labels[l].exponents()) {
                    *out = (*a).max(*b);
                }
                if has_unique_lcm(labels, candidate, &scratch) {
                    next.push((candidate, Monomial::new(scratch.clone())));
                }
            }
        }
        found.extend(next.iter().cloned());
        layer = next;
    }
    found
}

/// The Scarf complex `Δ_M`.
pub fn scarf_complex(m: &MonomialIdeal, limits: &SearchLimits) -> Result<ScarfComplex> {
    check_generators(m, limits)?;
    let labels = m.generators().to_vec();
    let faces = grow_scarf(m.n(), &labels);
    Ok(ScarfComplex::from_parts(m.n(), labels, m.len(), None, faces))
}

/// `Δ_{M*}` with `D = 1 + max exponent`.
pub fn extended_scarf_complex(m: &MonomialIdeal, limits: &SearchLimits) -> Result<ScarfComplex> {
    extended_scarf_complex_with_power(m, m.max_exponent() + 1, limits)
}

/// `Δ_{M*}` for `M* = M + ⟨x_1^D, …, x_n^D⟩` with an explicit `D`.
pub fn extended_scarf_complex_with_power(m: &MonomialIdeal, power: u32, limits: &SearchLimits) -> Result<ScarfComplex> {
    if m.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    check_generators(m, limits)?;
    if power <= m.max_exponent() {
        return Err(Error::InvalidArtinianPower { power, max_exponent: m.max_exponent() });
    }
    if m.len() + m.n() > LabelSet::CAPACITY {
        return Err(Error::TooManyGenerators { count: m.len() + m.n(), limit: LabelSet::CAPACITY });
    }
    let mut labels = m.generators().to_vec();
    labels.extend((1..=m.n()).map(|v| Monomial::pure_power(m.n(), v, power)));
    let faces = grow_scarf(m.n(), &labels);
    Ok(ScarfComplex::from_parts(m.n(), labels, m.len(), Some(power), faces))
}

/// `⟨x_s^{p_s}⟩`: `exponents[s - 1] = p_s`, zero for absent variables.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IrreducibleComponent {
    exponents: Vec<u32>,
}

impl IrreducibleComponent {
    pub fn new(exponents: Vec<u32>) -> Self {
        Self { exponents }
    }

    /// From 1-based `(variable, exponent)` pairs.
    pub fn from_pairs(n: usize, pairs: &[(usize, u32)]) -> Self {
        let mut exponents = vec![0; n];
        for &(v, e) in pairs {
            exponents[v - 1] = e;
        }
        Self { exponents }
    }

    pub fn n(&self) -> usize {
        self.exponents.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    /// `(variable, exponent)` pairs with 1-based variables.
    pub fn pairs(&self) -> Vec<(usize, u32)> {
        self.exponents.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, &e)| (i + 1, e)).collect()
    }

    /// The associated prime, as a variable set.
    pub fn support(&self) -> VertexSet {
        self.pairs().into_iter().map(|(v, _)| v).collect()
    }

    pub fn generators(&self) -> Vec<Monomial> {
        self.pairs().into_iter().map(|(v, e)| Monomial::pure_power(self.n(), v, e)).collect()
    }

    pub fn to_ideal(&self) -> MonomialIdeal {
        MonomialIdeal::minimalize(self.n(), self.generators()).expect("pure powers are valid generators")
    }

    /// Ideal containment `other ⊆ self`: each `x_s^{q_s}` of `other` has
    /// `s` in the support of `self` with `p_s ≤ q_s`.
    pub fn contains(&self, other: &IrreducibleComponent) -> bool {
        self.exponents.iter().zip(&other.exponents).all(|(&p, &q)| q == 0 || (p > 0 && p <= q))
    }
}

impl fmt::Debug for IrreducibleComponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "⟨")?;
        for (k, g) in self.generators().iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, "⟩")
    }
}

/// Checks that no component contains another.
pub(crate) fn check_irredundant(components: &[IrreducibleComponent]) -> Result<()> {
    for (i, a) in components.iter().enumerate() {
        for (j, b) in components.iter().enumerate() {
            if i != j && a.contains(b) {
                return Err(Error::NonMinimalDecomposition);
            }
        }
    }
    Ok(())
}

/// One component per facet of `Δ_{M*}`, read off the facet lcm.
pub fn irreducible_decomposition(m: &MonomialIdeal, limits: &SearchLimits) -> Result<Vec<IrreducibleComponent>> {
    if m.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if !m.is_generic() {
        return Err(Error::NotGeneric);
    }
    let extended = extended_scarf_complex(m, limits)?;
    let power = extended.artinian_power().expect("extended complex");
    let mut components: Vec<IrreducibleComponent> = extended
        .facets()
        .into_iter()
        .map(|facet| {
            let lcm = extended.face_lcm(facet).expect("facet is a face");
            IrreducibleComponent::new(lcm.exponents().iter().map(|&e| if e < power { e } else { 0 }).collect())
        })
        .collect();
    components.sort();
    components.dedup();
    check_irredundant(&components)?;
    Ok(components)
}

/// Outcome of the dimension criterion `dim Δ_M + dim V(M) = n - 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CmVerdict {
    pub is_cm: bool,
    pub dim_scarf: isize,
    pub dim_v: isize,
    pub n: usize,
}

pub fn cm_test(m: &MonomialIdeal, limits: &SearchLimits) -> Result<CmVerdict> {
    if m.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if !m.is_generic() {
        return Err(Error::NotGeneric);
    }
    let v = v_complex(m)?;
    let scarf = scarf_complex(m, limits)?;
    let dim_scarf = scarf.dimension();
    let dim_v = v.dimension();
    Ok(CmVerdict { is_cm: dim_scarf + dim_v == m.n() as isize - 2, dim_scarf, dim_v, n: m.n() })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_exponents(n, &gens.iter().map(|g| g.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    fn labels(set: &[usize]) -> LabelSet {
        set.iter().copied().collect()
    }

    /// Literal quantifier over all label subsets.
    fn brute_faces(labels: &[Monomial], n: usize) -> Vec<LabelSet> {
        let t = labels.len();
        let lcm_of = |mask: u32| {
            (0..t).filter(|i| mask >> i & 1 == 1).fold(Monomial::one(n), |acc, i| acc.lcm_unchecked(&labels[i]))
        };
        let all: Vec<Monomial> = (0..1u32 << t).map(lcm_of).collect();
        let mut faces: Vec<LabelSet> = (0..1u32 << t)
            .filter(|&s| all.iter().filter(|m| **m == all[s as usize]).count() == 1)
            .map(|s| LabelSet::from_bits(s as u128))
            .collect();
        faces.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
        faces
    }

    fn four_variable_ideal() -> MonomialIdeal {
        ideal(4, &[&[2, 2, 2, 0], &[1, 0, 0, 1], &[0, 2, 0, 2]])
    }

    #[test]
    fn scarf_of_four_variable_ideal() {
        // canonical order: m1 = x1^2x2^2x3^2, m2 = x1x4, m3 = x2^2x4^2
        let s = scarf_complex(&four_variable_ideal(), &SearchLimits::default()).unwrap();
        assert_eq!(s.facets(), vec![labels(&[0, 1]), labels(&[1, 2])]);
        assert_eq!(s.dimension(), 1);
    }

    #[test]
    fn scarf_single_generator() {
        let s = scarf_complex(&ideal(2, &[&[1, 1]]), &SearchLimits::default()).unwrap();
        assert_eq!(s.faces(), &[LabelSet::EMPTY, labels(&[0])]);
    }

    #[test]
    fn five_variable_scarf_has_two_dimensional_face() {
        let m = ideal(5, &[&[3, 3, 3, 0, 0], &[0, 3, 0, 3, 0], &[2, 0, 0, 2, 0], &[0, 0, 2, 0, 2], &[1, 0, 0, 0, 1]]);
        let s = scarf_complex(&m, &SearchLimits::default()).unwrap();
        let index = |e: &[u32]| m.generators().iter().position(|g| g.exponents() == e).unwrap();
        let face = labels(&[index(&[1, 0, 0, 0, 1]), index(&[2, 0, 0, 2, 0]), index(&[0, 3, 0, 3, 0])]);
        assert!(s.contains(face));
        assert_eq!(s.dimension(), 2);
    }

    #[test]
    fn extended_scarf_of_four_variable_ideal() {
        let m = four_variable_ideal();
        let s = extended_scarf_complex(&m, &SearchLimits::default()).unwrap();
        assert_eq!(s.artinian_power(), Some(3));
        // labels: 0 = x1^2x2^2x3^2, 1 = x1x4, 2 = x2^2x4^2, 3..6 = x1^3..x4^3
        let mut expected = vec![
            labels(&[1, 0, 3, 4]),
            labels(&[1, 0, 3, 5]),
            labels(&[1, 0, 4, 5]),
            labels(&[1, 2, 4, 5]),
            labels(&[1, 2, 5, 6]),
        ];
        expected.sort();
        assert_eq!(s.facets(), expected);
        assert_eq!(s.generator_restriction(), scarf_complex(&m, &SearchLimits::default()).unwrap().faces());
    }

    #[test]
    fn extended_scarf_of_principal_ideal() {
        let s = extended_scarf_complex(&ideal(2, &[&[1, 1]]), &SearchLimits::default()).unwrap();
        assert_eq!(s.artinian_power(), Some(2));
        assert_eq!(s.facets(), vec![labels(&[0, 1]), labels(&[0, 2])]);
        assert_eq!(brute_faces(s.labels(), 2), s.faces());
    }

    #[test]
    fn artinian_power_must_exceed_exponents() {
        assert_eq!(
            extended_scarf_complex_with_power(&four_variable_ideal(), 2, &SearchLimits::default()),
            Err(Error::InvalidArtinianPower { power: 2, max_exponent: 2 })
        );
        assert_eq!(extended_scarf_complex(&MonomialIdeal::zero(2), &SearchLimits::default()), Err(Error::ZeroIdeal));
    }

    #[test]
    fn growth_matches_literal_definition() {
        let ideals = [
            four_variable_ideal(),
            ideal(3, &[&[2, 2, 0], &[2, 0, 2], &[1, 0, 1]]),
            ideal(3, &[&[1, 2, 0], &[1, 0, 1]]),
            ideal(3, &[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]]),
            ideal(4, &[&[3, 0, 3, 0], &[2, 0, 0, 2], &[0, 2, 2, 0], &[0, 1, 0, 1]]),
            ideal(2, &[&[2, 0], &[1, 1], &[0, 2]]),
        ];
        for m in &ideals {
            let s = scarf_complex(m, &SearchLimits::default()).unwrap();
            assert_eq!(s.faces(), brute_faces(m.generators(), m.n()), "{m:?}");
            let e = extended_scarf_complex(m, &SearchLimits::default()).unwrap();
            assert_eq!(e.faces(), brute_faces(e.labels(), m.n()), "{m:?}");
        }
    }

    #[test]
    fn too_many_generators() {
        let gens: Vec<Vec<u32>> = (0..5).map(|i| vec![i, 4 - i]).collect();
        let m = MonomialIdeal::from_exponents(2, &gens).unwrap();
        let tight = SearchLimits { max_generators: 4, ..SearchLimits::default() };
        assert_eq!(scarf_complex(&m, &tight), Err(Error::TooManyGenerators { count: 5, limit: 4 }));
    }

    #[test]
    fn decomposition_of_four_variable_ideal() {
        let comps = irreducible_decomposition(&four_variable_ideal(), &SearchLimits::default()).unwrap();
        let mut expected = vec![
            IrreducibleComponent::from_pairs(4, &[(3, 2), (4, 1)]),
            IrreducibleComponent::from_pairs(4, &[(2, 2), (4, 1)]),
            IrreducibleComponent::from_pairs(4, &[(1, 2), (4, 1)]),
            IrreducibleComponent::from_pairs(4, &[(1, 1), (4, 2)]),
            IrreducibleComponent::from_pairs(4, &[(1, 1), (2, 2)]),
        ];
        expected.sort();
        assert_eq!(comps, expected);
    }

    #[test]
    fn decomposition_of_principal_square_free() {
        let comps = irreducible_decomposition(&ideal(2, &[&[1, 1]]), &SearchLimits::default()).unwrap();
        assert_eq!(
            comps,
            vec![IrreducibleComponent::from_pairs(2, &[(2, 1)]), IrreducibleComponent::from_pairs(2, &[(1, 1)])]
        );
    }

    #[test]
    fn decomposition_refuses_non_generic() {
        let m = ideal(3, &[&[1, 2, 0], &[1, 0, 1]]);
        assert_eq!(irreducible_decomposition(&m, &SearchLimits::default()), Err(Error::NotGeneric));
        assert_eq!(cm_test(&m, &SearchLimits::default()), Err(Error::NotGeneric));
    }

    #[test]
    fn component_containment() {
        let a = IrreducibleComponent::from_pairs(3, &[(1, 1), (2, 2)]);
        let b = IrreducibleComponent::from_pairs(3, &[(1, 2)]);
        let c = IrreducibleComponent::from_pairs(3, &[(1, 2), (3, 1)]);
        assert!(a.contains(&b));
        assert!(!b.contains(&a));
        assert!(c.contains(&b));
        assert!(!a.contains(&c));
        assert_eq!(check_irredundant(&[a.clone(), b]), Err(Error::NonMinimalDecomposition));
        assert_eq!(check_irredundant(&[a, c]), Ok(()));
    }

    #[test]
    fn cm_verdicts() {
        let m = ideal(5, &[&[3, 3, 3, 0, 0], &[0, 3, 0, 3, 0], &[2, 0, 0, 2, 0], &[0, 0, 2, 0, 2], &[1, 0, 0, 0, 1]]);
        let v = cm_test(&m, &SearchLimits::default()).unwrap();
        assert_eq!(v, CmVerdict { is_cm: true, dim_scarf: 2, dim_v: 1, n: 5 });

        let two_edges = ideal(4, &[&[3, 0, 3, 0], &[2, 0, 0, 2], &[0, 2, 2, 0], &[0, 1, 0, 1]]);
        assert!(two_edges.is_generic());
        let brute_dim = brute_faces(two_edges.generators(), 4).iter().map(|f| f.len()).max().unwrap() as isize - 1;
        let v = cm_test(&two_edges, &SearchLimits::default()).unwrap();
        assert_eq!(v.dim_scarf, brute_dim);
        assert_eq!(v, CmVerdict { is_cm: false, dim_scarf: 2, dim_v: 1, n: 4 });

        let shifted = ideal(
            6,
            &[
                &[0, 3, 3, 3, 0, 0],
                &[0, 0, 3, 0, 3, 0],
                &[0, 0, 3, 0, 0, 3],
                &[0, 0, 0, 2, 2, 0],
                &[0, 0, 0, 2, 0, 2],
                &[0, 0, 0, 0, 1, 1],
            ],
        );
        assert_eq!(
            cm_test(&shifted, &SearchLimits::default()).unwrap(),
            CmVerdict { is_cm: true, dim_scarf: 2, dim_v: 2, n: 6 }
        );
    }

    #[test]
    fn cm_test_needs_vertex_faces() {
        let m = ideal(3, &[&[2, 0, 0], &[0, 1, 1]]);
        assert_eq!(cm_test(&m, &SearchLimits::default()), Err(Error::VariableGenerator(1)));
    }
}
