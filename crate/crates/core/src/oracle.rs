//! Slow reference implementations used to cross-check the Scarf route.

use crate::bitset::LabelSet;
use crate::complex::SearchLimits;
use crate::error::{Error, Result};
use crate::ideal::{Monomial, MonomialIdeal};
use crate::scarf::{check_irredundant, irreducible_decomposition, IrreducibleComponent, ScarfComplex};
use std::collections::HashMap;

/// Generator bound for [`brute_scarf`].
pub const BRUTE_SCARF_LIMIT: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DecompositionMethod {
    Scarf,
    Splitting,
}

impl DecompositionMethod {
    pub fn name(self) -> &'static str {
        match self {
            DecompositionMethod::Scarf => "scarf",
            DecompositionMethod::Splitting => "splitting",
        }
    }
}

/// An irreducible decomposition together with the outcome of intersecting
/// it back.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionCertificate {
    pub components: Vec<IrreducibleComponent>,
    pub method: DecompositionMethod,
    pub verified_equal: bool,
}

impl DecompositionCertificate {
    fn new(m: &MonomialIdeal, components: Vec<IrreducibleComponent>, method: DecompositionMethod) -> Result<Self> {
        let verified_equal = ideal_equal(&intersect_components(&components, m.n())?, m)?;
        Ok(Self { components, method, verified_equal })
    }

    /// Certificate for the Scarf-facet decomposition of a generic ideal.
    pub fn from_scarf(m: &MonomialIdeal, limits: &SearchLimits) -> Result<Self> {
        let components = irreducible_decomposition(m, limits)?;
        Self::new(m, components, DecompositionMethod::Scarf)
    }
}

fn intersect_pair(a: &MonomialIdeal, b: &MonomialIdeal) -> MonomialIdeal {
    let lcms = a.generators().iter().flat_map(|g| b.generators().iter().map(move |h| g.lcm_unchecked(h))).collect();
    MonomialIdeal::minimalize(a.n(), lcms).expect("lcms of valid generators are valid")
}

/// `⋂ cs` as a minimalized monomial ideal.
pub fn intersect_components(cs: &[IrreducibleComponent], n: usize) -> Result<MonomialIdeal> {
    let (first, rest) = cs.split_first().ok_or(Error::EmptyList)?;
    for c in cs {
        if c.n() != n {
            return Err(Error::DimensionMismatch { left: c.n(), right: n });
        }
    }
    Ok(rest.iter().fold(first.to_ideal(), |acc, c| intersect_pair(&acc, &c.to_ideal())))
}

/// Drops duplicates and every component containing another one.
fn prune(mut cs: Vec<IrreducibleComponent>) -> Vec<IrreducibleComponent> {
    cs.sort();
    cs.dedup();
    let kept: Vec<IrreducibleComponent> =
        cs.iter().filter(|a| !cs.iter().any(|b| b != *a && a.contains(b))).cloned().collect();
    kept
}

struct Splitter {
    memo: HashMap<MonomialIdeal, Vec<IrreducibleComponent>>,
}

impl Splitter {
    fn decompose(&mut self, m: &MonomialIdeal) -> Vec<IrreducibleComponent> {
        if let Some(hit) = self.memo.get(m) {
            return hit.clone();
        }
        let pivot = m.generators().iter().find(|g| g.support().len() >= 2);
        let result = match pivot {
            None => {
                let mut exps = vec![0; m.n()];
                for g in m.generators() {
                    let v = g.support().min_element().expect("non-unit generator");
                    exps[v - 1] = g.degree(v);
                }
                vec![IrreducibleComponent::new(exps)]
            }
            Some(g) => {
                let top = g.support().max_element().expect("non-empty support");
                let u = Monomial::pure_power(m.n(), top, g.degree(top));
                let mut rest = g.exponents().to_vec();
                rest[top - 1] = 0;
                let v = Monomial::new(rest);
                let mut parts = Vec::new();
                // Neither factor is divisible by a generator, as that
                // generator would divide the pivot.
                for piece in [u, v] {
                    parts.extend(self.decompose(&m.add_indivisible(piece)));
                }
                prune(parts)
            }
        };
        self.memo.insert(m.clone(), result.clone());
        result
    }
}

/// Irreducible decomposition by repeated splitting `M = (M + ⟨u⟩) ∩ (M + ⟨v⟩)`
/// of a generator `u·v` with coprime non-unit factors.
pub fn brute_irreducible_decomposition(m: &MonomialIdeal) -> Result<DecompositionCertificate> {
    if m.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let components = Splitter { memo: HashMap::new() }.decompose(m);
    check_irredundant(&components)?;
    DecompositionCertificate::new(m, components, DecompositionMethod::Splitting)
}

/// Some associated prime strictly contains another.
pub fn has_embedded_primes(m: &MonomialIdeal) -> Result<bool> {
    let cert = brute_irreducible_decomposition(m)?;
    let supports: Vec<_> = cert.components.iter().map(IrreducibleComponent::support).collect();
    Ok(supports.iter().any(|a| supports.iter().any(|b| b.is_proper_subset(*a))))
}

/// Scarf complex by bucketing all `2^t` label subsets by lcm.
pub fn brute_scarf(m: &MonomialIdeal) -> Result<ScarfComplex> {
    let t = m.len();
    if t > BRUTE_SCARF_LIMIT {
        return Err(Error::TooManyGenerators { count: t, limit: BRUTE_SCARF_LIMIT });
    }
    let gens = m.generators();
    let mut lcms: Vec<Monomial> = Vec::with_capacity(1 << t);
    lcms.push(Monomial::one(m.n()));
    // lcm(S) = lcm(S without its top label, top label)
    for mask in 1usize..1 << t {
        let top = usize::BITS as usize - 1 - mask.leading_zeros() as usize;
        lcms.push(lcms[mask & !(1 << top)].lcm_unchecked(&gens[top]));
    }
    let mut buckets: HashMap<&Monomial, usize> = HashMap::new();
    for l in &lcms {
        *buckets.entry(l).or_default() += 1;
    }
    let faces = (0..1usize << t)
        .filter(|&mask| buckets[&lcms[mask]] == 1)
        .map(|mask| (LabelSet::from_bits(mask as u128), lcms[mask].clone()))
        .collect();
    Ok(ScarfComplex::from_parts(m.n(), gens.to_vec(), t, None, faces))
}

pub fn ideal_equal(a: &MonomialIdeal, b: &MonomialIdeal) -> Result<bool> {
    if a.n() != b.n() {
        return Err(Error::DimensionMismatch { left: a.n(), right: b.n() });
    }
    Ok(a == b)
}
