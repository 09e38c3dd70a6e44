//! Monomial ideals and the Stanley-Reisner correspondence.

mod monomial;

pub use monomial::{lcm_set, Monomial};

use crate::bitset::VertexSet;
use crate::complex::{check_vertex_count, maximal_sets, SimplicialComplex};
use crate::error::{Error, Result};

/// A monomial ideal held by its minimal generating set.
///
/// Generators are pairwise incomparable under divisibility and listed in
/// decreasing lex order. The zero ideal has no generators.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    n: usize,
    generators: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Drops duplicates and every generator divisible by another one.
    pub fn minimalize(n: usize, generators: Vec<Monomial>) -> Result<Self> {
        for g in &generators {
            if g.n() != n {
                return Err(Error::DimensionMismatch { left: g.n(), right: n });
            }
            if g.is_one() {
                return Err(Error::UnitGenerator);
            }
        }
        let mut gens = generators;
        // Ascending total degree: a divisor always precedes what it divides.
        gens.sort_by(|a, b| a.total_degree().cmp(&b.total_degree()).then_with(|| a.cmp(b)));
        gens.dedup();
        let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
        for g in gens {
            if !kept.iter().any(|k| k.divides_unchecked(&g)) {
                kept.push(g);
            }
        }
        kept.sort_by(|a, b| b.cmp(a));
        Ok(Self { n, generators: kept })
    }

    /// `self + ⟨g⟩` for a `g` that no generator divides: drops the
    /// multiples of `g` and inserts it in canonical position.
    pub(crate) fn add_indivisible(&self, g: Monomial) -> MonomialIdeal {
        debug_assert!(!self.contains(&g));
        let mut gens: Vec<Monomial> = self.generators.iter().filter(|h| !g.divides_unchecked(h)).cloned().collect();
        let at = gens.partition_point(|h| *h > g);
        gens.insert(at, g);
        Self { n: self.n, generators: gens }
    }

    pub fn from_exponents(n: usize, generators: &[Vec<u32>]) -> Result<Self> {
        Self::minimalize(n, generators.iter().cloned().map(Monomial::new).collect())
    }

    pub fn zero(n: usize) -> Self {
        Self { n, generators: Vec::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_square_free(&self) -> bool {
        self.generators.iter().all(Monomial::is_square_free)
    }

    pub fn max_exponent(&self) -> u32 {
        self.generators.iter().map(Monomial::max_exponent).max().unwrap_or(0)
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.generators.iter().any(|g| g.divides_unchecked(m))
    }

    /// `self + other`.
    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch { left: self.n, right: other.n });
        }
        let all = self.generators.iter().chain(&other.generators).cloned().collect();
        Self::minimalize(self.n, all)
    }

    /// Two generators sharing a positive degree in some variable always
    /// have a third generator strictly dividing their lcm.
    pub fn is_generic(&self) -> bool {
        let g = &self.generators;
        for i in 0..g.len() {
            for j in i + 1..g.len() {
                let shares_degree = g[i].exponents().iter().zip(g[j].exponents()).any(|(&a, &b)| a > 0 && a == b);
                if !shares_degree {
                    continue;
                }
                let lcm = g[i].lcm_unchecked(&g[j]);
                let witnessed =
                    g.iter().enumerate().any(|(l, m)| l != i && l != j && m.strictly_divides_unchecked(&lcm));
                if !witnessed {
                    return false;
                }
            }
        }
        true
    }

    pub fn radical(&self) -> MonomialIdeal {
        Self::minimalize(self.n, self.generators.iter().map(Monomial::radical).collect())
            .expect("radical of valid generators")
    }

    /// Pairs each generator of `self` with the generator of the square-free
    /// `base` sharing its support: `matching[k]` indexes into
    /// `base.generators()`. `None` when `self` is not a deformation of `base`.
    pub fn deformation_matching(&self, base: &MonomialIdeal) -> Result<Option<Vec<usize>>> {
        if self.n != base.n {
            return Err(Error::DimensionMismatch { left: self.n, right: base.n });
        }
        if !base.is_square_free() {
            return Err(Error::NotSquareFree);
        }
        if self.len() != base.len() {
            return Ok(None);
        }
        let mut used = vec![false; base.len()];
        let mut matching = Vec::with_capacity(self.len());
        for g in &self.generators {
            let support = g.support();
            let Some(k) = base.generators.iter().position(|b| b.support() == support) else {
                return Ok(None);
            };
            if used[k] {
                return Ok(None);
            }
            used[k] = true;
            matching.push(k);
        }
        Ok(Some(matching))
    }

    pub fn is_deformation_of(&self, base: &MonomialIdeal) -> Result<bool> {
        Ok(self.deformation_matching(base)?.is_some())
    }
}

impl std::fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "⟨")?;
        for (k, g) in self.generators.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, "⟩")
    }
}

/// `I_Γ`, generated by the products over minimal non-faces.
pub fn stanley_reisner(k: &SimplicialComplex) -> MonomialIdeal {
    let gens = k.minimal_nonfaces().into_iter().map(|s| Monomial::uniform(k.n(), s, 1)).collect();
    MonomialIdeal::minimalize(k.n(), gens).expect("non-faces have at least two vertices")
}

/// The complex whose Stanley-Reisner ideal is the square-free `m`: its
/// facets are the maximal vertex sets containing no generator support.
pub fn complex_of_squarefree(m: &MonomialIdeal) -> Result<SimplicialComplex> {
    check_vertex_count(m.n())?;
    if !m.is_square_free() {
        return Err(Error::NotSquareFree);
    }
    let supports: Vec<VertexSet> = m.generators().iter().map(Monomial::support).collect();
    if let Some(s) = supports.iter().find(|s| s.len() == 1) {
        return Err(Error::VariableGenerator(s.min_element().expect("non-empty")));
    }
    let mut found = Vec::new();
    let mut stack = vec![VertexSet::first(m.n())];
    let mut seen = std::collections::HashSet::new();
    while let Some(set) = stack.pop() {
        if !seen.insert(set) {
            continue;
        }
        match supports.iter().find(|s| s.is_subset(set)) {
            None => found.push(set),
            Some(s) => stack.extend(s.iter().map(|v| set.without(v))),
        }
    }
    SimplicialComplex::from_sets(m.n(), maximal_sets(found))
}

/// `V(M)`: the complex of `rad(M)`.
pub fn v_complex(m: &MonomialIdeal) -> Result<SimplicialComplex> {
    complex_of_squarefree(&m.radical())
}
