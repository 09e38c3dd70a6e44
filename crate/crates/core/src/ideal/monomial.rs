use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use std::fmt;

/// `x^a = x_1^{a_1} ⋯ x_n^{a_n}`.
///
/// The derived order compares exponent vectors lexicographically, which is
/// the lex monomial order with `x_1 > x_2 > ⋯`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u32>);

fn check_same(a: &Monomial, b: &Monomial) -> Result<()> {
    if a.n() != b.n() {
        return Err(Error::DimensionMismatch { left: a.n(), right: b.n() });
    }
    Ok(())
}

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Self(exponents)
    }

    pub fn one(n: usize) -> Self {
        Self(vec![0; n])
    }

    /// `∏_{i ∈ support} x_i^power`.
    pub fn uniform(n: usize, support: VertexSet, power: u32) -> Self {
        let mut e = vec![0; n];
        for v in support.iter() {
            e[v - 1] = power;
        }
        Self(e)
    }

    /// `x_var^power` with 1-based `var`.
    pub fn pure_power(n: usize, var: usize, power: u32) -> Self {
        let mut e = vec![0; n];
        e[var - 1] = power;
        Self(e)
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    /// Exponent of the 1-based variable `var`.
    pub fn degree(&self, var: usize) -> u32 {
        self.0[var - 1]
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn is_square_free(&self) -> bool {
        self.0.iter().all(|&e| e <= 1)
    }

    pub fn support(&self) -> VertexSet {
        self.0.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i + 1).collect()
    }

    pub fn max_exponent(&self) -> u32 {
        self.0.iter().copied().max().unwrap_or(0)
    }

    pub fn divides(&self, other: &Monomial) -> Result<bool> {
        check_same(self, other)?;
        Ok(self.divides_unchecked(other))
    }

    pub(crate) fn divides_unchecked(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Every variable present in `self` has strictly larger exponent in `other`.
    pub fn strictly_divides(&self, other: &Monomial) -> Result<bool> {
        check_same(self, other)?;
        Ok(self.strictly_divides_unchecked(other))
    }

    pub(crate) fn strictly_divides_unchecked(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(&a, &b)| a == 0 || a < b)
    }

    pub fn lcm(&self, other: &Monomial) -> Result<Monomial> {
        check_same(self, other)?;
        Ok(self.lcm_unchecked(other))
    }

    pub(crate) fn lcm_unchecked(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(&a, &b)| a.max(b)).collect())
    }

    /// Exponents clamped to `{0, 1}`.
    pub fn radical(&self) -> Monomial {
        Monomial(self.0.iter().map(|&e| e.min(1)).collect())
    }
}

/// lcm of a set; the unit monomial for the empty set.
pub fn lcm_set<'a, I>(n: usize, monomials: I) -> Result<Monomial>
where
    I: IntoIterator<Item = &'a Monomial>,
{
    let mut acc = Monomial::one(n);
    for m in monomials {
        acc = acc.lcm(m)?;
    }
    Ok(acc)
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        for (i, &e) in self.0.iter().enumerate() {
            match e {
                0 => {}
                1 => write!(f, "x{}", i + 1)?,
                _ => write!(f, "x{}^{}", i + 1, e)?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
