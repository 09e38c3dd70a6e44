//! Fixed-width bit sets for vertex subsets and Scarf label subsets.
//!
//! Both types order their values lexicographically on the ascending element
//! list, so `{1,2} < {1,2,3} < {1,3} < {2}`. Canonical facet lists rely on it.

use std::cmp::Ordering;
use std::fmt;

macro_rules! bitset {
    ($(#[$doc:meta])* $name:ident, $word:ty, $base:expr) => {
        $(#[$doc])*
        #[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
        pub struct $name($word);

        impl $name {
            /// Number of representable elements.
            pub const CAPACITY: usize = <$word>::BITS as usize;
            pub const EMPTY: Self = Self(0);

            #[inline]
            pub const fn from_bits(bits: $word) -> Self {
                Self(bits)
            }

            #[inline]
            pub const fn bits(self) -> $word {
                self.0
            }

            #[inline]
            pub fn singleton(element: usize) -> Self {
                Self::EMPTY.with(element)
            }

            /// `{base, base+1, ..., base+count-1}`.
            pub fn first(count: usize) -> Self {
                debug_assert!(count <= Self::CAPACITY);
                if count == Self::CAPACITY {
                    Self(<$word>::MAX)
                } else {
                    Self(((1 as $word) << count) - 1)
                }
            }

            #[inline]
            pub fn contains(self, element: usize) -> bool {
                match element.checked_sub($base) {
                    Some(i) if i < Self::CAPACITY => self.0 >> i & 1 == 1,
                    _ => false,
                }
            }

            #[inline]
            pub fn with(self, element: usize) -> Self {
                debug_assert!(element.checked_sub($base).is_some_and(|i| i < Self::CAPACITY));
                Self(self.0 | (1 as $word) << (element - $base))
            }

            #[inline]
            pub fn without(self, element: usize) -> Self {
                if self.contains(element) {
                    Self(self.0 & !((1 as $word) << (element - $base)))
                } else {
                    self
                }
            }

            #[inline]
            pub fn len(self) -> usize {
                self.0.count_ones() as usize
            }

            #[inline]
            pub fn is_empty(self) -> bool {
                self.0 == 0
            }

            #[inline]
            pub fn is_subset(self, other: Self) -> bool {
                self.0 & !other.0 == 0
            }

            #[inline]
            pub fn is_proper_subset(self, other: Self) -> bool {
                self != other && self.is_subset(other)
            }

            #[inline]
            pub fn union(self, other: Self) -> Self {
                Self(self.0 | other.0)
            }

            #[inline]
            pub fn intersection(self, other: Self) -> Self {
                Self(self.0 & other.0)
            }

            #[inline]
            pub fn difference(self, other: Self) -> Self {
                Self(self.0 & !other.0)
            }

            #[inline]
            pub fn symmetric_difference(self, other: Self) -> Self {
                Self(self.0 ^ other.0)
            }

            pub fn min_element(self) -> Option<usize> {
                (!self.is_empty()).then(|| self.0.trailing_zeros() as usize + $base)
            }

            pub fn max_element(self) -> Option<usize> {
                (!self.is_empty())
                    .then(|| (<$word>::BITS - 1 - self.0.leading_zeros()) as usize + $base)
            }

            /// Elements in ascending order.
            pub fn iter(self) -> impl Iterator<Item = usize> {
                let mut rest = self.0;
                std::iter::from_fn(move || {
                    if rest == 0 {
                        None
                    } else {
                        let low = rest.trailing_zeros() as usize;
                        rest &= rest - 1;
                        Some(low + $base)
                    }
                })
            }

            pub fn to_vec(self) -> Vec<usize> {
                self.iter().collect()
            }

            /// Every subset, including the empty set and `self`.
            pub fn subsets(self) -> impl Iterator<Item = Self> {
                let full = self.0;
                let mut next = Some(0 as $word);
                std::iter::from_fn(move || {
                    let current = next?;
                    next = if current == full {
                        None
                    } else {
                        Some((current.wrapping_sub(full)) & full)
                    };
                    Some(Self(current))
                })
            }
        }

        impl Ord for $name {
            fn cmp(&self, other: &Self) -> Ordering {
                self.iter().cmp(other.iter())
            }
        }

        impl PartialOrd for $name {
            fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
                Some(self.cmp(other))
            }
        }

        impl FromIterator<usize> for $name {
            fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
                iter.into_iter().fold(Self::EMPTY, Self::with)
            }
        }

        impl fmt::Debug for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.debug_set().entries(self.iter()).finish()
            }
        }
    };
}

bitset!(
    /// Subset of the vertex set `[n]`; elements are 1-based vertices.
    VertexSet,
    u64,
    1
);

bitset!(
    /// Subset of Scarf labels; elements are 0-based label indices.
    LabelSet,
    u128,
    0
);

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, v) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// All `k`-subsets of `{1..n}`, in increasing numeric bit order.
pub fn k_subsets(n: usize, k: usize) -> impl Iterator<Item = VertexSet> {
    debug_assert!(n <= VertexSet::CAPACITY);
    let limit: u128 = 1u128 << n;
    let mut next: Option<u64> = if k > n {
        None
    } else if k == 0 {
        Some(0)
    } else {
        Some(if k == 64 { u64::MAX } else { (1u64 << k) - 1 })
    };
    std::iter::from_fn(move || {
        let current = next?;
        next = if current == 0 {
            None
        } else {
            // Gosper's hack
            let c = current & current.wrapping_neg();
            let r = current.wrapping_add(c);
            if r == 0 {
                None
            } else {
                let candidate = (((r ^ current) >> 2) / c) | r;
                ((candidate as u128) < limit).then_some(candidate)
            }
        };
        Some(VertexSet::from_bits(current))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vs(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    #[test]
    fn lexicographic_order() {
        let mut sets = vec![vs(&[2]), vs(&[1, 3]), vs(&[1, 2, 3]), vs(&[1, 2])];
        sets.sort();
        assert_eq!(sets, vec![vs(&[1, 2]), vs(&[1, 2, 3]), vs(&[1, 3]), vs(&[2])]);
    }

    #[test]
    fn basic_ops() {
        let s = vs(&[1, 4, 7]);
        assert_eq!(s.len(), 3);
        assert_eq!(s.min_element(), Some(1));
        assert_eq!(s.max_element(), Some(7));
        assert!(s.contains(4));
        assert!(!s.contains(0));
        assert!(!s.contains(2));
        assert_eq!(s.without(4).to_vec(), vec![1, 7]);
        assert!(vs(&[1, 7]).is_proper_subset(s));
        assert_eq!(VertexSet::first(3), vs(&[1, 2, 3]));
        assert_eq!(VertexSet::EMPTY.max_element(), None);
        assert_eq!(LabelSet::singleton(0).min_element(), Some(0));
    }

    #[test]
    fn subsets_enumerates_powerset() {
        let all: Vec<_> = vs(&[2, 5, 6]).subsets().collect();
        assert_eq!(all.len(), 8);
        assert!(all.contains(&VertexSet::EMPTY));
        assert!(all.contains(&vs(&[2, 6])));
    }

    #[test]
    fn k_subsets_counts() {
        let binom = |n: usize, k: usize| -> usize { (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1)) };
        for n in 0..=8 {
            for k in 0..=n + 1 {
                let subsets: Vec<_> = k_subsets(n, k).collect();
                let expected = if k > n { 0 } else { binom(n, k) };
                assert_eq!(subsets.len(), expected, "n={n} k={k}");
                assert!(subsets.iter().all(|s| s.len() == k));
                assert!(subsets.iter().all(|s| s.max_element().unwrap_or(0) <= n));
            }
        }
    }
}
