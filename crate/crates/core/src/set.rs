//! Subsets of `[d]` stored as 64-bit masks.
//!
//! Element `j` (1-based, as in all I/O) lives at bit `j - 1`.

use std::cmp::Ordering;
use std::fmt;

/// A subset of `{1, ..., d}` with `d <= 64`.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct ElementSet(u64);

impl ElementSet {
    pub const EMPTY: ElementSet = ElementSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        ElementSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// `{1, ..., d}`.
    pub fn full(d: usize) -> Self {
        debug_assert!(d <= 64);
        if d == 64 {
            ElementSet(u64::MAX)
        } else {
            ElementSet((1u64 << d) - 1)
        }
    }

    pub fn singleton(j: usize) -> Self {
        debug_assert!((1..=64).contains(&j));
        ElementSet(1u64 << (j - 1))
    }

    pub fn from_elements<I: IntoIterator<Item = usize>>(elements: I) -> Self {
        elements.into_iter().fold(ElementSet::EMPTY, |s, j| s.with(j))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, j: usize) -> bool {
        (1..=64).contains(&j) && self.0 & (1u64 << (j - 1)) != 0
    }

    #[must_use]
    pub fn with(self, j: usize) -> Self {
        ElementSet(self.0 | (1u64 << (j - 1)))
    }

    #[must_use]
    pub fn without(self, j: usize) -> Self {
        ElementSet(self.0 & !(1u64 << (j - 1)))
    }

    pub fn union(self, other: Self) -> Self {
        ElementSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        ElementSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        ElementSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    /// Smallest element, if any.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize + 1)
    }

    /// Largest element, if any.
    pub fn last(self) -> Option<usize> {
        (self.0 != 0).then(|| 64 - self.0.leading_zeros() as usize)
    }

    /// Elements in ascending order.
    pub fn iter(self) -> Elements {
        Elements(self.0)
    }

    /// All nonempty subsets, in increasing mask order.
    pub fn nonempty_subsets(self) -> impl Iterator<Item = ElementSet> {
        // Standard submask enumeration, collected so the order is ascending.
        let mut out = Vec::with_capacity((1usize << self.len().min(20)) - 1);
        let mut sub = self.0;
        while sub != 0 {
            out.push(ElementSet(sub));
            sub = (sub - 1) & self.0;
        }
        out.reverse();
        out.into_iter()
    }
}

pub struct Elements(u64);

impl Iterator for Elements {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let j = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(j + 1)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Elements {}

impl IntoIterator for ElementSet {
    type Item = usize;
    type IntoIter = Elements;

    fn into_iter(self) -> Elements {
        self.iter()
    }
}

impl FromIterator<usize> for ElementSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        ElementSet::from_elements(iter)
    }
}

/// Lexicographic order on the ascending element sequences, so `12 < 123 < 13 < 2`.
impl Ord for ElementSet {
    fn cmp(&self, other: &Self) -> Ordering {
        let (mut a, mut b) = (self.0, other.0);
        loop {
            match (a == 0, b == 0) {
                (true, true) => return Ordering::Equal,
                (true, false) => return Ordering::Less,
                (false, true) => return Ordering::Greater,
                _ => {}
            }
            let (la, lb) = (a.trailing_zeros(), b.trailing_zeros());
            if la != lb {
                return la.cmp(&lb);
            }
            a &= a - 1;
            b &= b - 1;
        }
    }
}

impl PartialOrd for ElementSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Serialized as the ascending element list.
impl serde::Serialize for ElementSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Compact notation: `{1,2,3}` prints as `123` when every element is a single digit.
impl fmt::Display for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.last().is_some_and(|m| m <= 9) {
            for j in self.iter() {
                write!(f, "{j}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.iter().map(|j| j.to_string()).collect();
            write!(f, "{{{}}}", parts.join(","))
        }
    }
}
