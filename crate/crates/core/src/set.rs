//! Fixed-width subsets of a poset carrier.

use std::fmt;
use std::ops::{BitAnd, BitAndAssign, BitOr, BitOrAssign, Not, Sub};

/// Largest carrier an [`ElementSet`] can index.
pub const CAPACITY: usize = 64;

/// A subset of `{0, .., n-1}` stored as one machine word.
///
/// Iteration is always in ascending index order, which is the declaration
/// order of the owning poset.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElementSet(u64);

impl ElementSet {
    pub const EMPTY: ElementSet = ElementSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        ElementSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub fn singleton(i: usize) -> Self {
        debug_assert!(i < CAPACITY);
        ElementSet(1 << i)
    }

    /// The set `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= CAPACITY);
        if n == CAPACITY {
            ElementSet(u64::MAX)
        } else {
            ElementSet((1u64 << n) - 1)
        }
    }

    pub fn contains(self, i: usize) -> bool {
        i < CAPACITY && self.0 & (1 << i) != 0
    }

    pub fn insert(&mut self, i: usize) {
        self.0 |= 1 << i;
    }

    pub fn remove(&mut self, i: usize) {
        self.0 &= !(1 << i);
    }

    pub fn with(self, i: usize) -> Self {
        ElementSet(self.0 | 1 << i)
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: ElementSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: ElementSet) -> bool {
        self.0 & other.0 == 0
    }

    /// The only member, if the set is a singleton.
    pub fn as_singleton(self) -> Option<usize> {
        (self.len() == 1).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn first(self) -> Option<usize> {
        (!self.is_empty()).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    /// The members as a sorted index vector.
    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

pub struct Iter(u64);

impl Iterator for Iter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Iter {}

impl IntoIterator for ElementSet {
    type Item = usize;
    type IntoIter = Iter;

    fn into_iter(self) -> Iter {
        self.iter()
    }
}

impl FromIterator<usize> for ElementSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        let mut set = ElementSet::EMPTY;
        for i in iter {
            set.insert(i);
        }
        set
    }
}

impl<const N: usize> From<[usize; N]> for ElementSet {
    fn from(members: [usize; N]) -> Self {
        members.into_iter().collect()
    }
}

impl BitAnd for ElementSet {
    type Output = ElementSet;
    fn bitand(self, rhs: Self) -> Self {
        ElementSet(self.0 & rhs.0)
    }
}

impl BitAndAssign for ElementSet {
    fn bitand_assign(&mut self, rhs: Self) {
        self.0 &= rhs.0;
    }
}

impl BitOr for ElementSet {
    type Output = ElementSet;
    fn bitor(self, rhs: Self) -> Self {
        ElementSet(self.0 | rhs.0)
    }
}

impl BitOrAssign for ElementSet {
    fn bitor_assign(&mut self, rhs: Self) {
        self.0 |= rhs.0;
    }
}

impl Sub for ElementSet {
    type Output = ElementSet;
    fn sub(self, rhs: Self) -> Self {
        ElementSet(self.0 & !rhs.0)
    }
}

/// Complement within the full 64-bit universe; mask with [`ElementSet::full`]
/// to stay inside a carrier.
impl Not for ElementSet {
    type Output = ElementSet;
    fn not(self) -> Self {
        ElementSet(!self.0)
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn iteration_is_ascending() {
        let s = ElementSet::from([5, 0, 63, 17]);
        assert_eq!(s.to_vec(), vec![0, 5, 17, 63]);
        assert_eq!(s.len(), 4);
    }

    #[test]
    fn full_and_subset() {
        assert_eq!(ElementSet::full(0), ElementSet::EMPTY);
        assert_eq!(ElementSet::full(64).len(), 64);
        assert!(ElementSet::from([1, 2]).is_subset(ElementSet::full(3)));
        assert!(!ElementSet::from([1, 3]).is_subset(ElementSet::full(3)));
        assert!(ElementSet::EMPTY.is_subset(ElementSet::EMPTY));
    }

    #[test]
    fn singleton_detection() {
        assert_eq!(ElementSet::singleton(9).as_singleton(), Some(9));
        assert_eq!(ElementSet::from([1, 2]).as_singleton(), None);
        assert_eq!(ElementSet::EMPTY.as_singleton(), None);
    }
}
