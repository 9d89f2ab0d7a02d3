//! Vertex sets as single-word bitmasks.
//!
//! Every set operation used by the detectors and the search is a handful of
//! machine instructions on a `u64`; the owning graph's order defines the
//! universe. Sets produced by graph operations never carry bits at positions
//! `>= order`.

use std::fmt;
use std::ops::{BitAnd, BitAndAssign, BitOr, BitOrAssign, Not, Sub, SubAssign};

/// A set of vertices of a graph on at most 64 vertices.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VertexSet(u64);

impl VertexSet {
    /// The empty set.
    pub const EMPTY: VertexSet = VertexSet(0);

    /// The full set `{0, .., order - 1}`.
    #[inline]
    pub fn full(order: usize) -> Self {
        debug_assert!(order <= 64);
        if order >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << order) - 1)
        }
    }

    /// The set `{v}`.
    #[inline]
    pub fn singleton(v: usize) -> Self {
        debug_assert!(v < 64);
        VertexSet(1u64 << v)
    }

    /// Builds a set from an explicit bit pattern.
    #[inline]
    pub fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    /// Builds a set from a list of vertices.
    pub fn from_vertices<I: IntoIterator<Item = usize>>(vertices: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in vertices {
            s.insert(v);
        }
        s
    }

    /// The raw bit pattern.
    #[inline]
    pub fn bits(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        debug_assert!(v < 64);
        self.0 & (1u64 << v) != 0
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        debug_assert!(v < 64);
        self.0 |= 1u64 << v;
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        debug_assert!(v < 64);
        self.0 &= !(1u64 << v);
    }

    /// Number of vertices in the set.
    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Smallest vertex in the set, if any.
    #[inline]
    pub fn smallest(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Iterates over the vertices in ascending order.
    #[inline]
    pub fn iter(self) -> Bits {
        Bits(self.0)
    }

    /// The vertices in ascending order.
    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// True iff `self` and `other` share no vertex.
    #[inline]
    pub fn is_disjoint(self, other: VertexSet) -> bool {
        self.0 & other.0 == 0
    }

    /// True iff every vertex of `self` is in `other`.
    #[inline]
    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }
}

/// Iterator over the vertices of a [`VertexSet`], ascending.
pub struct Bits(u64);

impl Iterator for Bits {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let v = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(v)
        }
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Bits {}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Bits;

    fn into_iter(self) -> Bits {
        self.iter()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::from_vertices(iter)
    }
}

impl BitAnd for VertexSet {
    type Output = VertexSet;
    #[inline]
    fn bitand(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 & rhs.0)
    }
}

impl BitAndAssign for VertexSet {
    #[inline]
    fn bitand_assign(&mut self, rhs: VertexSet) {
        self.0 &= rhs.0;
    }
}

impl BitOr for VertexSet {
    type Output = VertexSet;
    #[inline]
    fn bitor(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 | rhs.0)
    }
}

impl BitOrAssign for VertexSet {
    #[inline]
    fn bitor_assign(&mut self, rhs: VertexSet) {
        self.0 |= rhs.0;
    }
}

impl Sub for VertexSet {
    type Output = VertexSet;
    #[inline]
    fn sub(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 & !rhs.0)
    }
}

impl SubAssign for VertexSet {
    #[inline]
    fn sub_assign(&mut self, rhs: VertexSet) {
        self.0 &= !rhs.0;
    }
}

impl Not for VertexSet {
    type Output = VertexSet;
    /// Complement within the full 64-bit universe; callers mask by order.
    #[inline]
    fn not(self) -> VertexSet {
        VertexSet(!self.0)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_set_edges() {
        assert_eq!(VertexSet::full(0).len(), 0);
        assert_eq!(VertexSet::full(1).to_vec(), vec![0]);
        assert_eq!(VertexSet::full(64).len(), 64);
    }

    #[test]
    fn set_algebra() {
        let a = VertexSet::from_vertices([0, 2, 5]);
        let b = VertexSet::from_vertices([2, 3]);
        assert_eq!((a & b).to_vec(), vec![2]);
        assert_eq!((a | b).to_vec(), vec![0, 2, 3, 5]);
        assert_eq!((a - b).to_vec(), vec![0, 5]);
        assert!(a.contains(5));
        assert!(!a.contains(1));
        assert!(!a.is_disjoint(b));
        assert!(VertexSet::singleton(2).is_subset(a));
    }

    #[test]
    fn iteration_is_ascending() {
        let s = VertexSet::from_vertices([7, 1, 63, 0]);
        assert_eq!(s.to_vec(), vec![0, 1, 7, 63]);
        assert_eq!(s.smallest(), Some(0));
        assert_eq!(VertexSet::EMPTY.smallest(), None);
    }

    #[test]
    fn display_form() {
        let s = VertexSet::from_vertices([3, 5]);
        assert_eq!(s.to_string(), "{3,5}");
        assert_eq!(VertexSet::EMPTY.to_string(), "{}");
    }
}
