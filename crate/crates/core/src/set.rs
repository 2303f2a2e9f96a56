//! Fixed-capacity vertex bitsets.

use std::cmp::Ordering;
use std::fmt;

/// Maximum number of vertices a [`VertexSet`] can hold.
pub const MAX_VERTICES: usize = 128;

/// A set of vertex ids in `0..128`, stored as two machine words.
///
/// All set algebra is a handful of word operations. Iteration is in
/// ascending id order.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct VertexSet(u128);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    #[inline]
    pub const fn from_bits(bits: u128) -> Self {
        VertexSet(bits)
    }

    #[inline]
    pub const fn bits(self) -> u128 {
        self.0
    }

    /// `{0, 1, .., n-1}`.
    #[inline]
    pub fn universe(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "vertex capacity exceeded: {n}");
        if n == MAX_VERTICES {
            VertexSet(u128::MAX)
        } else {
            VertexSet((1u128 << n) - 1)
        }
    }

    #[inline]
    pub fn singleton(v: usize) -> Self {
        debug_assert!(v < MAX_VERTICES);
        VertexSet(1u128 << v)
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && (self.0 >> v) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        debug_assert!(v < MAX_VERTICES);
        self.0 |= 1u128 << v;
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        debug_assert!(v < MAX_VERTICES);
        self.0 &= !(1u128 << v);
    }

    #[inline]
    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | (1u128 << v))
    }

    #[inline]
    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1u128 << v))
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
    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    /// Complement within `{0, .., n-1}`.
    #[inline]
    pub fn complement(self, n: usize) -> Self {
        Self::universe(n).difference(self)
    }

    #[inline]
    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn is_proper_subset(self, other: Self) -> bool {
        self.is_subset(other) && self != other
    }

    #[inline]
    pub fn intersects(self, other: Self) -> bool {
        self.0 & other.0 != 0
    }

    #[inline]
    pub fn min(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    #[inline]
    pub fn max(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(127 - self.0.leading_zeros() as usize)
        }
    }

    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    /// Lexicographic order of the ascending element sequences.
    pub fn lex_cmp(self, other: Self) -> Ordering {
        let diff = self.0 ^ other.0;
        if diff == 0 {
            return Ordering::Equal;
        }
        let d = diff.trailing_zeros();
        let above = if d == 127 { 0 } else { !((1u128 << (d + 1)) - 1) };
        // The sequence holding `d` is smaller unless the other sequence ends
        // before reaching `d`.
        if self.0 >> d & 1 == 1 {
            if other.0 & above == 0 {
                Ordering::Greater
            } else {
                Ordering::Less
            }
        } else if self.0 & above == 0 {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    }

    /// Low 64 bits as a table index; callers guarantee `n <= 64`.
    #[inline]
    pub fn as_index(self) -> usize {
        debug_assert!(self.0 >> 64 == 0);
        self.0 as usize
    }

    /// Re-express this set over a sub-universe: bit `i` of the result is set
    /// iff `positions[i]` is a member.
    pub fn compress(self, positions: &[usize]) -> u128 {
        let mut out = 0u128;
        for (i, &p) in positions.iter().enumerate() {
            if self.contains(p) {
                out |= 1 << i;
            }
        }
        out
    }

    /// Inverse of [`VertexSet::compress`].
    pub fn expand(mask: u128, positions: &[usize]) -> Self {
        let mut out = VertexSet::EMPTY;
        let mut m = mask;
        while m != 0 {
            let i = m.trailing_zeros() as usize;
            out.insert(positions[i]);
            m &= m - 1;
        }
        out
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl<'a> FromIterator<&'a usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = &'a usize>>(iter: I) -> Self {
        iter.into_iter().copied().collect()
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Iter;

    fn into_iter(self) -> Iter {
        self.iter()
    }
}

pub struct Iter(u128);

impl Iterator for Iter {
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

impl ExactSizeIterator for Iter {}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
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
