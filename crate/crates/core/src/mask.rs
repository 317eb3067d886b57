use core::fmt;

/// Membership mask over the canonical point ordering of a finite space.
///
/// Bit `i` is set when point `i` belongs to the subset. Spaces are limited to
/// [`MAX_POINTS`](crate::topology::MAX_POINTS) points so a mask always fits in
/// one machine word; the owning space checks that no bit at or above its point
/// count is set.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct SubsetMask(u64);

impl SubsetMask {
    pub const EMPTY: SubsetMask = SubsetMask(0);

    pub const fn from_bits(bits: u64) -> Self {
        SubsetMask(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// The full set `{0, .., n-1}`.
    pub const fn full(n: usize) -> Self {
        if n >= 64 {
            SubsetMask(u64::MAX)
        } else {
            SubsetMask((1u64 << n) - 1)
        }
    }

    pub const fn singleton(i: usize) -> Self {
        SubsetMask(1u64 << i)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        indices
            .into_iter()
            .fold(SubsetMask::EMPTY, |m, i| m.with(i))
    }

    pub const fn contains(self, i: usize) -> bool {
        i < 64 && self.0 & (1u64 << i) != 0
    }

    #[must_use]
    pub const fn with(self, i: usize) -> Self {
        SubsetMask(self.0 | (1u64 << i))
    }

    #[must_use]
    pub const fn without(self, i: usize) -> Self {
        SubsetMask(self.0 & !(1u64 << i))
    }

    #[must_use]
    pub const fn union(self, other: Self) -> Self {
        SubsetMask(self.0 | other.0)
    }

    #[must_use]
    pub const fn intersection(self, other: Self) -> Self {
        SubsetMask(self.0 & other.0)
    }

    #[must_use]
    pub const fn difference(self, other: Self) -> Self {
        SubsetMask(self.0 & !other.0)
    }

    /// Complement relative to the full set on `n` points.
    #[must_use]
    pub const fn complement(self, n: usize) -> Self {
        SubsetMask(!self.0 & SubsetMask::full(n).0)
    }

    pub const fn is_subset_of(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Whether every set bit lies below `n`.
    pub const fn fits(self, n: usize) -> bool {
        self.is_subset_of(SubsetMask::full(n))
    }

    pub fn iter(self) -> Indices {
        Indices(self.0)
    }
}

impl fmt::Debug for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for SubsetMask {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        SubsetMask::from_indices(iter)
    }
}

/// Ascending iterator over the members of a [`SubsetMask`].
#[derive(Clone, Debug)]
pub struct Indices(u64);

impl Iterator for Indices {
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

impl ExactSizeIterator for Indices {}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec::Vec;

    #[test]
    fn full_and_complement() {
        assert_eq!(SubsetMask::full(0), SubsetMask::EMPTY);
        assert_eq!(SubsetMask::full(3).bits(), 0b111);
        assert_eq!(SubsetMask::full(64).bits(), u64::MAX);
        let s = SubsetMask::from_indices([0, 2]);
        assert_eq!(s.complement(4), SubsetMask::from_indices([1, 3]));
    }

    #[test]
    fn iterates_in_ascending_order() {
        let s = SubsetMask::from_indices([5, 1, 63]);
        assert_eq!(s.iter().collect::<Vec<_>>(), [1, 5, 63]);
        assert_eq!(s.len(), 3);
        assert!(s.fits(64));
        assert!(!s.fits(6));
    }
}
