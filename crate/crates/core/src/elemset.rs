//! Fixed-width subsets of group elements.

use core::fmt;

/// Number of 64-bit words backing an [`ElemSet`].
pub const ELEMSET_WORDS: usize = 8;

/// Largest group order an [`ElemSet`] can index.
pub const ELEMSET_CAPACITY: usize = ELEMSET_WORDS * 64;

/// A subset of the elements of a group of order at most [`ELEMSET_CAPACITY`],
/// stored as a bitmask over element indices.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ElemSet {
    words: [u64; ELEMSET_WORDS],
}

impl ElemSet {
    pub const fn new() -> Self {
        ElemSet { words: [0; ELEMSET_WORDS] }
    }

    /// The set whose low word is `mask` (elements `0..64`).
    pub const fn from_low_mask(mask: u64) -> Self {
        let mut words = [0; ELEMSET_WORDS];
        words[0] = mask;
        ElemSet { words }
    }

    pub fn singleton(e: usize) -> Self {
        let mut s = Self::new();
        s.insert(e);
        s
    }

    /// All elements `0..n`.
    pub fn full(n: usize) -> Self {
        let mut s = Self::new();
        for e in 0..n {
            s.insert(e);
        }
        s
    }

    #[inline]
    pub fn insert(&mut self, e: usize) -> bool {
        let (w, b) = (e / 64, e % 64);
        let was = self.words[w] >> b & 1 == 1;
        self.words[w] |= 1 << b;
        !was
    }

    #[inline]
    pub fn remove(&mut self, e: usize) -> bool {
        let (w, b) = (e / 64, e % 64);
        let was = self.words[w] >> b & 1 == 1;
        self.words[w] &= !(1 << b);
        was
    }

    #[inline]
    pub fn contains(&self, e: usize) -> bool {
        e < ELEMSET_CAPACITY && self.words[e / 64] >> (e % 64) & 1 == 1
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn union(&self, other: &ElemSet) -> ElemSet {
        let mut words = self.words;
        for (w, o) in words.iter_mut().zip(other.words.iter()) {
            *w |= o;
        }
        ElemSet { words }
    }

    pub fn intersection(&self, other: &ElemSet) -> ElemSet {
        let mut words = self.words;
        for (w, o) in words.iter_mut().zip(other.words.iter()) {
            *w &= o;
        }
        ElemSet { words }
    }

    pub fn is_subset(&self, other: &ElemSet) -> bool {
        self.words.iter().zip(other.words.iter()).all(|(a, b)| a & !b == 0)
    }

    /// Smallest element, if any.
    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    /// Elements in increasing index order.
    pub fn iter(&self) -> Iter<'_> {
        Iter { set: self, word: 0, bits: self.words[0] }
    }

    /// Low 64 bits; exact for groups of order at most 64.
    pub fn low_mask(&self) -> u64 {
        self.words[0]
    }
}

pub struct Iter<'a> {
    set: &'a ElemSet,
    word: usize,
    bits: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.bits != 0 {
                let b = self.bits.trailing_zeros() as usize;
                self.bits &= self.bits - 1;
                return Some(self.word * 64 + b);
            }
            self.word += 1;
            if self.word >= ELEMSET_WORDS {
                return None;
            }
            self.bits = self.set.words[self.word];
        }
    }
}

impl FromIterator<usize> for ElemSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = ElemSet::new();
        for e in iter {
            s.insert(e);
        }
        s
    }
}

impl fmt::Debug for ElemSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec::Vec;

    #[test]
    fn insert_iter_and_len() {
        let s: ElemSet = [3, 64, 511, 0].into_iter().collect();
        assert_eq!(s.len(), 4);
        assert_eq!(s.iter().collect::<Vec<_>>(), [0, 3, 64, 511]);
        assert!(s.contains(511) && !s.contains(1) && !s.contains(600));
    }

    #[test]
    fn set_algebra() {
        let a: ElemSet = [1, 2, 3].into_iter().collect();
        let b: ElemSet = [3, 4].into_iter().collect();
        assert_eq!(a.union(&b).len(), 4);
        assert_eq!(a.intersection(&b).iter().collect::<Vec<_>>(), [3]);
        assert!(ElemSet::singleton(2).is_subset(&a));
        assert!(!b.is_subset(&a));
    }
}
