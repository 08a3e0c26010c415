use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

pub(crate) const WORD: usize = 64;

#[inline]
pub(crate) fn words_for(n: usize) -> usize {
    n.div_ceil(WORD)
}

/// A subset of the vertices `0..universe` of some graph, stored as a packed bitset.
///
/// Ordering compares the sorted member lists lexicographically, which is the
/// tie-breaking order used throughout the crate.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    universe: usize,
    bits: Vec<u64>,
}

impl VertexSet {
    pub fn empty(universe: usize) -> Self {
        VertexSet { universe, bits: vec![0; words_for(universe)] }
    }

    pub fn full(universe: usize) -> Self {
        let mut s = Self::empty(universe);
        for w in s.bits.iter_mut() {
            *w = u64::MAX;
        }
        s.trim();
        s
    }

    /// Builds a set from members, rejecting any member `>= universe`.
    pub fn from_members<I: IntoIterator<Item = usize>>(universe: usize, members: I) -> Result<Self> {
        let mut s = Self::empty(universe);
        for v in members {
            if v >= universe {
                return Err(Error::input(format!("vertex {v} out of range for a graph on {universe} vertices")));
            }
            s.insert(v);
        }
        Ok(s)
    }

    pub(crate) fn from_words(universe: usize, bits: Vec<u64>) -> Self {
        debug_assert_eq!(bits.len(), words_for(universe));
        let mut s = VertexSet { universe, bits };
        s.trim();
        s
    }

    fn trim(&mut self) {
        let rem = self.universe % WORD;
        if rem != 0 {
            if let Some(last) = self.bits.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    #[inline]
    pub fn universe(&self) -> usize {
        self.universe
    }

    #[inline]
    pub(crate) fn words(&self) -> &[u64] {
        &self.bits
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < self.universe && (self.bits[v / WORD] >> (v % WORD)) & 1 == 1
    }

    /// Inserts `v`. Panics if `v` lies outside the universe.
    #[inline]
    pub fn insert(&mut self, v: usize) {
        assert!(v < self.universe, "vertex {v} outside universe {}", self.universe);
        self.bits[v / WORD] |= 1 << (v % WORD);
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        if v < self.universe {
            self.bits[v / WORD] &= !(1 << (v % WORD));
        }
    }

    pub fn len(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.iter().all(|&w| w == 0)
    }

    /// Smallest member.
    pub fn first(&self) -> Option<usize> {
        self.bits.iter().enumerate().find(|(_, &w)| w != 0).map(|(i, w)| i * WORD + w.trailing_zeros() as usize)
    }

    pub fn iter(&self) -> Members<'_> {
        Members { bits: &self.bits, word: 0, cur: self.bits.first().copied().unwrap_or(0) }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    fn check_same(&self, other: &VertexSet) {
        assert_eq!(self.universe, other.universe, "vertex sets over different universes");
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        self.check_same(other);
        let bits = self.bits.iter().zip(&other.bits).map(|(a, b)| a | b).collect();
        VertexSet { universe: self.universe, bits }
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        self.check_same(other);
        let bits = self.bits.iter().zip(&other.bits).map(|(a, b)| a & b).collect();
        VertexSet { universe: self.universe, bits }
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        self.check_same(other);
        let bits = self.bits.iter().zip(&other.bits).map(|(a, b)| a & !b).collect();
        VertexSet { universe: self.universe, bits }
    }

    pub fn complement(&self) -> VertexSet {
        let bits = self.bits.iter().map(|a| !a).collect();
        VertexSet::from_words(self.universe, bits)
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        self.check_same(other);
        for (a, b) in self.bits.iter_mut().zip(&other.bits) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &VertexSet) {
        self.check_same(other);
        for (a, b) in self.bits.iter_mut().zip(&other.bits) {
            *a &= b;
        }
    }

    pub fn subtract(&mut self, other: &VertexSet) {
        self.check_same(other);
        for (a, b) in self.bits.iter_mut().zip(&other.bits) {
            *a &= !b;
        }
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.check_same(other);
        self.bits.iter().zip(&other.bits).all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.check_same(other);
        self.bits.iter().zip(&other.bits).all(|(a, b)| a & b == 0)
    }

    pub fn intersection_len(&self, other: &VertexSet) -> usize {
        self.check_same(other);
        self.bits.iter().zip(&other.bits).map(|(a, b)| (a & b).count_ones() as usize).sum()
    }
}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Iterator over the members of a [`VertexSet`] in increasing order.
pub struct Members<'a> {
    bits: &'a [u64],
    word: usize,
    cur: u64,
}

impl Iterator for Members<'_> {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        loop {
            if self.cur != 0 {
                let t = self.cur.trailing_zeros() as usize;
                self.cur &= self.cur - 1;
                return Some(self.word * WORD + t);
            }
            self.word += 1;
            if self.word >= self.bits.len() {
                return None;
            }
            self.cur = self.bits[self.word];
        }
    }
}
