use crate::error::{Error, Result};
use std::fmt;

/// A subset of the ground set `[m] = {1, ..., m}`, stored as a bitmask.
///
/// Bit `i` set means vertex `i + 1` is present, so the maximum supported
/// ground set size is 64 (the library guards batch operations well below
/// that). Vertices are 1-based everywhere in the public API, matching the
/// text format and the usual combinatorics conventions.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// Builds a set from 1-based vertex labels, validating against `m`.
    pub fn from_slice(vertices: &[usize], m: usize) -> Result<VertexSet> {
        if m > 64 {
            return Err(Error::GroundSetTooLarge(m));
        }
        let mut bits = 0u64;
        for &v in vertices {
            if v == 0 || v > m {
                return Err(Error::InvalidVertex(v, m));
            }
            bits |= 1 << (v - 1);
        }
        Ok(VertexSet(bits))
    }

    /// The full set `{1, ..., m}`.
    pub fn full(m: usize) -> VertexSet {
        debug_assert!(m <= 64);
        if m == 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << m) - 1)
        }
    }

    pub fn singleton(v: usize) -> VertexSet {
        debug_assert!((1..=64).contains(&v));
        VertexSet(1 << (v - 1))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: usize) -> bool {
        v >= 1 && v <= 64 && self.0 >> (v - 1) & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        debug_assert!((1..=64).contains(&v));
        self.0 |= 1 << (v - 1);
    }

    pub fn remove(&mut self, v: usize) {
        debug_assert!((1..=64).contains(&v));
        self.0 &= !(1 << (v - 1));
    }

    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset_of(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint_from(self, other: VertexSet) -> bool {
        self.0 & other.0 == 0
    }

    /// Iterates the 1-based vertex labels in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize + 1;
                bits &= bits - 1;
                Some(v)
            }
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn min_vertex(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize + 1)
        }
    }

    /// All subsets of `self`, ordered by increasing cardinality and then by
    /// bitmask value. This is the canonical enumeration order used whenever
    /// subsets index output rows.
    pub fn subsets_by_size(self) -> Vec<VertexSet> {
        let mut subs: Vec<VertexSet> = Vec::with_capacity(1 << self.len());
        // Standard subset-mask walk, then a stable sort by (popcount, value).
        let mut s = self.0;
        loop {
            subs.push(VertexSet(s));
            if s == 0 {
                break;
            }
            s = (s - 1) & self.0;
        }
        subs.sort_by_key(|x| (x.len(), x.0));
        subs
    }

    /// Number of pairs `(i, j)` with `i` in `self`, `j` in `other`, `j < i`.
    ///
    /// This is the inversion count of the concatenation `(self, other)`
    /// relative to sorted order; `(-1)^theta` is the sign relating the
    /// juxtaposed and increasing-order orientations.
    pub fn theta(self, other: VertexSet) -> usize {
        let mut count = 0usize;
        for i in self.iter() {
            // vertices of `other` strictly below i
            let below = if i == 1 { 0 } else { other.0 & ((1u64 << (i - 1)) - 1) };
            count += below.count_ones() as usize;
        }
        count
    }
}

impl fmt::Debug for VertexSet {
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

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_and_bounds() {
        let s = VertexSet::from_slice(&[1, 3, 5], 6).unwrap();
        assert_eq!(s.to_vec(), vec![1, 3, 5]);
        assert_eq!(s.len(), 3);
        assert!(VertexSet::from_slice(&[7], 6).is_err());
        assert!(VertexSet::from_slice(&[0], 6).is_err());
        assert!(VertexSet::from_slice(&[1], 65).is_err());
    }

    #[test]
    fn set_algebra() {
        let a = VertexSet::from_slice(&[1, 2, 3], 6).unwrap();
        let b = VertexSet::from_slice(&[3, 4], 6).unwrap();
        assert_eq!(a.union(b).to_vec(), vec![1, 2, 3, 4]);
        assert_eq!(a.intersection(b).to_vec(), vec![3]);
        assert_eq!(a.difference(b).to_vec(), vec![1, 2]);
        assert!(!a.is_disjoint_from(b));
        assert!(a.intersection(b).is_subset_of(a));
    }

    #[test]
    fn subset_enumeration_order() {
        let s = VertexSet::from_slice(&[1, 2, 3], 3).unwrap();
        let subs = s.subsets_by_size();
        assert_eq!(subs.len(), 8);
        assert_eq!(subs[0], VertexSet::EMPTY);
        let sizes: Vec<usize> = subs.iter().map(|x| x.len()).collect();
        assert_eq!(sizes, vec![0, 1, 1, 1, 2, 2, 2, 3]);
        // within a size class, increasing bitmask value
        assert_eq!(subs[1].to_vec(), vec![1]);
        assert_eq!(subs[4].to_vec(), vec![1, 2]);
    }

    // theta values worked out by hand: theta(I, J) counts pairs i in I,
    // j in J with j < i.
    #[test]
    fn theta_examples() {
        let m = 4;
        let i = VertexSet::from_slice(&[1, 3], m).unwrap();
        let j = VertexSet::from_slice(&[2, 4], m).unwrap();
        assert_eq!(i.theta(j), 1);
        assert_eq!(j.theta(i), 3);
        assert_eq!(VertexSet::EMPTY.theta(i), 0);
        assert_eq!(i.theta(VertexSet::EMPTY), 0);
    }
}
