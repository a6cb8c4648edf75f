use std::fmt;

use super::EdgeId;

/// A set of edges of one graph, stored as a bitmask over [`EdgeId`]s.
///
/// Graphs handled by this crate have at most 64 edges, so a single word is
/// enough. Only bits below the host graph's edge count are ever set.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct EdgeSubset(u64);

impl EdgeSubset {
    pub const EMPTY: EdgeSubset = EdgeSubset(0);

    pub const fn from_bits(bits: u64) -> Self {
        EdgeSubset(bits)
    }

    /// All edges of a graph with `m` edges.
    pub fn full(m: usize) -> Self {
        debug_assert!(m <= 64);
        if m == 64 {
            EdgeSubset(u64::MAX)
        } else {
            EdgeSubset((1u64 << m) - 1)
        }
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, e: EdgeId) -> bool {
        self.0 >> e.index() & 1 == 1
    }

    pub fn insert(&mut self, e: EdgeId) {
        self.0 |= 1 << e.index();
    }

    pub fn remove(&mut self, e: EdgeId) {
        self.0 &= !(1 << e.index());
    }

    pub fn with(mut self, e: EdgeId) -> Self {
        self.insert(e);
        self
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: Self) -> Self {
        EdgeSubset(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        EdgeSubset(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        EdgeSubset(self.0 & !other.0)
    }

    /// Symmetric difference; the group operation of the cycle space.
    pub fn sym_diff(self, other: Self) -> Self {
        EdgeSubset(self.0 ^ other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Edges in increasing id order.
    pub fn iter(self) -> impl Iterator<Item = EdgeId> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let i = bits.trailing_zeros();
            bits &= bits - 1;
            Some(EdgeId(i))
        })
    }
}

impl FromIterator<EdgeId> for EdgeSubset {
    fn from_iter<I: IntoIterator<Item = EdgeId>>(iter: I) -> Self {
        let mut s = EdgeSubset::EMPTY;
        for e in iter {
            s.insert(e);
        }
        s
    }
}

impl fmt::Debug for EdgeSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter().map(|e| e.0)).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn iter_is_sorted_and_matches_len() {
        let s: EdgeSubset = [5u32, 0, 63, 17].into_iter().map(EdgeId).collect();
        let ids: Vec<u32> = s.iter().map(|e| e.0).collect();
        assert_eq!(ids, vec![0, 5, 17, 63]);
        assert_eq!(s.len(), 4);
    }

    #[test]
    fn full_covers_exactly_m_bits() {
        assert_eq!(EdgeSubset::full(15).len(), 15);
        assert_eq!(EdgeSubset::full(64).len(), 64);
        assert!(EdgeSubset::full(0).is_empty());
    }
}
