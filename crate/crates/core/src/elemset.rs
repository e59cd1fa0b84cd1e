//! Dense bitsets over a fixed finite carrier.
//!
//! Every structure in this crate indexes its elements `0..size`, so subsets
//! (filters, upsets, relation rows, …) are stored as fixed-width bitsets.
//! Sets remember their carrier size: combining sets over different carriers
//! is a bug, and `debug_assert`s catch it.
//!
//! The derived order used for canonical indexing is *numeric*: a set is
//! compared as the integer whose binary digits are its membership bits.
//! Iteration always yields members in ascending index order.

const WORD_BITS: usize = 64;

/// A subset of a carrier `{0, …, universe-1}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ElemSet {
    universe: usize,
    words: Vec<u64>,
}

fn word_count(universe: usize) -> usize {
    universe.div_ceil(WORD_BITS)
}

impl ElemSet {
    /// The empty subset of a carrier with `universe` elements.
    pub fn empty(universe: usize) -> Self {
        ElemSet { universe, words: vec![0; word_count(universe)] }
    }

    /// The full carrier as a subset of itself.
    pub fn full(universe: usize) -> Self {
        let mut s = Self::empty(universe);
        for i in 0..universe {
            s.insert(i);
        }
        s
    }

    /// The one-element subset `{i}`.
    pub fn singleton(universe: usize, i: usize) -> Self {
        let mut s = Self::empty(universe);
        s.insert(i);
        s
    }

    /// Builds a set from arbitrary member indices.
    pub fn from_indices<I: IntoIterator<Item = usize>>(universe: usize, indices: I) -> Self {
        let mut s = Self::empty(universe);
        for i in indices {
            s.insert(i);
        }
        s
    }

    /// Inverse of [`Self::as_mask`] for universes of at most 64 elements.
    pub fn from_mask(universe: usize, mask: u64) -> Self {
        assert!(universe <= WORD_BITS, "mask form requires universe ≤ {WORD_BITS}");
        assert!(universe == WORD_BITS || mask >> universe == 0, "mask has bits past the universe");
        let mut s = Self::empty(universe);
        if !s.words.is_empty() {
            s.words[0] = mask;
        }
        s
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn insert(&mut self, i: usize) {
        assert!(i < self.universe, "index {i} out of range for universe {}", self.universe);
        self.words[i / WORD_BITS] |= 1 << (i % WORD_BITS);
    }

    pub fn remove(&mut self, i: usize) {
        assert!(i < self.universe, "index {i} out of range for universe {}", self.universe);
        self.words[i / WORD_BITS] &= !(1 << (i % WORD_BITS));
    }

    pub fn contains(&self, i: usize) -> bool {
        i < self.universe && self.words[i / WORD_BITS] >> (i % WORD_BITS) & 1 == 1
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Number of members.
    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Least member, if any.
    pub fn first(&self) -> Option<usize> {
        for (k, &w) in self.words.iter().enumerate() {
            if w != 0 {
                return Some(k * WORD_BITS + w.trailing_zeros() as usize);
            }
        }
        None
    }

    pub fn union(&self, other: &Self) -> Self {
        debug_assert_eq!(self.universe, other.universe);
        let words = self.words.iter().zip(&other.words).map(|(a, b)| a | b).collect();
        ElemSet { universe: self.universe, words }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        debug_assert_eq!(self.universe, other.universe);
        let words = self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect();
        ElemSet { universe: self.universe, words }
    }

    pub fn difference(&self, other: &Self) -> Self {
        debug_assert_eq!(self.universe, other.universe);
        let words = self.words.iter().zip(&other.words).map(|(a, b)| a & !b).collect();
        ElemSet { universe: self.universe, words }
    }

    /// Complement within the carrier.
    pub fn complement(&self) -> Self {
        let mut words: Vec<u64> = self.words.iter().map(|w| !w).collect();
        let tail = self.universe % WORD_BITS;
        if tail != 0 {
            if let Some(last) = words.last_mut() {
                *last &= (1u64 << tail) - 1;
            }
        }
        ElemSet { universe: self.universe, words }
    }

    pub fn union_with(&mut self, other: &Self) {
        debug_assert_eq!(self.universe, other.universe);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        debug_assert_eq!(self.universe, other.universe);
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        debug_assert_eq!(self.universe, other.universe);
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    /// Members in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(k, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let bit = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(k * WORD_BITS + bit)
            })
        })
    }

    /// The membership bits read as one unsigned integer; only valid for
    /// carriers of at most 64 elements (used for compact relation rows).
    pub fn as_mask(&self) -> u64 {
        assert!(self.universe <= WORD_BITS, "as_mask requires universe ≤ 64");
        self.words.first().copied().unwrap_or(0)
    }
}

impl Ord for ElemSet {
    /// Numeric order of the membership bits (most significant word first),
    /// used everywhere a canonical enumeration of subsets is needed.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        debug_assert_eq!(self.universe, other.universe);
        self.words.iter().rev().cmp(other.words.iter().rev())
    }
}

impl PartialOrd for ElemSet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl std::fmt::Debug for ElemSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn boolean_ops_and_bounds() {
        let a = ElemSet::from_indices(70, [0, 3, 69]);
        let b = ElemSet::from_indices(70, [3, 5]);
        assert_eq!(a.union(&b).len(), 4);
        assert_eq!(a.intersection(&b).len(), 1);
        assert!(a.difference(&b).contains(69));
        assert!(!a.difference(&b).contains(3));
        assert_eq!(a.complement().len(), 67);
        assert!(a.complement().is_disjoint(&a));
        assert_eq!(a.complement().union(&a), ElemSet::full(70));
    }

    #[test]
    fn numeric_order_matches_mask_value() {
        let mut sets: Vec<ElemSet> =
            (0u64..16).map(|m| ElemSet::from_indices(4, (0..4).filter(move |i| m >> i & 1 == 1))).collect();
        sets.sort();
        for (value, s) in sets.iter().enumerate() {
            assert_eq!(s.as_mask(), value as u64);
        }
    }

    #[test]
    fn iteration_is_ascending() {
        let s = ElemSet::from_indices(130, [129, 0, 64, 63]);
        let got: Vec<usize> = s.iter().collect();
        assert_eq!(got, vec![0, 63, 64, 129]);
        assert_eq!(s.first(), Some(0));
        assert_eq!(s.len(), 4);
    }
}
