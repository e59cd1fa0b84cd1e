//! Finite partial orders.
//!
//! A `Poset` is a carrier `0..size` plus a reflexive, antisymmetric,
//! transitive relation, stored as one bitset row per element
//! (`up[i] = { j | i ≤ j }`). At this scale a finite poset *is* the dual
//! space of a finite distributive lattice — all subsets are clopen — so this
//! type doubles as the space side of the duality modules.
//!
//! Enumeration discipline used throughout the crate: elements iterate in
//! increasing index order, subsets in ascending numeric (bitset-value) order,
//! and any "choose a witness" helper returns the least-index witness.

use crate::elemset::ElemSet;
use crate::error::{Error, Result};

/// Bound on carrier sizes produced by constructions such as `product`.
pub const DEFAULT_POSET_CAPACITY: usize = 1 << 20;

/// A finite partial order on `{0, …, size-1}`.
#[derive(Clone, PartialEq, Eq)]
pub struct Poset {
    size: usize,
    up: Vec<ElemSet>, // up[i] = { j | i ≤ j }; reflexive by invariant
}

impl Poset {
    /// Builds a poset from a predicate, validating all three order laws.
    pub fn from_leq(size: usize, leq: impl Fn(usize, usize) -> bool) -> Result<Self> {
        let mut up = Vec::with_capacity(size);
        for i in 0..size {
            up.push(ElemSet::from_indices(size, (0..size).filter(|&j| leq(i, j))));
        }
        Self::from_up_rows(up)
    }

    /// Builds a poset from its `up` rows, validating the order laws.
    pub fn from_up_rows(up: Vec<ElemSet>) -> Result<Self> {
        let size = up.len();
        for (i, row) in up.iter().enumerate() {
            if row.universe() != size {
                return Err(Error::IndexOutOfRange { index: row.universe(), size });
            }
            if !row.contains(i) {
                return Err(Error::NotAPartialOrder { law: "reflexivity", a: i, b: i });
            }
        }
        for i in 0..size {
            for j in up[i].iter() {
                if i != j && up[j].contains(i) {
                    return Err(Error::NotAPartialOrder { law: "antisymmetry", a: i, b: j });
                }
                if !up[j].is_subset(&up[i]) {
                    let k = up[j].difference(&up[i]).first().unwrap();
                    return Err(Error::NotAPartialOrder { law: "transitivity", a: i, b: k });
                }
            }
        }
        Ok(Poset { size, up })
    }

    /// Builds a poset from generating pairs: the pairs are closed reflexively
    /// and transitively first, so only antisymmetry can fail.
    pub fn from_pairs(size: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        for &(a, b) in pairs {
            let bad = if a >= size { a } else { b };
            if a >= size || b >= size {
                return Err(Error::IndexOutOfRange { index: bad, size });
            }
        }
        let mut up: Vec<ElemSet> = (0..size).map(|i| ElemSet::singleton(size, i)).collect();
        for &(a, b) in pairs {
            up[a].insert(b);
        }
        // Warshall closure over the successor rows.
        for k in 0..size {
            for i in 0..size {
                if up[i].contains(k) {
                    let row_k = up[k].clone();
                    up[i].union_with(&row_k);
                }
            }
        }
        Self::from_up_rows(up)
    }

    /// The `n`-element chain `0 < 1 < … < n-1`.
    pub fn chain(n: usize) -> Self {
        Poset {
            size: n,
            up: (0..n).map(|i| ElemSet::from_indices(n, i..n)).collect(),
        }
    }

    /// The `n`-element antichain (only the reflexive pairs).
    pub fn antichain(n: usize) -> Self {
        Poset {
            size: n,
            up: (0..n).map(|i| ElemSet::singleton(n, i)).collect(),
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.up[i].contains(j)
    }

    /// The row `{ j | i ≤ j }`.
    pub fn up_row(&self, i: usize) -> &ElemSet {
        &self.up[i]
    }

    fn check_subset(&self, s: &ElemSet) -> Result<()> {
        if s.universe() != self.size {
            return Err(Error::IndexOutOfRange { index: s.universe(), size: self.size });
        }
        Ok(())
    }

    /// `↑s = { y | ∃x ∈ s, x ≤ y }`.
    pub fn up_closure(&self, s: &ElemSet) -> Result<ElemSet> {
        self.check_subset(s)?;
        let mut out = ElemSet::empty(self.size);
        for x in s.iter() {
            out.union_with(&self.up[x]);
        }
        Ok(out)
    }

    /// `↓s = { y | ∃x ∈ s, y ≤ x }`.
    pub fn down_closure(&self, s: &ElemSet) -> Result<ElemSet> {
        self.check_subset(s)?;
        let mut out = ElemSet::empty(self.size);
        for y in 0..self.size {
            if !self.up[y].is_disjoint(s) {
                out.insert(y);
            }
        }
        Ok(out)
    }

    /// Maximal points of the induced subposet on `c`; empty input gives the
    /// empty set, nonempty input always has a maximal point (finite carrier).
    pub fn max_points(&self, c: &ElemSet) -> Result<ElemSet> {
        self.check_subset(c)?;
        let mut out = ElemSet::empty(self.size);
        for x in c.iter() {
            let mut strictly_above = self.up[x].intersection(c);
            strictly_above.remove(x);
            if strictly_above.is_empty() {
                out.insert(x);
            }
        }
        Ok(out)
    }

    /// Minimal points of the induced subposet on `c`.
    pub fn min_points(&self, c: &ElemSet) -> Result<ElemSet> {
        self.check_subset(c)?;
        let mut out = ElemSet::empty(self.size);
        for x in c.iter() {
            let below = (0..self.size).filter(|&y| y != x && c.contains(y) && self.leq(y, x));
            if below.count() == 0 {
                out.insert(x);
            }
        }
        Ok(out)
    }

    /// Componentwise product order; the pair `(a, b)` lives at index
    /// `a * other.size() + b` (row-major in the left factor).
    pub fn product(&self, other: &Poset) -> Result<Poset> {
        self.product_with_capacity(other, DEFAULT_POSET_CAPACITY)
    }

    pub fn product_with_capacity(&self, other: &Poset, bound: usize) -> Result<Poset> {
        let requested = self.size.saturating_mul(other.size);
        if requested > bound {
            return Err(Error::CapacityExceeded { requested, bound });
        }
        let size = requested;
        let mut up = Vec::with_capacity(size);
        for a in 0..self.size {
            for b in 0..other.size {
                let mut row = ElemSet::empty(size);
                for a2 in self.up[a].iter() {
                    for b2 in other.up[b].iter() {
                        row.insert(a2 * other.size + b2);
                    }
                }
                up.push(row);
            }
        }
        Ok(Poset { size, up })
    }

    /// Quotient by a partition; see [`quotient_of_quasi_order`]. For a poset
    /// the partition must be compatible with the order, which forces every
    /// non-singleton block to be rejected (posets have no proper clusters).
    pub fn quotient(&self, partition: &[ElemSet]) -> Result<(Poset, Vec<usize>)> {
        quotient_of_quasi_order(&self.up, partition)
    }

    /// The same carrier with the order reversed.
    pub fn order_dual(&self) -> Poset {
        let up = (0..self.size)
            .map(|i| ElemSet::from_indices(self.size, (0..self.size).filter(|&j| self.leq(j, i))))
            .collect();
        Poset { size: self.size, up }
    }

    /// Covering pairs `(i, j)` with `i ⋖ j`, in ascending `(i, j)` order.
    /// This is the edge set of the Hasse diagram.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.size {
            for j in self.up[i].iter() {
                if i == j {
                    continue;
                }
                let between =
                    (0..self.size).any(|k| k != i && k != j && self.leq(i, k) && self.leq(k, j));
                if !between {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn is_antichain(&self) -> bool {
        (0..self.size).all(|i| self.up[i].len() == 1)
    }

    /// All up-closed subsets in ascending numeric order. `bound` caps how
    /// many are collected before giving up with a capacity error.
    pub fn enumerate_upsets(&self, bound: usize) -> Result<Vec<ElemSet>> {
        // Process elements so that everything strictly above x is decided
        // before x; sorting by |↑x| ascending is such an order.
        let mut order: Vec<usize> = (0..self.size).collect();
        order.sort_by_key(|&i| (self.up[i].len(), i));
        let mut strictly_up: Vec<ElemSet> = Vec::with_capacity(self.size);
        for i in 0..self.size {
            let mut s = self.up[i].clone();
            s.remove(i);
            strictly_up.push(s);
        }
        let mut out = Vec::new();
        let mut current = ElemSet::empty(self.size);
        self.upset_dfs(&order, &strictly_up, 0, &mut current, &mut out, bound)?;
        out.sort();
        Ok(out)
    }

    fn upset_dfs(
        &self,
        order: &[usize],
        strictly_up: &[ElemSet],
        k: usize,
        current: &mut ElemSet,
        out: &mut Vec<ElemSet>,
        bound: usize,
    ) -> Result<()> {
        if k == order.len() {
            if out.len() >= bound {
                return Err(Error::CapacityExceeded { requested: bound + 1, bound });
            }
            out.push(current.clone());
            return Ok(());
        }
        let x = order[k];
        self.upset_dfs(order, strictly_up, k + 1, current, out, bound)?;
        if strictly_up[x].is_subset(current) {
            current.insert(x);
            self.upset_dfs(order, strictly_up, k + 1, current, out, bound)?;
            current.remove(x);
        }
        Ok(())
    }
}

impl std::fmt::Debug for Poset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Poset({} elements, covers {:?})", self.size, self.covers())
    }
}

/// Quotient of a reflexive-transitive relation (given as successor rows) by a
/// partition of its carrier.
///
/// The partition must be *compatible*: any two blocks are related either for
/// all representative pairs or for none (this is exactly "each block is
/// contained in a cluster `x ~ y ⟺ xRy ∧ yRx`"). The induced relation must
/// additionally be antisymmetric — splitting a cluster across blocks is
/// rejected — so the result always satisfies the poset laws. Blocks are
/// numbered by ascending least member; the returned vector maps each element
/// to its block index.
pub fn quotient_of_quasi_order(
    rows: &[ElemSet],
    partition: &[ElemSet],
) -> Result<(Poset, Vec<usize>)> {
    let n = rows.len();
    for (i, row) in rows.iter().enumerate() {
        if !row.contains(i) {
            return Err(Error::NotAPartialOrder { law: "reflexivity", a: i, b: i });
        }
        for j in row.iter() {
            if !rows[j].is_subset(row) {
                let k = rows[j].difference(row).first().unwrap();
                return Err(Error::NotAPartialOrder { law: "transitivity", a: i, b: k });
            }
        }
    }
    // Partition checks: nonempty, disjoint, covering.
    let mut seen = ElemSet::empty(n);
    for block in partition {
        if block.universe() != n {
            return Err(Error::IndexOutOfRange { index: block.universe(), size: n });
        }
        if block.is_empty() {
            return Err(Error::NotAPartition { reason: "empty block", witness: 0 });
        }
        if !seen.is_disjoint(block) {
            let w = seen.intersection(block).first().unwrap();
            return Err(Error::NotAPartition { reason: "overlapping blocks", witness: w });
        }
        seen.union_with(block);
    }
    if seen.len() != n {
        let w = seen.complement().first().unwrap();
        return Err(Error::NotAPartition { reason: "element not covered", witness: w });
    }

    let mut blocks: Vec<ElemSet> = partition.to_vec();
    blocks.sort_by_key(|b| b.first().unwrap());
    let m = blocks.len();
    let mut class_of = vec![0usize; n];
    for (k, block) in blocks.iter().enumerate() {
        for x in block.iter() {
            class_of[x] = k;
        }
    }

    // Compatibility: relations between blocks must not depend on the
    // representatives chosen.
    let mut up = Vec::with_capacity(m);
    for (ka, block_a) in blocks.iter().enumerate() {
        let mut row = ElemSet::empty(m);
        for (kb, block_b) in blocks.iter().enumerate() {
            let mut related: Option<(usize, usize)> = None;
            let mut unrelated: Option<(usize, usize)> = None;
            for x in block_a.iter() {
                for y in block_b.iter() {
                    if ka == kb && x == y {
                        continue; // reflexive pairs carry no information
                    }
                    if rows[x].contains(y) {
                        related.get_or_insert((x, y));
                    } else {
                        unrelated.get_or_insert((x, y));
                    }
                }
            }
            if let (Some((a, b)), Some((c, d))) = (related, unrelated) {
                return Err(Error::QuotientNotWellDefined { a, b, c, d });
            }
            if ka == kb || related.is_some() {
                row.insert(kb);
            }
        }
        up.push(row);
    }
    // The induced relation is reflexive and transitive by construction;
    // antisymmetry can still fail if a cluster was split across blocks.
    let quotient = Poset::from_up_rows(up)?;
    Ok((quotient, class_of))
}

/// Searches for an order isomorphism `p → q`, returned as an index map.
///
/// Colors are refined by iterated up/down neighborhood signatures, then a
/// backtracking search runs inside the color classes. Intended for the small
/// carriers handled in this crate (≤ a few dozen elements).
pub fn find_order_isomorphism(p: &Poset, q: &Poset) -> Option<Vec<usize>> {
    let n = p.size();
    if n != q.size() {
        return None;
    }
    let refine = |poset: &Poset, colors: &[u32]| -> Vec<Vec<u32>> {
        (0..n)
            .map(|x| {
                let mut above: Vec<u32> =
                    (0..n).filter(|&y| y != x && poset.leq(x, y)).map(|y| colors[y]).collect();
                let mut below: Vec<u32> =
                    (0..n).filter(|&y| y != x && poset.leq(y, x)).map(|y| colors[y]).collect();
                above.sort_unstable();
                below.sort_unstable();
                let mut sig = vec![colors[x], u32::MAX];
                sig.extend(&above);
                sig.push(u32::MAX);
                sig.extend(&below);
                sig
            })
            .collect()
    };
    let mut colors_p = vec![0u32; n];
    let mut colors_q = vec![0u32; n];
    loop {
        let sig_p = refine(p, &colors_p);
        let sig_q = refine(q, &colors_q);
        let mut palette: std::collections::BTreeMap<&[u32], u32> = std::collections::BTreeMap::new();
        for sig in sig_p.iter().chain(sig_q.iter()) {
            let next = palette.len() as u32;
            palette.entry(sig).or_insert(next);
        }
        let new_p: Vec<u32> = sig_p.iter().map(|s| palette[s.as_slice()]).collect();
        let new_q: Vec<u32> = sig_q.iter().map(|s| palette[s.as_slice()]).collect();
        let stable = new_p == colors_p && new_q == colors_q;
        colors_p = new_p;
        colors_q = new_q;
        if stable {
            break;
        }
    }
    {
        let mut hist_p = colors_p.clone();
        let mut hist_q = colors_q.clone();
        hist_p.sort_unstable();
        hist_q.sort_unstable();
        if hist_p != hist_q {
            return None;
        }
    }

    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn backtrack(
        p: &Poset,
        q: &Poset,
        colors_p: &[u32],
        colors_q: &[u32],
        x: usize,
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        let n = p.size();
        if x == n {
            return true;
        }
        for y in 0..n {
            if used[y] || colors_p[x] != colors_q[y] {
                continue;
            }
            let consistent = (0..x).all(|x2| {
                p.leq(x, x2) == q.leq(y, map[x2]) && p.leq(x2, x) == q.leq(map[x2], y)
            });
            if consistent {
                map[x] = y;
                used[y] = true;
                if backtrack(p, q, colors_p, colors_q, x + 1, map, used) {
                    return true;
                }
                used[y] = false;
                map[x] = usize::MAX;
            }
        }
        false
    }
    if backtrack(p, q, &colors_p, &colors_q, 0, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Diamond: 0 < 1 < 3, 0 < 2 < 3, with 1 and 2 incomparable.
    fn diamond() -> Poset {
        Poset::from_pairs(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap()
    }

    #[test]
    fn closures_on_small_posets() {
        let two = Poset::chain(2);
        assert_eq!(
            two.up_closure(&ElemSet::singleton(2, 0)).unwrap(),
            ElemSet::from_indices(2, [0, 1])
        );
        assert!(two.up_closure(&ElemSet::empty(2)).unwrap().is_empty());
        let d = diamond();
        assert_eq!(
            d.up_closure(&ElemSet::singleton(4, 1)).unwrap(),
            ElemSet::from_indices(4, [1, 3])
        );
        assert_eq!(
            d.down_closure(&ElemSet::singleton(4, 1)).unwrap(),
            ElemSet::from_indices(4, [0, 1])
        );
    }

    #[test]
    fn max_and_min_points() {
        let c5 = Poset::chain(5);
        assert_eq!(c5.max_points(&ElemSet::full(5)).unwrap(), ElemSet::singleton(5, 4));
        assert_eq!(c5.min_points(&ElemSet::full(5)).unwrap(), ElemSet::singleton(5, 0));
        let a3 = Poset::antichain(3);
        assert_eq!(a3.max_points(&ElemSet::full(3)).unwrap(), ElemSet::full(3));
        let d = diamond();
        let c = ElemSet::from_indices(4, [0, 1, 2]);
        assert_eq!(d.max_points(&c).unwrap(), ElemSet::from_indices(4, [1, 2]));
        assert!(d.max_points(&ElemSet::empty(4)).unwrap().is_empty());
    }

    #[test]
    fn products() {
        let two = Poset::chain(2);
        let square = two.product(&two).unwrap();
        assert!(find_order_isomorphism(&square, &diamond()).is_some());
        let p = diamond();
        let same = p.product(&Poset::chain(1)).unwrap();
        assert!(find_order_isomorphism(&same, &p).is_some());
        let cube3 = two.product(&two).unwrap().product(&two).unwrap();
        assert_eq!(cube3.size(), 8);
        // bottom of the cube has exactly three covers
        let bottom_covers = cube3.covers().iter().filter(|&&(i, _)| i == 0).count();
        assert_eq!(bottom_covers, 3);
        assert!(matches!(
            Poset::chain(2048).product_with_capacity(&Poset::chain(2048), 1 << 20),
            Err(Error::CapacityExceeded { requested, bound: 1048576 }) if requested == 4194304
        ));
    }

    #[test]
    fn quotients() {
        // quasi-order: x ~ y (a 2-cluster) strictly below z
        let rows = vec![
            ElemSet::from_indices(3, [0, 1, 2]),
            ElemSet::from_indices(3, [0, 1, 2]),
            ElemSet::from_indices(3, [2]),
        ];
        let blocks = vec![ElemSet::from_indices(3, [0, 1]), ElemSet::singleton(3, 2)];
        let (q, class_of) = quotient_of_quasi_order(&rows, &blocks).unwrap();
        assert!(find_order_isomorphism(&q, &Poset::chain(2)).is_some());
        assert_eq!(class_of, vec![0, 0, 1]);

        // splitting the cluster is rejected: the induced relation loses antisymmetry
        let split = vec![ElemSet::singleton(3, 0), ElemSet::singleton(3, 1), ElemSet::singleton(3, 2)];
        assert!(matches!(
            quotient_of_quasi_order(&rows, &split),
            Err(Error::NotAPartialOrder { law: "antisymmetry", .. })
        ));

        // a one-cluster quasi-order collapses to a point
        let pair = vec![ElemSet::from_indices(2, [0, 1]), ElemSet::from_indices(2, [0, 1])];
        let (point, _) = quotient_of_quasi_order(&pair, &[ElemSet::from_indices(2, [0, 1])]).unwrap();
        assert_eq!(point.size(), 1);

        // on an honest poset only the identity partition is compatible
        let d = diamond();
        let identity: Vec<ElemSet> = (0..4).map(|i| ElemSet::singleton(4, i)).collect();
        let (q, map) = d.quotient(&identity).unwrap();
        assert!(find_order_isomorphism(&q, &d).is_some());
        assert_eq!(map, vec![0, 1, 2, 3]);
        let coarse = vec![ElemSet::from_indices(4, [0, 3]), ElemSet::from_indices(4, [1, 2])];
        assert!(matches!(d.quotient(&coarse), Err(Error::QuotientNotWellDefined { .. })));
    }

    #[test]
    fn duals_and_covers() {
        let d = diamond();
        let dd = d.order_dual().order_dual();
        assert_eq!(d, dd);
        assert_eq!(
            d.order_dual().max_points(&ElemSet::full(4)).unwrap(),
            d.min_points(&ElemSet::full(4)).unwrap()
        );
        assert_eq!(d.covers(), vec![(0, 1), (0, 2), (1, 3), (2, 3)]);
    }

    #[test]
    fn upset_enumeration() {
        assert_eq!(Poset::chain(2).enumerate_upsets(64).unwrap().len(), 3);
        assert_eq!(Poset::antichain(2).enumerate_upsets(64).unwrap().len(), 4);
        assert_eq!(diamond().enumerate_upsets(64).unwrap().len(), 6);
        // ascending numeric order, ∅ first, full carrier last
        let ups = diamond().enumerate_upsets(64).unwrap();
        assert!(ups.first().unwrap().is_empty());
        assert_eq!(*ups.last().unwrap(), ElemSet::full(4));
        assert!(ups.windows(2).all(|w| w[0] < w[1]));
        assert!(matches!(
            Poset::antichain(8).enumerate_upsets(100),
            Err(Error::CapacityExceeded { bound: 100, .. })
        ));
    }

    #[test]
    fn isomorphism_search() {
        // same degree sequence, different orders: chain+point vs diamond minus top
        let p = Poset::from_pairs(3, &[(0, 1)]).unwrap();
        let q = Poset::from_pairs(3, &[(0, 2)]).unwrap();
        let map = find_order_isomorphism(&p, &q).unwrap();
        assert_eq!(map[0], 0);
        assert_eq!(map[1], 2);
        assert!(find_order_isomorphism(&Poset::chain(3), &Poset::antichain(3)).is_none());
        let v = Poset::from_pairs(3, &[(0, 1), (0, 2)]).unwrap();
        let lambda = Poset::from_pairs(3, &[(1, 0), (2, 0)]).unwrap();
        assert!(find_order_isomorphism(&v, &lambda).is_none());
        assert!(find_order_isomorphism(&v, &lambda.order_dual()).is_some());
    }

    #[test]
    fn rejects_non_orders() {
        assert!(matches!(
            Poset::from_pairs(2, &[(0, 1), (1, 0)]),
            Err(Error::NotAPartialOrder { law: "antisymmetry", .. })
        ));
        assert!(matches!(
            Poset::from_pairs(2, &[(0, 5)]),
            Err(Error::IndexOutOfRange { index: 5, size: 2 })
        ));
        let no_refl = vec![ElemSet::empty(1)];
        assert!(matches!(
            Poset::from_up_rows(no_refl),
            Err(Error::NotAPartialOrder { law: "reflexivity", .. })
        ));
    }

    prop_compose! {
        /// Random poset: random strict edges among 1..=6 indices, transitively closed.
        fn arb_poset()(n in 1usize..=6, bits in proptest::collection::vec(any::<bool>(), 36))
            -> Poset
        {
            let mut pairs = Vec::new();
            for i in 0..n {
                for j in (i + 1)..n {
                    if bits[i * 6 + j] {
                        pairs.push((i, j));
                    }
                }
            }
            // edges only point from lower to higher index, so closure is a poset
            Poset::from_pairs(n, &pairs).unwrap()
        }
    }

    proptest! {
        #[test]
        fn closure_laws(p in arb_poset(), bits in proptest::collection::vec(any::<bool>(), 6)) {
            let s = ElemSet::from_indices(p.size(), (0..p.size()).filter(|&i| bits[i]));
            let up = p.up_closure(&s).unwrap();
            prop_assert!(s.is_subset(&up));
            prop_assert_eq!(p.up_closure(&up).unwrap(), up.clone());
            let bigger = p.up_closure(&ElemSet::full(p.size())).unwrap();
            prop_assert!(up.is_subset(&bigger));
            // down closure is up closure in the order dual
            prop_assert_eq!(p.down_closure(&s).unwrap(), p.order_dual().up_closure(&s).unwrap());
        }

        #[test]
        fn max_points_nonempty(p in arb_poset()) {
            let c = ElemSet::full(p.size());
            prop_assert!(!p.max_points(&c).unwrap().is_empty());
            prop_assert!(!p.min_points(&c).unwrap().is_empty());
            // maximal points are up-closed's fixed points: nothing strictly above
            for x in p.max_points(&c).unwrap().iter() {
                prop_assert_eq!(p.up_row(x).len(), 1);
            }
        }

        #[test]
        fn quotient_by_identity_is_isomorphism(p in arb_poset()) {
            let identity: Vec<ElemSet> =
                (0..p.size()).map(|i| ElemSet::singleton(p.size(), i)).collect();
            let (q, map) = p.quotient(&identity).unwrap();
            prop_assert_eq!(map, (0..p.size()).collect::<Vec<_>>());
            prop_assert!(find_order_isomorphism(&p, &q).is_some());
        }
    }
}
