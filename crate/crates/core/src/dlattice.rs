//! Finite bounded distributive lattices and their filters/ideals.
//!
//! A `DLattice` stores explicit meet/join tables over a carrier `0..size`;
//! the order is derived (`a ≤ b ⟺ a∧b = a`). Filters and ideals are bitsets
//! of the host carrier. Because the carrier is finite, every filter/ideal is
//! principal (a nonempty ∨-closed downset contains the join of its members),
//! which keeps enumeration exact even for the 64-element upset lattices the
//! corpus produces; the unit tests keep an independent brute-force subset
//! scan as the oracle for small carriers.

use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::poset::Poset;
use rand::{Rng, SeedableRng};

/// Bound on lattice carrier sizes; indices fit in the `u16` tables.
pub const DEFAULT_LATTICE_CAPACITY: usize = 8192;

/// Carriers up to this size get exhaustive O(n³) law validation; larger
/// tables are spot-checked with a fixed-seed sample.
const EXHAUSTIVE_VALIDATION_LIMIT: usize = 256;

/// A finite bounded distributive lattice with explicit operation tables.
#[derive(Clone, PartialEq, Eq)]
pub struct DLattice {
    size: usize,
    meet: Vec<u16>,
    join: Vec<u16>,
    bottom: usize,
    top: usize,
}

impl DLattice {
    /// Builds a lattice from meet/join tables, validating the lattice laws
    /// and distributivity (exhaustively up to 256 elements, sampled above).
    pub fn from_tables(meet: &[Vec<usize>], join: &[Vec<usize>]) -> Result<Self> {
        let size = meet.len();
        if size == 0 || size > DEFAULT_LATTICE_CAPACITY {
            return Err(Error::CapacityExceeded { requested: size, bound: DEFAULT_LATTICE_CAPACITY });
        }
        if join.len() != size {
            return Err(Error::IndexOutOfRange { index: join.len(), size });
        }
        let mut flat_meet = Vec::with_capacity(size * size);
        let mut flat_join = Vec::with_capacity(size * size);
        for (row_m, row_j) in meet.iter().zip(join) {
            if row_m.len() != size || row_j.len() != size {
                return Err(Error::IndexOutOfRange { index: row_m.len().max(row_j.len()), size });
            }
            for (&m, &j) in row_m.iter().zip(row_j) {
                if m >= size || j >= size {
                    return Err(Error::IndexOutOfRange { index: m.max(j), size });
                }
                flat_meet.push(m as u16);
                flat_join.push(j as u16);
            }
        }
        let mut bottom = 0usize;
        let mut top = 0usize;
        for a in 1..size {
            bottom = flat_meet[bottom * size + a] as usize;
            top = flat_join[top * size + a] as usize;
        }
        let lat = DLattice { size, meet: flat_meet, join: flat_join, bottom, top };
        lat.validate()?;
        Ok(lat)
    }

    /// Trusted constructor for tables that are lawful by construction
    /// (powersets, upset lattices, free lattices). Debug builds still
    /// spot-check a few triples.
    pub(crate) fn from_flat_unchecked(size: usize, meet: Vec<u16>, join: Vec<u16>, bottom: usize, top: usize) -> Self {
        debug_assert!((1..=DEFAULT_LATTICE_CAPACITY).contains(&size));
        debug_assert_eq!(meet.len(), size * size);
        debug_assert_eq!(join.len(), size * size);
        let lat = DLattice { size, meet, join, bottom, top };
        debug_assert!(lat.validate_sampled(4096).is_ok());
        lat
    }

    /// Checks all lattice laws plus distributivity; returns the first
    /// violation with its witness elements.
    pub fn validate(&self) -> Result<()> {
        let n = self.size;
        for a in 0..n {
            if self.meet(a, a) != a {
                return Err(Error::LatticeLawFailed { law: "idempotence", a, b: a, c: a });
            }
            if self.meet(self.bottom, a) != self.bottom {
                return Err(Error::LatticeLawFailed { law: "bottom", a, b: self.bottom, c: a });
            }
            if self.join(self.top, a) != self.top {
                return Err(Error::LatticeLawFailed { law: "top", a, b: self.top, c: a });
            }
            for b in 0..n {
                if self.meet(a, b) != self.meet(b, a) {
                    return Err(Error::LatticeLawFailed { law: "meet commutativity", a, b, c: a });
                }
                if self.join(a, b) != self.join(b, a) {
                    return Err(Error::LatticeLawFailed { law: "join commutativity", a, b, c: a });
                }
                if self.meet(a, self.join(a, b)) != a || self.join(a, self.meet(a, b)) != a {
                    return Err(Error::LatticeLawFailed { law: "absorption", a, b, c: a });
                }
            }
        }
        if n <= EXHAUSTIVE_VALIDATION_LIMIT {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        self.validate_triple(a, b, c)?;
                    }
                }
            }
        } else {
            self.validate_sampled(200_000)?;
        }
        Ok(())
    }

    fn validate_triple(&self, a: usize, b: usize, c: usize) -> Result<()> {
        if self.meet(a, self.meet(b, c)) != self.meet(self.meet(a, b), c) {
            return Err(Error::LatticeLawFailed { law: "meet associativity", a, b, c });
        }
        if self.join(a, self.join(b, c)) != self.join(self.join(a, b), c) {
            return Err(Error::LatticeLawFailed { law: "join associativity", a, b, c });
        }
        if self.meet(a, self.join(b, c)) != self.join(self.meet(a, b), self.meet(a, c)) {
            return Err(Error::NotDistributive { a, b, c });
        }
        Ok(())
    }

    fn validate_sampled(&self, samples: usize) -> Result<()> {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0xD1A7);
        for _ in 0..samples {
            let a = rng.gen_range(0..self.size);
            let b = rng.gen_range(0..self.size);
            let c = rng.gen_range(0..self.size);
            self.validate_triple(a, b, c)?;
        }
        Ok(())
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a * self.size + b] as usize
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a * self.size + b] as usize
    }

    /// Derived order: `a ≤ b ⟺ a ∧ b = a`.
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.meet(a, b) == a
    }

    /// Principal upset `↑a` as a member set.
    pub fn up_set(&self, a: usize) -> ElemSet {
        ElemSet::from_indices(self.size, (0..self.size).filter(|&b| self.leq(a, b)))
    }

    /// Principal downset `↓a` as a member set.
    pub fn down_set(&self, a: usize) -> ElemSet {
        ElemSet::from_indices(self.size, (0..self.size).filter(|&b| self.leq(b, a)))
    }

    /// The carrier with its derived order, as a poset.
    pub fn order_poset(&self) -> Poset {
        Poset::from_up_rows((0..self.size).map(|a| self.up_set(a)).collect())
            .expect("lattice order satisfies the poset laws")
    }

    /// The lattice with meet and join (hence the order) swapped.
    pub fn order_dual(&self) -> DLattice {
        DLattice {
            size: self.size,
            meet: self.join.clone(),
            join: self.meet.clone(),
            bottom: self.top,
            top: self.bottom,
        }
    }

    /// Elements covering bottom.
    pub fn atoms(&self) -> Vec<usize> {
        (0..self.size)
            .filter(|&a| {
                a != self.bottom
                    && (0..self.size).all(|b| !(self.leq(b, a) && b != a && b != self.bottom))
            })
            .collect()
    }

    /// Elements covered by top.
    pub fn coatoms(&self) -> Vec<usize> {
        (0..self.size)
            .filter(|&a| {
                a != self.top
                    && (0..self.size).all(|b| !(self.leq(a, b) && b != a && b != self.top))
            })
            .collect()
    }

    /// Elements `a ≠ 0` that are not a join of two strictly smaller elements.
    pub fn join_irreducibles(&self) -> Vec<usize> {
        (0..self.size)
            .filter(|&a| {
                a != self.bottom
                    && (0..self.size)
                        .all(|x| (0..self.size).all(|y| self.join(x, y) != a || x == a || y == a))
            })
            .collect()
    }

    /// Elements `a ≠ 1` that are not a meet of two strictly larger elements.
    pub fn meet_irreducibles(&self) -> Vec<usize> {
        (0..self.size)
            .filter(|&a| {
                a != self.top
                    && (0..self.size)
                        .all(|x| (0..self.size).all(|y| self.meet(x, y) != a || x == a || y == a))
            })
            .collect()
    }

    /// The complement of `a`, if one exists (unique by distributivity).
    pub fn complement_of(&self, a: usize) -> Option<usize> {
        (0..self.size)
            .find(|&b| self.meet(a, b) == self.bottom && self.join(a, b) == self.top)
    }

    /// Errors with the least complement-free element if the lattice is not
    /// Boolean.
    pub fn check_boolean(&self) -> Result<()> {
        for a in 0..self.size {
            if self.complement_of(a).is_none() {
                return Err(Error::NotBoolean { element: a });
            }
        }
        Ok(())
    }

    /// The powerset lattice of `{0, …, w-1}`: element index *is* the subset
    /// mask, so meet/join are bitwise and/or.
    pub fn powerset(w: usize) -> Result<DLattice> {
        let size = 1usize.checked_shl(w as u32).unwrap_or(usize::MAX);
        if size > DEFAULT_LATTICE_CAPACITY {
            return Err(Error::CapacityExceeded { requested: size, bound: DEFAULT_LATTICE_CAPACITY });
        }
        let mut meet = Vec::with_capacity(size * size);
        let mut join = Vec::with_capacity(size * size);
        for a in 0..size {
            for b in 0..size {
                meet.push((a & b) as u16);
                join.push((a | b) as u16);
            }
        }
        Ok(DLattice { size, meet, join, bottom: 0, top: size - 1 })
    }
}

impl std::fmt::Debug for DLattice {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "DLattice({} elements, ⊥={}, ⊤={})", self.size, self.bottom, self.top)
    }
}

/// The lattice of upsets of a poset, with the upsets that realize each
/// element (ascending numeric order, so ∅ is element 0).
pub struct UpsetLattice {
    pub lattice: DLattice,
    pub upsets: Vec<ElemSet>,
}

impl UpsetLattice {
    /// Index of a given upset.
    pub fn index_of(&self, u: &ElemSet) -> Option<usize> {
        self.upsets.binary_search(u).ok()
    }
}

/// Builds the lattice of up-closed subsets of `p` ordered by inclusion.
pub fn from_upsets(p: &Poset) -> Result<UpsetLattice> {
    from_upsets_with_capacity(p, DEFAULT_LATTICE_CAPACITY)
}

pub fn from_upsets_with_capacity(p: &Poset, bound: usize) -> Result<UpsetLattice> {
    let bound = bound.min(DEFAULT_LATTICE_CAPACITY);
    let upsets = p.enumerate_upsets(bound)?;
    let size = upsets.len();
    let lookup = |s: &ElemSet| -> u16 {
        upsets.binary_search(s).expect("upsets are closed under ∩ and ∪") as u16
    };
    let mut meet = Vec::with_capacity(size * size);
    let mut join = Vec::with_capacity(size * size);
    for a in &upsets {
        for b in &upsets {
            meet.push(lookup(&a.intersection(b)));
            join.push(lookup(&a.union(b)));
        }
    }
    let lattice = DLattice { size, meet, join, bottom: 0, top: size - 1 };
    Ok(UpsetLattice { lattice, upsets })
}

/// Which closure property a member set is expected to satisfy.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FiKind {
    Filter,
    Ideal,
}

/// A filter or ideal of a host lattice, stored as its member set.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FilterOrIdeal {
    pub kind: FiKind,
    pub members: ElemSet,
}

impl FilterOrIdeal {
    /// Validates that `members` is a nonempty up-closed ∧-closed set.
    pub fn filter(d: &DLattice, members: ElemSet) -> Result<Self> {
        if members.universe() != d.size() {
            return Err(Error::IndexOutOfRange { index: members.universe(), size: d.size() });
        }
        if members.is_empty() {
            return Err(Error::NotAFilterOrIdeal { kind: "filter", reason: "empty", witness: 0 });
        }
        for a in members.iter() {
            for b in 0..d.size() {
                if d.leq(a, b) && !members.contains(b) {
                    return Err(Error::NotAFilterOrIdeal { kind: "filter", reason: "not up-closed", witness: b });
                }
            }
            for b in members.iter() {
                if !members.contains(d.meet(a, b)) {
                    return Err(Error::NotAFilterOrIdeal { kind: "filter", reason: "not ∧-closed", witness: d.meet(a, b) });
                }
            }
        }
        Ok(FilterOrIdeal { kind: FiKind::Filter, members })
    }

    /// Validates that `members` is a nonempty down-closed ∨-closed set.
    pub fn ideal(d: &DLattice, members: ElemSet) -> Result<Self> {
        if members.universe() != d.size() {
            return Err(Error::IndexOutOfRange { index: members.universe(), size: d.size() });
        }
        if members.is_empty() {
            return Err(Error::NotAFilterOrIdeal { kind: "ideal", reason: "empty", witness: 0 });
        }
        for a in members.iter() {
            for b in 0..d.size() {
                if d.leq(b, a) && !members.contains(b) {
                    return Err(Error::NotAFilterOrIdeal { kind: "ideal", reason: "not down-closed", witness: b });
                }
            }
            for b in members.iter() {
                if !members.contains(d.join(a, b)) {
                    return Err(Error::NotAFilterOrIdeal { kind: "ideal", reason: "not ∨-closed", witness: d.join(a, b) });
                }
            }
        }
        Ok(FilterOrIdeal { kind: FiKind::Ideal, members })
    }

    pub fn principal_filter(d: &DLattice, a: usize) -> Self {
        FilterOrIdeal { kind: FiKind::Filter, members: d.up_set(a) }
    }

    pub fn principal_ideal(d: &DLattice, a: usize) -> Self {
        FilterOrIdeal { kind: FiKind::Ideal, members: d.down_set(a) }
    }

    /// Proper means: a filter avoiding bottom, an ideal avoiding top.
    pub fn is_proper(&self, d: &DLattice) -> bool {
        match self.kind {
            FiKind::Filter => !self.members.contains(d.bottom()),
            FiKind::Ideal => !self.members.contains(d.top()),
        }
    }
}

/// A prime filter together with its complement, which is a prime ideal.
#[derive(Clone, Debug)]
pub struct PrimePair {
    pub filter: FilterOrIdeal,
    pub complement_ideal: FilterOrIdeal,
}

/// All prime filters (proper filters with `a∨b ∈ F ⇒ a ∈ F or b ∈ F`),
/// each tagged with its complement ideal, in ascending numeric order of the
/// filter's member set. Errors on the one-element lattice, which has none.
pub fn enumerate_prime_filters(d: &DLattice) -> Result<Vec<PrimePair>> {
    if d.bottom() == d.top() {
        return Err(Error::TrivialLattice);
    }
    let mut filters: Vec<ElemSet> = Vec::new();
    // finite carrier: every filter is ↑a, proper iff a ≠ ⊥
    for a in 0..d.size() {
        if a == d.bottom() {
            continue;
        }
        let members = d.up_set(a);
        let prime = (0..d.size()).all(|x| {
            (0..d.size()).all(|y| {
                !members.contains(d.join(x, y)) || members.contains(x) || members.contains(y)
            })
        });
        if prime {
            filters.push(members);
        }
    }
    filters.sort();
    filters
        .into_iter()
        .map(|members| {
            let complement = members.complement();
            let complement_ideal = FilterOrIdeal::ideal(d, complement).map_err(|_| {
                Error::InvariantViolation("complement of a prime filter must be an ideal")
            })?;
            Ok(PrimePair {
                filter: FilterOrIdeal { kind: FiKind::Filter, members },
                complement_ideal,
            })
        })
        .collect()
}

/// All prime ideals, enumerated independently of [`enumerate_prime_filters`]
/// (ascending numeric order of member sets).
pub fn enumerate_prime_ideals(d: &DLattice) -> Result<Vec<FilterOrIdeal>> {
    if d.bottom() == d.top() {
        return Err(Error::TrivialLattice);
    }
    let mut ideals: Vec<ElemSet> = Vec::new();
    for a in 0..d.size() {
        if a == d.top() {
            continue;
        }
        let members = d.down_set(a);
        let prime = (0..d.size()).all(|x| {
            (0..d.size()).all(|y| {
                !members.contains(d.meet(x, y)) || members.contains(x) || members.contains(y)
            })
        });
        if prime {
            ideals.push(members);
        }
    }
    ideals.sort();
    Ok(ideals
        .into_iter()
        .map(|members| FilterOrIdeal { kind: FiKind::Ideal, members })
        .collect())
}

/// Maximal proper filters, each double-checked by verifying every strictly
/// larger filter is improper. Ascending numeric order.
pub fn maximal_filters(d: &DLattice) -> Vec<FilterOrIdeal> {
    let mut out: Vec<ElemSet> = Vec::new();
    for a in 0..d.size() {
        if a == d.bottom() {
            continue;
        }
        // strictly larger filters are ↑b for b < a; improper means b = ⊥
        let maximal = (0..d.size()).all(|b| !(d.leq(b, a) && b != a) || b == d.bottom());
        if maximal {
            out.push(d.up_set(a));
        }
    }
    out.sort();
    out.into_iter().map(|members| FilterOrIdeal { kind: FiKind::Filter, members }).collect()
}

/// Maximal proper ideals, verified the same way. Ascending numeric order.
pub fn maximal_ideals(d: &DLattice) -> Vec<FilterOrIdeal> {
    let mut out: Vec<ElemSet> = Vec::new();
    for a in 0..d.size() {
        if a == d.top() {
            continue;
        }
        let maximal = (0..d.size()).all(|b| !(d.leq(a, b) && b != a) || b == d.top());
        if maximal {
            out.push(d.down_set(a));
        }
    }
    out.sort();
    out.into_iter().map(|members| FilterOrIdeal { kind: FiKind::Ideal, members }).collect()
}

/// The least (by numeric member-set order) prime ideal containing `i` and
/// disjoint from `f` — the finite prime-ideal-theorem witness.
pub fn pit_witness(d: &DLattice, f: &FilterOrIdeal, i: &FilterOrIdeal) -> Result<FilterOrIdeal> {
    if f.kind != FiKind::Filter {
        return Err(Error::NotAFilterOrIdeal { kind: "filter", reason: "wrong kind passed", witness: 0 });
    }
    if i.kind != FiKind::Ideal {
        return Err(Error::NotAFilterOrIdeal { kind: "ideal", reason: "wrong kind passed", witness: 0 });
    }
    if !f.members.is_disjoint(&i.members) {
        let witness = f.members.intersection(&i.members).first().unwrap();
        return Err(Error::NotDisjoint { witness });
    }
    for pair in enumerate_prime_ideals(d)? {
        if i.members.is_subset(&pair.members) && pair.members.is_disjoint(&f.members) {
            return Ok(pair);
        }
    }
    Err(Error::InvariantViolation("a separating prime ideal exists in every finite distributive lattice"))
}

/// The lattice of ideals of `d` with the canonical embedding `a ↦ ↓a`.
///
/// Ideals are nonempty by convention (they contain bottom), so on a finite
/// carrier they are exactly the principal downsets and `e` is onto — the
/// finite shadow of "the compact elements of Id(D) are the image of e".
pub struct IdealLattice {
    pub lattice: DLattice,
    /// Member sets of the ideals, in ascending numeric order (= element order).
    pub ideals: Vec<ElemSet>,
    /// `embedding[a]` is the index of `↓a` in `ideals`.
    pub embedding: Vec<usize>,
}

pub fn ideal_lattice(d: &DLattice) -> Result<IdealLattice> {
    let mut ideals: Vec<ElemSet> = (0..d.size()).map(|a| d.down_set(a)).collect();
    ideals.sort();
    let index_of = |s: &ElemSet| ideals.binary_search(s).expect("principal ideals are closed under the induced operations");
    let size = ideals.len();
    let mut generator = vec![0usize; size]; // ideal index -> its maximum element
    for a in 0..d.size() {
        generator[index_of(&d.down_set(a))] = a;
    }
    let mut meet = Vec::with_capacity(size * size);
    let mut join = Vec::with_capacity(size * size);
    for i in 0..size {
        for j in 0..size {
            // I ∩ J = ↓(a∧b); the ideal generated by I ∪ J is ↓(a∨b)
            meet.push(index_of(&d.down_set(d.meet(generator[i], generator[j]))) as u16);
            join.push(index_of(&d.down_set(d.join(generator[i], generator[j]))) as u16);
        }
    }
    let bottom = index_of(&d.down_set(d.bottom()));
    let top = index_of(&d.down_set(d.top()));
    let lattice = DLattice { size, meet, join, bottom, top };
    let embedding: Vec<usize> = (0..d.size()).map(|a| index_of(&d.down_set(a))).collect();

    // e must be a bounded-lattice embedding (and, finitely, onto).
    let mut seen = vec![false; size];
    for a in 0..d.size() {
        if std::mem::replace(&mut seen[embedding[a]], true) {
            return Err(Error::InvariantViolation("↓ is injective on a finite carrier"));
        }
        for b in 0..d.size() {
            if embedding[d.meet(a, b)] != lattice.meet(embedding[a], embedding[b])
                || embedding[d.join(a, b)] != lattice.join(embedding[a], embedding[b])
            {
                return Err(Error::InvariantViolation("↓ preserves meet and join"));
            }
        }
    }
    if embedding[d.bottom()] != lattice.bottom() || embedding[d.top()] != lattice.top() {
        return Err(Error::InvariantViolation("↓ preserves the bounds"));
    }
    Ok(IdealLattice { lattice, ideals, embedding })
}

/// One maximality-transfer check: a maximal ideal of Id(D), its pullback
/// along `e`, and the per-element witnesses used by the transfer argument.
#[derive(Clone, Debug)]
pub struct ClMaxCase {
    /// Members of the maximal ideal of Id(D), as indices into `ideals`.
    pub maximal_ideal: ElemSet,
    /// `e⁻¹[M]` as a member set of the base lattice.
    pub pullback: ElemSet,
    /// Whether the pullback is itself a maximal ideal of the base lattice.
    pub pullback_is_maximal: bool,
    /// For every ideal `N ⊋ e⁻¹[M]` and every `a ∈ N ∖ e⁻¹[M]`, an ideal
    /// `I ∈ M` and `b ∈ I` with `a ∨ b = ⊤` (all least-index choices).
    pub probes: Vec<ClMaxProbe>,
}

#[derive(Clone, Debug)]
pub struct ClMaxProbe {
    pub larger_ideal: ElemSet,
    pub a: usize,
    pub ideal_in_m: usize,
    pub b: usize,
}

/// Pulls every maximal ideal of Id(D) back along `e(a) = ↓a` and verifies
/// maximality transfers, recording the witnesses the argument turns on.
pub fn clmax_pullback(d: &DLattice) -> Result<Vec<ClMaxCase>> {
    let id = ideal_lattice(d)?;
    let max_of_base = maximal_ideals(d);
    let mut cases = Vec::new();
    for m in maximal_ideals(&id.lattice) {
        let pullback = ElemSet::from_indices(
            d.size(),
            (0..d.size()).filter(|&a| m.members.contains(id.embedding[a])),
        );
        let pullback_is_maximal = max_of_base.iter().any(|mi| mi.members == pullback);
        let mut probes = Vec::new();
        for n in &id.ideals {
            if pullback.is_subset(n) && *n != pullback {
                for a in n.difference(&pullback).iter() {
                    let mut found = None;
                    'search: for i_idx in m.members.iter() {
                        for b in id.ideals[i_idx].iter() {
                            if d.join(a, b) == d.top() {
                                found = Some((i_idx, b));
                                break 'search;
                            }
                        }
                    }
                    let (ideal_in_m, b) = found.ok_or(Error::InvariantViolation(
                        "the maximality-transfer witness exists for every strictly larger ideal",
                    ))?;
                    probes.push(ClMaxProbe { larger_ideal: n.clone(), a, ideal_in_m, b });
                }
            }
        }
        cases.push(ClMaxCase { maximal_ideal: m.members, pullback, pullback_is_maximal, probes });
    }
    Ok(cases)
}

/// The powerset of the prime-filter set with the Stone-style embedding
/// `a ↦ σ(a) = { prime filters containing a }`.
pub struct BooleanEnvelope {
    pub envelope: DLattice,
    /// Prime filters of the base, in canonical order (the envelope's points).
    pub points: Vec<PrimePair>,
    /// `embedding[a]` is the envelope element (subset mask) `σ(a)`.
    pub embedding: Vec<usize>,
}

pub fn boolean_envelope(d: &DLattice) -> Result<BooleanEnvelope> {
    let points = enumerate_prime_filters(d)?;
    let envelope = DLattice::powerset(points.len())?;
    let mut embedding = Vec::with_capacity(d.size());
    for a in 0..d.size() {
        let mut mask = 0usize;
        for (k, p) in points.iter().enumerate() {
            if p.filter.members.contains(a) {
                mask |= 1 << k;
            }
        }
        embedding.push(mask);
    }
    // σ is a bounded-lattice embedding …
    let mut seen = std::collections::BTreeSet::new();
    for a in 0..d.size() {
        if !seen.insert(embedding[a]) {
            return Err(Error::InvariantViolation("σ separates elements (prime filters suffice finitely)"));
        }
        for b in 0..d.size() {
            if embedding[d.meet(a, b)] != embedding[a] & embedding[b]
                || embedding[d.join(a, b)] != embedding[a] | embedding[b]
            {
                return Err(Error::InvariantViolation("σ preserves meet and join"));
            }
        }
    }
    if embedding[d.bottom()] != 0 || embedding[d.top()] != envelope.top() {
        return Err(Error::InvariantViolation("σ preserves the bounds"));
    }
    // … and every prime ideal of the envelope restricts to a prime ideal
    // of the base: the prime ideals of a powerset are {S | k ∉ S}.
    let base_prime_ideals = enumerate_prime_ideals(d)?;
    for k in 0..points.len() {
        let restricted = ElemSet::from_indices(
            d.size(),
            (0..d.size()).filter(|&a| embedding[a] >> k & 1 == 0),
        );
        if !base_prime_ideals.iter().any(|pi| pi.members == restricted) {
            return Err(Error::InvariantViolation("prime ideals of the envelope restrict to prime ideals"));
        }
    }
    Ok(BooleanEnvelope { envelope, points, embedding })
}

/// Quotients `d` by the congruence generated by the given kernel pairs.
///
/// The pairs are first closed into an equivalence; the substitution
/// property (`a ~ b ⇒ a∧c ~ b∧c and a∨c ~ b∨c`) is then *validated*, not
/// assumed, with the violating instance named in the error. Classes are
/// numbered by ascending least member; returns the quotient lattice and the
/// class map.
pub fn quotient_by_congruence(d: &DLattice, pairs: &[(usize, usize)]) -> Result<(DLattice, Vec<usize>)> {
    let n = d.size();
    for &(a, b) in pairs {
        if a >= n || b >= n {
            return Err(Error::IndexOutOfRange { index: a.max(b), size: n });
        }
    }
    // union-find with least-member representatives
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for &(a, b) in pairs {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra != rb {
            let (lo, hi) = (ra.min(rb), ra.max(rb));
            parent[hi] = lo;
        }
    }
    let mut reps: Vec<usize> = (0..n).filter(|&x| find(&mut parent, x) == x).collect();
    reps.sort_unstable();
    let mut class_of = vec![0usize; n];
    for (x, class) in class_of.iter_mut().enumerate() {
        let r = find(&mut parent, x);
        *class = reps.binary_search(&r).unwrap();
    }
    // substitution must hold for *all* equivalent pairs
    for a in 0..n {
        for b in (a + 1)..n {
            if class_of[a] != class_of[b] {
                continue;
            }
            for c in 0..n {
                if class_of[d.meet(a, c)] != class_of[d.meet(b, c)] {
                    return Err(Error::NotACongruence { op: "meet", a, b, c });
                }
                if class_of[d.join(a, c)] != class_of[d.join(b, c)] {
                    return Err(Error::NotACongruence { op: "join", a, b, c });
                }
            }
        }
    }
    let m = reps.len();
    let mut meet = Vec::with_capacity(m * m);
    let mut join = Vec::with_capacity(m * m);
    for &ra in &reps {
        for &rb in &reps {
            meet.push(class_of[d.meet(ra, rb)] as u16);
            join.push(class_of[d.join(ra, rb)] as u16);
        }
    }
    let quotient = DLattice {
        size: m,
        meet,
        join,
        bottom: class_of[d.bottom()],
        top: class_of[d.top()],
    };
    quotient.validate()?;
    Ok((quotient, class_of))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::find_order_isomorphism;

    fn chain_lattice(n: usize) -> DLattice {
        let meet: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| a.min(b)).collect()).collect();
        let join: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| a.max(b)).collect()).collect();
        DLattice::from_tables(&meet, &join).unwrap()
    }

    /// Brute-force oracle: all prime filters by scanning every subset.
    fn prime_filters_by_scan(d: &DLattice) -> Vec<ElemSet> {
        let n = d.size();
        assert!(n <= 16);
        let mut out = Vec::new();
        for mask in 1u32..(1 << n) {
            let members = ElemSet::from_indices(n, (0..n).filter(|&i| mask >> i & 1 == 1));
            let up_closed = members
                .iter()
                .all(|a| (0..n).all(|b| !d.leq(a, b) || members.contains(b)));
            let meet_closed = members
                .iter()
                .all(|a| members.iter().all(|b| members.contains(d.meet(a, b))));
            let proper = !members.contains(d.bottom());
            let prime = (0..n).all(|x| {
                (0..n).all(|y| !members.contains(d.join(x, y)) || members.contains(x) || members.contains(y))
            });
            if up_closed && meet_closed && proper && prime {
                out.push(members);
            }
        }
        out.sort();
        out
    }

    #[test]
    fn upset_lattices_of_small_posets() {
        let two_point = from_upsets(&Poset::chain(1)).unwrap();
        assert_eq!(two_point.lattice.size(), 2);
        let b4 = from_upsets(&Poset::antichain(2)).unwrap();
        assert_eq!(b4.lattice.size(), 4);
        assert!(b4.lattice.check_boolean().is_ok());
        let three = from_upsets(&Poset::chain(2)).unwrap();
        assert_eq!(three.lattice.size(), 3);
        assert!(matches!(three.lattice.check_boolean(), Err(Error::NotBoolean { element: 1 })));
        // element order is ascending numeric: ∅ first, full last
        assert_eq!(three.lattice.bottom(), 0);
        assert_eq!(three.lattice.top(), 2);
    }

    #[test]
    fn non_distributive_tables_are_rejected() {
        // M3: bottom 0, atoms 1,2,3, top 4 — every pair of atoms meets at 0, joins at 4
        let meet_m3: Vec<Vec<usize>> = (0..5)
            .map(|a| {
                (0..5)
                    .map(|b| {
                        if a == b { a }
                        else if a == 0 || b == 0 { 0 }
                        else if a == 4 { b }
                        else if b == 4 { a }
                        else { 0 }
                    })
                    .collect()
            })
            .collect();
        let join_m3: Vec<Vec<usize>> = (0..5)
            .map(|a| {
                (0..5)
                    .map(|b| {
                        if a == b { a }
                        else if a == 4 || b == 4 { 4 }
                        else if a == 0 { b }
                        else if b == 0 { a }
                        else { 4 }
                    })
                    .collect()
            })
            .collect();
        assert!(matches!(DLattice::from_tables(&meet_m3, &join_m3), Err(Error::NotDistributive { .. })));

        // N5: 0 < a(1) < c(3) < 1(4), 0 < b(2) < 1, b incomparable to a and c
        let leq = |x: usize, y: usize| -> bool {
            x == y || x == 0 || y == 4 || (x == 1 && y == 3)
        };
        let meet_n5: Vec<Vec<usize>> = (0..5)
            .map(|a| {
                (0..5)
                    .map(|b| (0..5).filter(|&c| leq(c, a) && leq(c, b)).max_by_key(|&c| (0..5).filter(|&x| leq(x, c)).count()).unwrap())
                    .collect()
            })
            .collect();
        let join_n5: Vec<Vec<usize>> = (0..5)
            .map(|a| {
                (0..5)
                    .map(|b| (0..5).filter(|&c| leq(a, c) && leq(b, c)).min_by_key(|&c| (0..5).filter(|&x| leq(x, c)).count()).unwrap())
                    .collect()
            })
            .collect();
        assert!(matches!(DLattice::from_tables(&meet_n5, &join_n5), Err(Error::NotDistributive { .. })));
    }

    #[test]
    fn prime_filters_match_subset_scan() {
        for d in [
            chain_lattice(2),
            chain_lattice(3),
            chain_lattice(5),
            from_upsets(&Poset::antichain(2)).unwrap().lattice,
            from_upsets(&Poset::from_pairs(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap()).unwrap().lattice,
            DLattice::powerset(3).unwrap(),
        ] {
            let fast: Vec<ElemSet> =
                enumerate_prime_filters(&d).unwrap().into_iter().map(|p| p.filter.members).collect();
            assert_eq!(fast, prime_filters_by_scan(&d), "lattice {d:?}");
        }
        assert_eq!(enumerate_prime_filters(&chain_lattice(2)).unwrap().len(), 1);
        assert_eq!(enumerate_prime_filters(&chain_lattice(3)).unwrap().len(), 2);
        assert_eq!(enumerate_prime_filters(&from_upsets(&Poset::antichain(2)).unwrap().lattice).unwrap().len(), 2);
        assert!(matches!(enumerate_prime_filters(&chain_lattice(1)), Err(Error::TrivialLattice)));
    }

    #[test]
    fn prime_complement_bijection() {
        for d in [chain_lattice(4), DLattice::powerset(3).unwrap()] {
            let pairs = enumerate_prime_filters(&d).unwrap();
            let ideals = enumerate_prime_ideals(&d).unwrap();
            let mut complements: Vec<ElemSet> =
                pairs.iter().map(|p| p.complement_ideal.members.clone()).collect();
            complements.sort();
            let direct: Vec<ElemSet> = ideals.into_iter().map(|i| i.members).collect();
            assert_eq!(complements, direct);
        }
    }

    #[test]
    fn maximal_filters_and_ideals() {
        let d = DLattice::powerset(3).unwrap();
        assert_eq!(maximal_filters(&d).len(), 3);
        assert_eq!(maximal_ideals(&d).len(), 3);
        for m in maximal_ideals(&d) {
            // every maximal ideal is prime
            let primes = enumerate_prime_ideals(&d).unwrap();
            assert!(primes.iter().any(|p| p.members == m.members));
        }
        let c3 = chain_lattice(3);
        assert_eq!(maximal_ideals(&c3).len(), 1);
        assert_eq!(maximal_ideals(&c3)[0].members, ElemSet::from_indices(3, [0, 1]));
    }

    #[test]
    fn pit_witness_separates() {
        let d = DLattice::powerset(3).unwrap();
        // F = ↑{0}, I = ↓{1,2}: disjoint, and the scan must find a prime witness
        let f = FilterOrIdeal::principal_filter(&d, 0b001);
        let i = FilterOrIdeal::principal_ideal(&d, 0b110);
        let p = pit_witness(&d, &f, &i).unwrap();
        assert!(i.members.is_subset(&p.members));
        assert!(p.members.is_disjoint(&f.members));
        // least-index determinism: the witness is the numerically least such ideal
        assert_eq!(p.members, ElemSet::from_indices(8, [0b000, 0b010, 0b100, 0b110]));
        let overlapping = FilterOrIdeal::principal_ideal(&d, 0b111);
        assert!(matches!(pit_witness(&d, &f, &overlapping), Err(Error::NotDisjoint { .. })));
    }

    #[test]
    fn filter_validation() {
        let d = chain_lattice(3);
        assert!(FilterOrIdeal::filter(&d, ElemSet::from_indices(3, [1, 2])).is_ok());
        assert!(matches!(
            FilterOrIdeal::filter(&d, ElemSet::from_indices(3, [1])),
            Err(Error::NotAFilterOrIdeal { reason: "not up-closed", .. })
        ));
        assert!(matches!(
            FilterOrIdeal::filter(&d, ElemSet::empty(3)),
            Err(Error::NotAFilterOrIdeal { reason: "empty", .. })
        ));
        let b4 = DLattice::powerset(2).unwrap();
        assert!(matches!(
            FilterOrIdeal::ideal(&b4, ElemSet::from_indices(4, [0, 1, 2])),
            Err(Error::NotAFilterOrIdeal { reason: "not ∨-closed", .. })
        ));
    }

    #[test]
    fn ideal_lattice_is_isomorphic_copy() {
        // finite carriers: all ideals principal, so Id(D) ≅ D via ↓
        for d in [chain_lattice(2), chain_lattice(3), DLattice::powerset(2).unwrap()] {
            let id = ideal_lattice(&d).unwrap();
            assert_eq!(id.lattice.size(), d.size());
            assert_eq!(id.ideals.len(), d.size());
            // e is onto: the finite version of "compacts = image of e"
            let mut image: Vec<usize> = id.embedding.clone();
            image.sort_unstable();
            assert_eq!(image, (0..d.size()).collect::<Vec<_>>());
            assert!(find_order_isomorphism(&d.order_poset(), &id.lattice.order_poset()).is_some());
        }
    }

    #[test]
    fn clmax_pullback_verifies() {
        for d in [
            chain_lattice(3),
            DLattice::powerset(2).unwrap(),
            DLattice::powerset(3).unwrap(),
            from_upsets(&Poset::from_pairs(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap()).unwrap().lattice,
        ] {
            let cases = clmax_pullback(&d).unwrap();
            assert_eq!(cases.len(), maximal_ideals(&d).len());
            for case in cases {
                assert!(case.pullback_is_maximal);
                for probe in &case.probes {
                    assert!(case.maximal_ideal.contains(probe.ideal_in_m));
                    assert_eq!(d.join(probe.a, probe.b), d.top());
                }
            }
        }
    }

    #[test]
    fn boolean_envelopes() {
        // Boolean input: envelope is an isomorphic copy
        let b4 = DLattice::powerset(2).unwrap();
        let env = boolean_envelope(&b4).unwrap();
        assert_eq!(env.envelope.size(), 4);
        // 3-chain: two prime filters, envelope is the 4-element Boolean lattice
        let env3 = boolean_envelope(&chain_lattice(3)).unwrap();
        assert_eq!(env3.envelope.size(), 4);
        // 2-chain: a single point
        let env2 = boolean_envelope(&chain_lattice(2)).unwrap();
        assert_eq!(env2.envelope.size(), 2);
        // order embedding: a ≤ b in the base iff σ(a) ⊆ σ(b)
        let c = chain_lattice(3);
        let env = boolean_envelope(&c).unwrap();
        for a in 0..3 {
            for b in 0..3 {
                assert_eq!(c.leq(a, b), env.embedding[a] & !env.embedding[b] == 0);
            }
        }
    }

    #[test]
    fn congruence_quotients() {
        let c3 = chain_lattice(3);
        // collapsing the top pair {1, 2} leaves a 2-chain
        let (q, class_of) = quotient_by_congruence(&c3, &[(1, 2)]).unwrap();
        assert_eq!(q.size(), 2);
        assert_eq!(class_of, vec![0, 1, 1]);
        // identity congruence: isomorphic copy
        let (q, _) = quotient_by_congruence(&c3, &[]).unwrap();
        assert_eq!(q.size(), 3);
        // only the equivalence closure is taken: gluing ⊥ to an atom of 2²
        // without the forced companion pair fails substitution…
        let b4 = DLattice::powerset(2).unwrap();
        let err = quotient_by_congruence(&b4, &[(0b00, 0b01)]);
        assert!(matches!(err, Err(Error::NotACongruence { .. })));
        // …and succeeds once the kernel is complete
        let (q, class_of) = quotient_by_congruence(&b4, &[(0b00, 0b01), (0b10, 0b11)]).unwrap();
        assert_eq!(q.size(), 2);
        assert_eq!(class_of[0b00], class_of[0b01]);
        assert_eq!(class_of[0b10], class_of[0b11]);
        // total collapse is a lawful (trivial) congruence
        let (q, _) = quotient_by_congruence(&b4, &[(0b00, 0b01), (0b00, 0b10), (0b00, 0b11)]).unwrap();
        assert_eq!(q.size(), 1);
    }

    #[test]
    fn order_duality_of_lattices() {
        let d = from_upsets(&Poset::from_pairs(3, &[(0, 1)]).unwrap()).unwrap().lattice;
        let dd = d.order_dual();
        assert_eq!(dd.bottom(), d.top());
        assert!(d.order_dual().order_dual() == d);
        // maximal ideals of d correspond to maximal filters of the dual
        assert_eq!(maximal_ideals(&d).len(), maximal_filters(&dd).len());
    }
}
