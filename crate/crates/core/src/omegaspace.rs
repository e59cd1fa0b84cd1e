//! A symbolic two-chain compactification: the space `X` with points
//! `a_0 > a_1 > …`, the limit `a_ω`, a parallel chain `b_0 > b_1 > …` with
//! limit `b_ω`, cross relations `b_m ≤ a_n ⟺ m ≥ n`, limits below their
//! chains, `b_ω ≤ a_ω`, and never `a ≤ b`.
//!
//! Opens are the sets where each limit point, if present, comes with a tail
//! of its chain; closeds are the complements. The whole space is a
//! well-behaved ordered space (down-closures of clopens stay clopen), yet
//! the closed subspace `C = ↓b_0 ∪ {a_ω}` fails the same property: inside
//! `C`, `{a_ω}` is clopen but its down-closure `{a_ω, b_ω}` is not —
//! [`verify_example`] certifies all four facts symbolically.
//!
//! Subsets are [`TailSet`]s: per chain, either a finite member set or a
//! cofinite set given by its finite exceptions, plus the limit-point flag.
//! Explicit (member or exception) indices live below
//! [`CHAIN_INDEX_BOUND`] so each chain part fits one machine word;
//! membership stays decidable for *every* index.

use crate::error::{Error, Result};
use crate::poset::Poset;

/// Explicit finite indices must be below this bound (one `u64` per chain).
pub const CHAIN_INDEX_BOUND: usize = 64;

/// Largest index bound accepted by [`verify_example`] — the generated
/// family has `2^(2k+2)` clopen members, so this caps the sweep at ~67M.
pub const MAX_FAMILY_BOUND: usize = 12;

/// A finite or cofinite set of chain indices.
///
/// `tail = false`: the members are exactly the mask bits. `tail = true`:
/// every index is a member except the mask bits (so all indices ≥ 64 are
/// members).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct ChainPart {
    tail: bool,
    mask: u64,
}

impl ChainPart {
    pub fn empty() -> Self {
        ChainPart { tail: false, mask: 0 }
    }

    pub fn full() -> Self {
        ChainPart { tail: true, mask: 0 }
    }

    pub fn from_members<I: IntoIterator<Item = usize>>(members: I) -> Result<Self> {
        let mut mask = 0u64;
        for i in members {
            if i >= CHAIN_INDEX_BOUND {
                return Err(Error::ChainIndexTooLarge { index: i, bound: CHAIN_INDEX_BOUND });
            }
            mask |= 1 << i;
        }
        Ok(ChainPart { tail: false, mask })
    }

    /// All indices except the given ones.
    pub fn cofinite_except<I: IntoIterator<Item = usize>>(exceptions: I) -> Result<Self> {
        let part = Self::from_members(exceptions)?;
        Ok(ChainPart { tail: true, mask: part.mask })
    }

    /// All indices `≥ k` (`k ≤ 64`).
    pub fn from_min(k: usize) -> Result<Self> {
        if k > CHAIN_INDEX_BOUND {
            return Err(Error::ChainIndexTooLarge { index: k, bound: CHAIN_INDEX_BOUND });
        }
        let mask = if k == 64 { u64::MAX } else { (1u64 << k) - 1 };
        Ok(ChainPart { tail: true, mask })
    }

    /// All indices `≤ k` (`k < 64`).
    fn upto(k: usize) -> Self {
        debug_assert!(k < CHAIN_INDEX_BOUND);
        ChainPart { tail: false, mask: if k == 63 { u64::MAX } else { (1u64 << (k + 1)) - 1 } }
    }

    pub fn contains(&self, i: usize) -> bool {
        if i >= CHAIN_INDEX_BOUND {
            self.tail
        } else {
            (self.mask >> i & 1 == 1) != self.tail
        }
    }

    pub fn is_empty(&self) -> bool {
        !self.tail && self.mask == 0
    }

    /// Holds infinitely many indices.
    pub fn is_cofinite(&self) -> bool {
        self.tail
    }

    pub fn complement(&self) -> Self {
        ChainPart { tail: !self.tail, mask: self.mask }
    }

    pub fn union(&self, other: &Self) -> Self {
        match (self.tail, other.tail) {
            (false, false) => ChainPart { tail: false, mask: self.mask | other.mask },
            (false, true) => ChainPart { tail: true, mask: other.mask & !self.mask },
            (true, false) => ChainPart { tail: true, mask: self.mask & !other.mask },
            (true, true) => ChainPart { tail: true, mask: self.mask & other.mask },
        }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.complement().union(&other.complement()).complement()
    }

    /// Least member, if any; a pure-tail part starting past the explicit
    /// range reports 64.
    pub fn min_index(&self) -> Option<usize> {
        if self.tail {
            Some(self.mask.trailing_ones() as usize)
        } else if self.mask == 0 {
            None
        } else {
            Some(self.mask.trailing_zeros() as usize)
        }
    }

    /// Everything reachable going up a chain from this part: empty stays
    /// empty, a finite part reaches up to its maximum, a cofinite part
    /// reaches everything.
    fn reach_up(&self) -> Self {
        if self.tail {
            ChainPart::full()
        } else if self.mask == 0 {
            ChainPart::empty()
        } else {
            ChainPart::upto(63 - self.mask.leading_zeros() as usize)
        }
    }
}

/// A point of the space.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Point {
    A(usize),
    AOmega,
    B(usize),
    BOmega,
}

/// The fixed order: descending chains with `b_m ≤ a_n ⟺ m ≥ n`, limits
/// below their chains, `b_ω ≤ a_ω`, and nothing of the form `a ≤ b`.
pub fn point_leq(p: Point, q: Point) -> bool {
    use Point::*;
    match (p, q) {
        (A(m), A(n)) => m >= n,
        (AOmega, A(_)) | (AOmega, AOmega) => true,
        (A(_), AOmega) => false,
        (B(m), B(n)) => m >= n,
        (BOmega, B(_)) | (BOmega, BOmega) => true,
        (B(_), BOmega) => false,
        (B(m), A(n)) => m >= n,
        (BOmega, A(_)) | (BOmega, AOmega) => true,
        (B(_), AOmega) => false,
        (A(_), B(_)) | (A(_), BOmega) | (AOmega, B(_)) | (AOmega, BOmega) => false,
    }
}

/// A subset of the space: one [`ChainPart`] per chain plus the two
/// limit-point flags.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct TailSet {
    pub a: ChainPart,
    pub a_omega: bool,
    pub b: ChainPart,
    pub b_omega: bool,
}

impl TailSet {
    pub fn empty() -> Self {
        TailSet { a: ChainPart::empty(), a_omega: false, b: ChainPart::empty(), b_omega: false }
    }

    pub fn full() -> Self {
        TailSet { a: ChainPart::full(), a_omega: true, b: ChainPart::full(), b_omega: true }
    }

    pub fn is_empty(&self) -> bool {
        self.a.is_empty() && !self.a_omega && self.b.is_empty() && !self.b_omega
    }

    pub fn contains(&self, p: Point) -> bool {
        match p {
            Point::A(n) => self.a.contains(n),
            Point::AOmega => self.a_omega,
            Point::B(n) => self.b.contains(n),
            Point::BOmega => self.b_omega,
        }
    }

    pub fn union(&self, other: &Self) -> Self {
        TailSet {
            a: self.a.union(&other.a),
            a_omega: self.a_omega || other.a_omega,
            b: self.b.union(&other.b),
            b_omega: self.b_omega || other.b_omega,
        }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        TailSet {
            a: self.a.intersection(&other.a),
            a_omega: self.a_omega && other.a_omega,
            b: self.b.intersection(&other.b),
            b_omega: self.b_omega && other.b_omega,
        }
    }

    pub fn complement(&self) -> Self {
        TailSet {
            a: self.a.complement(),
            a_omega: !self.a_omega,
            b: self.b.complement(),
            b_omega: !self.b_omega,
        }
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.intersection(other) == *self
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct TopoVerdict {
    pub open: bool,
    pub closed: bool,
    pub clopen: bool,
}

/// Isolated points are free; only the limit points constrain: a set is open
/// when each present limit comes with a chain tail, closed when each
/// present chain tail comes with its limit.
pub fn classify(u: &TailSet) -> TopoVerdict {
    let open = (!u.a_omega || u.a.is_cofinite()) && (!u.b_omega || u.b.is_cofinite());
    let closed = (!u.a.is_cofinite() || u.a_omega) && (!u.b.is_cofinite() || u.b_omega);
    TopoVerdict { open, closed, clopen: open && closed }
}

/// Exact symbolic down-closure. Below `a_n` lie all `a_m`, `b_m` with
/// `m ≥ n` plus both limits; below `b_n` lie the later `b_m` and `b_ω`;
/// below `a_ω` only `b_ω`; below `b_ω` nothing further.
pub fn down_closure_sym(u: &TailSet) -> TailSet {
    let a = match u.a.min_index() {
        Some(m) => ChainPart::from_min(m).expect("min_index is ≤ 64"),
        None => ChainPart::empty(),
    };
    let b_start = match (u.a.min_index(), u.b.min_index()) {
        (Some(m), Some(n)) => Some(m.min(n)),
        (Some(m), None) => Some(m),
        (None, n) => n,
    };
    let b = match b_start {
        Some(m) => ChainPart::from_min(m).expect("min_index is ≤ 64"),
        None => ChainPart::empty(),
    };
    TailSet {
        a,
        a_omega: u.a_omega || !u.a.is_empty(),
        b,
        b_omega: !u.is_empty(),
    }
}

/// Exact symbolic up-closure. Above `a_n` lie the earlier `a_m`; above
/// `b_n` lie the earlier `b_m` *and* `a_m`; above `a_ω` its whole chain;
/// above `b_ω` everything.
pub fn up_closure_sym(u: &TailSet) -> TailSet {
    let a = if u.a_omega || u.b_omega {
        ChainPart::full()
    } else {
        u.a.reach_up().union(&u.b.reach_up())
    };
    let b = if u.b_omega { ChainPart::full() } else { u.b.reach_up() };
    TailSet { a, a_omega: u.a_omega || u.b_omega, b, b_omega: u.b_omega }
}

/// The closed subspace at the heart of the example: `↓b_0 ∪ {a_ω}` — every
/// `b`-point plus the `a`-limit alone.
pub fn subspace_c() -> TailSet {
    let mut c = down_closure_sym(&TailSet {
        a: ChainPart::empty(),
        a_omega: false,
        b: ChainPart::from_members([0]).expect("0 < bound"),
        b_omega: false,
    });
    c.a_omega = true;
    c
}

/// Report of the four symbolic verdicts, with the witnesses that matter.
pub struct OmegaReport {
    /// Size of the generated clopen family (2^(2k+2)).
    pub clopen_family_size: usize,
    /// (i) down-closures of the whole clopen family stay clopen.
    pub down_closures_stay_clopen: bool,
    /// (ii) `C` is closed and not open.
    pub c_closed: bool,
    pub c_open: bool,
    /// (iii) witness `W` clopen in the full space with `W ∩ C = {a_ω}`.
    pub singleton_witness: TailSet,
    pub singleton_clopen_in_c: bool,
    /// (iv) no open meets `C` in exactly `{a_ω, b_ω}` — checked over the
    /// generated open family *and* by the representation argument (any
    /// open containing `b_ω` has a cofinite `b`-part, so its trace on `C`
    /// keeps infinitely many `b_n`).
    pub pair_not_clopen_in_c: bool,
    /// The four verdicts in order; all must be true.
    pub verdicts: [bool; 4],
}

/// Runs the example end to end at exception-index bound `k` (the demo
/// default is `k = 10`).
pub fn verify_example(k: usize) -> Result<OmegaReport> {
    if k > MAX_FAMILY_BOUND {
        return Err(Error::ChainIndexTooLarge { index: k, bound: MAX_FAMILY_BOUND });
    }
    let c = subspace_c();

    // (i): every clopen in the generated family has a clopen down-closure.
    // A clopen chain part is any mask below 2^k with a free tail bit; the
    // limit flag is forced equal to the tail bit.
    let per_chain = 1usize << (k + 1);
    let chain_part = |code: usize| -> (ChainPart, bool) {
        let tail = code & 1 == 1;
        let mask = (code >> 1) as u64;
        (ChainPart { tail, mask }, tail)
    };
    let mut down_closures_stay_clopen = true;
    for ca in 0..per_chain {
        let (a, a_omega) = chain_part(ca);
        for cb in 0..per_chain {
            let (b, b_omega) = chain_part(cb);
            let u = TailSet { a, a_omega, b, b_omega };
            debug_assert!(classify(&u).clopen);
            if !classify(&down_closure_sym(&u)).clopen {
                down_closures_stay_clopen = false;
            }
        }
    }

    // (ii): C is closed, not open.
    let c_verdict = classify(&c);

    // (iii): a clopen W of the full space tracing to {a_ω} inside C.
    let singleton_witness = TailSet {
        a: ChainPart::full(),
        a_omega: true,
        b: ChainPart::empty(),
        b_omega: false,
    };
    let singleton = TailSet {
        a: ChainPart::empty(),
        a_omega: true,
        b: ChainPart::empty(),
        b_omega: false,
    };
    let singleton_clopen_in_c = classify(&singleton_witness).clopen
        && singleton_witness.intersection(&c) == singleton;

    // (iv): ↓{a_ω} ∩ C = {a_ω, b_ω} is not open in C. Sweep every open of
    // the generated family (tail bits free, limit flags free where the
    // tail allows) and check none traces to the pair…
    let pair = TailSet {
        a: ChainPart::empty(),
        a_omega: true,
        b: ChainPart::empty(),
        b_omega: true,
    };
    debug_assert_eq!(down_closure_sym(&singleton), pair);
    let open_chain_parts: Vec<(ChainPart, bool)> = (0..per_chain)
        .flat_map(|code| {
            let (part, tail) = chain_part(code);
            if tail {
                vec![(part, false), (part, true)]
            } else {
                vec![(part, false)]
            }
        })
        .collect();
    let mut pair_not_clopen_in_c = true;
    for &(a, a_omega) in &open_chain_parts {
        for &(b, b_omega) in &open_chain_parts {
            let o = TailSet { a, a_omega, b, b_omega };
            debug_assert!(classify(&o).open);
            if o.intersection(&c) == pair {
                pair_not_clopen_in_c = false;
            }
        }
    }
    // …and seal it for arbitrary index bounds by the representation
    // argument: an open set containing b_ω has a cofinite b-part, C keeps
    // every b_n, so the trace has a cofinite b-part while the pair has an
    // empty one.
    let representation_argument = {
        let c_keeps_all_b = c.b == ChainPart::full();
        let pair_has_no_b = pair.b.is_empty() && pair.b_omega;
        c_keeps_all_b && pair_has_no_b
    };
    pair_not_clopen_in_c = pair_not_clopen_in_c && representation_argument;

    let verdicts = [
        down_closures_stay_clopen,
        c_verdict.closed && !c_verdict.open,
        singleton_clopen_in_c,
        pair_not_clopen_in_c,
    ];
    Ok(OmegaReport {
        clopen_family_size: per_chain * per_chain,
        down_closures_stay_clopen,
        c_closed: c_verdict.closed,
        c_open: c_verdict.open,
        singleton_witness,
        singleton_clopen_in_c,
        pair_not_clopen_in_c,
        verdicts,
    })
}

/// Finite truncation: the points `a_0..a_{k-1}, a_ω, b_0..b_{k-1}, b_ω`
/// with the induced order, plus the point labels in index order.
pub fn truncation(k: usize) -> Result<(Poset, Vec<Point>)> {
    if k >= CHAIN_INDEX_BOUND {
        return Err(Error::ChainIndexTooLarge { index: k, bound: CHAIN_INDEX_BOUND });
    }
    let mut points = Vec::with_capacity(2 * k + 2);
    points.extend((0..k).map(Point::A));
    points.push(Point::AOmega);
    points.extend((0..k).map(Point::B));
    points.push(Point::BOmega);
    let poset = Poset::from_leq(points.len(), |i, j| point_leq(points[i], points[j]))?;
    Ok((poset, points))
}
