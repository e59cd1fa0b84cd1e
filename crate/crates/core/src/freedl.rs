//! Free bounded distributive lattices on a small set of generators.
//!
//! Elements are monotone Boolean functions of the generators, stored as
//! truth masks over the 2ⁿ generator subsets (bit `P` = value on subset
//! `P`), so meet and join are bitwise and/or. The carrier is enumerated as
//! the upsets of the subset cube ordered by inclusion, in ascending mask
//! order — a canonical numbering that the rest of the crate can rely on.
//! Sizes grow as 2, 3, 6, 20, 168, 7581; the next one (n = 6) would be
//! 7 828 354 and is past both the table capacity and any desk-scale use,
//! hence the hard generator cap.

use crate::dlattice::{DLattice, DEFAULT_LATTICE_CAPACITY};
use crate::error::{Error, Result};
use crate::poset::Poset;

/// Largest supported generator count.
pub const MAX_GENERATORS: usize = 5;

/// Carrier sizes for n = 0..=5 generators.
pub const FREE_SIZES: [usize; 6] = [2, 3, 6, 20, 168, 7581];

/// A join of meets of generators in minimal form: the sorted list of
/// ⊆-minimal generator subsets (as bit masks). `[]` is ⊥ (empty join) and
/// `[0]` is ⊤ (the single empty meet).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AntichainTerm {
    pub minimals: Vec<u32>,
}

impl AntichainTerm {
    pub fn bottom() -> Self {
        AntichainTerm { minimals: Vec::new() }
    }

    pub fn top() -> Self {
        AntichainTerm { minimals: vec![0] }
    }

    pub fn generator(i: usize) -> Self {
        AntichainTerm { minimals: vec![1 << i] }
    }

    /// Truth mask of the term: bit `p` is set when some minimal set is
    /// contained in `p`.
    pub fn eval_mask(&self, n: usize) -> u64 {
        let mut out = 0u64;
        for p in 0..(1u32 << n) {
            if self.minimals.iter().any(|&a| a & !p == 0) {
                out |= 1 << p;
            }
        }
        out
    }
}

/// Canonical form of an arbitrary join of meets: drop every set that
/// contains another, dedupe, sort ascending.
pub fn normalize(n: usize, sets: &[u32]) -> Result<AntichainTerm> {
    for &s in sets {
        if s >> n != 0 {
            return Err(Error::IndexOutOfRange { index: s as usize, size: 1 << n });
        }
    }
    Ok(AntichainTerm { minimals: minimalize(sets.to_vec()) })
}

/// Keeps the ⊆-minimal masks, deduped and sorted ascending.
fn minimalize(mut sets: Vec<u32>) -> Vec<u32> {
    sets.sort_unstable();
    sets.dedup();
    let keep: Vec<u32> = sets
        .iter()
        .copied()
        .filter(|&s| !sets.iter().any(|&t| t != s && t & !s == 0))
        .collect();
    keep
}

/// The free bounded distributive lattice on `n ≤ 5` generators.
pub struct FreeDL {
    pub n: usize,
    pub lattice: DLattice,
    /// Truth mask of each element, ascending (element 0 is ⊥).
    pub masks: Vec<u64>,
    /// Element index of each generator.
    pub generators: Vec<usize>,
}

impl FreeDL {
    /// Element index of a truth mask, if it is monotone.
    pub fn element_of_mask(&self, mask: u64) -> Option<usize> {
        self.masks.binary_search(&mask).ok()
    }

    /// Element index denoted by a term.
    pub fn element_of(&self, term: &AntichainTerm) -> Result<usize> {
        self.element_of_mask(term.eval_mask(self.n))
            .ok_or(Error::InvariantViolation("terms evaluate to monotone functions"))
    }

    /// Minimal-form term denoting an element: the ⊆-minimal true subsets.
    pub fn term_of(&self, elem: usize) -> AntichainTerm {
        let mask = self.masks[elem];
        let mut minimals = Vec::new();
        for p in 0..(1u32 << self.n) {
            if mask >> p & 1 == 1 {
                let minimal = (0..self.n).all(|i| {
                    let q = p & !(1 << i);
                    q == p || mask >> q & 1 == 0
                });
                if minimal {
                    minimals.push(p);
                }
            }
        }
        AntichainTerm { minimals }
    }

    /// Value of an element on a generator subset.
    pub fn eval(&self, elem: usize, subset: u32) -> bool {
        self.masks[elem] >> subset & 1 == 1
    }
}

/// Builds the free lattice by enumerating the upsets of the subset cube.
pub fn generate_free(n: usize) -> Result<FreeDL> {
    if n > MAX_GENERATORS {
        return Err(Error::GeneratorLimit { n, max: MAX_GENERATORS, next_size: 7_828_354 });
    }
    let points = 1usize << n;
    let cube = Poset::from_leq(points, |a, b| a & !b == 0)?;
    let upsets = cube.enumerate_upsets(DEFAULT_LATTICE_CAPACITY)?;
    let masks: Vec<u64> = upsets.iter().map(|u| u.as_mask()).collect();
    let size = masks.len();
    debug_assert_eq!(size, FREE_SIZES[n]);
    let lookup = |m: u64| -> u16 {
        masks.binary_search(&m).expect("monotone functions are closed under ∧ and ∨") as u16
    };
    let mut meet = Vec::with_capacity(size * size);
    let mut join = Vec::with_capacity(size * size);
    for i in 0..size {
        for j in 0..size {
            meet.push(lookup(masks[i] & masks[j]));
            join.push(lookup(masks[i] | masks[j]));
        }
    }
    let lattice = DLattice::from_flat_unchecked(size, meet, join, 0, size - 1);
    let generators: Vec<usize> = (0..n)
        .map(|i| {
            let mask = AntichainTerm::generator(i).eval_mask(n);
            masks.binary_search(&mask).expect("generators are monotone")
        })
        .collect();
    Ok(FreeDL { n, lattice, masks, generators })
}

/// Minimal transversals of the minimal-set family: the clauses of the
/// conjunctive form, each a mask of generators to be joined. `⊥` yields the
/// single empty clause `[0]`; `⊤` yields no clauses at all.
pub fn conjunctive_form(term: &AntichainTerm) -> Vec<u32> {
    if term.minimals.is_empty() {
        return vec![0];
    }
    // incremental transversal computation: extend each partial transversal
    // by every way of hitting the next set, keeping only ⊆-minimal results
    let mut transversals: Vec<u32> = vec![0];
    for &a in &term.minimals {
        let mut next = Vec::new();
        for &t in &transversals {
            if t & a != 0 {
                next.push(t);
            } else {
                for i in 0..32 {
                    if a >> i & 1 == 1 {
                        next.push(t | 1 << i);
                    }
                }
            }
        }
        transversals = minimalize(next);
    }
    transversals
}

/// The element denoted by one conjunctive clause: the join of the
/// generators in `clause` (bottom when the clause is empty).
pub fn clause_element(fd: &FreeDL, clause: u32) -> usize {
    let mut mask = 0u64;
    for p in 0..(1u32 << fd.n) {
        if clause & p != 0 {
            mask |= 1 << p;
        }
    }
    fd.element_of_mask(mask).expect("clauses are monotone")
}

/// Decomposes an element as an irredundant meet of meet-irreducibles via
/// the conjunctive form of its minimal term.
pub fn meet_irreducible_decomposition(fd: &FreeDL, elem: usize) -> Vec<usize> {
    conjunctive_form(&fd.term_of(elem))
        .into_iter()
        .map(|clause| clause_element(fd, clause))
        .collect()
}

/// Closed-form Heyting implication on antichain terms:
/// `(⋁ᵢ ⋀Sᵢ) → (⋁ⱼ ⋀Tⱼ) = ⋀ᵢ ⋁ⱼ ⋀(Tⱼ∖Sᵢ)`, each inner factor normalized,
/// the whole folded by lattice meet. Agrees with the residuation-defined
/// implication (see the oracle below and the test suite).
pub fn implication_lemma(fd: &FreeDL, a: usize, b: usize) -> Result<usize> {
    let sa = fd.term_of(a);
    let tb = fd.term_of(b);
    let mut acc = fd.lattice.top();
    for &s in &sa.minimals {
        let inner: Vec<u32> = tb.minimals.iter().map(|&t| t & !s).collect();
        let factor = fd.element_of(&normalize(fd.n, &inner)?)?;
        acc = fd.lattice.meet(acc, factor);
    }
    Ok(acc)
}

/// Independent implication oracle straight from the residuation reading on
/// truth masks: `(a → b)(P) = 1` iff every superset of `P` on which `a`
/// holds also satisfies `b`.
pub fn implication_pointwise(fd: &FreeDL, a: usize, b: usize) -> usize {
    let (ma, mb) = (fd.masks[a], fd.masks[b]);
    let mut out = 0u64;
    for p in 0..(1u32 << fd.n) {
        let ok = (0..(1u32 << fd.n))
            .filter(|&q| p & !q == 0)
            .all(|q| ma >> q & 1 == 0 || mb >> q & 1 == 1);
        if ok {
            out |= 1 << p;
        }
    }
    fd.element_of_mask(out).expect("the implication of monotone functions is monotone")
}

/// Explicit isomorphism from the subset cube onto the dual poset of the
/// free lattice: subset `A` maps to the prime filter of elements true on
/// `A` (equivalently `↑⋀_{i∈A} xᵢ`). Verified to be an order isomorphism.
pub fn dual_cube_witness(fd: &FreeDL) -> Result<Vec<usize>> {
    let dual = crate::duality::priestley_dual(&fd.lattice)?;
    let points = 1u32 << fd.n;
    let mut map = Vec::with_capacity(points as usize);
    for a in 0..points {
        let filter = crate::elemset::ElemSet::from_indices(
            fd.lattice.size(),
            (0..fd.lattice.size()).filter(|&e| fd.eval(e, a)),
        );
        let idx = dual
            .points
            .iter()
            .position(|p| p.filter.members == filter)
            .ok_or(Error::InvariantViolation("evaluation filters are prime"))?;
        map.push(idx);
    }
    if dual.points.len() != points as usize {
        return Err(Error::InvariantViolation("the dual has exactly one point per subset"));
    }
    for a in 0..points {
        for b in 0..points {
            let cube_leq = a & !b == 0;
            if cube_leq != dual.dual.leq(map[a as usize], map[b as usize]) {
                return Err(Error::InvariantViolation("subset inclusion matches the dual order"));
            }
        }
    }
    Ok(map)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::heyting::HeytingAlgebra;

    #[test]
    fn sizes_up_to_four() {
        for (n, &expected) in FREE_SIZES.iter().enumerate().take(5) {
            let fd = generate_free(n).unwrap();
            assert_eq!(fd.lattice.size(), expected, "n = {n}");
            assert_eq!(fd.generators.len(), n);
        }
        assert!(matches!(
            generate_free(6),
            Err(Error::GeneratorLimit { n: 6, max: 5, next_size: 7_828_354 })
        ));
    }

    #[test]
    fn masks_are_canonically_ascending_and_monotone() {
        let fd = generate_free(3).unwrap();
        for w in fd.masks.windows(2) {
            assert!(w[0] < w[1]);
        }
        // monotonicity of every carrier function
        for &m in &fd.masks {
            for p in 0..8u32 {
                for q in 0..8u32 {
                    if p & !q == 0 {
                        assert!(m >> p & 1 <= m >> q & 1);
                    }
                }
            }
        }
        assert_eq!(fd.masks[0], 0);
        assert_eq!(*fd.masks.last().unwrap(), 0xFF);
    }

    #[test]
    fn generators_are_free_order_wise() {
        // no generator is below a join of others, none above a meet of others
        let fd = generate_free(3).unwrap();
        let d = &fd.lattice;
        let [x, y, z] = [fd.generators[0], fd.generators[1], fd.generators[2]];
        assert!(!d.leq(x, d.join(y, z)));
        assert!(!d.leq(d.meet(y, z), x));
        // distributive law on generators as a spot identity
        assert_eq!(d.meet(x, d.join(y, z)), d.join(d.meet(x, y), d.meet(x, z)));
    }

    #[test]
    fn term_round_trip() {
        let fd = generate_free(3).unwrap();
        for e in 0..fd.lattice.size() {
            let t = fd.term_of(e);
            assert_eq!(fd.element_of(&t).unwrap(), e);
            // minimals are pairwise incomparable and sorted
            for (i, &a) in t.minimals.iter().enumerate() {
                for &b in &t.minimals[i + 1..] {
                    assert!(a < b);
                    assert!(a & !b != 0 && b & !a != 0);
                }
            }
        }
        assert_eq!(fd.term_of(fd.lattice.bottom()), AntichainTerm::bottom());
        assert_eq!(fd.term_of(fd.lattice.top()), AntichainTerm::top());
    }

    #[test]
    fn normalization_drops_dominated_sets() {
        // x ∨ (x∧y) = x
        let t = normalize(2, &[0b01, 0b11]).unwrap();
        assert_eq!(t.minimals, vec![0b01]);
        // anything joined with ⊤ is ⊤
        let t = normalize(2, &[0b00, 0b10]).unwrap();
        assert_eq!(t, AntichainTerm::top());
        assert!(matches!(normalize(1, &[0b10]), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn conjunctive_form_conventions_and_duality() {
        assert_eq!(conjunctive_form(&AntichainTerm::bottom()), vec![0]);
        assert_eq!(conjunctive_form(&AntichainTerm::top()), Vec::<u32>::new());
        // (x∧y) ∨ (x∧z) = x ∧ (y∨z)
        let t = normalize(3, &[0b011, 0b101]).unwrap();
        assert_eq!(conjunctive_form(&t), vec![0b001, 0b110]);
    }

    #[test]
    fn meet_decomposition_is_irredundant_and_irreducible() {
        let fd = generate_free(3).unwrap();
        let d = &fd.lattice;
        let mi = d.meet_irreducibles();
        for e in 0..d.size() {
            let parts = meet_irreducible_decomposition(&fd, e);
            let folded = parts.iter().fold(d.top(), |acc, &p| d.meet(acc, p));
            assert_eq!(folded, e);
            for &p in &parts {
                assert!(mi.contains(&p), "clause element {p} of {e} is meet-irreducible");
            }
            // irredundant: dropping any factor strictly enlarges the meet
            for skip in 0..parts.len() {
                let partial = parts
                    .iter()
                    .enumerate()
                    .filter(|&(k, _)| k != skip)
                    .fold(d.top(), |acc, (_, &p)| d.meet(acc, p));
                assert_ne!(partial, e);
            }
        }
    }

    #[test]
    fn implication_lemma_matches_residuation() {
        for n in 0..=3 {
            let fd = generate_free(n).unwrap();
            let h = HeytingAlgebra::from_lattice(fd.lattice.clone()).unwrap();
            for a in 0..fd.lattice.size() {
                for b in 0..fd.lattice.size() {
                    let lemma = implication_lemma(&fd, a, b).unwrap();
                    assert_eq!(lemma, h.arrow(a, b), "n={n} a={a} b={b}");
                    assert_eq!(lemma, implication_pointwise(&fd, a, b));
                }
            }
        }
    }

    #[test]
    fn dual_is_the_subset_cube() {
        for n in 0..=3 {
            let fd = generate_free(n).unwrap();
            let map = dual_cube_witness(&fd).unwrap();
            assert_eq!(map.len(), 1 << n);
        }
    }
}
