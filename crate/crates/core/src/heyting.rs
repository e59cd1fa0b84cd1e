//! Heyting structure on finite distributive lattices.
//!
//! Every finite bounded distributive lattice carries a unique Heyting
//! implication `a → b = ⋁{c : a∧c ≤ b}` and, dually, a co-implication
//! characterized by `(a ∸ b) ≤ c ⟺ a ≤ b∨c`. Both tables are computed in
//! O(n³) and the residuation laws are re-verified on construction
//! (exhaustively up to 256 elements, sampled above), so a constructed
//! [`HeytingAlgebra`] is evidence, not assumption.

use crate::dlattice::{maximal_filters, DLattice, FiKind, FilterOrIdeal};
use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use rand::{Rng, SeedableRng};

pub struct HeytingAlgebra {
    pub lattice: DLattice,
    arrow: Vec<u16>,
    co_arrow: Vec<u16>,
}

impl HeytingAlgebra {
    /// Computes the implication and co-implication tables and verifies both
    /// residuation laws.
    pub fn from_lattice(lattice: DLattice) -> Result<Self> {
        let n = lattice.size();
        let mut arrow = vec![0u16; n * n];
        let mut co_arrow = vec![0u16; n * n];
        for a in 0..n {
            for b in 0..n {
                let mut arr = lattice.bottom();
                let mut co = lattice.top();
                for c in 0..n {
                    if lattice.leq(lattice.meet(a, c), b) {
                        arr = lattice.join(arr, c);
                    }
                    if lattice.leq(a, lattice.join(b, c)) {
                        co = lattice.meet(co, c);
                    }
                }
                arrow[a * n + b] = arr as u16;
                co_arrow[a * n + b] = co as u16;
            }
        }
        let h = HeytingAlgebra { lattice, arrow, co_arrow };
        if n <= 256 {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        h.verify_residuation(a, b, c)?;
                    }
                }
            }
        } else {
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x4EAA);
            for _ in 0..200_000 {
                let a = rng.gen_range(0..n);
                let b = rng.gen_range(0..n);
                let c = rng.gen_range(0..n);
                h.verify_residuation(a, b, c)?;
            }
        }
        Ok(h)
    }

    // c ≤ a→b ⟺ a∧c ≤ b   and   a∸b ≤ c ⟺ a ≤ b∨c
    fn verify_residuation(&self, a: usize, b: usize, c: usize) -> Result<()> {
        let d = &self.lattice;
        if d.leq(c, self.arrow(a, b)) != d.leq(d.meet(a, c), b) {
            return Err(Error::LatticeLawFailed { law: "implication residuation", a, b, c });
        }
        if d.leq(self.co_arrow(a, b), c) != d.leq(a, d.join(b, c)) {
            return Err(Error::LatticeLawFailed { law: "co-implication residuation", a, b, c });
        }
        Ok(())
    }

    /// Relative pseudocomplement: the largest `c` with `a∧c ≤ b`.
    pub fn arrow(&self, a: usize, b: usize) -> usize {
        self.arrow[a * self.lattice.size() + b] as usize
    }

    /// Co-implication: the least `c` with `a ≤ b∨c`. On an upset lattice
    /// this is the up-closure `↑(a ∖ b)` of the set difference.
    pub fn co_arrow(&self, a: usize, b: usize) -> usize {
        self.co_arrow[a * self.lattice.size() + b] as usize
    }

    /// Pseudocomplement `¬a = a → ⊥`.
    pub fn neg(&self, a: usize) -> usize {
        self.arrow(a, self.lattice.bottom())
    }

    /// Dual pseudocomplement `∼a = ⊤ ∸ a`, the least `c` with `a ∨ c = ⊤`.
    pub fn co_neg(&self, a: usize) -> usize {
        self.co_arrow(self.lattice.top(), a)
    }

    /// `a` is regular when `¬¬a = a`.
    pub fn is_regular(&self, a: usize) -> bool {
        self.neg(self.neg(a)) == a
    }
}

/// The Boolean algebra of regular (`¬¬a = a`) elements: meets are inherited,
/// joins are `¬¬(a∨b)`, and `a ↦ ¬¬a` retracts the whole algebra onto it.
pub struct Booleanization {
    /// Host-algebra indices of the regular elements, ascending.
    pub regulars: Vec<usize>,
    /// The regular elements as a lattice in their own right (carrier
    /// `0..regulars.len()`), verified Boolean.
    pub lattice: DLattice,
    /// `retract[a]` = position of `¬¬a` in `regulars`.
    pub retract: Vec<usize>,
}

pub fn booleanization(h: &HeytingAlgebra) -> Result<Booleanization> {
    let n = h.lattice.size();
    let regulars: Vec<usize> = (0..n).filter(|&a| h.is_regular(a)).collect();
    let pos = |a: usize| -> Result<usize> {
        regulars
            .binary_search(&a)
            .map_err(|_| Error::InvariantViolation("regular elements are closed under the induced operations"))
    };
    let m = regulars.len();
    let mut meet = vec![vec![0usize; m]; m];
    let mut join = vec![vec![0usize; m]; m];
    for i in 0..m {
        for j in 0..m {
            // ¬¬ distributes over ∧, so regulars are ∧-closed
            meet[i][j] = pos(h.lattice.meet(regulars[i], regulars[j]))?;
            join[i][j] = pos(h.neg(h.neg(h.lattice.join(regulars[i], regulars[j]))))?;
        }
    }
    let lattice = DLattice::from_tables(&meet, &join)?;
    lattice
        .check_boolean()
        .map_err(|_| Error::InvariantViolation("the double-negation image is Boolean"))?;
    let mut retract = Vec::with_capacity(n);
    for a in 0..n {
        retract.push(pos(h.neg(h.neg(a)))?);
    }
    Ok(Booleanization { regulars, lattice, retract })
}

fn require_maximal_filter(d: &DLattice, f: &FilterOrIdeal) -> Result<()> {
    if f.kind != FiKind::Filter {
        return Err(Error::NotAFilterOrIdeal { kind: "filter", reason: "wrong kind passed", witness: 0 });
    }
    if !maximal_filters(d).iter().any(|m| m.members == f.members) {
        return Err(Error::NotAFilterOrIdeal {
            kind: "filter",
            reason: "not a maximal filter",
            witness: f.members.first().unwrap_or(0),
        });
    }
    Ok(())
}

/// Forward direction of the maximal-filter correspondence: restrict `f` to
/// the regular elements.
pub fn max_filter_to_boolean(
    h: &HeytingAlgebra,
    bz: &Booleanization,
    f: &FilterOrIdeal,
) -> Result<FilterOrIdeal> {
    require_maximal_filter(&h.lattice, f)?;
    let members = ElemSet::from_indices(
        bz.lattice.size(),
        (0..bz.regulars.len()).filter(|&k| f.members.contains(bz.regulars[k])),
    );
    FilterOrIdeal::filter(&bz.lattice, members)
}

/// Inverse direction: `G ↦ {a : ¬¬a ∈ G}`. (Taking the up-closure of `G`
/// instead is not enough: on the three-element chain the up-closure of the
/// regular filter `{⊤}` misses the middle element, whose double negation
/// is ⊤.)
pub fn boolean_to_max_filter(
    h: &HeytingAlgebra,
    bz: &Booleanization,
    g: &FilterOrIdeal,
) -> Result<FilterOrIdeal> {
    require_maximal_filter(&bz.lattice, g)?;
    let members = ElemSet::from_indices(
        h.lattice.size(),
        (0..h.lattice.size()).filter(|&a| g.members.contains(bz.retract[a])),
    );
    FilterOrIdeal::filter(&h.lattice, members)
}

/// The maximal-filter lists of `h` and of its Booleanization, paired by the
/// two maps above; errors unless the maps are mutually inverse bijections
/// between the two lists.
pub struct MaxFilterBijection {
    pub bz: Booleanization,
    /// `(maximal filter of h, its restriction to the regular elements)`.
    pub pairs: Vec<(FilterOrIdeal, FilterOrIdeal)>,
}

pub fn check_max_filter_bijection(h: &HeytingAlgebra) -> Result<MaxFilterBijection> {
    let bz = booleanization(h)?;
    let mf_h = maximal_filters(&h.lattice);
    let mf_b = maximal_filters(&bz.lattice);
    if mf_h.len() != mf_b.len() {
        return Err(Error::InvariantViolation("maximal filters correspond one-to-one"));
    }
    let mut pairs = Vec::with_capacity(mf_h.len());
    for f in &mf_h {
        let g = max_filter_to_boolean(h, &bz, f)?;
        if !mf_b.iter().any(|x| x.members == g.members) {
            return Err(Error::InvariantViolation("the restriction of a maximal filter is maximal"));
        }
        let back = boolean_to_max_filter(h, &bz, &g)?;
        if back.members != f.members {
            return Err(Error::InvariantViolation("the correspondence round-trips on the algebra side"));
        }
        pairs.push((f.clone(), g));
    }
    for g in &mf_b {
        let f = boolean_to_max_filter(h, &bz, g)?;
        let fwd = max_filter_to_boolean(h, &bz, &f)?;
        if fwd.members != g.members {
            return Err(Error::InvariantViolation("the correspondence round-trips on the Boolean side"));
        }
    }
    Ok(MaxFilterBijection { bz, pairs })
}
