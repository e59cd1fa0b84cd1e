//! Modal algebras over finite Boolean lattices and their relational spaces.
//!
//! A [`RelSpace`] is a finite set of worlds with an arbitrary binary
//! relation; a [`ModalAlgebra`] is a finite Boolean lattice with a unary
//! `□` preserving `⊤` and binary meets. The two constructions
//! [`algebra_from_space`] (subsets with `□U = {x : R[x] ⊆ U}`) and
//! [`space_from_algebra`] (atoms with `x → y ⟺ x ≤ ◇y`) invert each other
//! up to canonical isomorphism, which [`jt_round_trip`] verifies rather
//! than assumes.
//!
//! Transitivity here is always stated cumulatively: degree-`n` transitivity
//! of a relation means `R^{n+1} ⊆ R⁰ ∪ R¹ ∪ … ∪ Rⁿ` (with `R⁰ = id`), and
//! on the algebra side `a ∧ □a ∧ … ∧ □ⁿa ≤ □^{n+1}a`. The single-power
//! reading `R^{n+1} ⊆ Rⁿ` is *not* equivalent: on the 2-cycle, `R³ ⊆ R∪R²`
//! holds while `R³ ⊆ R²` fails, yet every algebra instance of the degree-2
//! axiom is valid there. The cumulative pair keeps the algebra and space
//! verdicts in lockstep (exercised exhaustively in the tests).

use crate::dlattice::{maximal_filters, quotient_by_congruence, DLattice, FiKind, FilterOrIdeal};
use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::poset::{quotient_of_quasi_order, Poset};

/// A finite relational space: worlds `0..worlds` and successor sets.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RelSpace {
    worlds: usize,
    rel: Vec<ElemSet>,
}

impl RelSpace {
    pub fn new(worlds: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut rel = vec![ElemSet::empty(worlds); worlds];
        for &(x, y) in edges {
            if x >= worlds || y >= worlds {
                return Err(Error::IndexOutOfRange { index: x.max(y), size: worlds });
            }
            rel[x].insert(y);
        }
        Ok(RelSpace { worlds, rel })
    }

    pub fn from_rows(rows: Vec<ElemSet>) -> Result<Self> {
        let worlds = rows.len();
        for row in &rows {
            if row.universe() != worlds {
                return Err(Error::IndexOutOfRange { index: row.universe(), size: worlds });
            }
        }
        Ok(RelSpace { worlds, rel: rows })
    }

    pub fn identity(worlds: usize) -> Self {
        RelSpace {
            worlds,
            rel: (0..worlds).map(|x| ElemSet::singleton(worlds, x)).collect(),
        }
    }

    pub fn worlds(&self) -> usize {
        self.worlds
    }

    pub fn has_edge(&self, x: usize, y: usize) -> bool {
        self.rel[x].contains(y)
    }

    pub fn successors(&self, x: usize) -> &ElemSet {
        &self.rel[x]
    }

    pub fn rows(&self) -> &[ElemSet] {
        &self.rel
    }

    fn check_same_worlds(&self, other: &RelSpace) -> Result<()> {
        if self.worlds != other.worlds {
            return Err(Error::IndexOutOfRange { index: other.worlds, size: self.worlds });
        }
        Ok(())
    }

    pub fn union(&self, other: &RelSpace) -> Result<RelSpace> {
        self.check_same_worlds(other)?;
        let rel = self.rel.iter().zip(&other.rel).map(|(a, b)| a.union(b)).collect();
        Ok(RelSpace { worlds: self.worlds, rel })
    }

    /// Relational composition: `x (R;S) z ⟺ ∃y. xRy and ySz`.
    pub fn compose(&self, other: &RelSpace) -> Result<RelSpace> {
        self.check_same_worlds(other)?;
        let rel = self
            .rel
            .iter()
            .map(|row| {
                let mut out = ElemSet::empty(self.worlds);
                for y in row.iter() {
                    out.union_with(&other.rel[y]);
                }
                out
            })
            .collect();
        Ok(RelSpace { worlds: self.worlds, rel })
    }

    /// `R^k`, with `R⁰ = id`.
    pub fn power(&self, k: usize) -> RelSpace {
        let mut acc = RelSpace::identity(self.worlds);
        for _ in 0..k {
            acc = acc.compose(self).expect("same world count");
        }
        acc
    }

    pub fn converse(&self) -> RelSpace {
        let rel = (0..self.worlds)
            .map(|y| {
                ElemSet::from_indices(self.worlds, (0..self.worlds).filter(|&x| self.rel[x].contains(y)))
            })
            .collect();
        RelSpace { worlds: self.worlds, rel }
    }

    pub fn reflexive_closure(&self) -> RelSpace {
        self.union(&RelSpace::identity(self.worlds)).expect("same world count")
    }

    /// Reflexive-transitive closure `⋃_{k≥0} R^k`.
    pub fn star_closure(&self) -> RelSpace {
        let mut rel: Vec<ElemSet> = self.reflexive_closure().rel;
        // Warshall over the bitset rows
        for y in 0..self.worlds {
            let row_y = rel[y].clone();
            for row in &mut rel {
                if row.contains(y) {
                    row.union_with(&row_y);
                }
            }
        }
        RelSpace { worlds: self.worlds, rel }
    }

    /// Transitive closure `⋃_{k≥1} R^k` (no reflexive part added).
    pub fn transitive_closure(&self) -> RelSpace {
        let mut rel: Vec<ElemSet> = self.rel.clone();
        for y in 0..self.worlds {
            let row_y = rel[y].clone();
            for row in &mut rel {
                if row.contains(y) {
                    row.union_with(&row_y);
                }
            }
        }
        RelSpace { worlds: self.worlds, rel }
    }

    /// `□U = {x : R[x] ⊆ U}`.
    pub fn box_of(&self, u: &ElemSet) -> Result<ElemSet> {
        if u.universe() != self.worlds {
            return Err(Error::IndexOutOfRange { index: u.universe(), size: self.worlds });
        }
        Ok(ElemSet::from_indices(
            self.worlds,
            (0..self.worlds).filter(|&x| self.rel[x].is_subset(u)),
        ))
    }

    /// `◇U = {x : R[x] ∩ U ≠ ∅}`.
    pub fn diamond_of(&self, u: &ElemSet) -> Result<ElemSet> {
        if u.universe() != self.worlds {
            return Err(Error::IndexOutOfRange { index: u.universe(), size: self.worlds });
        }
        Ok(ElemSet::from_indices(
            self.worlds,
            (0..self.worlds).filter(|&x| !self.rel[x].is_disjoint(u)),
        ))
    }

    pub fn is_subrelation(&self, other: &RelSpace) -> bool {
        self.worlds == other.worlds
            && self.rel.iter().zip(&other.rel).all(|(a, b)| a.is_subset(b))
    }

    pub fn is_reflexive(&self) -> bool {
        (0..self.worlds).all(|x| self.rel[x].contains(x))
    }

    pub fn is_transitive(&self) -> bool {
        self.compose(self).expect("same world count").is_subrelation(self)
    }

    /// Cumulative degree-`n` transitivity: `R^{n+1} ⊆ ⋃_{k≤n} R^k`.
    pub fn n_transitive(&self, n: usize) -> bool {
        let mut acc = RelSpace::identity(self.worlds);
        let mut pow = RelSpace::identity(self.worlds);
        for _ in 0..n {
            pow = pow.compose(self).expect("same world count");
            acc = acc.union(&pow).expect("same world count");
        }
        pow.compose(self).expect("same world count").is_subrelation(&acc)
    }

    /// Least `n ≤ max_n` at which the space is degree-`n` transitive.
    pub fn weak_transitivity_degree(&self, max_n: usize) -> Option<usize> {
        (0..=max_n).find(|&n| self.n_transitive(n))
    }

    /// Worlds with no strictly one-way successor: `∀y (xRy ⇒ yRx)`.
    pub fn qmax(&self) -> ElemSet {
        ElemSet::from_indices(
            self.worlds,
            (0..self.worlds).filter(|&x| self.rel[x].iter().all(|y| self.rel[y].contains(x))),
        )
    }

    /// [`Self::qmax`] of the reflexive-transitive closure: worlds every
    /// reachable world can reach back.
    pub fn eqmax(&self) -> ElemSet {
        self.star_closure().qmax()
    }

    /// The subspace on `subset` with the induced relation, plus the map
    /// from new world indices back to old ones (ascending).
    pub fn restrict(&self, subset: &ElemSet) -> Result<(RelSpace, Vec<usize>)> {
        if subset.universe() != self.worlds {
            return Err(Error::IndexOutOfRange { index: subset.universe(), size: self.worlds });
        }
        let old: Vec<usize> = subset.iter().collect();
        let pos = |w: usize| old.binary_search(&w).unwrap();
        let rel = old
            .iter()
            .map(|&x| {
                ElemSet::from_indices(
                    old.len(),
                    self.rel[x].intersection(subset).iter().map(pos),
                )
            })
            .collect();
        Ok((RelSpace { worlds: old.len(), rel }, old))
    }
}

/// A finite Boolean lattice with a meet- and top-preserving box operator.
pub struct ModalAlgebra {
    pub base: DLattice,
    box_table: Vec<u16>,
    compl: Vec<u16>,
}

impl ModalAlgebra {
    /// Validates that the base is Boolean and that `□` preserves `⊤` and
    /// binary meets.
    pub fn from_parts(base: DLattice, box_table: &[usize]) -> Result<Self> {
        base.check_boolean()?;
        let n = base.size();
        if box_table.len() != n {
            return Err(Error::IndexOutOfRange { index: box_table.len(), size: n });
        }
        for &v in box_table {
            if v >= n {
                return Err(Error::IndexOutOfRange { index: v, size: n });
            }
        }
        if box_table[base.top()] != base.top() {
            return Err(Error::NotAModalOperator { law: "box preserves top", a: base.top(), b: base.top() });
        }
        for a in 0..n {
            for b in 0..n {
                if box_table[base.meet(a, b)] != base.meet(box_table[a], box_table[b]) {
                    return Err(Error::NotAModalOperator { law: "box preserves meet", a, b });
                }
            }
        }
        let compl: Vec<u16> = (0..n)
            .map(|a| base.complement_of(a).expect("base verified Boolean") as u16)
            .collect();
        let box_table = box_table.iter().map(|&v| v as u16).collect();
        Ok(ModalAlgebra { base, box_table, compl })
    }

    pub fn box_of(&self, a: usize) -> usize {
        self.box_table[a] as usize
    }

    /// `◇a = ¬□¬a`.
    pub fn diamond_of(&self, a: usize) -> usize {
        self.complement(self.box_of(self.complement(a)))
    }

    pub fn complement(&self, a: usize) -> usize {
        self.compl[a] as usize
    }

    /// `□⁺a = a ∧ □a`, the reflexivized box.
    pub fn box_plus(&self, a: usize) -> usize {
        self.base.meet(a, self.box_of(a))
    }

    /// `∀a: □a ≤ □□a`.
    pub fn is_k4_algebra(&self) -> bool {
        (0..self.base.size()).all(|a| self.base.leq(self.box_of(a), self.box_of(self.box_of(a))))
    }

    /// K4 plus `∀a: □a ≤ a`.
    pub fn is_s4_algebra(&self) -> bool {
        self.is_k4_algebra() && (0..self.base.size()).all(|a| self.base.leq(self.box_of(a), a))
    }

    /// Cumulative degree-`n` transitivity: `⋀_{k≤n} □ᵏa ≤ □^{n+1}a` for
    /// every `a`, with `□⁰a = a`.
    pub fn n_transitive_algebra(&self, n: usize) -> bool {
        (0..self.base.size()).all(|a| {
            let mut acc = a;
            let mut pow = a;
            for _ in 0..n {
                pow = self.box_of(pow);
                acc = self.base.meet(acc, pow);
            }
            self.base.leq(acc, self.box_of(pow))
        })
    }

    /// Fixpoints `□a = a`, ascending. For an S4 algebra these are the open
    /// elements and form a bounded sublattice.
    pub fn open_elements(&self) -> Vec<usize> {
        (0..self.base.size()).filter(|&a| self.box_of(a) == a).collect()
    }

    /// Replaces `□` by `□⁺`; the result validates S4 whenever the input
    /// was K4, which the flag records.
    pub fn reflexivize(&self) -> Reflexivized {
        let input_was_k4 = self.is_k4_algebra();
        let box_table: Vec<usize> = (0..self.base.size()).map(|a| self.box_plus(a)).collect();
        let algebra = ModalAlgebra::from_parts(self.base.clone(), &box_table)
            .expect("□⁺ preserves top and meets whenever □ does");
        Reflexivized { algebra, input_was_k4 }
    }
}

pub struct Reflexivized {
    pub algebra: ModalAlgebra,
    pub input_was_k4: bool,
}

pub fn require_k4(alg: &ModalAlgebra) -> Result<()> {
    for a in 0..alg.base.size() {
        if !alg.base.leq(alg.box_of(a), alg.box_of(alg.box_of(a))) {
            return Err(Error::NotK4 { witness: a });
        }
    }
    Ok(())
}

pub fn require_s4(alg: &ModalAlgebra) -> Result<()> {
    for a in 0..alg.base.size() {
        if !alg.base.leq(alg.box_of(a), alg.box_of(alg.box_of(a))) {
            return Err(Error::NotS4 { law: "box a ≤ box box a", witness: a });
        }
        if !alg.base.leq(alg.box_of(a), a) {
            return Err(Error::NotS4 { law: "box a ≤ a", witness: a });
        }
    }
    Ok(())
}

/// The full powerset algebra of a space; element indices are subset masks.
pub fn algebra_from_space(space: &RelSpace) -> Result<ModalAlgebra> {
    let base = DLattice::powerset(space.worlds())?;
    let box_table: Vec<usize> = (0..base.size())
        .map(|u| {
            let set = ElemSet::from_mask(space.worlds(), u as u64);
            space.box_of(&set).expect("universe matches").as_mask() as usize
        })
        .collect();
    ModalAlgebra::from_parts(base, &box_table)
}

/// The atom space of an algebra: worlds are atoms in ascending element
/// order, and `x → y ⟺ atom_x ≤ ◇atom_y`.
pub fn space_from_algebra(alg: &ModalAlgebra) -> Result<(RelSpace, Vec<usize>)> {
    let atoms = alg.base.atoms();
    let worlds = atoms.len();
    let rel = atoms
        .iter()
        .map(|&ax| {
            ElemSet::from_indices(
                worlds,
                (0..worlds).filter(|&y| alg.base.leq(ax, alg.diamond_of(atoms[y]))),
            )
        })
        .collect();
    Ok((RelSpace::from_rows(rel)?, atoms))
}

/// Round trip algebra → space → algebra with the canonical isomorphism
/// `a ↦ {atoms below a}` (as a subset mask), fully verified.
pub struct JtWitness {
    pub space: RelSpace,
    pub atoms: Vec<usize>,
    /// `iso[a]` = powerset mask of the atoms below `a`.
    pub iso: Vec<usize>,
}

pub fn jt_round_trip(alg: &ModalAlgebra) -> Result<JtWitness> {
    let (space, atoms) = space_from_algebra(alg)?;
    let back = algebra_from_space(&space)?;
    if back.base.size() != alg.base.size() {
        return Err(Error::InvariantViolation("a finite Boolean algebra has 2^atoms elements"));
    }
    let iso: Vec<usize> = (0..alg.base.size())
        .map(|a| {
            atoms
                .iter()
                .enumerate()
                .filter(|&(_, &ax)| alg.base.leq(ax, a))
                .fold(0usize, |m, (k, _)| m | 1 << k)
        })
        .collect();
    let mut seen = vec![false; back.base.size()];
    for a in 0..alg.base.size() {
        if std::mem::replace(&mut seen[iso[a]], true) {
            return Err(Error::InvariantViolation("the atom map is injective"));
        }
        if iso[alg.box_of(a)] != back.box_of(iso[a]) {
            return Err(Error::InvariantViolation("the atom map preserves box"));
        }
        for b in 0..alg.base.size() {
            if iso[alg.base.meet(a, b)] != iso[a] & iso[b] || iso[alg.base.join(a, b)] != iso[a] | iso[b] {
                return Err(Error::InvariantViolation("the atom map preserves meet and join"));
            }
        }
    }
    Ok(JtWitness { space, atoms, iso })
}

/// Relativization of `alg` to the downset of `a`: carrier `{c : c ≤ a}`,
/// complement `a ∧ ¬c`, and `□_a c = a ∧ □(¬a ∨ c)`.
pub struct Relativized {
    pub algebra: ModalAlgebra,
    /// `elements[i]` = base element the i-th relative element stands for.
    pub elements: Vec<usize>,
}

pub fn relativize(alg: &ModalAlgebra, a: usize) -> Result<Relativized> {
    if a >= alg.base.size() {
        return Err(Error::IndexOutOfRange { index: a, size: alg.base.size() });
    }
    if a == alg.base.bottom() {
        return Err(Error::RelativizeToBottom);
    }
    let elements: Vec<usize> = (0..alg.base.size()).filter(|&c| alg.base.leq(c, a)).collect();
    let pos = |c: usize| elements.binary_search(&c).expect("carrier is ∧∨-closed");
    let m = elements.len();
    let mut meet = vec![vec![0usize; m]; m];
    let mut join = vec![vec![0usize; m]; m];
    for i in 0..m {
        for j in 0..m {
            meet[i][j] = pos(alg.base.meet(elements[i], elements[j]));
            join[i][j] = pos(alg.base.join(elements[i], elements[j]));
        }
    }
    let base = DLattice::from_tables(&meet, &join)?;
    let not_a = alg.complement(a);
    let box_table: Vec<usize> = elements
        .iter()
        .map(|&c| pos(alg.base.meet(a, alg.box_of(alg.base.join(not_a, c)))))
        .collect();
    let algebra = ModalAlgebra::from_parts(base, &box_table)?;
    Ok(Relativized { algebra, elements })
}

/// Filter-induced quotient of a Boolean algebra with its canonical maximal
/// witness: `a ~ b ⟺ (a↔b) ∈ F`; the least ultrafilter of the quotient
/// pulls back to an ultrafilter of the base extending `F`.
pub struct FamaxWitness {
    pub quotient: DLattice,
    pub class_of: Vec<usize>,
    /// Least ultrafilter of the quotient.
    pub ultrafilter: FilterOrIdeal,
    /// Its pullback: a verified maximal filter of the base containing `F`.
    pub pullback: FilterOrIdeal,
}

pub fn famax_quotient(base: &DLattice, f: &FilterOrIdeal) -> Result<FamaxWitness> {
    base.check_boolean()?;
    if f.kind != FiKind::Filter {
        return Err(Error::NotAFilterOrIdeal { kind: "filter", reason: "wrong kind passed", witness: 0 });
    }
    let f = FilterOrIdeal::filter(base, f.members.clone())?;
    if !f.is_proper(base) {
        return Err(Error::Improper { kind: "filter", witness: base.bottom() });
    }
    let compl = |x: usize| base.complement_of(x).expect("base verified Boolean");
    let biimp = |x: usize, y: usize| {
        base.meet(base.join(compl(x), y), base.join(compl(y), x))
    };
    let mut pairs = Vec::new();
    for a in 0..base.size() {
        for b in (a + 1)..base.size() {
            if f.members.contains(biimp(a, b)) {
                pairs.push((a, b));
            }
        }
    }
    let (quotient, class_of) = quotient_by_congruence(base, &pairs)?;
    quotient
        .check_boolean()
        .map_err(|_| Error::InvariantViolation("a filter quotient of a Boolean algebra is Boolean"))?;
    let ultras = maximal_filters(&quotient);
    let ultrafilter = ultras
        .first()
        .cloned()
        .ok_or(Error::InvariantViolation("a nontrivial Boolean algebra has an ultrafilter"))?;
    let members = ElemSet::from_indices(
        base.size(),
        (0..base.size()).filter(|&x| ultrafilter.members.contains(class_of[x])),
    );
    let pullback = FilterOrIdeal::filter(base, members)?;
    if !maximal_filters(base).iter().any(|m| m.members == pullback.members) {
        return Err(Error::InvariantViolation("the pullback of an ultrafilter is an ultrafilter"));
    }
    if !f.members.is_subset(&pullback.members) {
        return Err(Error::InvariantViolation("the pullback extends the inducing filter"));
    }
    Ok(FamaxWitness { quotient, class_of, ultrafilter, pullback })
}

/// Quotient of a space's reachability preorder by its clusters (mutual
/// reachability classes): the skeleton poset plus the cluster map.
pub fn cluster_quotient(space: &RelSpace) -> Result<(Poset, Vec<usize>)> {
    let star = space.star_closure();
    let n = space.worlds();
    let mut assigned = vec![usize::MAX; n];
    let mut blocks: Vec<ElemSet> = Vec::new();
    for x in 0..n {
        if assigned[x] != usize::MAX {
            continue;
        }
        let members = ElemSet::from_indices(
            n,
            (0..n).filter(|&y| star.has_edge(x, y) && star.has_edge(y, x)),
        );
        for y in members.iter() {
            assigned[y] = blocks.len();
        }
        blocks.push(members);
    }
    quotient_of_quasi_order(star.rows(), &blocks)
}

/// The sublattice of `□`-fixpoints of an S4 algebra, with the map back to
/// base elements.
pub fn open_fixpoint_lattice(alg: &ModalAlgebra) -> Result<(DLattice, Vec<usize>)> {
    require_s4(alg)?;
    let opens = alg.open_elements();
    let pos = |x: usize| -> Result<usize> {
        opens
            .binary_search(&x)
            .map_err(|_| Error::InvariantViolation("S4 fixpoints are closed under meet and join"))
    };
    let m = opens.len();
    let mut meet = vec![vec![0usize; m]; m];
    let mut join = vec![vec![0usize; m]; m];
    for i in 0..m {
        for j in 0..m {
            meet[i][j] = pos(alg.base.meet(opens[i], opens[j]))?;
            join[i][j] = pos(alg.base.join(opens[i], opens[j]))?;
        }
    }
    Ok((DLattice::from_tables(&meet, &join)?, opens))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dlattice::from_upsets;
    use crate::poset::find_order_isomorphism;

    fn all_spaces(worlds: usize) -> impl Iterator<Item = RelSpace> {
        let cells = worlds * worlds;
        (0u32..1 << cells).map(move |code| {
            let rows = (0..worlds)
                .map(|x| {
                    ElemSet::from_indices(
                        worlds,
                        (0..worlds).filter(|&y| code >> (x * worlds + y) & 1 == 1),
                    )
                })
                .collect();
            RelSpace::from_rows(rows).unwrap()
        })
    }

    #[test]
    fn box_and_diamond_are_dual() {
        let s = RelSpace::new(3, &[(0, 1), (1, 2), (0, 0)]).unwrap();
        let alg = algebra_from_space(&s).unwrap();
        for a in 0..alg.base.size() {
            assert_eq!(alg.diamond_of(a), alg.complement(alg.box_of(alg.complement(a))));
            // ◇ distributes over joins, dually to □ over meets
            for b in 0..alg.base.size() {
                assert_eq!(
                    alg.diamond_of(alg.base.join(a, b)),
                    alg.base.join(alg.diamond_of(a), alg.diamond_of(b))
                );
            }
        }
    }

    #[test]
    fn round_trip_is_identity_on_spaces() {
        for s in all_spaces(2) {
            let alg = algebra_from_space(&s).unwrap();
            let (back, atoms) = space_from_algebra(&alg).unwrap();
            // atoms of a powerset are the singleton masks, ascending
            assert_eq!(atoms, vec![0b01, 0b10]);
            assert_eq!(back, s);
        }
    }

    #[test]
    fn jt_round_trip_verifies_exhaustively_on_three_worlds() {
        for s in all_spaces(3) {
            let alg = algebra_from_space(&s).unwrap();
            let w = jt_round_trip(&alg).unwrap();
            assert_eq!(w.space, s);
            // x R y ⟺ everything box-forced at x holds at y (the ∀-route,
            // independent of the ◇-characterization used by the builder)
            for x in 0..3 {
                for y in 0..3 {
                    let forall_route = (0..alg.base.size()).all(|a| {
                        !alg.base.leq(w.atoms[x], alg.box_of(a)) || alg.base.leq(w.atoms[y], a)
                    });
                    assert_eq!(forall_route, s.has_edge(x, y));
                }
            }
        }
    }

    #[test]
    fn transitivity_verdicts_agree_between_space_and_algebra() {
        for s in all_spaces(2) {
            let alg = algebra_from_space(&s).unwrap();
            assert_eq!(s.is_transitive(), alg.is_k4_algebra());
            assert_eq!(s.is_reflexive() && s.is_transitive(), alg.is_s4_algebra());
            for n in 0..=3 {
                assert_eq!(s.n_transitive(n), alg.n_transitive_algebra(n), "n={n} {s:?}");
            }
        }
    }

    #[test]
    fn two_cycle_separates_cumulative_from_single_power() {
        // x ⇄ y: cumulatively 2-transitive, but R³ ⊈ R²
        let s = RelSpace::new(2, &[(0, 1), (1, 0)]).unwrap();
        assert!(s.n_transitive(2));
        assert!(!s.power(3).is_subrelation(&s.power(2)));
        let alg = algebra_from_space(&s).unwrap();
        assert!(alg.n_transitive_algebra(2));
    }

    #[test]
    fn reflexivization_turns_k4_into_s4() {
        let s = RelSpace::new(3, &[(0, 1), (0, 2), (1, 2)]).unwrap();
        assert!(s.is_transitive() && !s.is_reflexive());
        let alg = algebra_from_space(&s).unwrap();
        let r = alg.reflexivize();
        assert!(r.input_was_k4);
        assert!(r.algebra.is_s4_algebra());
        // □⁺ is the box of the reflexive closure
        let refl_alg = algebra_from_space(&s.reflexive_closure()).unwrap();
        for a in 0..alg.base.size() {
            assert_eq!(r.algebra.box_of(a), refl_alg.box_of(a));
        }
        // qmax is untouched by adding loops
        assert_eq!(s.qmax(), s.reflexive_closure().qmax());
    }

    #[test]
    fn qmax_and_eqmax() {
        // 0 → 1 → 2 with 2 ⇄ 1? no: chain 0→1→2, plus a 2-cycle 3 ⇄ 4
        let s = RelSpace::new(5, &[(0, 1), (1, 2), (3, 4), (4, 3)]).unwrap();
        // 2 has no successors at all (vacuously qmax); 3,4 see each other back
        assert_eq!(s.qmax(), ElemSet::from_indices(5, [2, 3, 4]));
        // under reachability, 0 and 1 can reach 2 but not return
        assert_eq!(s.eqmax(), ElemSet::from_indices(5, [2, 3, 4]));
        let t = RelSpace::new(2, &[(0, 1)]).unwrap();
        assert_eq!(t.qmax(), ElemSet::from_indices(2, [1]));
        assert_eq!(t.eqmax(), ElemSet::from_indices(2, [1]));
    }

    #[test]
    fn relativization_matches_subspace() {
        let s = RelSpace::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (1, 1)]).unwrap();
        let alg = algebra_from_space(&s).unwrap();
        let a_mask = 0b0111; // keep worlds 0, 1, 2
        let rel = relativize(&alg, a_mask).unwrap();
        let (sub, old) = s.restrict(&ElemSet::from_mask(4, a_mask as u64)).unwrap();
        assert_eq!(old, vec![0, 1, 2]);
        let sub_alg = algebra_from_space(&sub).unwrap();
        assert_eq!(rel.algebra.base.size(), sub_alg.base.size());
        // translate: relative element (a base mask ⊆ a_mask) → compressed mask
        let compress = |mask: usize| {
            old.iter().enumerate().fold(0usize, |m, (k, &w)| m | ((mask >> w & 1) << k))
        };
        for (i, &c) in rel.elements.iter().enumerate() {
            assert_eq!(rel.algebra.box_of(i), {
                let expected = sub_alg.box_of(compress(c));
                rel.elements.iter().position(|&e| compress(e) == expected).unwrap()
            });
        }
        assert!(matches!(relativize(&alg, 0), Err(Error::RelativizeToBottom)));
    }

    #[test]
    fn famax_extends_every_proper_filter() {
        let base = DLattice::powerset(3).unwrap();
        for gen in 1..base.size() {
            let f = FilterOrIdeal::principal_filter(&base, gen);
            if !f.is_proper(&base) {
                continue;
            }
            let w = famax_quotient(&base, &f).unwrap();
            assert!(f.members.is_subset(&w.pullback.members));
            assert!(maximal_filters(&base).iter().any(|m| m.members == w.pullback.members));
            // a ~ b ⟺ a∧g = b∧g, so the quotient is a copy of [0, g]
            let below: usize = (0..base.size()).filter(|&x| base.leq(x, gen)).count();
            assert_eq!(w.quotient.size(), below);
        }
        // the improper filter (containing ⊥) is refused
        let improper = FilterOrIdeal::principal_filter(&base, base.bottom());
        assert!(matches!(famax_quotient(&base, &improper), Err(Error::Improper { .. })));
    }

    #[test]
    fn cluster_quotient_skeleton() {
        // two 2-cycles in sequence: 0 ⇄ 1 → 2 ⇄ 3  gives a 2-chain skeleton
        let s = RelSpace::new(4, &[(0, 1), (1, 0), (1, 2), (2, 3), (3, 2)]).unwrap();
        let (skel, class_of) = cluster_quotient(&s).unwrap();
        assert_eq!(skel.size(), 2);
        assert_eq!(class_of, vec![0, 0, 1, 1]);
        assert!(skel.leq(0, 1) && !skel.leq(1, 0));
    }

    #[test]
    fn open_fixpoints_are_upsets_of_the_skeleton() {
        for s in all_spaces(3) {
            let r = s.star_closure();
            let alg = algebra_from_space(&r).unwrap();
            let (opens, _) = open_fixpoint_lattice(&alg).unwrap();
            let (skel, _) = cluster_quotient(&s).unwrap();
            let upsets = from_upsets(&skel).unwrap();
            assert_eq!(opens.size(), upsets.lattice.size(), "{s:?}");
            assert!(find_order_isomorphism(&opens.order_poset(), &upsets.lattice.order_poset()).is_some());
        }
    }

    #[test]
    fn non_modal_operators_are_rejected() {
        let base = DLattice::powerset(2).unwrap();
        // complement is not a box: fails meet preservation
        let table: Vec<usize> = (0..4).map(|a| base.complement_of(a).unwrap()).collect();
        assert!(matches!(
            ModalAlgebra::from_parts(base.clone(), &table),
            Err(Error::NotAModalOperator { .. })
        ));
        // constant bottom fails top preservation
        let table = vec![0; 4];
        assert!(matches!(
            ModalAlgebra::from_parts(base.clone(), &table),
            Err(Error::NotAModalOperator { law: "box preserves top", .. })
        ));
        // non-Boolean base is refused before looking at the table
        let three = from_upsets(&Poset::chain(2)).unwrap().lattice;
        assert!(matches!(
            ModalAlgebra::from_parts(three, &[0, 1, 2]),
            Err(Error::NotBoolean { .. })
        ));
    }
}
