//! Tense algebras: a Boolean lattice with a future box and a past box tied
//! together by the connecting axioms `a ≤ □_F◇_P a` and `a ≤ □_P◇_F a`.
//!
//! Over a relational space the two boxes come from a relation and its
//! converse — and from nothing else: for a fixed future relation, the only
//! past relation satisfying the connecting axioms is the converse (the
//! tests sweep this exhaustively on small world counts). Construction
//! re-verifies the operator laws, both connecting axioms, and the
//! conjugacy law `◇_F a ∧ b = ⊥ ⟺ a ∧ ◇_P b = ⊥` they are equivalent to.

use crate::dlattice::DLattice;
use crate::error::{Error, Result};
use crate::heyting::HeytingAlgebra;
use crate::modal::{open_fixpoint_lattice, require_s4, ModalAlgebra, RelSpace};

pub struct TenseAlgebra {
    pub base: DLattice,
    box_f: Vec<u16>,
    box_p: Vec<u16>,
    compl: Vec<u16>,
}

impl TenseAlgebra {
    pub fn from_parts(base: DLattice, box_f: &[usize], box_p: &[usize]) -> Result<Self> {
        base.check_boolean()?;
        let n = base.size();
        for (table, which) in [(box_f, "future box"), (box_p, "past box")] {
            if table.len() != n {
                return Err(Error::IndexOutOfRange { index: table.len(), size: n });
            }
            for &v in table {
                if v >= n {
                    return Err(Error::IndexOutOfRange { index: v, size: n });
                }
            }
            if table[base.top()] != base.top() {
                return Err(Error::NotAModalOperator { law: which, a: base.top(), b: base.top() });
            }
            for a in 0..n {
                for b in 0..n {
                    if table[base.meet(a, b)] != base.meet(table[a], table[b]) {
                        return Err(Error::NotAModalOperator { law: which, a, b });
                    }
                }
            }
        }
        let compl: Vec<u16> = (0..n)
            .map(|a| base.complement_of(a).expect("base verified Boolean") as u16)
            .collect();
        let t = TenseAlgebra {
            base,
            box_f: box_f.iter().map(|&v| v as u16).collect(),
            box_p: box_p.iter().map(|&v| v as u16).collect(),
            compl,
        };
        for a in 0..n {
            if !t.base.leq(a, t.box_f(t.diamond_p(a))) {
                return Err(Error::ConnectingAxiomFailed { axiom: "a ≤ boxF diaP a", witness: a });
            }
            if !t.base.leq(a, t.box_p(t.diamond_f(a))) {
                return Err(Error::ConnectingAxiomFailed { axiom: "a ≤ boxP diaF a", witness: a });
            }
        }
        // the connecting axioms are equivalent to conjugacy; verify anyway
        for a in 0..n {
            for b in 0..n {
                let lhs = t.base.meet(t.diamond_f(a), b) == t.base.bottom();
                let rhs = t.base.meet(a, t.diamond_p(b)) == t.base.bottom();
                if lhs != rhs {
                    return Err(Error::InvariantViolation("the two diamonds are conjugate"));
                }
            }
        }
        Ok(t)
    }

    pub fn box_f(&self, a: usize) -> usize {
        self.box_f[a] as usize
    }

    pub fn box_p(&self, a: usize) -> usize {
        self.box_p[a] as usize
    }

    pub fn complement(&self, a: usize) -> usize {
        self.compl[a] as usize
    }

    pub fn diamond_f(&self, a: usize) -> usize {
        self.complement(self.box_f(self.complement(a)))
    }

    pub fn diamond_p(&self, a: usize) -> usize {
        self.complement(self.box_p(self.complement(a)))
    }

    /// The future fragment as a plain modal algebra.
    pub fn future_fragment(&self) -> ModalAlgebra {
        let table: Vec<usize> = self.box_f.iter().map(|&v| v as usize).collect();
        ModalAlgebra::from_parts(self.base.clone(), &table)
            .expect("the future fragment was validated on construction")
    }

    /// The past fragment as a plain modal algebra.
    pub fn past_fragment(&self) -> ModalAlgebra {
        let table: Vec<usize> = self.box_p.iter().map(|&v| v as usize).collect();
        ModalAlgebra::from_parts(self.base.clone(), &table)
            .expect("the past fragment was validated on construction")
    }

    /// Both fragments satisfy the S4 laws.
    pub fn is_s4t(&self) -> bool {
        self.future_fragment().is_s4_algebra() && self.past_fragment().is_s4_algebra()
    }
}

/// The canonical tense algebra of a space: future box along the relation,
/// past box along its converse.
pub fn tense_from_space(space: &RelSpace) -> Result<TenseAlgebra> {
    let base = DLattice::powerset(space.worlds())?;
    let to_mask = |s: &crate::elemset::ElemSet| s.as_mask() as usize;
    let mut box_f = Vec::with_capacity(base.size());
    let mut box_p = Vec::with_capacity(base.size());
    let conv = space.converse();
    for u in 0..base.size() {
        let set = crate::elemset::ElemSet::from_mask(space.worlds(), u as u64);
        box_f.push(to_mask(&space.box_of(&set)?));
        box_p.push(to_mask(&conv.box_of(&set)?));
    }
    TenseAlgebra::from_parts(base, &box_f, &box_p)
}

/// The `□_F`-fixpoints of an S4-future tense algebra as a Heyting algebra
/// with verified implication *and* co-implication (the bi-Heyting fragment),
/// plus the map back to base elements. Errors with the S4 law that fails if
/// the future fragment is not S4.
pub fn biheyting_fixpoints(t: &TenseAlgebra) -> Result<(HeytingAlgebra, Vec<usize>)> {
    let future = t.future_fragment();
    require_s4(&future)?;
    let (lattice, elements) = open_fixpoint_lattice(&future)?;
    Ok((HeytingAlgebra::from_lattice(lattice)?, elements))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::elemset::ElemSet;

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
    fn every_relation_yields_a_tense_algebra() {
        // the connecting axioms hold for any relation paired with its converse
        for s in all_spaces(3) {
            tense_from_space(&s).unwrap();
        }
    }

    #[test]
    fn past_box_is_determined_by_the_future_box() {
        // exhaustive over (R, S) pairs on 2 worlds: construction succeeds
        // exactly when S is the converse of R
        for r in all_spaces(2) {
            let base = DLattice::powerset(2).unwrap();
            let box_table = |sp: &RelSpace| -> Vec<usize> {
                (0..base.size())
                    .map(|u| sp.box_of(&ElemSet::from_mask(2, u as u64)).unwrap().as_mask() as usize)
                    .collect()
            };
            let bf = box_table(&r);
            let conv = r.converse();
            for s in all_spaces(2) {
                let bp = box_table(&s);
                let result = TenseAlgebra::from_parts(base.clone(), &bf, &bp);
                if s == conv {
                    assert!(result.is_ok(), "converse must be accepted: {r:?}");
                } else {
                    assert!(
                        matches!(result, Err(Error::ConnectingAxiomFailed { .. })),
                        "non-converse must be rejected: {r:?} vs {s:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn chain_boxes() {
        // 0 → 1 → 2: future box of {2} is {1, 2}? no — □F U = worlds whose
        // successors all lie in U; world 2 has none, so □F{2} = {1, 2}
        let s = RelSpace::new(3, &[(0, 1), (1, 2)]).unwrap();
        let t = tense_from_space(&s).unwrap();
        assert_eq!(t.box_f(0b100), 0b110);
        // past box of {0} is {0, 1}? worlds whose predecessors lie in {0}:
        // world 0 has none, world 1 only 0 — so {0, 1}
        assert_eq!(t.box_p(0b001), 0b011);
        assert_eq!(t.diamond_f(0b001), 0b000);
        assert_eq!(t.diamond_p(0b001), 0b010);
    }

    #[test]
    fn s4t_iff_preorder() {
        for s in all_spaces(2) {
            let t = tense_from_space(&s).unwrap();
            assert_eq!(t.is_s4t(), s.is_reflexive() && s.is_transitive(), "{s:?}");
        }
    }

    #[test]
    fn biheyting_fragment_on_a_preorder() {
        // preorder: 0 ⇄ 1 → 2 (reflexive): fixpoints of □F are the
        // successor-closed sets ∅, {2}, {0,1,2} — a 3-chain
        let s = RelSpace::new(3, &[(0, 0), (1, 1), (2, 2), (0, 1), (1, 0), (0, 2), (1, 2)])
            .unwrap();
        let t = tense_from_space(&s).unwrap();
        let (h, elements) = biheyting_fixpoints(&t).unwrap();
        assert_eq!(elements, vec![0b000, 0b100, 0b111]);
        assert_eq!(h.lattice.size(), 3);
        // both residuals behave on the 3-chain: 1→0 is 0, 1∸0 is 1 (indices)
        assert_eq!(h.arrow(2, 1), 1);
        assert_eq!(h.co_arrow(2, 1), 2);
        // non-S4 input is refused with the failing law
        let bad = RelSpace::new(2, &[(0, 1)]).unwrap();
        let tb = tense_from_space(&bad).unwrap();
        assert!(matches!(biheyting_fixpoints(&tb), Err(Error::NotS4 { .. })));
    }

    #[test]
    fn fragments_expose_the_component_boxes() {
        let s = RelSpace::new(3, &[(0, 1), (2, 1)]).unwrap();
        let t = tense_from_space(&s).unwrap();
        let f = t.future_fragment();
        let p = t.past_fragment();
        for a in 0..t.base.size() {
            assert_eq!(f.box_of(a), t.box_f(a));
            assert_eq!(p.box_of(a), t.box_p(a));
        }
    }
}
