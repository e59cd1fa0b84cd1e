//! Deterministic instance generators shared by the test suites, the CLI
//! `check` command, and the benchmarks.
//!
//! Everything here is a pure function of the seed (ChaCha8), so every run
//! visits the same instances in the same order and failures reproduce
//! exactly. Exhaustive sweeps are used up to 3 worlds (512 relations);
//! larger world counts are sampled.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::dlattice::{from_upsets, DLattice};
use crate::modal::RelSpace;
use crate::poset::Poset;

/// Seed used when the caller does not supply one.
pub const DEFAULT_SEED: u64 = 0xD0_0D1E;

/// Size of the seeded poset corpus.
pub const POSET_COUNT: usize = 200;

/// Largest poset the seeded corpus produces.
pub const MAX_POSET_SIZE: usize = 6;

/// Relations per world count in the sampled sweeps.
pub const RELATION_SAMPLES: usize = 1000;

/// `count` random posets with 1..=`max_size` elements. Edges are sampled
/// below the diagonal of a shuffled-free linear order (so the relation is
/// acyclic by construction) and closed transitively.
pub fn seeded_posets(seed: u64, count: usize, max_size: usize) -> Vec<Poset> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let size = rng.gen_range(1..=max_size);
            let mut pairs = Vec::new();
            for i in 0..size {
                for j in i + 1..size {
                    if rng.gen_bool(0.5) {
                        pairs.push((i, j));
                    }
                }
            }
            Poset::from_pairs(size, &pairs).expect("low-to-high edges are acyclic")
        })
        .collect()
}

/// Small hand-picked posets with the shapes the algorithms care about:
/// chains, antichains, the diamond, a V, a Λ, and a zigzag fence.
pub fn named_posets() -> Vec<(&'static str, Poset)> {
    let diamond = Poset::from_pairs(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap();
    let v = Poset::from_pairs(3, &[(0, 1), (0, 2)]).unwrap();
    let lambda = Poset::from_pairs(3, &[(0, 2), (1, 2)]).unwrap();
    let fence = Poset::from_pairs(4, &[(0, 1), (2, 1), (2, 3)]).unwrap();
    let hexagon = Poset::from_pairs(6, &[(0, 1), (0, 2), (1, 3), (2, 4), (3, 5), (4, 5)]).unwrap();
    vec![
        ("chain-1", Poset::chain(1)),
        ("chain-3", Poset::chain(3)),
        ("chain-6", Poset::chain(6)),
        ("antichain-2", Poset::antichain(2)),
        ("antichain-3", Poset::antichain(3)),
        ("diamond", diamond),
        ("v", v),
        ("lambda", lambda),
        ("fence-4", fence),
        ("hexagon", hexagon),
    ]
}

/// The poset corpus: the named shapes followed by the seeded instances.
pub fn corpus_posets(seed: u64) -> Vec<Poset> {
    let mut out: Vec<Poset> = named_posets().into_iter().map(|(_, p)| p).collect();
    out.extend(seeded_posets(seed, POSET_COUNT, MAX_POSET_SIZE));
    out
}

/// The lattice corpus: chains, small powersets, and the upset lattices of
/// a slice of the poset corpus (kept distributive by construction).
pub fn corpus_lattices(seed: u64) -> Vec<DLattice> {
    let mut out = Vec::new();
    for n in 2..=6 {
        out.push(chain_lattice(n));
    }
    for w in 1..=4 {
        out.push(DLattice::powerset(w).expect("small powerset"));
    }
    // upset lattices of the named posets and of a seeded sample
    for (_, p) in named_posets() {
        out.push(from_upsets(&p).expect("upset lattice fits the capacity").lattice);
    }
    for p in seeded_posets(seed, 40, MAX_POSET_SIZE) {
        out.push(from_upsets(&p).expect("upset lattice fits the capacity").lattice);
    }
    out
}

/// Boolean members of the corpus: the powersets `2^w` for `w ≤ 4`.
pub fn boolean_corpus() -> Vec<DLattice> {
    (1..=4).map(|w| DLattice::powerset(w).expect("small powerset")).collect()
}

/// The `n`-element chain as a lattice (meet = min, join = max).
pub fn chain_lattice(n: usize) -> DLattice {
    let meet: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| a.min(b)).collect()).collect();
    let join: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| a.max(b)).collect()).collect();
    DLattice::from_tables(&meet, &join).expect("a chain is a distributive lattice")
}

/// Every relation on `worlds ≤ 3` points, in ascending bit-matrix order.
pub fn all_relations(worlds: usize) -> Vec<RelSpace> {
    assert!(worlds <= 3, "exhaustive sweeps stop at 512 relations");
    let bits = worlds * worlds;
    (0u32..1 << bits).map(|code| relation_from_code(worlds, code as u64)).collect()
}

/// `count` seeded random relations on `worlds` points.
pub fn seeded_relations(seed: u64, count: usize, worlds: usize) -> Vec<RelSpace> {
    assert!(worlds * worlds <= 64, "relation codes are packed in a u64");
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (worlds as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    let bits = worlds * worlds;
    (0..count)
        .map(|_| {
            let code: u64 = rng.gen::<u64>() & if bits == 64 { u64::MAX } else { (1 << bits) - 1 };
            relation_from_code(worlds, code)
        })
        .collect()
}

/// The relation corpus: exhaustive at 1–3 worlds, sampled at 4–5.
pub fn relation_corpus(seed: u64) -> Vec<RelSpace> {
    let mut out = Vec::new();
    for w in 1..=3 {
        out.extend(all_relations(w));
    }
    for w in 4..=5 {
        out.extend(seeded_relations(seed, RELATION_SAMPLES, w));
    }
    out
}

/// Transitive members of the relation corpus, enriched with the transitive
/// closure of every member (so larger world counts still contribute).
pub fn k4_corpus(seed: u64) -> Vec<RelSpace> {
    let mut out = Vec::new();
    for r in relation_corpus(seed) {
        if r.is_transitive() {
            out.push(r.clone());
        }
        let closed = r.transitive_closure();
        if closed != r {
            out.push(closed);
        }
    }
    out
}

fn relation_from_code(worlds: usize, code: u64) -> RelSpace {
    let rows = (0..worlds)
        .map(|x| {
            crate::elemset::ElemSet::from_indices(
                worlds,
                (0..worlds).filter(|&y| code >> (x * worlds + y) & 1 == 1),
            )
        })
        .collect();
    RelSpace::from_rows(rows).expect("rows sized to the world count")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seeded_posets_are_deterministic_and_bounded() {
        let a = seeded_posets(7, 50, 6);
        let b = seeded_posets(7, 50, 6);
        assert_eq!(a.len(), 50);
        for (p, q) in a.iter().zip(&b) {
            assert_eq!(p.size(), q.size());
            for i in 0..p.size() {
                for j in 0..p.size() {
                    assert_eq!(p.leq(i, j), q.leq(i, j));
                }
            }
            assert!(p.size() >= 1 && p.size() <= 6);
        }
        // different seeds disagree somewhere
        let c = seeded_posets(8, 50, 6);
        let same = a.iter().zip(&c).all(|(p, q)| {
            p.size() == q.size()
                && (0..p.size()).all(|i| (0..p.size()).all(|j| p.leq(i, j) == q.leq(i, j)))
        });
        assert!(!same);
    }

    #[test]
    fn corpus_counts() {
        assert!(corpus_posets(DEFAULT_SEED).len() >= POSET_COUNT);
        assert_eq!(all_relations(3).len(), 512);
        assert_eq!(all_relations(2).len(), 16);
        let rels = relation_corpus(DEFAULT_SEED);
        assert_eq!(rels.len(), 2 + 16 + 512 + 2 * RELATION_SAMPLES);
        assert!(rels.iter().all(|r| r.worlds() >= 1 && r.worlds() <= 5));
    }

    #[test]
    fn k4_corpus_is_transitive() {
        let k4 = k4_corpus(DEFAULT_SEED);
        assert!(!k4.is_empty());
        assert!(k4.iter().all(|r| r.is_transitive()));
        // it contains non-reflexive members, so S4 is not accidentally forced
        assert!(k4.iter().any(|r| !r.is_reflexive()));
    }

    #[test]
    fn lattice_corpus_is_wellformed() {
        let ls = corpus_lattices(DEFAULT_SEED);
        assert!(ls.len() > 20);
        assert!(ls.iter().all(|l| l.size() >= 2));
    }
}
