//! Self-check suites over the seeded corpus, reported as a verdict tree
//! (report → suite → case → first-failure witness).
//!
//! The CLI `check` command runs [`run_all_checks`] and renders the tree;
//! the integration tests run the same suites at pinned sizes. Every sweep
//! is deterministic in the seed, counts its passes and failures, and keeps
//! a witness string for the first failure so a red run is reproducible.

use crate::corpus;
use crate::dlattice::{
    clmax_pullback, maximal_filters, maximal_ideals, DLattice, FilterOrIdeal,
};
use crate::duality::{priestley_dual, round_trip_poset};
use crate::elemset::ElemSet;
use crate::freedl::{
    dual_cube_witness, generate_free, implication_lemma, implication_pointwise, FREE_SIZES,
    MAX_GENERATORS,
};
use crate::heyting::{check_max_filter_bijection, HeytingAlgebra};
use crate::modal::{algebra_from_space, famax_quotient, jt_round_trip, relativize, RelSpace};
use crate::omegaspace::verify_example;
use crate::tense::{biheyting_fixpoints, tense_from_space};

/// One sweep inside a suite: how many instances passed, and a witness for
/// the first failure.
#[derive(Clone, Debug)]
pub struct CaseResult {
    pub name: String,
    pub passed: usize,
    pub failed: usize,
    pub witness: Option<String>,
}

impl CaseResult {
    pub fn ok(&self) -> bool {
        self.failed == 0
    }
}

#[derive(Clone, Debug)]
pub struct SuiteResult {
    pub name: &'static str,
    pub cases: Vec<CaseResult>,
}

impl SuiteResult {
    pub fn ok(&self) -> bool {
        self.cases.iter().all(CaseResult::ok)
    }

    pub fn passed(&self) -> usize {
        self.cases.iter().map(|c| c.passed).sum()
    }

    pub fn failed(&self) -> usize {
        self.cases.iter().map(|c| c.failed).sum()
    }
}

#[derive(Clone, Debug)]
pub struct CheckReport {
    pub seed: u64,
    pub max_size: usize,
    pub suites: Vec<SuiteResult>,
}

impl CheckReport {
    pub fn ok(&self) -> bool {
        self.suites.iter().all(SuiteResult::ok)
    }
}

/// Runs a closure over every item, counting passes; `Err(description)`
/// marks a failure and the first description is kept as the witness.
fn sweep<T>(
    name: impl Into<String>,
    items: impl IntoIterator<Item = T>,
    mut f: impl FnMut(T) -> std::result::Result<(), String>,
) -> CaseResult {
    let mut passed = 0;
    let mut failed = 0;
    let mut witness = None;
    for item in items {
        match f(item) {
            Ok(()) => passed += 1,
            Err(w) => {
                failed += 1;
                witness.get_or_insert(w);
            }
        }
    }
    CaseResult { name: name.into(), passed, failed, witness }
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

/// Poset and lattice duality round trips across the corpus.
pub fn duality_suite(seed: u64, max_size: usize) -> SuiteResult {
    let posets: Vec<_> = corpus::corpus_posets(seed)
        .into_iter()
        .filter(|p| p.size() <= max_size)
        .collect();
    let poset_case = sweep("poset round trips", posets.iter().enumerate(), |(i, p)| {
        round_trip_poset(p).map(|_| ()).map_err(|e| format!("poset #{i}: {}", err(e)))
    });
    let lattice_case = sweep(
        "lattice round trips",
        corpus::corpus_lattices(seed).iter().enumerate(),
        |(i, d)| priestley_dual(d).map(|_| ()).map_err(|e| format!("lattice #{i}: {}", err(e))),
    );
    SuiteResult { name: "duality-round-trips", cases: vec![poset_case, lattice_case] }
}

/// Free distributive lattice sizes and cube duals.
pub fn free_lattice_suite(max_size: usize) -> SuiteResult {
    let top_n = MAX_GENERATORS.min(max_size);
    let sizes = sweep("generated sizes", 0..=top_n, |n| {
        let fd = generate_free(n).map_err(err)?;
        if fd.lattice.size() == FREE_SIZES[n] {
            Ok(())
        } else {
            Err(format!("n={n}: got {} elements, expected {}", fd.lattice.size(), FREE_SIZES[n]))
        }
    });
    let cubes = sweep("cube duals", 0..=top_n.min(4), |n| {
        let fd = generate_free(n).map_err(err)?;
        dual_cube_witness(&fd).map(|_| ()).map_err(|e| format!("n={n}: {}", err(e)))
    });
    SuiteResult { name: "free-lattices", cases: vec![sizes, cubes] }
}

/// The antichain-difference implication formula against the residuation
/// table and the pointwise evaluation, pair by pair.
pub fn implication_suite(max_size: usize) -> SuiteResult {
    let mut cases = Vec::new();
    for n in 0..=3usize.min(max_size).min(MAX_GENERATORS) {
        cases.push(implication_case(n));
    }
    if max_size >= 4 {
        cases.push(implication_case(4));
    }
    SuiteResult { name: "implication-tables", cases }
}

fn implication_case(n: usize) -> CaseResult {
    let fd = match generate_free(n) {
        Ok(fd) => fd,
        Err(e) => {
            return CaseResult {
                name: format!("n={n}"),
                passed: 0,
                failed: 1,
                witness: Some(err(e)),
            }
        }
    };
    let heyting = match HeytingAlgebra::from_lattice(fd.lattice.clone()) {
        Ok(h) => h,
        Err(e) => {
            return CaseResult {
                name: format!("n={n}"),
                passed: 0,
                failed: 1,
                witness: Some(err(e)),
            }
        }
    };
    let size = fd.lattice.size();
    sweep(
        format!("n={n} ({size}x{size} pairs)"),
        (0..size).flat_map(|a| (0..size).map(move |b| (a, b))),
        |(a, b)| {
            let lemma = implication_lemma(&fd, a, b).map_err(err)?;
            let table = heyting.arrow(a, b);
            let pointwise = implication_pointwise(&fd, a, b);
            if lemma == table && lemma == pointwise {
                Ok(())
            } else {
                Err(format!("a={a} b={b}: lemma {lemma}, table {table}, pointwise {pointwise}"))
            }
        },
    )
}

/// Maximal ideals of the ideal lattice pull back to maximal ideals, with
/// every probe witnessing `a ∨ b = ⊤`.
pub fn clmax_suite(seed: u64) -> SuiteResult {
    let case = sweep(
        "maximal-ideal pullbacks",
        corpus::corpus_lattices(seed).iter().enumerate(),
        |(i, d)| {
            let cases = clmax_pullback(d).map_err(|e| format!("lattice #{i}: {}", err(e)))?;
            for c in &cases {
                if !c.pullback_is_maximal {
                    return Err(format!("lattice #{i}: pullback not maximal"));
                }
                for p in &c.probes {
                    if d.join(p.a, p.b) != d.top() {
                        return Err(format!(
                            "lattice #{i}: probe a={} b={} does not join to top",
                            p.a, p.b
                        ));
                    }
                }
            }
            Ok(())
        },
    );
    SuiteResult { name: "ideal-lattice-maximality", cases: vec![case] }
}

/// The maximal-filter bijection with the regular-element algebra, on every
/// corpus lattice read as a Heyting algebra.
pub fn booleanization_suite(seed: u64) -> SuiteResult {
    let case = sweep(
        "maximal-filter bijections",
        corpus::corpus_lattices(seed).into_iter().enumerate(),
        |(i, d)| {
            let h = HeytingAlgebra::from_lattice(d).map_err(|e| format!("lattice #{i}: {}", err(e)))?;
            check_max_filter_bijection(&h)
                .map(|_| ())
                .map_err(|e| format!("lattice #{i}: {}", err(e)))
        },
    );
    SuiteResult { name: "booleanization", cases: vec![case] }
}

/// Relation → algebra → relation round trips, with the transitivity
/// verdicts agreeing on both sides.
pub fn jonsson_tarski_suite(seed: u64, max_worlds: usize) -> SuiteResult {
    let rels: Vec<_> = corpus::relation_corpus(seed)
        .into_iter()
        .filter(|r| r.worlds() <= max_worlds)
        .collect();
    let round_trips = sweep("round trips", rels.iter().enumerate(), |(i, r)| {
        let alg = algebra_from_space(r).map_err(err)?;
        let w = jt_round_trip(&alg).map_err(err)?;
        if &w.space == r {
            Ok(())
        } else {
            Err(format!("relation #{i}: round trip changed the relation"))
        }
    });
    let verdicts = sweep("verdict agreement", rels.iter().enumerate(), |(i, r)| {
        let alg = algebra_from_space(r).map_err(err)?;
        if r.is_transitive() != alg.is_k4_algebra() {
            return Err(format!("relation #{i}: transitivity verdicts disagree"));
        }
        if (r.is_reflexive() && r.is_transitive()) != alg.is_s4_algebra() {
            return Err(format!("relation #{i}: preorder verdicts disagree"));
        }
        for n in 1..=4 {
            if r.n_transitive(n) != alg.n_transitive_algebra(n) {
                return Err(format!("relation #{i}: {n}-transitivity verdicts disagree"));
            }
        }
        Ok(())
    });
    SuiteResult { name: "jonsson-tarski", cases: vec![round_trips, verdicts] }
}

/// Reflexivization sends every transitive corpus member to a reflexive
/// transitive algebra without moving the quasi-maximal points.
pub fn reflexivization_suite(seed: u64, max_worlds: usize) -> SuiteResult {
    let k4: Vec<_> = corpus::k4_corpus(seed)
        .into_iter()
        .filter(|r| r.worlds() <= max_worlds)
        .collect();
    let case = sweep("transitive corpus", k4.iter().enumerate(), |(i, r)| {
        let alg = algebra_from_space(r).map_err(err)?;
        let refl = alg.reflexivize();
        if !refl.input_was_k4 {
            return Err(format!("relation #{i}: transitive input not recognized"));
        }
        if !refl.algebra.is_s4_algebra() {
            return Err(format!("relation #{i}: reflexivization is not reflexive-transitive"));
        }
        if r.qmax() != r.reflexive_closure().qmax() {
            return Err(format!("relation #{i}: reflexive closure moved the quasi-max points"));
        }
        Ok(())
    });
    SuiteResult { name: "reflexivization", cases: vec![case] }
}

/// Relativizing the algebra to a nonempty subset matches the algebra of
/// the restricted relation, and preserves transitivity.
pub fn relativization_suite(seed: u64, max_worlds: usize) -> SuiteResult {
    let rels: Vec<_> = corpus::relation_corpus(seed)
        .into_iter()
        .filter(|r| r.worlds() <= max_worlds)
        .collect();
    let case = sweep("nonempty subsets", rels.iter().enumerate(), |(i, r)| {
        let alg = algebra_from_space(r).map_err(err)?;
        let w = r.worlds();
        for c in 1usize..1 << w {
            let rel = relativize(&alg, c).map_err(err)?;
            let cset = ElemSet::from_mask(w, c as u64);
            let (sub, old) = r.restrict(&cset).map_err(err)?;
            let subalg = algebra_from_space(&sub).map_err(err)?;
            // compress a base mask ⊆ c into a mask over the kept worlds
            let compress = |x: usize| -> usize {
                old.iter()
                    .enumerate()
                    .filter(|&(_, &ow)| x >> ow & 1 == 1)
                    .fold(0usize, |m, (k, _)| m | 1 << k)
            };
            for (idx, &x) in rel.elements.iter().enumerate() {
                let got = compress(rel.elements[rel.algebra.box_of(idx)]);
                let want = subalg.box_of(compress(x));
                if got != want {
                    return Err(format!(
                        "relation #{i}, subset {c:#b}: relative box of {x:#b} is {got:#b}, subspace says {want:#b}"
                    ));
                }
            }
            if alg.is_k4_algebra() && !rel.algebra.is_k4_algebra() {
                return Err(format!("relation #{i}, subset {c:#b}: transitivity lost"));
            }
        }
        Ok(())
    });
    SuiteResult { name: "relativization", cases: vec![case] }
}

/// Every maximality construction produces a nonempty answer on nonempty
/// input: extreme points of posets, maximal filters and ideals of
/// lattices, quasi-maximal points of preorders, and their eventual
/// variant for arbitrary relations.
pub fn maximality_suite(seed: u64, max_size: usize) -> SuiteResult {
    let posets: Vec<_> = corpus::corpus_posets(seed)
        .into_iter()
        .filter(|p| p.size() <= max_size)
        .collect();
    let poset_case = sweep("poset extremes", posets.iter().enumerate(), |(i, p)| {
        let all = ElemSet::full(p.size());
        let maxes = p.max_points(&all).map_err(err)?;
        let mins = p.min_points(&all).map_err(err)?;
        if maxes.is_empty() || mins.is_empty() {
            Err(format!("poset #{i}: no extreme points"))
        } else {
            Ok(())
        }
    });
    let lattice_case = sweep(
        "lattice filters and ideals",
        corpus::corpus_lattices(seed).iter().enumerate(),
        |(i, d)| {
            if maximal_filters(d).is_empty() || maximal_ideals(d).is_empty() {
                Err(format!("lattice #{i}: no maximal filter or ideal"))
            } else {
                Ok(())
            }
        },
    );
    let rels = corpus::relation_corpus(seed);
    let qmax_case = sweep("preorder quasi-max points", rels.iter().enumerate(), |(i, r)| {
        if r.star_closure().qmax().is_empty() {
            Err(format!("relation #{i}: preorder completion has no quasi-max point"))
        } else {
            Ok(())
        }
    });
    let eqmax_case = sweep("eventual quasi-max points", rels.iter().enumerate(), |(i, r)| {
        if r.eqmax().is_empty() {
            Err(format!("relation #{i}: no eventually quasi-max point"))
        } else {
            Ok(())
        }
    });
    SuiteResult {
        name: "maximality-shadows",
        cases: vec![poset_case, lattice_case, qmax_case, eqmax_case],
    }
}

/// Whenever the preorder completion of a restricted relation is reached by
/// a single relation power, the eventual quasi-max points agree with the
/// quasi-max points of that power.
pub fn weak_transitivity_suite(seed: u64, max_worlds: usize) -> SuiteResult {
    let rels: Vec<_> = corpus::relation_corpus(seed)
        .into_iter()
        .filter(|r| r.worlds() <= max_worlds)
        .collect();
    let case = sweep("restricted powers", rels.iter().enumerate(), |(i, r)| {
        let w = r.worlds();
        for c in 1usize..1 << w {
            let cset = ElemSet::from_mask(w, c as u64);
            let (rc, _) = r.restrict(&cset).map_err(err)?;
            let star = rc.star_closure();
            for n in 1..=2 * rc.worlds() + 2 {
                if rc.power(n) == star && rc.eqmax() != rc.power(n).qmax() {
                    return Err(format!(
                        "relation #{i}, subset {c:#b}: eventual quasi-max differs from power {n}"
                    ));
                }
            }
        }
        Ok(())
    });
    SuiteResult { name: "weak-transitivity", cases: vec![case] }
}

/// Tense algebras from every relation at the exhaustive world counts, and
/// the co-implication of the fixpoint algebra against its successor-
/// closure formula on preorder instances.
pub fn tense_suite(seed: u64, max_worlds: usize) -> SuiteResult {
    let mut cases = Vec::new();
    for w in 1..=3usize.min(max_worlds) {
        cases.push(sweep(
            format!("all relations on {w} worlds"),
            corpus::all_relations(w).iter().enumerate(),
            |(i, r)| tense_from_space(r).map(|_| ()).map_err(|e| format!("relation #{i}: {}", err(e))),
        ));
    }
    if max_worlds >= 4 {
        cases.push(sweep(
            "all relations on 4 worlds",
            0u64..1 << 16,
            |code| {
                let rows = (0..4)
                    .map(|x| {
                        ElemSet::from_indices(4, (0..4).filter(|&y| code >> (x * 4 + y) & 1 == 1))
                    })
                    .collect();
                let r = RelSpace::from_rows(rows).expect("4 rows of width 4");
                tense_from_space(&r).map(|_| ()).map_err(|e| format!("relation {code:#x}: {}", err(e)))
            },
        ));
    }
    // deduped preorders from the corpus closures
    let mut seen = std::collections::HashSet::new();
    let mut preorders = Vec::new();
    for r in corpus::relation_corpus(seed) {
        if r.worlds() > max_worlds.min(4) {
            continue;
        }
        let s = r.star_closure();
        let code: Vec<u64> = (0..s.worlds()).map(|x| s.rows()[x].as_mask()).collect();
        if seen.insert((s.worlds(), code)) {
            preorders.push(s);
        }
    }
    cases.push(sweep("fixpoint co-implication", preorders.iter().enumerate(), |(i, s)| {
        let t = tense_from_space(s).map_err(err)?;
        let (h, elems) = biheyting_fixpoints(&t).map_err(err)?;
        for u in 0..h.lattice.size() {
            for v in 0..h.lattice.size() {
                let diff = elems[u] & !elems[v];
                let mut expect = 0usize;
                for x in 0..s.worlds() {
                    if diff >> x & 1 == 1 {
                        // s is reflexive and transitive, so its rows are its own closure
                        expect |= s.rows()[x].as_mask() as usize;
                    }
                }
                if elems[h.co_arrow(u, v)] != expect {
                    return Err(format!(
                        "preorder #{i}: co-implication of {:#b} over {:#b} missed its closure form",
                        elems[u], elems[v]
                    ));
                }
            }
        }
        Ok(())
    }));
    SuiteResult { name: "tense-axioms", cases }
}

/// The symbolic two-chain example: all four verdicts.
pub fn omega_suite() -> SuiteResult {
    let case = match verify_example(10) {
        Ok(report) => {
            let labels = [
                "down-closures of clopens stay clopen",
                "C is closed and not open",
                "the a-limit is clopen within C",
                "its down-closure is not clopen within C",
            ];
            let first_bad = report.verdicts.iter().position(|&v| !v);
            CaseResult {
                name: format!("four verdicts over {} clopens", report.clopen_family_size),
                passed: report.verdicts.iter().filter(|&&v| v).count(),
                failed: report.verdicts.iter().filter(|&&v| !v).count(),
                witness: first_bad.map(|k| format!("verdict failed: {}", labels[k])),
            }
        }
        Err(e) => CaseResult {
            name: "four verdicts".into(),
            passed: 0,
            failed: 4,
            witness: Some(err(e)),
        },
    };
    SuiteResult { name: "two-chain-space", cases: vec![case] }
}

/// Filter quotients of Boolean corpus members: every proper filter yields
/// a quotient isomorphic to the generator's downset interval, with a
/// maximal extension pulled back from the least quotient ultrafilter.
pub fn famax_suite(max_worlds: usize) -> SuiteResult {
    let algebras: Vec<DLattice> = corpus::boolean_corpus()
        .into_iter()
        .filter(|d| d.size() <= 1 << max_worlds.min(4))
        .collect();
    let case = sweep("proper filters", algebras.iter().enumerate(), |(i, d)| {
        for g in 0..d.size() {
            if g == d.bottom() {
                continue;
            }
            let f = FilterOrIdeal::principal_filter(d, g);
            let w = famax_quotient(d, &f).map_err(|e| format!("algebra #{i}, gen {g}: {}", err(e)))?;
            if w.quotient.size() != d.down_set(g).len() {
                return Err(format!(
                    "algebra #{i}, gen {g}: quotient has {} classes, expected {}",
                    w.quotient.size(),
                    d.down_set(g).len()
                ));
            }
        }
        Ok(())
    });
    SuiteResult { name: "filter-maximalization", cases: vec![case] }
}

/// All suites, in a fixed order.
pub fn run_all_checks(seed: u64, max_size: usize) -> CheckReport {
    let max_worlds = max_size.min(5);
    let suites = vec![
        duality_suite(seed, max_size),
        free_lattice_suite(max_size),
        implication_suite(max_size),
        clmax_suite(seed),
        booleanization_suite(seed),
        jonsson_tarski_suite(seed, max_worlds),
        reflexivization_suite(seed, max_worlds),
        relativization_suite(seed, max_worlds),
        maximality_suite(seed, max_size),
        weak_transitivity_suite(seed, max_worlds),
        tense_suite(seed, max_worlds),
        omega_suite(),
        famax_suite(max_worlds),
    ];
    CheckReport { seed, max_size, suites }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::DEFAULT_SEED;

    #[test]
    fn small_scale_report_is_green() {
        // max size 3 keeps every sweep tiny; the full-scale run is the
        // acceptance test's job
        let report = run_all_checks(DEFAULT_SEED, 3);
        for suite in &report.suites {
            assert!(
                suite.ok(),
                "{}: {:?}",
                suite.name,
                suite.cases.iter().find(|c| !c.ok()).and_then(|c| c.witness.clone())
            );
            assert!(suite.passed() > 0, "{} ran nothing", suite.name);
        }
        assert!(report.ok());
    }

    #[test]
    fn sweeps_count_failures_and_keep_the_first_witness() {
        let case = sweep("evens", 0..6, |k| {
            if k % 2 == 0 {
                Ok(())
            } else {
                Err(format!("odd {k}"))
            }
        });
        assert_eq!((case.passed, case.failed), (3, 3));
        assert_eq!(case.witness.as_deref(), Some("odd 1"));
        assert!(!case.ok());
    }
}
