//! One function per subcommand. Each returns a verdict-tree report plus,
//! where it makes sense, a DOT diagram of the object the command is about.

use std::collections::HashMap;

use ordual::{
    algebra_from_space, booleanization, check_max_filter_bijection, clmax_pullback,
    dual_cube_witness, enumerate_prime_filters, generate_free, implication_lemma,
    implication_pointwise, jt_round_trip, maximal_filters, maximal_ideals, pit_witness,
    priestley_dual, relativize, round_trip_poset, run_all_checks, verify_example, DLattice,
    ElemSet, FilterOrIdeal, FreeDL, HeytingAlgebra, Poset, RelSpace, FREE_SIZES,
};

use crate::report::{info, suite, verdict, CaseJson, Report};
use crate::schema::{
    lattice_file, modal_file, poset_file, relation_file, subset_name, Structure,
};
use crate::CliError;

pub struct Outcome {
    pub report: Report,
    pub dot: Option<String>,
    /// `dot` is the natural stdout for this command (the `dot` subcommand).
    pub prefer_dot: bool,
}

impl Outcome {
    fn new(report: Report) -> Self {
        Outcome { report, dot: None, prefer_dot: false }
    }

    fn with_dot(mut self, dot: String) -> Self {
        self.dot = Some(dot);
        self
    }
}

// ---- DOT ----------------------------------------------------------------

fn dot_escape(name: &str) -> String {
    name.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Hasse diagram: nodes plus cover edges only, drawn bottom-up.
fn poset_dot(p: &Poset, names: &[String]) -> String {
    let mut out = String::from("digraph hasse {\n  rankdir=BT;\n");
    for name in names {
        out.push_str(&format!("  \"{}\";\n", dot_escape(name)));
    }
    for (a, b) in p.covers() {
        out.push_str(&format!("  \"{}\" -> \"{}\";\n", dot_escape(&names[a]), dot_escape(&names[b])));
    }
    out.push_str("}\n");
    out
}

/// Relation diagram: every edge, loops included.
fn relation_dot(r: &RelSpace, names: &[String]) -> String {
    let mut out = String::from("digraph relation {\n");
    for name in names {
        out.push_str(&format!("  \"{}\";\n", dot_escape(name)));
    }
    for x in 0..r.worlds() {
        for y in r.rows()[x].iter() {
            out.push_str(&format!(
                "  \"{}\" -> \"{}\";\n",
                dot_escape(&names[x]),
                dot_escape(&names[y])
            ));
        }
    }
    out.push_str("}\n");
    out
}

// ---- dual ---------------------------------------------------------------

pub fn dual(structure: &Structure) -> Result<Outcome, CliError> {
    match structure {
        Structure::Poset(p, names) => {
            let rt = round_trip_poset(p).map_err(CliError::from_core)?;
            let upset_names: Vec<String> = rt
                .upsets
                .upsets
                .iter()
                .map(|u| subset_name(u.iter(), names))
                .collect();
            let cases = vec![
                info("upset lattice", format!("{} upsets", upset_names.len())),
                verdict(
                    "poset matches the dual of its upset lattice",
                    true,
                    Some(format!("{} prime filters", rt.witness.points.len())),
                ),
            ];
            let dot = poset_dot(&rt.upsets.lattice.order_poset(), &upset_names);
            Ok(Outcome::new(
                Report::new("dual", vec![suite("duality", cases)])
                    .with_artifact(lattice_file(&rt.upsets.lattice, &upset_names)),
            )
            .with_dot(dot))
        }
        Structure::Lattice(d, names) => {
            let w = priestley_dual(d).map_err(CliError::from_core)?;
            let point_names: Vec<String> = w
                .points
                .iter()
                .map(|p| subset_name(p.filter.members.iter(), names))
                .collect();
            let cases = vec![
                info("prime filters", format!("{}", point_names.len())),
                verdict(
                    "lattice matches the clopen upsets of its dual",
                    true,
                    Some(format!("{} elements embed", d.size())),
                ),
            ];
            let dot = poset_dot(&w.dual, &point_names);
            Ok(Outcome::new(
                Report::new("dual", vec![suite("duality", cases)])
                    .with_artifact(poset_file(&w.dual, &point_names)),
            )
            .with_dot(dot))
        }
        Structure::Relation(r, names) => {
            let alg = algebra_from_space(r).map_err(CliError::from_core)?;
            let elem_names: Vec<String> = (0..alg.base.size())
                .map(|mask| subset_name((0..r.worlds()).filter(|w| mask >> w & 1 == 1), names))
                .collect();
            let jt = jt_round_trip(&alg).map_err(CliError::from_core)?;
            let cases = vec![
                info("complex algebra", format!("2^{} elements", r.worlds())),
                verdict("dual space returns the relation", jt.space == *r, None),
            ];
            Ok(Outcome::new(
                Report::new("dual", vec![suite("duality", cases)])
                    .with_artifact(modal_file(&alg, &elem_names)),
            )
            .with_dot(relation_dot(r, names)))
        }
        Structure::Modal(alg, names) => {
            let jt = jt_round_trip(alg).map_err(CliError::from_core)?;
            let atom_names: Vec<String> =
                jt.atoms.iter().map(|&a| names[a].clone()).collect();
            let cases = vec![
                info("atoms", format!("{}", atom_names.len())),
                verdict(
                    "algebra matches the complex algebra of its dual space",
                    true,
                    None,
                ),
            ];
            let dot = relation_dot(&jt.space, &atom_names);
            Ok(Outcome::new(
                Report::new("dual", vec![suite("duality", cases)])
                    .with_artifact(relation_file(&jt.space, &atom_names)),
            )
            .with_dot(dot))
        }
        Structure::Tense(t, names) => {
            let future = t.future_fragment();
            let jt = jt_round_trip(&future).map_err(CliError::from_core)?;
            let atom_names: Vec<String> =
                jt.atoms.iter().map(|&a| names[a].clone()).collect();
            let conv = jt.space.converse();
            let worlds = jt.space.worlds();
            let mut past_matches = true;
            for a in 0..t.base.size() {
                let expected = conv
                    .box_of(&ElemSet::from_mask(worlds, jt.iso[a] as u64))
                    .map_err(CliError::from_core)?
                    .as_mask() as usize;
                if jt.iso[t.box_p(a)] != expected {
                    past_matches = false;
                }
            }
            let cases = vec![
                info("atoms", format!("{}", atom_names.len())),
                verdict("future box matches the relation", true, None),
                verdict("past box is the converse box", past_matches, None),
            ];
            let dot = relation_dot(&jt.space, &atom_names);
            Ok(Outcome::new(
                Report::new("dual", vec![suite("duality", cases)])
                    .with_artifact(relation_file(&jt.space, &atom_names)),
            )
            .with_dot(dot))
        }
    }
}

// ---- free ---------------------------------------------------------------

fn term_name(fd: &FreeDL, elem: usize) -> String {
    let term = fd.term_of(elem);
    if term.minimals.is_empty() {
        return "false".into();
    }
    if term.minimals == [0] {
        return "true".into();
    }
    let meets: Vec<String> = term
        .minimals
        .iter()
        .map(|&s| {
            if s == 0 {
                "true".into()
            } else {
                let gens: Vec<String> =
                    (0..fd.n).filter(|&g| s >> g & 1 == 1).map(|g| format!("g{g}")).collect();
                format!("({})", gens.join("&"))
            }
        })
        .collect();
    meets.join("|")
}

pub fn free(n: usize, seed: u64) -> Result<Outcome, CliError> {
    let fd = generate_free(n).map_err(CliError::from_core)?;
    let size = fd.lattice.size();
    let mut cases = vec![verdict(
        "element count",
        size == FREE_SIZES[n],
        Some(format!("{size} elements on {n} generators")),
    )];
    if n <= 4 {
        let cube = dual_cube_witness(&fd).map_err(CliError::from_core)?;
        cases.push(verdict(
            "dual is the subset cube",
            true,
            Some(format!("{} points", cube.len())),
        ));
        let heyting =
            HeytingAlgebra::from_lattice(fd.lattice.clone()).map_err(CliError::from_core)?;
        let mut mismatches = 0usize;
        let mut pairs = 0usize;
        for a in 0..size {
            for b in 0..size {
                pairs += 1;
                let lemma = implication_lemma(&fd, a, b).map_err(CliError::from_core)?;
                if lemma != heyting.arrow(a, b) || lemma != implication_pointwise(&fd, a, b) {
                    mismatches += 1;
                }
            }
        }
        cases.push(CaseJson {
            name: "implication formula matches table and pointwise oracles".into(),
            ok: mismatches == 0,
            passed: pairs - mismatches,
            failed: mismatches,
            witness: None,
        });
    } else {
        let mut mismatches = 0usize;
        let sampled = rand_like::sample_pairs(seed, 2000, size);
        let total = sampled.len();
        for (a, b) in sampled {
            let lemma = implication_lemma(&fd, a, b).map_err(CliError::from_core)?;
            if lemma != implication_pointwise(&fd, a, b) {
                mismatches += 1;
            }
        }
        cases.push(CaseJson {
            name: "implication formula matches the pointwise oracle (sampled)".into(),
            ok: mismatches == 0,
            passed: total - mismatches,
            failed: mismatches,
            witness: None,
        });
    }
    let report = Report::new("free", vec![suite("free-lattice", cases)]).with_seed(seed);
    if n <= 4 {
        // the artifact stays diffable up to 168 elements; n = 5 is summary-only
        let names: Vec<String> = (0..size).map(|e| term_name(&fd, e)).collect();
        let dot = poset_dot(&fd.lattice.order_poset(), &names);
        Ok(Outcome::new(report.with_artifact(lattice_file(&fd.lattice, &names))).with_dot(dot))
    } else {
        Ok(Outcome::new(report))
    }
}

// ---- maximal ------------------------------------------------------------

fn base_lattice(structure: &Structure) -> Result<(&DLattice, &[String]), CliError> {
    match structure {
        Structure::Lattice(d, names) => Ok((d, names)),
        Structure::Modal(alg, names) => Ok((&alg.base, names)),
        Structure::Tense(t, names) => Ok((&t.base, names)),
        _ => Err(CliError::Input(format!(
            "kind {} has no lattice side; pass a dlattice, modal-algebra, or tense-algebra",
            structure.kind().name()
        ))),
    }
}

fn fi_name(fi: &FilterOrIdeal, names: &[String]) -> String {
    subset_name(fi.members.iter(), names)
}

pub fn maximal(structure: &Structure) -> Result<Outcome, CliError> {
    let (d, names) = base_lattice(structure)?;
    let filters = maximal_filters(d);
    let ideals = maximal_ideals(d);
    let primes = enumerate_prime_filters(d).map_err(CliError::from_core)?;
    let list = |items: &[FilterOrIdeal]| {
        let mut s: Vec<String> = items.iter().take(4).map(|f| fi_name(f, names)).collect();
        if items.len() > 4 {
            s.push(format!("… {} total", items.len()));
        }
        s.join(", ")
    };
    let mut cases = vec![
        verdict("maximal filters exist", !filters.is_empty(), Some(list(&filters))),
        verdict("maximal ideals exist", !ideals.is_empty(), Some(list(&ideals))),
        info("prime filters", format!("{}", primes.len())),
    ];
    // separation witnesses: for every disjoint pair (↑a, ↓b), a prime ideal
    // containing ↓b and missing ↑a
    let mut pairs = 0usize;
    let mut failures = 0usize;
    let mut first: Option<String> = None;
    for a in 0..d.size() {
        for b in 0..d.size() {
            let f = FilterOrIdeal::principal_filter(d, a);
            let i = FilterOrIdeal::principal_ideal(d, b);
            if !f.members.is_disjoint(&i.members) {
                continue;
            }
            pairs += 1;
            match pit_witness(d, &f, &i) {
                Ok(w) => {
                    if first.is_none() {
                        first = Some(format!(
                            "prime ideal {} separates {} from {}",
                            fi_name(&w, names),
                            names[a],
                            names[b]
                        ));
                    }
                }
                Err(_) => failures += 1,
            }
        }
    }
    cases.push(CaseJson {
        name: "prime separation witnesses".into(),
        ok: failures == 0,
        passed: pairs - failures,
        failed: failures,
        witness: first,
    });
    Ok(Outcome::new(Report::new("maximal", vec![suite("maximality", cases)])))
}

// ---- qmax / relativize ---------------------------------------------------

fn subset_from_names(
    names: &[String],
    worlds: usize,
    subset: &[String],
) -> Result<ElemSet, CliError> {
    let index: HashMap<&str, usize> =
        names.iter().enumerate().map(|(i, n)| (n.as_str(), i)).collect();
    let mut set = ElemSet::empty(worlds);
    for name in subset {
        set.insert(crate::schema::lookup(&index, name)?);
    }
    Ok(set)
}

pub fn qmax(structure: &Structure, subset: &[String]) -> Result<Outcome, CliError> {
    let (r, names) = match structure {
        Structure::Relation(r, names) => (r, names),
        _ => {
            return Err(CliError::Input(format!(
                "kind {} has no relation; pass a relspace",
                structure.kind().name()
            )))
        }
    };
    let set = if subset.is_empty() {
        ElemSet::full(r.worlds())
    } else {
        subset_from_names(names, r.worlds(), subset)?
    };
    if set.is_empty() {
        return Err(CliError::Input("the subset must be nonempty".into()));
    }
    let (rc, old) = r.restrict(&set).map_err(CliError::from_core)?;
    let name_of = |s: &ElemSet| subset_name(s.iter().map(|i| old[i]), names);
    let q = rc.qmax();
    let eq = rc.eqmax();
    let cases = vec![
        info("quasi-max points", name_of(&q)),
        verdict("eventually quasi-max points exist", !eq.is_empty(), Some(name_of(&eq))),
    ];
    Ok(Outcome::new(Report::new("qmax", vec![suite("maximal-points", cases)]))
        .with_dot(relation_dot(&rc, &old.iter().map(|&i| names[i].clone()).collect::<Vec<_>>())))
}

pub fn relativize_cmd(structure: &Structure, subset: &[String]) -> Result<Outcome, CliError> {
    let (r, names) = match structure {
        Structure::Relation(r, names) => (r, names),
        _ => {
            return Err(CliError::Input(format!(
                "kind {} cannot be relativized here; pass a relspace",
                structure.kind().name()
            )))
        }
    };
    let set = subset_from_names(names, r.worlds(), subset)?;
    if set.is_empty() {
        return Err(CliError::Input("the subset must be nonempty".into()));
    }
    let alg = algebra_from_space(r).map_err(CliError::from_core)?;
    let mask = set.as_mask() as usize;
    let rel = relativize(&alg, mask).map_err(CliError::from_core)?;
    let (sub, old) = r.restrict(&set).map_err(CliError::from_core)?;
    let subalg = algebra_from_space(&sub).map_err(CliError::from_core)?;
    let compress = |x: usize| -> usize {
        old.iter()
            .enumerate()
            .filter(|&(_, &ow)| x >> ow & 1 == 1)
            .fold(0usize, |m, (k, _)| m | 1 << k)
    };
    let mut matches = true;
    for (idx, &x) in rel.elements.iter().enumerate() {
        if compress(rel.elements[rel.algebra.box_of(idx)]) != subalg.box_of(compress(x)) {
            matches = false;
        }
    }
    let inherited = !alg.is_k4_algebra() || rel.algebra.is_k4_algebra();
    let carrier_names: Vec<String> = rel
        .elements
        .iter()
        .map(|&x| subset_name((0..r.worlds()).filter(|w| x >> w & 1 == 1), names))
        .collect();
    let cases = vec![
        info("relative carrier", format!("{} elements", rel.elements.len())),
        verdict("matches the subspace algebra", matches, None),
        verdict("transitivity inherited where present", inherited, None),
    ];
    let sub_names: Vec<String> = old.iter().map(|&i| names[i].clone()).collect();
    Ok(Outcome::new(
        Report::new("relativize", vec![suite("relativization", cases)])
            .with_artifact(modal_file(&rel.algebra, &carrier_names)),
    )
    .with_dot(relation_dot(&sub, &sub_names)))
}

// ---- clmax / booleanize ---------------------------------------------------

pub fn clmax(structure: &Structure) -> Result<Outcome, CliError> {
    let (d, names) = base_lattice(structure)?;
    let cases_raw = clmax_pullback(d).map_err(CliError::from_core)?;
    let mut cases = Vec::new();
    for (k, c) in cases_raw.iter().enumerate() {
        let pullback = subset_name(c.pullback.iter(), names);
        cases.push(verdict(
            format!("maximal ideal #{k} pulls back to a maximal ideal"),
            c.pullback_is_maximal,
            Some(format!("pullback {pullback}, {} probes", c.probes.len())),
        ));
    }
    let mut probe_failures = 0usize;
    let mut probe_count = 0usize;
    for c in &cases_raw {
        for p in &c.probes {
            probe_count += 1;
            if d.join(p.a, p.b) != d.top() {
                probe_failures += 1;
            }
        }
    }
    cases.push(CaseJson {
        name: "probe witnesses join to the top".into(),
        ok: probe_failures == 0,
        passed: probe_count - probe_failures,
        failed: probe_failures,
        witness: None,
    });
    Ok(Outcome::new(Report::new("clmax", vec![suite("ideal-lattice-pullback", cases)])))
}

pub fn booleanize(structure: &Structure) -> Result<Outcome, CliError> {
    let (d, names) = base_lattice(structure)?;
    let h = HeytingAlgebra::from_lattice(d.clone()).map_err(CliError::from_core)?;
    let bz = booleanization(&h).map_err(CliError::from_core)?;
    let bij = check_max_filter_bijection(&h).map_err(CliError::from_core)?;
    let regular_names: Vec<String> =
        bz.regulars.iter().map(|&a| names[a].clone()).collect();
    let cases = vec![
        info(
            "regular elements",
            format!("{} of {}: {}", bz.regulars.len(), d.size(), regular_names.join(", ")),
        ),
        verdict(
            "maximal filters biject with the regular algebra's",
            true,
            Some(format!("{} filter pairs", bij.pairs.len())),
        ),
    ];
    Ok(Outcome::new(
        Report::new("booleanize", vec![suite("booleanization", cases)])
            .with_artifact(lattice_file(&bz.lattice, &regular_names)),
    ))
}

// ---- omega-demo / check / dot ----------------------------------------------

pub fn omega_demo(k: usize) -> Result<Outcome, CliError> {
    let r = verify_example(k).map_err(CliError::from_core)?;
    let cases = vec![
        verdict(
            "down-closures of clopens stay clopen",
            r.verdicts[0],
            Some(format!("{} clopens checked", r.clopen_family_size)),
        ),
        verdict(
            "the b-chain closure with the a-limit is closed and not open",
            r.verdicts[1],
            None,
        ),
        verdict(
            "the a-limit is clopen within that subspace",
            r.verdicts[2],
            Some("every a-point together with the a-limit".into()),
        ),
        verdict(
            "its down-closure is not clopen within that subspace",
            r.verdicts[3],
            Some("any open around the b-limit keeps a tail of b-points".into()),
        ),
    ];
    Ok(Outcome::new(Report::new("omega-demo", vec![suite("two-chain-space", cases)])))
}

pub fn check(seed: u64, max_size: usize) -> Result<Outcome, CliError> {
    let report = run_all_checks(seed, max_size);
    let suites = report.suites.iter().map(Into::into).collect();
    Ok(Outcome::new(Report::new("check", suites).with_seed(seed)))
}

pub fn dot(structure: &Structure) -> Result<Outcome, CliError> {
    let (dot, what) = match structure {
        Structure::Poset(p, names) => (poset_dot(p, names), format!("{} nodes", p.size())),
        Structure::Lattice(d, names) => {
            (poset_dot(&d.order_poset(), names), format!("{} nodes", d.size()))
        }
        Structure::Relation(r, names) => (relation_dot(r, names), format!("{} nodes", r.worlds())),
        Structure::Modal(alg, names) => {
            let jt = jt_round_trip(alg).map_err(CliError::from_core)?;
            let atom_names: Vec<String> = jt.atoms.iter().map(|&a| names[a].clone()).collect();
            (relation_dot(&jt.space, &atom_names), format!("{} nodes", atom_names.len()))
        }
        Structure::Tense(t, names) => {
            let jt = jt_round_trip(&t.future_fragment()).map_err(CliError::from_core)?;
            let atom_names: Vec<String> = jt.atoms.iter().map(|&a| names[a].clone()).collect();
            (relation_dot(&jt.space, &atom_names), format!("{} nodes", atom_names.len()))
        }
    };
    let mut outcome = Outcome::new(Report::new(
        "dot",
        vec![suite("diagram", vec![info("dot", what)])],
    ))
    .with_dot(dot);
    outcome.prefer_dot = true;
    Ok(outcome)
}

/// Deterministic spot-check pairs for the sizes where a full sweep is out
/// of reach.
mod rand_like {
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    pub fn sample_pairs(seed: u64, count: usize, size: usize) -> Vec<(usize, usize)> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..count).map(|_| (rng.gen_range(0..size), rng.gen_range(0..size))).collect()
    }
}
