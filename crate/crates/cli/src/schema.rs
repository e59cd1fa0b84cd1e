//! The structure-file format: one JSON object per structure, with a fixed
//! field order and sorted pair lists so serializations are canonical and
//! diffable.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use ordual::{DLattice, ModalAlgebra, Poset, RelSpace, TenseAlgebra};

use crate::CliError;

pub const FORMAT_VERSION: u32 = 1;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Kind {
    Poset,
    Dlattice,
    Relspace,
    ModalAlgebra,
    TenseAlgebra,
}

impl Kind {
    pub fn name(self) -> &'static str {
        match self {
            Kind::Poset => "poset",
            Kind::Dlattice => "dlattice",
            Kind::Relspace => "relspace",
            Kind::ModalAlgebra => "modal-algebra",
            Kind::TenseAlgebra => "tense-algebra",
        }
    }
}

/// On-disk form. Exactly the payload fields of the declared kind may be
/// present: `leq` for posets, `meet`/`join` for lattices, `rel` for
/// relation spaces, plus `box` (modal) or `boxF`/`boxP` (tense) on top of
/// the lattice tables.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StructureFile {
    #[serde(rename = "format-version")]
    pub format_version: u32,
    pub kind: Kind,
    pub elements: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub leq: Option<Vec<(String, String)>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub meet: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub join: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rel: Option<Vec<(String, String)>>,
    #[serde(rename = "box", default, skip_serializing_if = "Option::is_none")]
    pub box_table: Option<Vec<String>>,
    #[serde(rename = "boxF", default, skip_serializing_if = "Option::is_none")]
    pub box_f: Option<Vec<String>>,
    #[serde(rename = "boxP", default, skip_serializing_if = "Option::is_none")]
    pub box_p: Option<Vec<String>>,
}

/// A parsed structure with its display names.
pub enum Structure {
    Poset(Poset, Vec<String>),
    Lattice(DLattice, Vec<String>),
    Relation(RelSpace, Vec<String>),
    Modal(ModalAlgebra, Vec<String>),
    Tense(TenseAlgebra, Vec<String>),
}

impl Structure {
    pub fn kind(&self) -> Kind {
        match self {
            Structure::Poset(..) => Kind::Poset,
            Structure::Lattice(..) => Kind::Dlattice,
            Structure::Relation(..) => Kind::Relspace,
            Structure::Modal(..) => Kind::ModalAlgebra,
            Structure::Tense(..) => Kind::TenseAlgebra,
        }
    }

}

pub fn read_structure(path: &std::path::Path) -> Result<Structure, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
    let file: StructureFile = serde_json::from_str(&text)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    parse_structure(&file)
}

pub fn parse_structure(file: &StructureFile) -> Result<Structure, CliError> {
    if file.format_version != FORMAT_VERSION {
        return Err(CliError::Input(format!(
            "unsupported format-version {} (this build reads {FORMAT_VERSION})",
            file.format_version
        )));
    }
    let names = file.elements.clone();
    let index = name_index(&names)?;
    let required = |field: &str, present: bool| {
        if present {
            Ok(())
        } else {
            Err(CliError::Input(format!("kind {} requires the `{field}` field", file.kind.name())))
        }
    };
    let forbidden: &[(&str, bool)] = &[
        ("leq", file.leq.is_some()),
        ("meet", file.meet.is_some()),
        ("join", file.join.is_some()),
        ("rel", file.rel.is_some()),
        ("box", file.box_table.is_some()),
        ("boxF", file.box_f.is_some()),
        ("boxP", file.box_p.is_some()),
    ];
    let allowed: &[&str] = match file.kind {
        Kind::Poset => &["leq"],
        Kind::Dlattice => &["meet", "join"],
        Kind::Relspace => &["rel"],
        Kind::ModalAlgebra => &["meet", "join", "box"],
        Kind::TenseAlgebra => &["meet", "join", "boxF", "boxP"],
    };
    for &(field, present) in forbidden {
        if present && !allowed.contains(&field) {
            return Err(CliError::Input(format!(
                "kind {} does not take the `{field}` field",
                file.kind.name()
            )));
        }
    }
    match file.kind {
        Kind::Poset => {
            required("leq", file.leq.is_some())?;
            let pairs = pair_indices(file.leq.as_ref().unwrap(), &index)?;
            let poset =
                Poset::from_pairs(names.len(), &pairs).map_err(CliError::from_core)?;
            Ok(Structure::Poset(poset, names))
        }
        Kind::Dlattice => {
            required("meet", file.meet.is_some())?;
            required("join", file.join.is_some())?;
            let lattice = lattice_from_tables(file, &index)?;
            Ok(Structure::Lattice(lattice, names))
        }
        Kind::Relspace => {
            required("rel", file.rel.is_some())?;
            let pairs = pair_indices(file.rel.as_ref().unwrap(), &index)?;
            let space = RelSpace::new(names.len(), &pairs).map_err(CliError::from_core)?;
            Ok(Structure::Relation(space, names))
        }
        Kind::ModalAlgebra => {
            required("meet", file.meet.is_some())?;
            required("join", file.join.is_some())?;
            required("box", file.box_table.is_some())?;
            let lattice = lattice_from_tables(file, &index)?;
            let table = unary_indices("box", file.box_table.as_ref().unwrap(), &index, names.len())?;
            let algebra =
                ModalAlgebra::from_parts(lattice, &table).map_err(CliError::from_core)?;
            Ok(Structure::Modal(algebra, names))
        }
        Kind::TenseAlgebra => {
            required("meet", file.meet.is_some())?;
            required("join", file.join.is_some())?;
            required("boxF", file.box_f.is_some())?;
            required("boxP", file.box_p.is_some())?;
            let lattice = lattice_from_tables(file, &index)?;
            let f = unary_indices("boxF", file.box_f.as_ref().unwrap(), &index, names.len())?;
            let p = unary_indices("boxP", file.box_p.as_ref().unwrap(), &index, names.len())?;
            let algebra =
                TenseAlgebra::from_parts(lattice, &f, &p).map_err(CliError::from_core)?;
            Ok(Structure::Tense(algebra, names))
        }
    }
}

fn name_index(names: &[String]) -> Result<HashMap<&str, usize>, CliError> {
    if names.is_empty() {
        return Err(CliError::Input("`elements` must not be empty".into()));
    }
    let mut index = HashMap::new();
    for (i, n) in names.iter().enumerate() {
        if index.insert(n.as_str(), i).is_some() {
            return Err(CliError::Input(format!("duplicate element name {n:?}")));
        }
    }
    Ok(index)
}

pub fn lookup(index: &HashMap<&str, usize>, name: &str) -> Result<usize, CliError> {
    index
        .get(name)
        .copied()
        .ok_or_else(|| CliError::Input(format!("undeclared element name {name:?}")))
}

fn pair_indices(
    pairs: &[(String, String)],
    index: &HashMap<&str, usize>,
) -> Result<Vec<(usize, usize)>, CliError> {
    pairs
        .iter()
        .map(|(a, b)| Ok((lookup(index, a)?, lookup(index, b)?)))
        .collect()
}

fn unary_indices(
    field: &str,
    table: &[String],
    index: &HashMap<&str, usize>,
    n: usize,
) -> Result<Vec<usize>, CliError> {
    if table.len() != n {
        return Err(CliError::Input(format!(
            "`{field}` must list one value per element ({n}), got {}",
            table.len()
        )));
    }
    table.iter().map(|v| lookup(index, v)).collect()
}

fn lattice_from_tables(
    file: &StructureFile,
    index: &HashMap<&str, usize>,
) -> Result<DLattice, CliError> {
    let n = file.elements.len();
    let read_table = |field: &str, table: &[Vec<String>]| -> Result<Vec<Vec<usize>>, CliError> {
        if table.len() != n || table.iter().any(|row| row.len() != n) {
            return Err(CliError::Input(format!("`{field}` must be a total {n}x{n} table")));
        }
        table
            .iter()
            .map(|row| row.iter().map(|v| lookup(index, v)).collect())
            .collect()
    };
    let meet = read_table("meet", file.meet.as_ref().unwrap())?;
    let join = read_table("join", file.join.as_ref().unwrap())?;
    DLattice::from_tables(&meet, &join).map_err(CliError::from_core)
}

// ---- canonical emission -------------------------------------------------

/// Strict comparable pairs in ascending index order (the parse side closes
/// them back up, so this is a faithful, canonical presentation).
pub fn poset_file(p: &Poset, names: &[String]) -> StructureFile {
    let mut leq = Vec::new();
    for a in 0..p.size() {
        for b in 0..p.size() {
            if a != b && p.leq(a, b) {
                leq.push((names[a].clone(), names[b].clone()));
            }
        }
    }
    StructureFile {
        format_version: FORMAT_VERSION,
        kind: Kind::Poset,
        elements: names.to_vec(),
        leq: Some(leq),
        meet: None,
        join: None,
        rel: None,
        box_table: None,
        box_f: None,
        box_p: None,
    }
}

fn tables_of(d: &DLattice, names: &[String]) -> (Vec<Vec<String>>, Vec<Vec<String>>) {
    let table = |f: &dyn Fn(usize, usize) -> usize| {
        (0..d.size())
            .map(|a| (0..d.size()).map(|b| names[f(a, b)].clone()).collect())
            .collect()
    };
    (table(&|a, b| d.meet(a, b)), table(&|a, b| d.join(a, b)))
}

pub fn lattice_file(d: &DLattice, names: &[String]) -> StructureFile {
    let (meet, join) = tables_of(d, names);
    StructureFile {
        format_version: FORMAT_VERSION,
        kind: Kind::Dlattice,
        elements: names.to_vec(),
        leq: None,
        meet: Some(meet),
        join: Some(join),
        rel: None,
        box_table: None,
        box_f: None,
        box_p: None,
    }
}

pub fn relation_file(r: &RelSpace, names: &[String]) -> StructureFile {
    let mut rel = Vec::new();
    for x in 0..r.worlds() {
        for y in r.rows()[x].iter() {
            rel.push((names[x].clone(), names[y].clone()));
        }
    }
    StructureFile {
        format_version: FORMAT_VERSION,
        kind: Kind::Relspace,
        elements: names.to_vec(),
        leq: None,
        meet: None,
        join: None,
        rel: Some(rel),
        box_table: None,
        box_f: None,
        box_p: None,
    }
}

pub fn modal_file(alg: &ModalAlgebra, names: &[String]) -> StructureFile {
    let (meet, join) = tables_of(&alg.base, names);
    StructureFile {
        format_version: FORMAT_VERSION,
        kind: Kind::ModalAlgebra,
        elements: names.to_vec(),
        leq: None,
        meet: Some(meet),
        join: Some(join),
        rel: None,
        box_table: Some((0..alg.base.size()).map(|a| names[alg.box_of(a)].clone()).collect()),
        box_f: None,
        box_p: None,
    }
}

/// Braced subset names like `{a,b}` over base names, for generated points
/// (prime filters, powerset elements, upsets).
pub fn subset_name(members: impl IntoIterator<Item = usize>, base: &[String]) -> String {
    let inner: Vec<&str> = members.into_iter().map(|i| base[i].as_str()).collect();
    format!("{{{}}}", inner.join(","))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tense_file(alg: &TenseAlgebra, names: &[String]) -> StructureFile {
        let (meet, join) = tables_of(&alg.base, names);
        StructureFile {
            format_version: FORMAT_VERSION,
            kind: Kind::TenseAlgebra,
            elements: names.to_vec(),
            leq: None,
            meet: Some(meet),
            join: Some(join),
            rel: None,
            box_table: None,
            box_f: Some((0..alg.base.size()).map(|a| names[alg.box_f(a)].clone()).collect()),
            box_p: Some((0..alg.base.size()).map(|a| names[alg.box_p(a)].clone()).collect()),
        }
    }

    fn to_canonical_json(file: &StructureFile) -> String {
        let mut s = serde_json::to_string_pretty(file).expect("structure files serialize");
        s.push('\n');
        s
    }

    fn auto_names(n: usize) -> Vec<String> {
        (0..n).map(|i| format!("e{i}")).collect()
    }

    #[test]
    fn canonical_round_trip() {
        let p = Poset::from_pairs(3, &[(0, 1), (1, 2)]).unwrap();
        let names = vec!["x".into(), "y".into(), "z".into()];
        let file = poset_file(&p, &names);
        let text = to_canonical_json(&file);
        let parsed: StructureFile = serde_json::from_str(&text).unwrap();
        assert_eq!(parsed, file);
        assert_eq!(to_canonical_json(&parsed), text);
        match parse_structure(&parsed).unwrap() {
            Structure::Poset(q, _) => {
                for a in 0..3 {
                    for b in 0..3 {
                        assert_eq!(p.leq(a, b), q.leq(a, b));
                    }
                }
            }
            _ => panic!("kind changed"),
        }
    }

    #[test]
    fn rejects_bad_files() {
        let mut file = poset_file(&Poset::chain(2), &auto_names(2));
        file.rel = Some(vec![]);
        assert!(matches!(parse_structure(&file), Err(CliError::Input(_))));

        let mut dup = poset_file(&Poset::chain(2), &auto_names(2));
        dup.elements[1] = "e0".into();
        assert!(matches!(parse_structure(&dup), Err(CliError::Input(_))));

        let mut vers = poset_file(&Poset::chain(2), &auto_names(2));
        vers.format_version = 9;
        assert!(matches!(parse_structure(&vers), Err(CliError::Input(_))));

        let mut undeclared = poset_file(&Poset::chain(2), &auto_names(2));
        undeclared.leq = Some(vec![("e0".into(), "ghost".into())]);
        assert!(matches!(parse_structure(&undeclared), Err(CliError::Input(_))));
    }

    #[test]
    fn modal_and_tense_files_round_trip() {
        let space = RelSpace::new(2, &[(0, 1), (1, 1)]).unwrap();
        let alg = ordual::algebra_from_space(&space).unwrap();
        let names = auto_names(alg.base.size());
        let file = modal_file(&alg, &names);
        match parse_structure(&file).unwrap() {
            Structure::Modal(back, _) => {
                for a in 0..alg.base.size() {
                    assert_eq!(alg.box_of(a), back.box_of(a));
                }
            }
            _ => panic!("kind changed"),
        }

        let t = ordual::tense_from_space(&space).unwrap();
        let tf = tense_file(&t, &names);
        match parse_structure(&tf).unwrap() {
            Structure::Tense(back, _) => {
                for a in 0..t.base.size() {
                    assert_eq!(t.box_f(a), back.box_f(a));
                    assert_eq!(t.box_p(a), back.box_p(a));
                }
            }
            _ => panic!("kind changed"),
        }
    }
}
