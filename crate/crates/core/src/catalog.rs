//! Built-in catalog of small solvable groups.
//!
//! Groups without a short cycle description are stored as frozen generator
//! files under `data/`. Each entry records its expected order and number of
//! conjugacy classes; lookups verify both before handing the group out.

use std::path::Path;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::formation::{residual, Formation};
use crate::group::PermGroup;
use crate::groupfile;
use crate::perm::Perm;

pub struct CatalogEntry {
    pub name: &'static str,
    pub aliases: &'static [&'static str],
    pub description: &'static str,
    pub order: u64,
    pub classes: usize,
    pub solvable: bool,
    build: fn() -> Result<PermGroup>,
}

impl CatalogEntry {
    pub fn build(&self) -> Result<PermGroup> {
        (self.build)()
    }

    fn matches(&self, name: &str) -> bool {
        self.name.eq_ignore_ascii_case(name) || self.aliases.iter().any(|a| a.eq_ignore_ascii_case(name))
    }
}

impl std::fmt::Debug for CatalogEntry {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("CatalogEntry")
            .field("name", &self.name)
            .field("order", &self.order)
            .field("classes", &self.classes)
            .finish()
    }
}

fn words(degree: usize, gens: &[&str]) -> Result<PermGroup> {
    let gens = gens
        .iter()
        .map(|w| Perm::parse(w, degree))
        .collect::<Result<Vec<_>>>()?;
    PermGroup::new(degree, gens)
}

macro_rules! cyclic {
    ($n:expr) => {
        || Ok(PermGroup::cyclic($n))
    };
}

macro_rules! entry {
    ($name:expr, [$($alias:expr),*], $desc:expr, $order:expr, $classes:expr, $build:expr) => {
        CatalogEntry {
            name: $name,
            aliases: &[$($alias),*],
            description: $desc,
            order: $order,
            classes: $classes,
            solvable: true,
            build: $build,
        }
    };
}

static ENTRIES: &[CatalogEntry] = &[
    entry!("C1", ["1", "trivial"], "trivial group", 1, 1, cyclic!(1)),
    entry!("C2", [], "cyclic group of order 2", 2, 2, cyclic!(2)),
    entry!("C3", [], "cyclic group of order 3", 3, 3, cyclic!(3)),
    entry!("C4", [], "cyclic group of order 4", 4, 4, cyclic!(4)),
    entry!("C5", [], "cyclic group of order 5", 5, 5, cyclic!(5)),
    entry!("C6", [], "cyclic group of order 6", 6, 6, cyclic!(6)),
    entry!("C7", [], "cyclic group of order 7", 7, 7, cyclic!(7)),
    entry!("C8", [], "cyclic group of order 8", 8, 8, cyclic!(8)),
    entry!("C9", [], "cyclic group of order 9", 9, 9, cyclic!(9)),
    entry!("C10", [], "cyclic group of order 10", 10, 10, cyclic!(10)),
    entry!("C11", [], "cyclic group of order 11", 11, 11, cyclic!(11)),
    entry!("C12", [], "cyclic group of order 12", 12, 12, cyclic!(12)),
    entry!("V4", ["C2xC2", "Klein"], "Klein four-group", 4, 4, || words(
        4,
        &["(0 1)(2 3)", "(0 2)(1 3)"]
    )),
    entry!("S3", ["D6"], "symmetric group on 3 points", 6, 3, || Ok(
        PermGroup::symmetric(3)
    )),
    entry!("D8", [], "dihedral group of order 8", 8, 5, || words(
        4,
        &["(0 1 2 3)", "(0 2)"]
    )),
    entry!("Q8", [], "quaternion group", 8, 5, || groupfile::parse(include_str!(
        "../data/q8.grp"
    ))),
    entry!("D10", [], "dihedral group of order 10", 10, 4, || words(
        5,
        &["(0 1 2 3 4)", "(1 4)(2 3)"]
    )),
    entry!("A4", [], "alternating group on 4 points", 12, 4, || words(
        4,
        &["(0 1 2)", "(1 2 3)"]
    )),
    entry!("D12", [], "dihedral group of order 12", 12, 6, || words(
        6,
        &["(0 1 2 3 4 5)", "(1 5)(2 4)"]
    )),
    entry!("C3:C4", ["Dic12", "Dic3"], "dicyclic group of order 12", 12, 6, || {
        words(7, &["(0 1 2)", "(1 2)(3 4 5 6)"])
    }),
    entry!("C7:C3", ["F21"], "Frobenius group of order 21", 21, 5, || words(
        7,
        &["(0 1 2 3 4 5 6)", "(1 2 4)(3 6 5)"]
    )),
    entry!("S4", [], "symmetric group on 4 points", 24, 5, || Ok(
        PermGroup::symmetric(4)
    )),
    entry!(
        "SL(2,3)",
        ["SL23"],
        "special linear group of degree 2 over GF(3)",
        24,
        7,
        || groupfile::parse(include_str!("../data/sl23.grp"))
    ),
    entry!("S3xS3", [], "direct product of two copies of S3", 36, 9, || words(
        6,
        &["(0 1 2)", "(0 1)", "(3 4 5)", "(3 4)"]
    )),
    entry!("C13:C3", ["F39"], "Frobenius group of order 39", 39, 7, || {
        words(
            13,
            &["(0 1 2 3 4 5 6 7 8 9 10 11 12)", "(1 3 9)(2 6 5)(4 12 10)(7 8 11)"],
        )
    }),
    entry!(
        "2S4",
        ["SmallGroup(48,28)", "binary-octahedral"],
        "binary octahedral group inside SL(2,7)",
        48,
        8,
        || { groupfile::parse(include_str!("../data/2s4.grp")) }
    ),
    entry!(
        "GL(2,3)",
        ["GL23"],
        "general linear group of degree 2 over GF(3)",
        48,
        8,
        || groupfile::parse(include_str!("../data/gl23.grp"))
    ),
    entry!(
        "G75",
        ["C5^2:C3"],
        "Frobenius group C5^2:C3 of order 75",
        75,
        11,
        || groupfile::parse(include_str!("../data/g75.grp"))
    ),
];

pub fn entries() -> &'static [CatalogEntry] {
    ENTRIES
}

pub fn entry(name: &str) -> Option<&'static CatalogEntry> {
    ENTRIES.iter().find(|e| e.matches(name.trim()))
}

fn integrity(msg: String) -> Error {
    Error::Catalog(msg)
}

/// Order, class count and solvability, plus the structural identification of `2S4`.
pub fn verify_entry(entry: &CatalogEntry, g: &PermGroup) -> Result<()> {
    if g.order() != entry.order {
        return Err(integrity(format!(
            "{}: order {} ≠ {}",
            entry.name,
            g.order(),
            entry.order
        )));
    }
    let classes = g.class_info()?.len();
    if classes != entry.classes {
        return Err(integrity(format!(
            "{}: {classes} classes ≠ {}",
            entry.name, entry.classes
        )));
    }
    if g.is_solvable()? != entry.solvable {
        return Err(integrity(format!("{}: solvability mismatch", entry.name)));
    }
    if entry.name == "2S4" {
        verify_binary_octahedral(g)?;
    }
    Ok(())
}

fn involutions(g: &PermGroup) -> Result<usize> {
    Ok(g.elements()?.iter().filter(|x| x.order() == 2).count())
}

/// A unique involution, and a supersolvable residual that is quaternion with derived subgroup of order 2.
fn verify_binary_octahedral(g: &PermGroup) -> Result<()> {
    if involutions(g)? != 1 {
        return Err(integrity("2S4: expected exactly one involution".into()));
    }
    let k = residual(g, &Formation::Supersolvable)?;
    let quaternion = k.order() == 8 && k.elements()?.iter().all(|x| x.order() <= 4) && involutions(&k)? == 1;
    if !quaternion {
        return Err(integrity(
            "2S4: supersolvable residual is not quaternion of order 8".into(),
        ));
    }
    if k.derived_subgroup()?.order() != 2 {
        return Err(integrity(
            "2S4: residual's derived subgroup does not have order 2".into(),
        ));
    }
    Ok(())
}

fn slots() -> &'static [OnceLock<std::result::Result<PermGroup, Error>>] {
    static SLOTS: OnceLock<Vec<OnceLock<std::result::Result<PermGroup, Error>>>> = OnceLock::new();
    SLOTS.get_or_init(|| ENTRIES.iter().map(|_| OnceLock::new()).collect())
}

/// A verified catalog group; repeated lookups return the same shared handle.
pub fn group(name: &str) -> Result<PermGroup> {
    let idx = ENTRIES
        .iter()
        .position(|e| e.matches(name.trim()))
        .ok_or_else(|| Error::Catalog(format!("unknown group {name:?}")))?;
    slots()[idx]
        .get_or_init(|| {
            let e = &ENTRIES[idx];
            let g = e.build()?;
            verify_entry(e, &g)?;
            Ok(g)
        })
        .clone()
}

/// Every entry, built and verified.
pub fn load_catalog() -> Result<Vec<(&'static CatalogEntry, PermGroup)>> {
    ENTRIES.iter().map(|e| Ok((e, group(e.name)?))).collect()
}

/// A catalog name, or else a path to a group file.
pub fn resolve(name_or_path: &str) -> Result<(String, PermGroup)> {
    if let Some(e) = entry(name_or_path) {
        return Ok((e.name.to_string(), group(e.name)?));
    }
    let path = Path::new(name_or_path);
    if path.is_file() {
        let g = groupfile::read(path)?;
        return Ok((name_or_path.to_string(), g));
    }
    Err(Error::Catalog(format!(
        "{name_or_path:?} is neither a catalog group nor a readable file"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_entry_builds_and_verifies() {
        let all = load_catalog().unwrap();
        assert!(all.len() >= 26);
        for (e, g) in &all {
            assert_eq!(g.order(), e.order, "{}", e.name);
        }
    }

    #[test]
    fn lookups_are_case_insensitive() {
        assert_eq!(group("s4").unwrap().order(), 24);
        assert_eq!(group("c5^2:c3").unwrap().order(), 75);
        assert!(matches!(group("M11"), Err(Error::Catalog(_))));
    }

    #[test]
    fn distinguishes_the_order_48_groups() {
        let gl = group("GL(2,3)").unwrap();
        assert!(involutions(&gl).unwrap() > 1);
        assert!(verify_binary_octahedral(&gl).is_err());
        let e = entry("2S4").unwrap();
        assert!(verify_entry(e, &gl).is_err());
    }

    #[test]
    fn g75_derived_subgroup() {
        let g = group("G75").unwrap();
        assert_eq!(g.derived_subgroup().unwrap().order(), 25);
    }
}
