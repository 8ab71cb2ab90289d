//! Benchmark fixtures shared by the criterion targets.

use formata::{catalog, Formation, PermGroup};

/// Catalog groups of increasing size used as benchmark inputs.
pub const GROUPS: [&str; 5] = ["S4", "SL(2,3)", "2S4", "GL(2,3)", "G75"];

pub fn group(name: &str) -> PermGroup {
    catalog::group(name).expect("benchmark groups are in the catalog")
}

/// A fresh copy with no cached tables, classes or subgroups.
pub fn uncached(name: &str) -> PermGroup {
    let g = group(name);
    PermGroup::new(g.degree(), g.generators().to_vec()).expect("generators are valid")
}

pub fn formations() -> Vec<Formation> {
    vec![Formation::Nilpotent, Formation::Supersolvable]
}
