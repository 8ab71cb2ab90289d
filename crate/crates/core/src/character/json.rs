//! JSON form of character tables.

use serde::{Deserialize, Serialize};

use crate::character::table::CharacterTable;
use crate::cyclotomic::Cyclotomic;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClassJson {
    pub rep_cycles: String,
    pub size: usize,
    pub order: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IrreducibleJson {
    pub degree: i64,
    pub values: Vec<Cyclotomic>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TableJson {
    pub group: String,
    pub order: u64,
    pub exponent: u64,
    pub classes: Vec<ClassJson>,
    pub irreducibles: Vec<IrreducibleJson>,
}

impl TableJson {
    /// Values are written at the table conductor (the group exponent).
    pub fn from_table(name: &str, table: &CharacterTable) -> Self {
        let e = table.conductor();
        TableJson {
            group: name.to_string(),
            order: table.class_info().group_order(),
            exponent: table.exponent(),
            classes: table
                .class_info()
                .classes()
                .iter()
                .map(|c| ClassJson {
                    rep_cycles: c.representative.to_string(),
                    size: c.size,
                    order: c.element_order(),
                })
                .collect(),
            irreducibles: table
                .irreducibles()
                .iter()
                .map(|chi| IrreducibleJson {
                    degree: chi.degree(),
                    values: chi.values().iter().map(|v| v.lift(e)).collect(),
                })
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::PermGroup;

    #[test]
    fn round_trip() {
        let t = CharacterTable::compute(&PermGroup::cyclic(3)).unwrap();
        let j = TableJson::from_table("C3", &t);
        let text = serde_json::to_string(&j).unwrap();
        let back: TableJson = serde_json::from_str(&text).unwrap();
        assert_eq!(back, j);
        assert_eq!(j.irreducibles[1].values[1].conductor(), 3);
        assert!(text.contains("\"1/1\""));
    }
}
