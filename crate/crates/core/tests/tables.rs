use formata::character::json::TableJson;
use formata::{cache, catalog, CharacterTable};

#[test]
fn every_catalog_table_is_exactly_valid() {
    for (entry, g) in catalog::load_catalog().unwrap() {
        let t = cache::character_table(&g).unwrap();
        t.verify().unwrap();
        assert_eq!(t.len(), entry.classes, "{}", entry.name);
        let squares: i64 = t.degrees().iter().map(|d| d * d).sum();
        assert_eq!(squares as u64, entry.order, "{}", entry.name);
        assert_eq!(t.degrees()[0], 1);
    }
}

#[test]
fn s4_table_shape() {
    let g = catalog::group("S4").unwrap();
    let t = CharacterTable::compute(&g).unwrap();
    assert_eq!(t.degrees(), vec![1, 1, 2, 3, 3]);
    let mut sizes = t.class_info().sizes();
    sizes.sort();
    assert_eq!(sizes, vec![1, 3, 6, 6, 8]);
}

#[test]
fn json_is_deterministic() {
    let g = catalog::group("C7:C3").unwrap();
    let a = serde_json::to_string(&TableJson::from_table("C7:C3", &CharacterTable::compute(&g).unwrap())).unwrap();
    let b = serde_json::to_string(&TableJson::from_table("C7:C3", &CharacterTable::compute(&g).unwrap())).unwrap();
    assert_eq!(a, b);
}

#[cfg(feature = "oracle")]
#[test]
fn oracle_agrees_up_to_order_60() {
    use formata::oracle::{matches_table, ORACLE_MAX_ORDER};
    for (entry, g) in catalog::load_catalog().unwrap() {
        if entry.order <= ORACLE_MAX_ORDER {
            assert!(
                matches_table(&cache::character_table(&g).unwrap()).unwrap(),
                "{}",
                entry.name
            );
        }
    }
}
