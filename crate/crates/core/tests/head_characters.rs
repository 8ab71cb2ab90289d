use formata::character::irreducibles;
use formata::formation::{projector, residual};
use formata::head::reports::{kernel_report, pprime_kernel_report};
use formata::head::{canonical_series, fprime_ascending, is_head_character, CanonicalSeries};
use formata::{catalog, Formation, PermGroup};

const FORMATIONS: [Formation; 4] = [
    Formation::Nilpotent,
    Formation::Supersolvable,
    Formation::Metanilpotent,
    Formation::NilpotentLength(2),
];

fn lin_count(h: &PermGroup) -> usize {
    (h.order() / h.derived_subgroup().unwrap().order()) as usize
}

#[test]
fn counts_match_the_projector_abelianization() {
    for name in ["S3", "D8", "A4", "S4", "SL(2,3)", "S3xS3", "C7:C3", "2S4", "G75"] {
        let g = catalog::group(name).unwrap();
        for f in &FORMATIONS {
            let heads = fprime_ascending(&g, f).unwrap();
            let h = projector(&g, f).unwrap();
            assert_eq!(heads.len(), lin_count(&h), "{name} {f}");
        }
    }
}

#[test]
fn ascending_and_pair_series_agree() {
    for name in ["S3", "A4", "S4", "D12", "C3:C4", "2S4"] {
        let g = catalog::group(name).unwrap();
        for f in &FORMATIONS {
            let heads = fprime_ascending(&g, f).unwrap();
            for chi in irreducibles(&g).unwrap() {
                assert_eq!(is_head_character(&chi, f).unwrap(), heads.contains(&chi), "{name} {f}");
            }
        }
    }
}

#[test]
fn g75_supersolvable_heads_are_the_linears() {
    let g = catalog::group("G75").unwrap();
    let heads = fprime_ascending(&g, &Formation::Supersolvable).unwrap();
    assert_eq!(heads.len(), 3);
    assert!(heads.iter().all(|c| c.degree() == 1));
}

#[test]
fn members_of_the_formation_have_linear_heads() {
    let g = catalog::group("D8").unwrap();
    let heads = fprime_ascending(&g, &Formation::Nilpotent).unwrap();
    assert_eq!(heads.len(), 4);
    assert_eq!(canonical_series(&g, &Formation::Nilpotent).unwrap().m(), 0);
}

#[test]
fn series_invariants_hold_across_the_catalog() {
    for (entry, g) in catalog::load_catalog().unwrap() {
        for f in &FORMATIONS {
            let s = CanonicalSeries::new(&g, f).unwrap();
            assert_eq!(s.m() == 0, residual(&g, f).unwrap().is_trivial(), "{} {f}", entry.name);
            for i in 0..s.m() {
                s.triple(i).unwrap();
            }
        }
    }
}

#[test]
fn kernel_spot_values() {
    let s4 = catalog::group("S4").unwrap();
    let b = kernel_report("S4", &s4, &Formation::Nilpotent).unwrap();
    assert!(b.passed());
    let c = pprime_kernel_report("S4", &s4, 3).unwrap();
    assert!(c.passed());
    assert_eq!(c.instances[0].inputs["K_order"], 4);
}
