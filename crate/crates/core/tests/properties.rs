use formata::character::{irreducibles, ClassFunction};
use formata::{catalog, Perm, PermGroup};
use proptest::prelude::*;

fn s4_perm() -> impl Strategy<Value = Perm> {
    Just(vec![0u32, 1, 2, 3])
        .prop_shuffle()
        .prop_map(|v| Perm::from_images(v).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn restrictions_decompose_with_nonnegative_multiplicities(gens in prop::collection::vec(s4_perm(), 1..3)) {
        let g = catalog::group("S4").unwrap();
        let u = PermGroup::new(4, gens).unwrap();
        for chi in irreducibles(&g).unwrap() {
            let parts = chi.restrict(&u).unwrap().constituents().unwrap();
            let total: i64 = parts
                .iter()
                .map(|(i, m)| *m as i64 * irreducibles(&u).unwrap()[*i].degree())
                .sum();
            prop_assert_eq!(total, chi.degree());
        }
    }

    #[test]
    fn frobenius_reciprocity(gens in prop::collection::vec(s4_perm(), 1..3)) {
        let g = catalog::group("S4").unwrap();
        let u = PermGroup::new(4, gens).unwrap();
        for psi in irreducibles(&u).unwrap() {
            let induced = psi.induce(&g).unwrap();
            for chi in irreducibles(&g).unwrap() {
                let up = induced.inner_product(&chi).unwrap();
                let down = psi.inner_product(&chi.restrict(&u).unwrap()).unwrap();
                prop_assert_eq!(up, down);
            }
        }
    }

    #[test]
    fn induced_trivial_is_the_permutation_character(gens in prop::collection::vec(s4_perm(), 1..3)) {
        let g = catalog::group("S4").unwrap();
        let u = PermGroup::new(4, gens).unwrap();
        let pi = ClassFunction::trivial(&u).unwrap().induce(&g).unwrap();
        prop_assert_eq!(pi.degree() as u64, g.order() / u.order());
        prop_assert!(pi.kernel().unwrap().is_subgroup_of(&u));
    }
}
