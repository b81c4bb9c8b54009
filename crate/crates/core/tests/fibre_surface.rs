use hopfplumb_core::alexander::burau_alexander;
use hopfplumb_core::braid::DEFAULT_SEARCH_BUDGET;
use hopfplumb_core::linalg::{mat_mul, transpose};
use hopfplumb_core::plumbing::trefoil_decompose;
use hopfplumb_core::{BraidWord, FatGraphSurface};
use proptest::prelude::*;

/// Connected positive words: every generator is present at least once.
fn connected_word(max_strands: usize, max_extra: usize) -> impl Strategy<Value = BraidWord> {
    (2..=max_strands).prop_flat_map(move |s| {
        let k = (s - 1) as u8;
        (
            Just(s),
            prop::collection::vec(1..=k, 0..=max_extra),
            prop::collection::vec(any::<prop::sample::Index>(), (s - 1)..=(s - 1)),
        )
            .prop_map(move |(s, mut letters, slots)| {
                for (g, slot) in (1..=k).zip(slots) {
                    let at = slot.index(letters.len() + 1);
                    letters.insert(at, g);
                }
                BraidWord::new(s, letters).unwrap()
            })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn surface_matches_closure(w in connected_word(6, 9)) {
        let s = FatGraphSurface::new(&w).unwrap();
        s.check_invariants().unwrap();
        prop_assert_eq!(s.boundary_count(), w.component_count());
        prop_assert_eq!(s.euler_characteristic(), w.strands() as i64 - w.len() as i64);
        prop_assert_eq!(s.rectangles().len(), w.first_betti());
        let genus2 = w.first_betti() + 1 - w.component_count();
        prop_assert_eq!(2 * s.genus(), genus2);
    }

    #[test]
    fn monodromy_is_symplectic(w in connected_word(5, 8)) {
        let s = FatGraphSurface::new(&w).unwrap();
        let j = s.intersection_form();
        let h = s.homological_monodromy();
        prop_assert_eq!(mat_mul(&mat_mul(&transpose(&h), &j), &h), j.clone());
        prop_assert_eq!(transpose(&j), j.iter().map(|r| r.iter().map(|x| -x).collect()).collect::<Vec<Vec<i64>>>());
    }

    #[test]
    fn alexander_methods_agree_on_knots(w in connected_word(5, 8)) {
        prop_assume!(w.component_count() == 1);
        let s = FatGraphSurface::new(&w).unwrap();
        let burau = burau_alexander(&w).unwrap();
        prop_assert!(burau.eq_up_to_unit(&s.alexander_from_monodromy()));
        prop_assert_eq!(burau.span() as usize, 2 * s.genus());
    }

    #[test]
    fn random_knots_decompose_fully(w in connected_word(5, 10)) {
        prop_assume!(w.component_count() == 1 && w.first_betti() > 0);
        let d = trefoil_decompose(&w, DEFAULT_SEARCH_BUDGET).unwrap();
        d.verify().unwrap();
        prop_assert_eq!(d.steps.len(), w.first_betti() / 2);
        prop_assert_eq!(d.final_word.first_betti(), 0);
    }
}
