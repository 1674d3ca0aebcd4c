mod common;

use bl4kit::normal_form::{canonical_label, classify_constants, opposite_params, opposite_witness};
use bl4kit::{
    extract_presentation, int, is_isomorphism, iso_condition_holds, q, Bl4Presentation, Label, Matrix, Rational,
    Subspace, Vector, WeakIso,
};
use common::*;
use proptest::prelude::*;

fn span(idx: &[usize]) -> Subspace<Rational, 4> {
    Subspace::span(idx.iter().map(|&i| Vector::basis(i)))
}

proptest! {
    #[test]
    fn weak_isos_form_a_group(a in weak_iso(), b in weak_iso(), c in weak_iso()) {
        let id = WeakIso::identity();
        prop_assert_eq!(a.compose(&id), a.clone());
        prop_assert_eq!(a.compose(&a.inverse()), id);
        prop_assert_eq!(a.compose(&b).compose(&c), a.compose(&b.compose(&c)));
        prop_assert_eq!(a.compose(&b).to_matrix(), &a.to_matrix() * &b.to_matrix());
        prop_assert_eq!(WeakIso::from_matrix(&a.to_matrix()).unwrap(), a);
    }

    #[test]
    fn normalize_witness_passes_the_oracle(p in presentation()) {
        let (n, w) = p.normalize_xi3();
        prop_assert_eq!(n.xi3(), &int::<Rational>(1));
        prop_assert!(is_isomorphism(&p.to_structure_constants(), &n.to_structure_constants(), &w.to_matrix()).unwrap());
    }

    /// Accepted presentations have derived algebra `p` when `x11 != 0` and
    /// `p'` otherwise.
    #[test]
    fn bl4_matches_the_derived_algebra(p in bl4_presentation()) {
        let derived = p.to_structure_constants().derived_subalgebra();
        let expected = if p.x11() == &int(0) { span(&[3]) } else { span(&[1, 2, 3]) };
        prop_assert_eq!(derived, expected);
    }

    #[test]
    fn pair_map_is_an_involution(l in rational(), m in nonzero_rational()) {
        let (pl, pm) = opposite_params(&l, &m);
        prop_assert_eq!(opposite_params(&pl, &pm), (l.clone(), m.clone()));
        let partner = Bl4Presentation::normalized(int(1), Matrix::diagonal([pm, pl]));
        let here = Bl4Presentation::normalized(int(1), Matrix::diagonal([m.clone(), l]));
        let w = opposite_witness(&m);
        prop_assert!(is_isomorphism(&here.to_structure_constants(), &partner.to_structure_constants(), &w).unwrap());
    }

    #[test]
    fn extraction_round_trips_at_label_level(p in bl4_presentation()) {
        let sc = p.to_structure_constants();
        let ex = extract_presentation(&sc).unwrap();
        prop_assert!(is_isomorphism(&sc, &ex.presentation.to_structure_constants(), &ex.basis).unwrap());
        let (a, _) = canonical_label(&p).unwrap();
        let (b, _) = canonical_label(&ex.presentation).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn condition_agrees_with_oracle_on_direct_moves(p in bl4_presentation(), w in weak_iso()) {
        let (plain, _) = p.normalize_xi3();
        let w = WeakIso::xi3_preserving(w.u0().clone(), w.u().clone(), w.p().clone(), w.pq3().clone()).unwrap();
        let moved = plain.to_structure_constants().apply_basis_change(&w.to_matrix()).unwrap();
        let oracle_iso = extract_presentation(&moved).map(|ex| ex.presentation).ok();
        let Some(hatted) = oracle_iso.filter(|h| h.xi3() == &int(1)) else { return Ok(()) };
        let oracle = is_isomorphism(&plain.to_structure_constants(), &hatted.to_structure_constants(), &w.to_matrix());
        prop_assert_eq!(iso_condition_holds(&plain, &hatted, &w).ok(), oracle.ok());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn classification_is_constant_on_orbits(label in label(), w in weak_iso(), m in invertible_mat4()) {
        for change in [w.to_matrix(), m] {
            let sc = label.structure_constants().apply_basis_change(&change).unwrap();
            let (got, chain) = classify_constants(&sc).unwrap();
            let expected = canonical_label(&label.presentation()).unwrap().0;
            prop_assert_eq!(&got, &expected);
            prop_assert!(is_isomorphism(&sc, &got.structure_constants(), chain.product()).unwrap());
        }
    }
}

#[test]
fn canonical_examples() {
    let d = |l: Rational, m: Rational| Bl4Presentation::normalized(int(1), Matrix::diagonal([m, l]));
    assert_eq!(canonical_label(&d(int(1), int(-1))).unwrap().0, Label::d(int(-1), int(-1)).unwrap());
    assert_eq!(canonical_label(&d(int(3), int(2))).unwrap().0, Label::d(q(3, 2), q(1, 2)).unwrap());
    let (n, _) = Bl4Presentation::new(int(1), int(4), Matrix::from_int_rows([[2, 0], [0, 3]])).unwrap().normalize_xi3();
    assert_eq!(n, d(int(3), int(2)));
}
