mod common;

use bl4kit::identities::{
    binary_lie_defect, binary_lie_witness, is_binary_lie, is_malcev, malcev_defect, malcev_witness,
};
use bl4kit::{int, is_isomorphism, Constants4, Error, Label, Matrix};
use common::*;
use proptest::prelude::*;

proptest! {
    #[test]
    fn product_is_antisymmetric(sc in constants(), x in vec4(), y in vec4()) {
        prop_assert_eq!(sc.multiply(&x, &y), -&sc.multiply(&y, &x));
    }

    #[test]
    fn jacobian_is_alternating(sc in constants(), x in vec4(), y in vec4(), z in vec4()) {
        let j = sc.jacobian(&x, &y, &z);
        prop_assert_eq!(sc.jacobian(&y, &x, &z), -&j);
        prop_assert_eq!(sc.jacobian(&x, &z, &y), -&j);
        prop_assert_eq!(sc.jacobian(&z, &y, &x), -&j);
    }

    #[test]
    fn basis_change_round_trips(sc in constants(), m in invertible_mat4()) {
        let moved = sc.apply_basis_change(&m).unwrap();
        prop_assert_eq!(moved.apply_basis_change(&m.inverse().unwrap()).unwrap(), sc);
    }

    #[test]
    fn isomorphism_iff_pullback(sc in constants(), other in constants(), m in invertible_mat4(), pick in any::<bool>()) {
        let b = if pick { sc.apply_basis_change(&m).unwrap() } else { other };
        let pulled_back = sc.apply_basis_change(&m).unwrap() == b;
        prop_assert_eq!(is_isomorphism(&sc, &b, &m).unwrap(), pulled_back);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    /// A reported witness is a genuine failure of the identity.
    #[test]
    fn identity_witnesses_are_sound(sc in constants()) {
        if let Some((x, y)) = binary_lie_witness(&sc).unwrap() {
            prop_assert!(!binary_lie_defect(&sc, &x, &y).is_zero());
            prop_assert!(!is_malcev(&sc).unwrap());
        }
        if let Some((x, y, z)) = malcev_witness(&sc).unwrap() {
            prop_assert!(!malcev_defect(&sc, &x, &y, &z).is_zero());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn lie_implies_malcev_implies_binary_lie(label in label(), m in small_invertible_mat4()) {
        let sc = label.structure_constants().apply_basis_change(&m).unwrap();
        let (lie, malcev, binary) = (sc.is_lie(), is_malcev(&sc).unwrap(), is_binary_lie(&sc).unwrap());
        prop_assert!(!lie || malcev);
        prop_assert!(!malcev || binary);
    }
}

#[test]
fn lie_algebras_from_the_families() {
    for label in [Label::A1, Label::C(int(2)), Label::d(int(3), int(2)).unwrap()] {
        let sc = label.structure_constants();
        assert!(sc.is_lie() && is_malcev(&sc).unwrap() && is_binary_lie(&sc).unwrap(), "{label}");
    }
    // malcev but not lie
    let sc = Label::C(int(-1)).structure_constants();
    assert!(!sc.is_lie() && is_malcev(&sc).unwrap());
}

#[test]
fn documented_isomorphism_examples() {
    let a0 = Label::A0.structure_constants();
    let gamma = Matrix::from_int_rows([[1, 0, 0, 0], [-5, 1, 0, 0], [2, 0, 1, 0], [7, 2, 5, 1]]);
    assert!(is_isomorphism(&a0, &a0, &Matrix::identity()).unwrap());
    assert!(is_isomorphism(&a0, &a0, &gamma).unwrap());
    let d = Label::d(int(3), int(2)).unwrap().structure_constants();
    assert!(!is_isomorphism(&d, &d, &Matrix::diagonal([int(2), int(1), int(1), int(1)])).unwrap());
    assert_eq!(is_isomorphism(&d, &d, &Matrix::zero()), Err(Error::SingularMatrix));
}

#[test]
fn antisymmetry_is_enforced() {
    let bad = Constants4::from_fn(|i, j, k| if (i, j, k) == (0, 1, 2) { int(1) } else { int(0) });
    assert!(matches!(bad, Err(Error::NotAntisymmetric { .. })));
}
