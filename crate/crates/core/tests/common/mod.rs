#![allow(dead_code)]

use bl4kit::{
    q, Bl4Presentation, Constants4, Label, Mat2, Mat4, Matrix, Presentation, Rational, Vec4, Vector, WeakIso,
};
use proptest::prelude::*;

pub fn rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=9).prop_map(|(n, d)| q(n, d))
}

/// Zero about a third of the time.
pub fn sparse_rational() -> impl Strategy<Value = Rational> {
    prop_oneof![1 => Just(q(0, 1)), 2 => rational()]
}

pub fn nonzero_rational() -> impl Strategy<Value = Rational> {
    rational().prop_filter("nonzero", |x| *x != q(0, 1))
}

pub fn vec4() -> impl Strategy<Value = Vec4> {
    [rational(), rational(), rational(), rational()].prop_map(Vector::new)
}

pub fn mat4() -> impl Strategy<Value = Mat4> {
    proptest::array::uniform4(proptest::array::uniform4(rational())).prop_map(Matrix::from_rows)
}

pub fn invertible_mat4() -> impl Strategy<Value = Mat4> {
    mat4().prop_filter("invertible", |m| m.is_invertible())
}

pub fn invertible_mat2() -> impl Strategy<Value = Mat2> {
    proptest::array::uniform2(proptest::array::uniform2(rational()))
        .prop_map(Matrix::from_rows)
        .prop_filter("invertible", |m| m.is_invertible())
}

/// Arbitrary 4-dimensional anti-commutative algebra with sparse constants.
pub fn constants() -> impl Strategy<Value = Constants4> {
    proptest::collection::vec(sparse_rational(), 24).prop_map(|vals| {
        let pairs = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
        let entries = pairs.iter().flat_map(|&(i, j)| (0..4).map(move |k| (i, j, k))).zip(vals);
        Constants4::from_products(entries.map(|((i, j, k), v)| (i, j, k, v))).unwrap()
    })
}

pub fn presentation() -> impl Strategy<Value = Presentation> {
    (sparse_rational(), nonzero_rational(), proptest::array::uniform4(sparse_rational())).prop_map(|(x11, xi3, x)| {
        let [a, b, c, d] = x;
        Bl4Presentation::new(x11, xi3, Matrix::from_rows([[a, b], [c, d]])).unwrap()
    })
}

pub fn bl4_presentation() -> impl Strategy<Value = Presentation> {
    presentation().prop_filter("BL4", |p| p.is_bl4())
}

pub fn weak_iso() -> impl Strategy<Value = WeakIso<Rational>> {
    (
        nonzero_rational(),
        proptest::array::uniform3(rational()),
        invertible_mat2(),
        [rational(), rational()],
        nonzero_rational(),
    )
        .prop_map(|(u0, u, p, pq3, r3)| WeakIso::new(u0, u, p, pq3, r3).unwrap())
}

pub fn label() -> impl Strategy<Value = Label> {
    prop_oneof![
        Just(Label::A0),
        Just(Label::A1),
        rational().prop_map(Label::B),
        rational().prop_map(Label::C),
        (rational(), nonzero_rational()).prop_filter_map("valid d", |(l, m)| Label::d(l, m).ok()),
    ]
}

/// Invertible matrix with entries in `{-1, 0, 1}`, keeping moved constants small.
pub fn small_invertible_mat4() -> impl Strategy<Value = Mat4> {
    proptest::array::uniform4(proptest::array::uniform4(-1i64..=1))
        .prop_map(Matrix::from_int_rows)
        .prop_filter("invertible", |m| m.is_invertible())
}
