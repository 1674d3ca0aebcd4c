//! Seeded generators of bounded-height test data.

use rand::Rng;

use crate::field::{one, Field};
use crate::linalg::Matrix;
use crate::normal_form::{opposite_params, CanonicalLabel};
use crate::presentation::{Bl4Presentation, WeakIso};

/// Default bound on numerators and denominators.
pub const DEFAULT_HEIGHT: i64 = 9;

/// `n / d` with `|n| <= height` and `1 <= d <= height`.
pub fn rational<F: Field, R: Rng + ?Sized>(rng: &mut R, height: i64) -> F {
    let h = height.max(1);
    F::from_frac(rng.gen_range(-h..=h), rng.gen_range(1..=h))
}

pub fn nonzero_rational<F: Field, R: Rng + ?Sized>(rng: &mut R, height: i64) -> F {
    loop {
        let x: F = rational(rng, height);
        if !x.is_zero() {
            return x;
        }
    }
}

/// Zero with probability `p_zero`, otherwise a random rational. Exact
/// identities are far more often hit when many entries vanish.
pub fn sparse_rational<F: Field, R: Rng + ?Sized>(rng: &mut R, height: i64, p_zero: f64) -> F {
    if rng.gen_bool(p_zero) {
        F::zero()
    } else {
        rational(rng, height)
    }
}

pub fn pair<F: Field, R: Rng + ?Sized>(rng: &mut R, height: i64) -> [F; 2] {
    [rational(rng, height), rational(rng, height)]
}

pub fn matrix<F: Field, R: Rng + ?Sized, const A: usize, const B: usize>(rng: &mut R, height: i64) -> Matrix<F, A, B> {
    Matrix::from_fn(|_, _| rational(rng, height))
}

pub fn invertible_matrix<F: Field, R: Rng + ?Sized, const N: usize>(rng: &mut R, height: i64) -> Matrix<F, N, N> {
    loop {
        let m = matrix(rng, height);
        if m.is_invertible() {
            return m;
        }
    }
}

pub fn diagonal_matrix<F: Field, R: Rng + ?Sized>(rng: &mut R, height: i64) -> Matrix<F, 2, 2> {
    Matrix::diagonal([nonzero_rational(rng, height), nonzero_rational(rng, height)])
}

pub fn weak_iso<F: Field, R: Rng + ?Sized>(rng: &mut R, height: i64) -> WeakIso<F> {
    WeakIso::new(
        nonzero_rational(rng, height),
        [rational(rng, height), rational(rng, height), rational(rng, height)],
        invertible_matrix(rng, height),
        pair(rng, height),
        nonzero_rational(rng, height),
    )
    .expect("parameters are valid")
}

/// Weak isomorphism with `r3 = det P`.
pub fn xi3_preserving_weak_iso<F: Field, R: Rng + ?Sized>(rng: &mut R, height: i64) -> WeakIso<F> {
    let p = if rng.gen_bool(0.3) {
        // direct and opposite blocks are where isomorphisms live
        let (a, b) = (nonzero_rational(rng, height), nonzero_rational(rng, height));
        if rng.gen_bool(0.5) {
            Matrix::diagonal([a, b])
        } else {
            Matrix::from_rows([[F::zero(), a], [b, F::zero()]])
        }
    } else {
        invertible_matrix(rng, height)
    };
    WeakIso::xi3_preserving(
        nonzero_rational(rng, height),
        [rational(rng, height), rational(rng, height), rational(rng, height)],
        p,
        pair(rng, height),
    )
    .expect("parameters are valid")
}

/// Any presentation with `xi3 != 0`, BL4 or not.
pub fn presentation<F: Field, R: Rng + ?Sized>(rng: &mut R, height: i64) -> Bl4Presentation<F> {
    let x = Matrix::from_fn(|_, _| sparse_rational(rng, height, 0.3));
    Bl4Presentation::new(sparse_rational(rng, height, 0.3), nonzero_rational(rng, height), x).expect("xi3 is nonzero")
}

pub fn bl4_presentation<F: Field, R: Rng + ?Sized>(rng: &mut R, height: i64) -> Bl4Presentation<F> {
    loop {
        let p = presentation(rng, height);
        if p.is_bl4() {
            return p;
        }
    }
}

/// A tie-break representative label of any variant.
pub fn canonical_label<F: Field, R: Rng + ?Sized>(rng: &mut R, height: i64) -> CanonicalLabel<F> {
    match rng.gen_range(0..5) {
        0 => CanonicalLabel::A0,
        1 => CanonicalLabel::A1,
        2 => CanonicalLabel::B(rational(rng, height)),
        3 => CanonicalLabel::C(rational(rng, height)),
        _ => loop {
            let (lambda, mu) = (rational::<F, _>(rng, height), nonzero_rational::<F, _>(rng, height));
            let Ok(label) = CanonicalLabel::d(lambda.clone(), mu.clone()) else {
                continue;
            };
            if label.is_tie_break_representative() {
                return label;
            }
            let (pl, pm) = opposite_params(&lambda, &mu);
            return CanonicalLabel::d(pl, pm).expect("the partner of a valid pair is valid");
        },
    }
}

/// Rational of bounded height other than `excluded`.
pub fn rational_except<F: Field, R: Rng + ?Sized>(rng: &mut R, height: i64, excluded: &[F]) -> F {
    loop {
        let x: F = rational(rng, height);
        if !excluded.contains(&x) {
            return x;
        }
    }
}

/// `+1` or `-1`.
pub fn sign<F: Field, R: Rng + ?Sized>(rng: &mut R) -> F {
    if rng.gen_bool(0.5) {
        one()
    } else {
        -one::<F>()
    }
}
