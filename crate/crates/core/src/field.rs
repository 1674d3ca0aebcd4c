//! Scalar abstraction.
//!
//! Every algorithm in this crate is written against [`Field`]. The shipped
//! instantiation is [`BigRational`](num_rational::BigRational); the fixed-width
//! `Ratio<i64>` also implements the trait for small, fast experiments.
//!
//! All predicates compare scalars with `==`, so only exact fields are
//! meaningful here.

use std::fmt::{Debug, Display};

use num_bigint::BigInt;
use num_integer::Roots;
use num_rational::{BigRational, Ratio};
use num_traits::{FromPrimitive, Num, Signed};

/// An exact, ordered field of characteristic zero.
pub trait Field: Num + Signed + Clone + Debug + Display + Ord + FromPrimitive + Send + Sync + 'static {
    /// Square root inside the field, when one exists.
    fn exact_sqrt(&self) -> Option<Self>;

    fn from_int(n: i64) -> Self {
        Self::from_i64(n).expect("integer fits in the field")
    }

    fn from_frac(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Self::from_int(num) / Self::from_int(den)
    }

    fn two() -> Self {
        Self::one() + Self::one()
    }

    fn inv(&self) -> Self {
        Self::one() / self.clone()
    }
}

impl Field for BigRational {
    fn exact_sqrt(&self) -> Option<Self> {
        if self.is_negative() {
            return None;
        }
        let n = integer_sqrt(self.numer())?;
        let d = integer_sqrt(self.denom())?;
        Some(Ratio::new(n, d))
    }
}

impl Field for Ratio<i64> {
    fn exact_sqrt(&self) -> Option<Self> {
        if *self.numer() < 0 {
            return None;
        }
        let n = self.numer().sqrt();
        let d = self.denom().sqrt();
        (n * n == *self.numer() && d * d == *self.denom()).then(|| Ratio::new(n, d))
    }
}

fn integer_sqrt(n: &BigInt) -> Option<BigInt> {
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

/// Convenience for tests and fixtures: `q(3, 2)` is three halves.
pub fn q<F: Field>(num: i64, den: i64) -> F {
    F::from_frac(num, den)
}

/// Integer literal in the field.
pub fn int<F: Field>(n: i64) -> F {
    F::from_int(n)
}

pub(crate) fn is_zero<F: Field>(x: &F) -> bool {
    x.is_zero()
}

pub(crate) fn zero<F: Field>() -> F {
    F::zero()
}

pub(crate) fn one<F: Field>() -> F {
    F::one()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_sqrt() {
        let x: BigRational = q(9, 4);
        assert_eq!(x.exact_sqrt(), Some(q(3, 2)));
        assert_eq!(q::<BigRational>(2, 1).exact_sqrt(), None);
        assert_eq!(q::<BigRational>(-4, 1).exact_sqrt(), None);
        assert_eq!(q::<BigRational>(0, 1).exact_sqrt(), Some(q(0, 1)));
    }

    #[test]
    fn small_ratio_sqrt() {
        let x: Ratio<i64> = q(49, 25);
        assert_eq!(x.exact_sqrt(), Some(q(7, 5)));
        assert_eq!(q::<Ratio<i64>>(3, 4).exact_sqrt(), None);
    }

    #[test]
    fn reduced_form() {
        let x: BigRational = q(6, -4);
        assert_eq!(x, q(-3, 2));
        assert!(x.denom().is_positive());
    }
}
