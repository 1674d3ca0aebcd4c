//! Exact computer algebra for four-dimensional binary-Lie type algebras of
//! class BL4: presentations, recognition from structure constants, the
//! normal form with isomorphism witnesses, and automorphism groups.
//!
//! Everything is generic over an exact [`Field`]; [`Rational`] (arbitrary
//! precision) is the default and [`SmallRational`] trades overflow safety
//! for speed.

pub mod algebra;
pub mod autn;
pub mod automorphisms;
pub mod error;
pub mod extract;
pub mod field;
pub mod groups;
pub mod identities;
pub mod linalg;
pub mod normal_form;
pub mod presentation;
pub mod random;
pub mod selftest;

pub use algebra::{is_isomorphism, StructureConstants};
pub use error::{Error, NotBl4Reason, Result};
pub use extract::{extract_presentation, Extraction};
pub use field::{int, q, Field};
pub use linalg::{Matrix, Subspace, Vector};
pub use normal_form::{
    are_isomorphic, are_isomorphic_constants, canonical_label, canonical_structure_constants, classify_constants,
    property_table, reduce_direct, CanonicalLabel, IsoResult, Properties, StepKind, WitnessChain,
};
pub use presentation::{iso_condition_holds, iso_equation_sides, Bl4Presentation, WeakIso};

/// Arbitrary-precision rationals.
pub type Rational = num_rational::BigRational;
/// Rationals with `i64` numerator and denominator; arithmetic panics on overflow.
pub type SmallRational = num_rational::Ratio<i64>;

pub type Vec4 = Vector<Rational, 4>;
pub type Mat2 = Matrix<Rational, 2, 2>;
pub type Mat3 = Matrix<Rational, 3, 3>;
pub type Mat4 = Matrix<Rational, 4, 4>;
pub type Constants4 = StructureConstants<Rational, 4>;
pub type Presentation = Bl4Presentation<Rational>;
pub type Label = CanonicalLabel<Rational>;
