use std::fmt;

use thiserror::Error;

/// Why an algebra (or presentation) is not of class BL4.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NotBl4Reason {
    /// The derived algebra is neither 3-dimensional nor 1-dimensional.
    WrongDerivedDimension,
    /// No 3-dimensional ideal isomorphic to the Heisenberg algebra where one
    /// is required.
    PNotNilpotent3Dim,
    /// The multiplication by a complement of the ideal does not split over
    /// the rationals (irrational eigenvalues, a Jordan block, or no invariant
    /// abelian ideal of dimension 2).
    NoRationalSplitting,
    /// The algebra is a direct sum with a one-dimensional summand.
    Decomposable,
    /// `x11 != 0` but the first row of `X` vanishes.
    FirstRowVanishing,
    /// `x11 == 0` while the first row of `X` is nonzero.
    DerivedNotInFlag,
}

impl NotBl4Reason {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::WrongDerivedDimension => "wrong-derived-dimension",
            Self::PNotNilpotent3Dim => "p-not-nilpotent-3dim",
            Self::NoRationalSplitting => "no-rational-splitting",
            Self::Decomposable => "decomposable",
            Self::FirstRowVanishing => "first-row-vanishing",
            Self::DerivedNotInFlag => "derived-not-in-flag",
        }
    }
}

impl fmt::Display for NotBl4Reason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("structure constants are not antisymmetric at ({i},{j},{k})")]
    NotAntisymmetric { i: usize, j: usize, k: usize },
    #[error("structure constant entry ({i},{j},{k}) must satisfy i < j < dim")]
    BadEntryIndex { i: usize, j: usize, k: usize },
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("dimension {0} is not supported by this operation")]
    UnsupportedDimension(usize),
    #[error("xi3 must be nonzero")]
    ZeroXi3,
    #[error("not a BL4 algebra: {0}")]
    NotBl4(NotBl4Reason),
    #[error("weak isomorphism parameters violate {0}")]
    InvalidWeakIso(&'static str),
    #[error("invalid canonical label: {0}")]
    InvalidLabel(&'static str),
    #[error("invalid group parameters: {0}")]
    InvalidParams(&'static str),
    #[error("precondition violated: {0}")]
    Precondition(&'static str),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
