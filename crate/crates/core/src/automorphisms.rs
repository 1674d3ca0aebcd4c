//! Automorphism groups of the canonical algebras: the literal matrix
//! families acting on each canonical basis and the abstract group each one
//! is isomorphic to.

use crate::error::Result;
use crate::field::{one, Field};
use crate::groups::{rescale_matrix, FamilyParams, GroupId, MatrixFamily, Rejection};
use crate::linalg::Matrix;
use crate::normal_form::CanonicalLabel;

type M4<F> = Matrix<F, 4, 4>;

#[derive(Clone, PartialEq, Eq)]
pub struct AutFamily<F> {
    pub algebra: CanonicalLabel<F>,
    pub abstract_id: GroupId<F>,
    /// Exactly the automorphism matrices of the canonical algebra.
    pub literal: MatrixFamily<F>,
}

impl<F: Field> std::fmt::Debug for AutFamily<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Aut({}) = {:?} ~ {:?}", self.algebra, self.literal, self.abstract_id)
    }
}

pub fn aut_family_of<F: Field>(label: &CanonicalLabel<F>) -> Result<AutFamily<F>> {
    label.validate()?;
    let o = one::<F>;
    let (abstract_id, literal) = match label {
        CanonicalLabel::A0 => (GroupId::Gamma, MatrixFamily::Full { tau: o() }),
        CanonicalLabel::C(l) => {
            let id = if l.is_one() { GroupId::Gamma0 } else { GroupId::Gamma };
            (id, MatrixFamily::Full { tau: l.clone() - o() })
        }
        CanonicalLabel::B(l) => (GroupId::GammaTriangle, MatrixFamily::Triangular { lambda: l.clone() }),
        CanonicalLabel::D { lambda, mu } => {
            let critical = mu.clone() - F::two() * lambda.clone() + o();
            let id = if critical.is_zero() { GroupId::GammaMinus } else { GroupId::GammaPlus };
            let family = MatrixFamily::Diagonal { alpha: lambda.clone() - mu.clone(), beta: lambda.clone() - o() };
            (id, family)
        }
        CanonicalLabel::A1 => (GroupId::AutA1, MatrixFamily::SignedUnion { tau: o() }),
    };
    Ok(AutFamily { algebra: label.clone(), abstract_id, literal })
}

/// Recover the literal-family parameters of `m` or say why it is not an
/// automorphism of the canonical algebra.
pub fn aut_membership<F: Field>(
    label: &CanonicalLabel<F>,
    m: &M4<F>,
) -> Result<std::result::Result<FamilyParams<F>, Rejection>> {
    Ok(aut_family_of(label)?.literal.membership(m))
}

impl<F: Field> AutFamily<F> {
    /// Image of a literal automorphism in the abstract group, where the
    /// identification is an explicit conjugation: a rescaling of the cocycle
    /// column for `a0`, `a1`, `c(l)`, and a change of basis for `b(l)`. For
    /// `d(l, m)` the identification is not a conjugation of this kind and
    /// `None` is returned.
    pub fn to_abstract(&self, m: &M4<F>) -> Option<M4<F>> {
        let o = one::<F>;
        match &self.algebra {
            CanonicalLabel::A0 => Some(m.clone()),
            CanonicalLabel::C(l) if l.is_one() => Some(m.clone()),
            CanonicalLabel::C(l) => Some(rescale_matrix(m, &(l.clone() - o()).inv())),
            CanonicalLabel::A1 => Some(rescale_matrix(m, &-o())),
            CanonicalLabel::B(l) => {
                let s = o() - l.clone();
                let z = F::zero;
                let c = Matrix::from_rows([
                    [o(), z(), z(), z()],
                    [s.clone(), o(), z(), z()],
                    [z(), z(), o(), z()],
                    [z(), z(), s, o()],
                ]);
                let inv = c.inverse().expect("unipotent");
                Some(&(&inv * m) * &c)
            }
            CanonicalLabel::D { .. } => None,
        }
    }
}
