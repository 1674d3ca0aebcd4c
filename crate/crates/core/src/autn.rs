//! Automorphisms of the Heisenberg algebra `n` (`e1 e2 = e3`), the cocycle
//! `phi` and the factor coordinates `(xi, S, x)`.

use crate::error::{Error, Result};
use crate::field::{one, zero, Field};
use crate::linalg::Matrix;

pub type Pair<F> = [F; 2];

/// `[[A, 0], [a^t, |A|]]`, the general automorphism of `n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AutNElement<F> {
    a: Matrix<F, 2, 2>,
    pq3: Pair<F>,
}

impl<F: Field> AutNElement<F> {
    pub fn new(a: Matrix<F, 2, 2>, pq3: Pair<F>) -> Result<Self> {
        if a.det().is_zero() {
            return Err(Error::SingularMatrix);
        }
        Ok(Self { a, pq3 })
    }

    pub fn a(&self) -> &Matrix<F, 2, 2> {
        &self.a
    }

    /// `(p3, q3)`.
    pub fn pq3(&self) -> &Pair<F> {
        &self.pq3
    }

    pub fn to_matrix(&self) -> Matrix<F, 3, 3> {
        let a = &self.a;
        Matrix::from_rows([
            [a.get(0, 0).clone(), a.get(0, 1).clone(), zero()],
            [a.get(1, 0).clone(), a.get(1, 1).clone(), zero()],
            [self.pq3[0].clone(), self.pq3[1].clone(), a.det()],
        ])
    }

    pub fn from_matrix(m: &Matrix<F, 3, 3>) -> Result<Self> {
        if !m.get(0, 2).is_zero() || !m.get(1, 2).is_zero() {
            return Err(Error::InvalidParams("automorphism of n must fix span(e3)"));
        }
        let a =
            Matrix::from_rows([[m.get(0, 0).clone(), m.get(0, 1).clone()], [m.get(1, 0).clone(), m.get(1, 1).clone()]]);
        if *m.get(2, 2) != a.det() {
            return Err(Error::InvalidParams("automorphism of n needs r3 = |A|"));
        }
        Self::new(a, [m.get(2, 0).clone(), m.get(2, 1).clone()])
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::from_matrix(&(&self.to_matrix() * &other.to_matrix())).expect("Aut(n) is closed under products")
    }
}

impl<F: Field> std::fmt::Debug for AutNElement<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "AutN{:?}", self.to_matrix())
    }
}

/// Triple `(xi, S, x)` with `xi != 0` and `det S = 1`, multiplied by
/// `(xi, S, x)(eta, T, y) = (xi eta, S T, x^t T + y^t)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AutNFactor<F> {
    xi: F,
    s: Matrix<F, 2, 2>,
    x: Pair<F>,
}

impl<F: Field> AutNFactor<F> {
    pub fn new(xi: F, s: Matrix<F, 2, 2>, x: Pair<F>) -> Result<Self> {
        if xi.is_zero() {
            return Err(Error::InvalidParams("xi != 0"));
        }
        if !s.det().is_one() {
            return Err(Error::InvalidParams("det S = 1"));
        }
        Ok(Self { xi, s, x })
    }

    pub fn identity() -> Self {
        Self { xi: one(), s: Matrix::identity(), x: [zero(), zero()] }
    }

    pub fn xi(&self) -> &F {
        &self.xi
    }
    pub fn s(&self) -> &Matrix<F, 2, 2> {
        &self.s
    }
    pub fn x(&self) -> &Pair<F> {
        &self.x
    }

    pub fn mul(&self, other: &Self) -> Self {
        let t = &other.s;
        let x = [
            self.x[0].clone() * t.get(0, 0).clone() + self.x[1].clone() * t.get(1, 0).clone() + other.x[0].clone(),
            self.x[0].clone() * t.get(0, 1).clone() + self.x[1].clone() * t.get(1, 1).clone() + other.x[1].clone(),
        ];
        Self { xi: self.xi.clone() * other.xi.clone(), s: &self.s * t, x }
    }
}

impl<F: Field> std::fmt::Debug for AutNFactor<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {:?}, [{}, {}])", self.xi, self.s, self.x[0], self.x[1])
    }
}

/// `[[xi S, 0], [xi x^t, xi]]`.
///
/// This is a faithful homomorphism, but its image consists of the matrices
/// `[[B, 0], [b^t, beta]]` with `det B = beta^2`, so it lands in `Aut(n)`
/// (`det B = beta`) only when `xi = 1`.
pub fn delta<F: Field>(f: &AutNFactor<F>) -> Matrix<F, 3, 3> {
    let xi = &f.xi;
    let s = f.s.scale(xi);
    Matrix::from_rows([
        [s.get(0, 0).clone(), s.get(0, 1).clone(), zero()],
        [s.get(1, 0).clone(), s.get(1, 1).clone(), zero()],
        [xi.clone() * f.x[0].clone(), xi.clone() * f.x[1].clone(), xi.clone()],
    ])
}

/// Inverse of [`delta`] on its image: `(beta, B / beta, b^t / beta)`.
pub fn delta_inv<F: Field>(m: &Matrix<F, 3, 3>) -> Result<AutNFactor<F>> {
    if !m.get(0, 2).is_zero() || !m.get(1, 2).is_zero() {
        return Err(Error::InvalidParams("block lower triangular shape"));
    }
    let beta = m.get(2, 2).clone();
    if beta.is_zero() {
        return Err(Error::InvalidParams("xi != 0"));
    }
    let inv = beta.inv();
    let s = Matrix::from_rows([
        [m.get(0, 0).clone() * inv.clone(), m.get(0, 1).clone() * inv.clone()],
        [m.get(1, 0).clone() * inv.clone(), m.get(1, 1).clone() * inv.clone()],
    ]);
    AutNFactor::new(beta, s, [m.get(2, 0).clone() * inv.clone(), m.get(2, 1).clone() * inv])
}

fn pair_of<F: Field>(a: &Matrix<F, 2, 2>, v: &Pair<F>) -> Pair<F> {
    let w = a.mul_vec(&crate::linalg::Vector::new(v.clone()));
    w.into_entries()
}

/// `phi(A, a) = ((p3 q1 - p1 q3) / |A|, (p3 q2 - p2 q3) / |A|)` for
/// `A = [[p1, q1], [p2, q2]]` and `a = (p3, q3)`.
pub fn phi<F: Field>(a: &Matrix<F, 2, 2>, pq3: &Pair<F>) -> Result<Pair<F>> {
    let det = a.det();
    if det.is_zero() {
        return Err(Error::SingularMatrix);
    }
    let (p1, q1, p2, q2) = (a.get(0, 0), a.get(0, 1), a.get(1, 0), a.get(1, 1));
    let (p3, q3) = (&pq3[0], &pq3[1]);
    Ok([
        (p3.clone() * q1.clone() - p1.clone() * q3.clone()) / det.clone(),
        (p3.clone() * q2.clone() - p2.clone() * q3.clone()) / det,
    ])
}

/// `Theta phi` with `Theta = diag(-1, 1)`.
pub fn theta_phi<F: Field>(a: &Matrix<F, 2, 2>, pq3: &Pair<F>) -> Result<Pair<F>> {
    let [x, y] = phi(a, pq3)?;
    Ok([-x, y])
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PhiVariant {
    Phi,
    /// Only a cocycle on diagonal matrices.
    ThetaPhi,
}

impl PhiVariant {
    pub fn eval<F: Field>(self, a: &Matrix<F, 2, 2>, pq3: &Pair<F>) -> Result<Pair<F>> {
        match self {
            Self::Phi => phi(a, pq3),
            Self::ThetaPhi => theta_phi(a, pq3),
        }
    }
}

fn is_diagonal<F: Field>(a: &Matrix<F, 2, 2>) -> bool {
    a.get(0, 1).is_zero() && a.get(1, 0).is_zero()
}

/// The functional equation `f(A, a) + A f(B, b) = f(AB, (a^t B + |A| b^t)^t)`.
pub fn check_cocycle<F: Field>(
    variant: PhiVariant,
    a: &Matrix<F, 2, 2>,
    pa: &Pair<F>,
    b: &Matrix<F, 2, 2>,
    pb: &Pair<F>,
) -> Result<bool> {
    if variant == PhiVariant::ThetaPhi && !(is_diagonal(a) && is_diagonal(b)) {
        return Err(Error::Precondition("Theta phi is evaluated on diagonal matrices only"));
    }
    let lhs_a = variant.eval(a, pa)?;
    let lhs_b = pair_of(a, &variant.eval(b, pb)?);
    let lhs = [lhs_a[0].clone() + lhs_b[0].clone(), lhs_a[1].clone() + lhs_b[1].clone()];
    let det_a = a.det();
    // a^t B + |A| b^t
    let arg = [
        pa[0].clone() * b.get(0, 0).clone() + pa[1].clone() * b.get(1, 0).clone() + det_a.clone() * pb[0].clone(),
        pa[0].clone() * b.get(0, 1).clone() + pa[1].clone() * b.get(1, 1).clone() + det_a * pb[1].clone(),
    ];
    let rhs = variant.eval(&(a * b), &arg)?;
    Ok(lhs == rhs)
}

/// Which diagonal subfamily the translation subgroup `T` is taken from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TSubgroup {
    Plus,
    Minus,
}

/// `a^t f(E, b) - b^t f(E, a)` with `f = phi` (`Plus`) or `Theta phi`
/// (`Minus`); it measures the failure of the translations `(E, a)` to
/// commute.
pub fn t_subgroup_commutator<F: Field>(which: TSubgroup, a: &Pair<F>, b: &Pair<F>) -> F {
    let variant = match which {
        TSubgroup::Plus => PhiVariant::Phi,
        TSubgroup::Minus => PhiVariant::ThetaPhi,
    };
    let e = Matrix::identity();
    let fb = variant.eval(&e, b).expect("identity is invertible");
    let fa = variant.eval(&e, a).expect("identity is invertible");
    let dot = |u: &Pair<F>, v: &Pair<F>| u[0].clone() * v[0].clone() + u[1].clone() * v[1].clone();
    dot(a, &fb) - dot(b, &fa)
}
