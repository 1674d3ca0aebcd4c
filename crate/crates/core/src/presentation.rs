//! Presentations `c(x11, xi3, X)` of BL4 algebras in a distinguished basis,
//! and the weak isomorphisms between them.

use crate::algebra::StructureConstants;
use crate::error::{Error, NotBl4Reason, Result};
use crate::field::{one, zero, Field};
use crate::linalg::Matrix;

/// Multiplication on `K^4` with
/// `e1 e2 = xi3 e3`, `e0 e1 = x11 e1`,
/// `e0 e2 = x22 e2 + x23 e3`, `e0 e3 = x32 e2 + x33 e3`.
///
/// `x` is stored as `[[x22, x32], [x23, x33]]`: column `j` is the image of
/// `e_{j+2}` under left multiplication by `e0`, restricted to `span(e2, e3)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Bl4Presentation<F> {
    x11: F,
    xi3: F,
    x: Matrix<F, 2, 2>,
}

impl<F: Field> Bl4Presentation<F> {
    pub fn new(x11: F, xi3: F, x: Matrix<F, 2, 2>) -> Result<Self> {
        if xi3.is_zero() {
            return Err(Error::ZeroXi3);
        }
        Ok(Self { x11, xi3, x })
    }

    /// `xi3 = 1`, `X = [[x22, x32], [x23, x33]]`.
    pub fn normalized(x11: F, x: Matrix<F, 2, 2>) -> Self {
        Self { x11, xi3: one(), x }
    }

    pub fn x11(&self) -> &F {
        &self.x11
    }
    pub fn xi3(&self) -> &F {
        &self.xi3
    }
    pub fn x(&self) -> &Matrix<F, 2, 2> {
        &self.x
    }
    pub fn x22(&self) -> &F {
        self.x.get(0, 0)
    }
    pub fn x32(&self) -> &F {
        self.x.get(0, 1)
    }
    pub fn x23(&self) -> &F {
        self.x.get(1, 0)
    }
    pub fn x33(&self) -> &F {
        self.x.get(1, 1)
    }

    pub fn to_structure_constants(&self) -> StructureConstants<F, 4> {
        StructureConstants::from_products([
            (1, 2, 3, self.xi3.clone()),
            (0, 1, 1, self.x11.clone()),
            (0, 2, 2, self.x22().clone()),
            (0, 2, 3, self.x23().clone()),
            (0, 3, 2, self.x32().clone()),
            (0, 3, 3, self.x33().clone()),
        ])
        .expect("presentation entries are ordered")
    }

    /// Membership criterion for the BL4 class.
    ///
    /// Accepted: `x11 != 0` with a nonzero first row of `X`, or `x11 = 0`
    /// with a zero first row and `x33 != 0`. With `x11 = 0`, a zero first
    /// row and `x33 = 0`, the element `e0 - (x23/xi3) e1` annihilates the
    /// whole algebra, so it splits off as a direct summand.
    pub fn check_bl4(&self) -> std::result::Result<(), NotBl4Reason> {
        let first_row_zero = self.x22().is_zero() && self.x32().is_zero();
        match (self.x11.is_zero(), first_row_zero) {
            (false, false) => Ok(()),
            (false, true) => Err(NotBl4Reason::FirstRowVanishing),
            (true, false) => Err(NotBl4Reason::DerivedNotInFlag),
            (true, true) if self.x33().is_zero() => Err(NotBl4Reason::Decomposable),
            (true, true) => Ok(()),
        }
    }

    pub fn is_bl4(&self) -> bool {
        self.check_bl4().is_ok()
    }

    /// Rescale to `xi3 = 1`, keeping `x11` and `X`.
    ///
    /// The witness `diag(1, 1/xi3, 1, 1)` maps the normalized algebra onto
    /// `self`: replacing `e1` by `e1/xi3` turns `e1 e2 = xi3 e3` into
    /// `e3` and leaves every product with `e0` unchanged.
    pub fn normalize_xi3(&self) -> (Self, WeakIso<F>) {
        let normalized = Self::normalized(self.x11.clone(), self.x.clone());
        let witness = WeakIso::new(
            one(),
            [zero(), zero(), zero()],
            Matrix::diagonal([self.xi3.inv(), one()]),
            [zero(), zero()],
            one(),
        )
        .expect("xi3 is nonzero");
        (normalized, witness)
    }
}

impl<F: Field> std::fmt::Debug for Bl4Presentation<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "c(x11={}, xi3={}, X={:?})", self.x11, self.xi3, self.x)
    }
}

/// Flag-preserving change of basis
///
/// ```text
/// [ u0  0   0   0  ]
/// [ u1  p1  q1  0  ]
/// [ u2  p2  q2  0  ]
/// [ u3  p3  q3  r3 ]
/// ```
///
/// with `u0 * det(P) * r3 != 0`, `P = [[p1, q1], [p2, q2]]`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct WeakIso<F> {
    u0: F,
    u: [F; 3],
    p: Matrix<F, 2, 2>,
    pq3: [F; 2],
    r3: F,
}

impl<F: Field> WeakIso<F> {
    pub fn new(u0: F, u: [F; 3], p: Matrix<F, 2, 2>, pq3: [F; 2], r3: F) -> Result<Self> {
        if u0.is_zero() {
            return Err(Error::InvalidWeakIso("u0 != 0"));
        }
        if r3.is_zero() {
            return Err(Error::InvalidWeakIso("r3 != 0"));
        }
        if p.det().is_zero() {
            return Err(Error::InvalidWeakIso("p1 q2 - p2 q1 != 0"));
        }
        Ok(Self { u0, u, p, pq3, r3 })
    }

    /// Element preserving `e1 e2 = e3`: `r3 = det P`.
    pub fn xi3_preserving(u0: F, u: [F; 3], p: Matrix<F, 2, 2>, pq3: [F; 2]) -> Result<Self> {
        let r3 = p.det();
        Self::new(u0, u, p, pq3, r3)
    }

    pub fn identity() -> Self {
        Self::from_matrix(&Matrix::identity()).expect("identity has weak shape")
    }

    /// Read parameters back from a matrix of the weak shape.
    pub fn from_matrix(m: &Matrix<F, 4, 4>) -> Result<Self> {
        let zero_at = [(0, 1), (0, 2), (0, 3), (1, 3), (2, 3)];
        if zero_at.iter().any(|&(r, c)| !m.get(r, c).is_zero()) {
            return Err(Error::InvalidWeakIso("weak isomorphism zero pattern"));
        }
        let g = |r, c| m.get(r, c).clone();
        Self::new(
            g(0, 0),
            [g(1, 0), g(2, 0), g(3, 0)],
            Matrix::from_rows([[g(1, 1), g(1, 2)], [g(2, 1), g(2, 2)]]),
            [g(3, 1), g(3, 2)],
            g(3, 3),
        )
    }

    pub fn u0(&self) -> &F {
        &self.u0
    }
    /// `(u1, u2, u3)`.
    pub fn u(&self) -> &[F; 3] {
        &self.u
    }
    /// `[[p1, q1], [p2, q2]]`.
    pub fn p(&self) -> &Matrix<F, 2, 2> {
        &self.p
    }
    /// `(p3, q3)`.
    pub fn pq3(&self) -> &[F; 2] {
        &self.pq3
    }
    pub fn r3(&self) -> &F {
        &self.r3
    }

    pub fn det_p(&self) -> F {
        self.p.det()
    }

    pub fn is_xi3_preserving(&self) -> bool {
        self.r3 == self.det_p()
    }

    /// `p2 = q1 = 0`.
    pub fn is_direct(&self) -> bool {
        self.p.get(1, 0).is_zero() && self.p.get(0, 1).is_zero()
    }

    /// `p1 = q2 = 0`.
    pub fn is_opposite(&self) -> bool {
        self.p.get(0, 0).is_zero() && self.p.get(1, 1).is_zero()
    }

    pub fn to_matrix(&self) -> Matrix<F, 4, 4> {
        let (p, z) = (&self.p, zero::<F>);
        Matrix::from_rows([
            [self.u0.clone(), z(), z(), z()],
            [self.u[0].clone(), p.get(0, 0).clone(), p.get(0, 1).clone(), z()],
            [self.u[1].clone(), p.get(1, 0).clone(), p.get(1, 1).clone(), z()],
            [self.u[2].clone(), self.pq3[0].clone(), self.pq3[1].clone(), self.r3.clone()],
        ])
    }

    /// `self` after `other`, as matrices `self * other`.
    pub fn compose(&self, other: &Self) -> Self {
        Self::from_matrix(&(&self.to_matrix() * &other.to_matrix())).expect("weak shape is closed under products")
    }

    pub fn inverse(&self) -> Self {
        let inv = self.to_matrix().inverse().expect("weak isomorphisms are invertible");
        Self::from_matrix(&inv).expect("weak shape is closed under inversion")
    }
}

impl<F: Field> std::fmt::Debug for WeakIso<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "WeakIso{:?}", self.to_matrix())
    }
}

/// Both sides of the 3x3 matrix equation deciding whether the xi3-preserving
/// weak isomorphism `w` is an isomorphism from `hatted` onto `plain`
/// (both with `xi3 = 1`). Returns `(left, right)`; the map is an
/// isomorphism exactly when they agree.
pub fn iso_equation_sides<F: Field>(
    plain: &Bl4Presentation<F>,
    hatted: &Bl4Presentation<F>,
    w: &WeakIso<F>,
) -> Result<(Matrix<F, 3, 3>, Matrix<F, 3, 3>)> {
    if !plain.xi3.is_one() || !hatted.xi3.is_one() {
        return Err(Error::Precondition("both presentations must have xi3 = 1"));
    }
    if !w.is_xi3_preserving() {
        return Err(Error::Precondition("weak isomorphism must satisfy r3 = p1 q2 - p2 q1"));
    }
    let (p1, q1, p2, q2) = (w.p.get(0, 0), w.p.get(0, 1), w.p.get(1, 0), w.p.get(1, 1));
    let (p3, q3) = (&w.pq3[0], &w.pq3[1]);
    let (u0, u1, u2) = (&w.u0, &w.u[0], &w.u[1]);
    let d = w.det_p();
    let h = hatted;
    let x = plain;
    let c = |v: &F| v.clone();

    let left = Matrix::from_rows([
        [c(p1) * c(&h.x11), c(q1) * c(h.x22()), c(q1) * c(h.x32())],
        [c(p2) * c(&h.x11), c(q2) * c(h.x22()), c(q2) * c(h.x32())],
        [c(p3) * c(&h.x11), c(q3) * c(h.x22()) + c(&d) * c(h.x23()), c(q3) * c(h.x32()) + c(&d) * c(h.x33())],
    ]);
    let right = Matrix::from_rows([
        [c(u0) * c(p1) * c(&x.x11), c(u0) * c(q1) * c(&x.x11), zero()],
        [
            c(u0) * (c(x.x22()) * c(p2) + c(x.x32()) * c(p3)),
            c(u0) * (c(x.x22()) * c(q2) + c(x.x32()) * c(q3)),
            c(u0) * c(x.x32()) * c(&d),
        ],
        [
            c(u0) * (c(x.x23()) * c(p2) + c(x.x33()) * c(p3)) + c(u1) * c(p2) - c(u2) * c(p1),
            c(u0) * (c(x.x23()) * c(q2) + c(x.x33()) * c(q3)) + c(u1) * c(q2) - c(u2) * c(q1),
            c(u0) * c(x.x33()) * c(&d),
        ],
    ]);
    Ok((left, right))
}

/// Whether `w` is an isomorphism from `hatted` onto `plain`, decided by the
/// 3x3 matrix equation instead of the full product table.
pub fn iso_condition_holds<F: Field>(
    plain: &Bl4Presentation<F>,
    hatted: &Bl4Presentation<F>,
    w: &WeakIso<F>,
) -> Result<bool> {
    let (left, right) = iso_equation_sides(plain, hatted, w)?;
    Ok(left == right)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::is_isomorphism;
    use crate::field::{int, q};
    use num_rational::BigRational as Q;

    fn pres(x11: i64, xi3: i64, x: [[i64; 2]; 2]) -> Bl4Presentation<Q> {
        Bl4Presentation::new(int(x11), int(xi3), Matrix::from_int_rows(x)).unwrap()
    }

    fn sc(entries: &[(usize, usize, usize, i64)]) -> StructureConstants<Q, 4> {
        StructureConstants::from_products(entries.iter().map(|&(i, j, k, v)| (i, j, k, int(v)))).unwrap()
    }

    #[test]
    fn constants_of_canonical_rows() {
        assert_eq!(pres(0, 1, [[0, 0], [0, 1]]).to_structure_constants(), sc(&[(1, 2, 3, 1), (0, 3, 3, 1)]));
        assert_eq!(
            pres(1, 1, [[4, 1], [0, 0]]).to_structure_constants(),
            sc(&[(1, 2, 3, 1), (0, 1, 1, 1), (0, 2, 2, 4), (0, 3, 2, 1)])
        );
        assert_eq!(
            pres(1, 1, [[2, 0], [0, 3]]).to_structure_constants(),
            sc(&[(1, 2, 3, 1), (0, 1, 1, 1), (0, 2, 2, 2), (0, 3, 3, 3)])
        );
    }

    #[test]
    fn zero_xi3_rejected() {
        assert_eq!(Bl4Presentation::<Q>::new(int(1), int(0), Matrix::identity()).unwrap_err(), Error::ZeroXi3);
    }

    #[test]
    fn bl4_criterion() {
        assert_eq!(pres(1, 1, [[0, 0], [5, 3]]).check_bl4(), Err(NotBl4Reason::FirstRowVanishing));
        assert_eq!(pres(0, 1, [[0, 0], [7, 0]]).check_bl4(), Err(NotBl4Reason::Decomposable));
        assert_eq!(pres(0, 1, [[0, 0], [0, 0]]).check_bl4(), Err(NotBl4Reason::Decomposable));
        assert_eq!(pres(0, 1, [[1, 0], [0, 1]]).check_bl4(), Err(NotBl4Reason::DerivedNotInFlag));
        assert!(pres(1, 1, [[2, 0], [5, 3]]).is_bl4());
        assert!(pres(0, 1, [[0, 0], [7, 2]]).is_bl4());
    }

    #[test]
    fn normalize_examples() {
        let p = Bl4Presentation::new(int(2), int(5), Matrix::from_int_rows([[1, 0], [0, 3]])).unwrap();
        let (n, w) = p.normalize_xi3();
        assert_eq!(n, pres(2, 1, [[1, 0], [0, 3]]));
        assert_eq!(w.to_matrix(), Matrix::diagonal([int(1), q(1, 5), int(1), int(1)]));
        assert!(is_isomorphism(&p.to_structure_constants(), &n.to_structure_constants(), &w.to_matrix()).unwrap());

        let p = pres(0, -2, [[0, 0], [0, 1]]);
        let (n, w) = p.normalize_xi3();
        assert_eq!(n, pres(0, 1, [[0, 0], [0, 1]]));
        assert_eq!(w.to_matrix(), Matrix::diagonal([int(1), q(-1, 2), int(1), int(1)]));
        assert!(is_isomorphism(&p.to_structure_constants(), &n.to_structure_constants(), &w.to_matrix()).unwrap());

        let p = pres(3, 1, [[1, 2], [3, 4]]);
        let (n, w) = p.normalize_xi3();
        assert_eq!(n, p);
        assert_eq!(w, WeakIso::identity());
    }

    #[test]
    fn weak_iso_shape_and_group_ops() {
        assert!(WeakIso::<Q>::identity().to_matrix().is_identity());
        let w = WeakIso::<Q>::new(
            int(2),
            [int(1), int(-1), int(3)],
            Matrix::from_int_rows([[1, 2], [3, 4]]),
            [int(5), int(6)],
            int(7),
        )
        .unwrap();
        assert_eq!(w.compose(&w.inverse()), WeakIso::identity());
        assert_eq!(WeakIso::from_matrix(&w.to_matrix()).unwrap(), w);
        assert!(
            WeakIso::<Q>::new(int(0), [int(0), int(0), int(0)], Matrix::identity(), [int(0), int(0)], int(1)).is_err()
        );
        assert!(WeakIso::<Q>::new(int(1), [int(0), int(0), int(0)], Matrix::zero(), [int(0), int(0)], int(1)).is_err());
        assert!(WeakIso::<Q>::from_matrix(&Matrix::identity().with_entry(0, 2, int(1))).is_err());
    }

    #[test]
    fn iso_condition_examples() {
        let d32 = pres(1, 1, [[2, 0], [0, 3]]);
        assert!(iso_condition_holds(&d32, &d32, &WeakIso::identity()).unwrap());

        let a0 = pres(0, 1, [[0, 0], [0, 1]]);
        let w =
            WeakIso::xi3_preserving(int(1), [int(-5), int(2), int(11)], Matrix::identity(), [int(2), int(5)]).unwrap();
        assert!(iso_condition_holds(&a0, &a0, &w).unwrap());

        let d_half = Bl4Presentation::normalized(int(1), Matrix::diagonal([q(1, 2), q(3, 2)]));
        let m = Matrix::from_rows([
            [q(1, 2), q(0, 1), q(0, 1), q(0, 1)],
            [q(0, 1), q(0, 1), q(1, 1), q(0, 1)],
            [q(0, 1), q(1, 1), q(0, 1), q(0, 1)],
            [q(0, 1), q(0, 1), q(0, 1), q(-1, 1)],
        ]);
        let w = WeakIso::from_matrix(&m).unwrap();
        assert!(w.is_opposite() && w.is_xi3_preserving());
        assert!(iso_condition_holds(&d32, &d_half, &w).unwrap());
        assert!(!iso_condition_holds(&d_half, &d32, &w).unwrap());
    }

    #[test]
    fn iso_condition_preconditions() {
        let p = pres(1, 2, [[1, 0], [0, 1]]);
        let n = pres(1, 1, [[1, 0], [0, 1]]);
        assert!(iso_condition_holds(&p, &n, &WeakIso::identity()).is_err());
        let w = WeakIso::new(int(1), [int(0), int(0), int(0)], Matrix::identity(), [int(0), int(0)], int(2)).unwrap();
        assert!(iso_condition_holds(&n, &n, &w).is_err());
    }
}
