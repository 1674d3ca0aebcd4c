//! Matrix groups built from `Aut(n)` and the cocycle `phi`, realized as
//! parametrized families of 4x4 matrices with exact membership tests.

use std::fmt;

use rand::Rng;

use crate::autn::{phi, Pair};
use crate::error::{Error, Result};
use crate::field::{one, zero, Field};
use crate::linalg::Matrix;
use crate::random;

type M4<F> = Matrix<F, 4, 4>;
type M2<F> = Matrix<F, 2, 2>;

/// The named groups.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum GroupId<F> {
    /// Full `Aut(n)` block with cocycle `phi`.
    Gamma,
    /// Full `Aut(n)` block with zero cocycle.
    Gamma0,
    /// Lower unitriangular-by-scalar block `[[1, 0], [p2, q2]]`, zero cocycle.
    GammaTriangle,
    /// Diagonal block with `phi`.
    GammaPlus,
    /// Diagonal block with `Theta phi`.
    GammaMinus,
    /// Diagonal block with cocycle `diag(alpha, beta) phi`.
    GammaAB { alpha: F, beta: F },
    /// `Gamma(-1, 1)` together with its coset through the swap `sigma`.
    AutA1,
}

impl<F: Field> GroupId<F> {
    pub fn family(&self) -> MatrixFamily<F> {
        match self {
            Self::Gamma => MatrixFamily::Full { tau: one() },
            Self::Gamma0 => MatrixFamily::Full { tau: zero() },
            Self::GammaTriangle => MatrixFamily::Triangular { lambda: one() },
            Self::GammaPlus => MatrixFamily::Diagonal { alpha: one(), beta: one() },
            Self::GammaMinus => MatrixFamily::Diagonal { alpha: -one::<F>(), beta: one() },
            Self::GammaAB { alpha, beta } => MatrixFamily::Diagonal { alpha: alpha.clone(), beta: beta.clone() },
            Self::AutA1 => MatrixFamily::SignedUnion { tau: -one::<F>() },
        }
    }

    pub fn name(&self) -> String {
        match self {
            Self::Gamma => "Gamma".into(),
            Self::Gamma0 => "Gamma0".into(),
            Self::GammaTriangle => "GammaTriangle".into(),
            Self::GammaPlus => "GammaPlus".into(),
            Self::GammaMinus => "GammaMinus".into(),
            Self::GammaAB { alpha, beta } => format!("GammaAB({alpha},{beta})"),
            Self::AutA1 => "AutA1".into(),
        }
    }
}

impl<F: Field> fmt::Debug for GroupId<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// Families of 4x4 matrices
///
/// ```text
/// [ u0  0   0   0  ]
/// [ b1  p1  q1  0  ]
/// [ b2  p2  q2  0  ]
/// [ u3  p3  q3  r3 ]
/// ```
///
/// where `(b1, b2)` (the cocycle block) is determined by the rest.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum MatrixFamily<F> {
    /// `u0 = 1`, any invertible `A`, `b = tau phi(A, a)`, `r3 = |A|`.
    Full { tau: F },
    /// `u0 = 1`, `A = [[1, 0], [p2, q2]]`, `a = (p2 (1 - lambda), 0)`,
    /// `b = (0, p2 (lambda - 1))`, `r3 = q2`.
    Triangular { lambda: F },
    /// `u0 = 1`, `A = diag(p1, q2)`, `b = (-alpha q3 / q2, beta p3 / p1)`,
    /// `r3 = p1 q2`.
    Diagonal { alpha: F, beta: F },
    /// `u0 = 1`, `A = diag(p1, q2)`, `b = tau (-q3 / q2, -p3 / p1)`,
    /// `r3 = p1 q2`; together with `u0 = -1`, `A = [[0, q1], [p2, 0]]`,
    /// `b = tau (p3 / p2, q3 / q1)`, `r3 = -p2 q1`.
    SignedUnion { tau: F },
}

/// Free parameters of a family element.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum FamilyParams<F> {
    Full {
        a: M2<F>,
        pq3: Pair<F>,
        u3: F,
    },
    Triangular {
        p2: F,
        q2: F,
        u3: F,
    },
    Diagonal {
        p1: F,
        q2: F,
        pq3: Pair<F>,
        u3: F,
    },
    /// `coset = false`: `A = diag(s1, s2)`; `coset = true`: `q1 = s1`, `p2 = s2`.
    Signed {
        coset: bool,
        s1: F,
        s2: F,
        pq3: Pair<F>,
        u3: F,
    },
}

impl<F: Field> FamilyParams<F> {
    pub fn coset(&self) -> bool {
        matches!(self, Self::Signed { coset: true, .. })
    }

    /// Named parameter values, for reporting.
    pub fn named(&self) -> Vec<(&'static str, F)> {
        match self {
            Self::Full { a, pq3, u3 } => vec![
                ("p1", a.get(0, 0).clone()),
                ("q1", a.get(0, 1).clone()),
                ("p2", a.get(1, 0).clone()),
                ("q2", a.get(1, 1).clone()),
                ("p3", pq3[0].clone()),
                ("q3", pq3[1].clone()),
                ("u3", u3.clone()),
            ],
            Self::Triangular { p2, q2, u3 } => {
                vec![("p2", p2.clone()), ("q2", q2.clone()), ("u3", u3.clone())]
            }
            Self::Diagonal { p1, q2, pq3, u3 } => vec![
                ("p1", p1.clone()),
                ("q2", q2.clone()),
                ("p3", pq3[0].clone()),
                ("q3", pq3[1].clone()),
                ("u3", u3.clone()),
            ],
            Self::Signed { coset, s1, s2, pq3, u3 } => {
                let (n1, n2) = if *coset { ("q1", "p2") } else { ("p1", "q2") };
                vec![
                    (n1, s1.clone()),
                    (n2, s2.clone()),
                    ("p3", pq3[0].clone()),
                    ("q3", pq3[1].clone()),
                    ("u3", u3.clone()),
                ]
            }
        }
    }
}

impl<F: Field> fmt::Debug for FamilyParams<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut m = f.debug_map();
        if let Self::Signed { coset, .. } = self {
            m.entry(&"coset", coset);
        }
        for (k, v) in self.named() {
            m.entry(&k, &format_args!("{v}"));
        }
        m.finish()
    }
}

/// Why a matrix is not in a family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Rejection {
    /// A structural zero, unit or nonvanishing entry is violated.
    Shape(&'static str),
    /// The shape fits but a dependent entry has the wrong value.
    Residual(&'static str),
}

impl fmt::Display for Rejection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Shape(s) => write!(f, "shape: {s}"),
            Self::Residual(s) => write!(f, "equation-residual: {s}"),
        }
    }
}

fn rows4<F: Field>(rows: [[F; 4]; 4]) -> M4<F> {
    Matrix::from_rows(rows)
}

impl<F: Field> MatrixFamily<F> {
    /// The matrix with the given parameters.
    pub fn element(&self, params: &FamilyParams<F>) -> Result<M4<F>> {
        let (z, o) = (zero::<F>, one::<F>);
        let c = |x: &F| x.clone();
        let nonzero = |x: &F, what| {
            if x.is_zero() {
                Err(Error::InvalidParams(what))
            } else {
                Ok(())
            }
        };
        match (self, params) {
            (Self::Full { tau }, FamilyParams::Full { a, pq3, u3 }) => {
                let b = phi(a, pq3).map_err(|_| Error::InvalidParams("A invertible"))?;
                Ok(rows4([
                    [o(), z(), z(), z()],
                    [c(tau) * c(&b[0]), c(a.get(0, 0)), c(a.get(0, 1)), z()],
                    [c(tau) * c(&b[1]), c(a.get(1, 0)), c(a.get(1, 1)), z()],
                    [c(u3), c(&pq3[0]), c(&pq3[1]), a.det()],
                ]))
            }
            (Self::Triangular { lambda }, FamilyParams::Triangular { p2, q2, u3 }) => {
                nonzero(q2, "q2 != 0")?;
                let l1 = c(lambda) - o();
                Ok(rows4([
                    [o(), z(), z(), z()],
                    [z(), o(), z(), z()],
                    [c(p2) * c(&l1), c(p2), c(q2), z()],
                    [c(u3), -(c(p2) * l1), z(), c(q2)],
                ]))
            }
            (Self::Diagonal { alpha, beta }, FamilyParams::Diagonal { p1, q2, pq3, u3 }) => {
                nonzero(p1, "p1 != 0")?;
                nonzero(q2, "q2 != 0")?;
                let (p3, q3) = (&pq3[0], &pq3[1]);
                Ok(rows4([
                    [o(), z(), z(), z()],
                    [-(c(alpha) * c(q3) / c(q2)), c(p1), z(), z()],
                    [c(beta) * c(p3) / c(p1), z(), c(q2), z()],
                    [c(u3), c(p3), c(q3), c(p1) * c(q2)],
                ]))
            }
            (Self::SignedUnion { tau }, FamilyParams::Signed { coset, s1, s2, pq3, u3 }) => {
                nonzero(s1, "block entries != 0")?;
                nonzero(s2, "block entries != 0")?;
                let (p3, q3) = (&pq3[0], &pq3[1]);
                if *coset {
                    let (q1, p2) = (s1, s2);
                    Ok(rows4([
                        [-o(), z(), z(), z()],
                        [c(tau) * c(p3) / c(p2), z(), c(q1), z()],
                        [c(tau) * c(q3) / c(q1), c(p2), z(), z()],
                        [c(u3), c(p3), c(q3), -(c(p2) * c(q1))],
                    ]))
                } else {
                    let (p1, q2) = (s1, s2);
                    Ok(rows4([
                        [o(), z(), z(), z()],
                        [-(c(tau) * c(q3) / c(q2)), c(p1), z(), z()],
                        [-(c(tau) * c(p3) / c(p1)), z(), c(q2), z()],
                        [c(u3), c(p3), c(q3), c(p1) * c(q2)],
                    ]))
                }
            }
            _ => Err(Error::InvalidParams("parameters belong to a different family")),
        }
    }

    /// Recover the parameters of `m`: read `u0`, then the 2x2 block, then
    /// `(p3, q3)`, then `u3`, re-render and compare exactly.
    pub fn membership(&self, m: &M4<F>) -> std::result::Result<FamilyParams<F>, Rejection> {
        let g = |r: usize, c: usize| m.get(r, c).clone();
        let zero_at = [(0, 1), (0, 2), (0, 3), (1, 3), (2, 3)];
        if zero_at.iter().any(|&(r, c)| !m.get(r, c).is_zero()) {
            return Err(Rejection::Shape("weak isomorphism zero pattern"));
        }
        let u0 = g(0, 0);
        let coset = match self {
            Self::SignedUnion { .. } if u0 == -one::<F>() => true,
            Self::SignedUnion { .. } if u0.is_one() => false,
            Self::SignedUnion { .. } => return Err(Rejection::Shape("u0 = 1 or u0 = -1")),
            _ if u0.is_one() => false,
            _ => return Err(Rejection::Shape("u0 = 1")),
        };
        let (p1, q1, p2, q2) = (g(1, 1), g(1, 2), g(2, 1), g(2, 2));
        let diagonal = q1.is_zero() && p2.is_zero() && !p1.is_zero() && !q2.is_zero();
        let pq3 = [g(3, 1), g(3, 2)];
        let u3 = g(3, 0);
        let params = match self {
            Self::Full { .. } => {
                let a = Matrix::from_rows([[p1, q1], [p2, q2]]);
                if a.det().is_zero() {
                    return Err(Rejection::Shape("A invertible"));
                }
                FamilyParams::Full { a, pq3, u3 }
            }
            Self::Triangular { .. } => {
                if !p1.is_one() || !q1.is_zero() || q2.is_zero() {
                    return Err(Rejection::Shape("A = [[1, 0], [p2, q2]] with q2 != 0"));
                }
                FamilyParams::Triangular { p2, q2, u3 }
            }
            Self::Diagonal { .. } => {
                if !diagonal {
                    return Err(Rejection::Shape("A invertible diagonal"));
                }
                FamilyParams::Diagonal { p1, q2, pq3, u3 }
            }
            Self::SignedUnion { .. } if coset => {
                if !(p1.is_zero() && q2.is_zero() && !q1.is_zero() && !p2.is_zero()) {
                    return Err(Rejection::Shape("A invertible antidiagonal when u0 = -1"));
                }
                FamilyParams::Signed { coset, s1: q1, s2: p2, pq3, u3 }
            }
            Self::SignedUnion { .. } => {
                if !diagonal {
                    return Err(Rejection::Shape("A invertible diagonal when u0 = 1"));
                }
                FamilyParams::Signed { coset, s1: p1, s2: q2, pq3, u3 }
            }
        };
        let rendered = self.element(&params).expect("parameters read from a valid shape");
        for r in 0..4 {
            for c in 0..4 {
                if rendered.get(r, c) != m.get(r, c) {
                    return Err(Rejection::Residual(match (r, c) {
                        (1 | 2, 0) => "cocycle block",
                        (3, 3) => "determinant relation",
                        _ => "dependent entry",
                    }));
                }
            }
        }
        Ok(params)
    }

    pub fn contains(&self, m: &M4<F>) -> bool {
        self.membership(m).is_ok()
    }

    /// Product of two members, checked to land back in the family.
    pub fn mul(&self, a: &M4<F>, b: &M4<F>) -> std::result::Result<M4<F>, Rejection> {
        self.membership(a)?;
        self.membership(b)?;
        let prod = a * b;
        self.membership(&prod)?;
        Ok(prod)
    }

    /// Random member with parameters of bounded height.
    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R, height: i64) -> (FamilyParams<F>, M4<F>) {
        let params = match self {
            Self::Full { .. } => FamilyParams::Full {
                a: random::invertible_matrix(rng, height),
                pq3: random::pair(rng, height),
                u3: random::rational(rng, height),
            },
            Self::Triangular { .. } => FamilyParams::Triangular {
                p2: random::rational(rng, height),
                q2: random::nonzero_rational(rng, height),
                u3: random::rational(rng, height),
            },
            Self::Diagonal { .. } => FamilyParams::Diagonal {
                p1: random::nonzero_rational(rng, height),
                q2: random::nonzero_rational(rng, height),
                pq3: random::pair(rng, height),
                u3: random::rational(rng, height),
            },
            Self::SignedUnion { .. } => FamilyParams::Signed {
                coset: rng.gen_bool(0.5),
                s1: random::nonzero_rational(rng, height),
                s2: random::nonzero_rational(rng, height),
                pq3: random::pair(rng, height),
                u3: random::rational(rng, height),
            },
        };
        let m = self.element(&params).expect("sampled parameters are valid");
        (params, m)
    }

    /// The family after scaling the cocycle block and `u3` by `tau`, if it
    /// is again one of the families.
    pub fn rescaled(&self, tau: &F) -> Option<Self> {
        match self {
            Self::Full { tau: t } => Some(Self::Full { tau: t.clone() * tau.clone() }),
            Self::Diagonal { alpha, beta } => {
                Some(Self::Diagonal { alpha: alpha.clone() * tau.clone(), beta: beta.clone() * tau.clone() })
            }
            Self::SignedUnion { tau: t } => Some(Self::SignedUnion { tau: t.clone() * tau.clone() }),
            Self::Triangular { .. } => None,
        }
    }

    /// Whether the product of two members has `u3` entry `u3 + |A| u3'`
    /// with no contribution from `a^t` times the other cocycle block, i.e.
    /// the group splits as a semidirect product.
    pub fn is_split(&self) -> bool {
        match self {
            Self::Full { tau } | Self::SignedUnion { tau } => tau.is_zero(),
            Self::Diagonal { alpha, beta } => alpha.is_zero() && beta.is_zero(),
            // a = (p2 (1 - lambda), 0) is orthogonal to b = (0, p2' (lambda - 1))
            Self::Triangular { .. } => true,
        }
    }
}

impl<F: Field> fmt::Debug for MatrixFamily<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Full { tau } => write!(f, "Full(tau={tau})"),
            Self::Triangular { lambda } => write!(f, "Triangular(lambda={lambda})"),
            Self::Diagonal { alpha, beta } => write!(f, "Diagonal(alpha={alpha}, beta={beta})"),
            Self::SignedUnion { tau } => write!(f, "SignedUnion(tau={tau})"),
        }
    }
}

/// Scale the cocycle column and `u3` by `tau`; equals conjugation by
/// `diag(tau, 1, 1, 1)`, so it is a group isomorphism onto the rescaled
/// family.
pub fn rescale_matrix<F: Field>(m: &M4<F>, tau: &F) -> M4<F> {
    Matrix::from_fn(|r, c| if c == 0 && r > 0 { m.get(r, c).clone() * tau.clone() } else { m.get(r, c).clone() })
}

/// The swap `e0 -> -e0`, `e1 <-> e2`, `e3 -> -e3`.
pub fn sigma<F: Field>() -> M4<F> {
    Matrix::from_int_rows([[-1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, -1]])
}

pub fn group_element<F: Field>(id: &GroupId<F>, params: &FamilyParams<F>) -> Result<M4<F>> {
    id.family().element(params)
}

pub fn group_mul<F: Field>(id: &GroupId<F>, a: &M4<F>, b: &M4<F>) -> std::result::Result<M4<F>, Rejection> {
    id.family().mul(a, b)
}

pub fn membership<F: Field>(id: &GroupId<F>, m: &M4<F>) -> std::result::Result<FamilyParams<F>, Rejection> {
    id.family().membership(m)
}
