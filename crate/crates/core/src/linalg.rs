//! Small dense vectors and matrices over an exact field, plus subspaces in
//! reduced row-echelon form.
//!
//! Sizes are const generics; everything shipped uses 2, 3 and 4.

#![allow(clippy::needless_range_loop)]

use std::fmt;
use std::ops::{Add, Index, Mul, Neg, Sub};

use crate::field::{is_zero, one, zero, Field};

/// Column vector of length `N`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Vector<F, const N: usize>([F; N]);

/// `R x C` matrix stored row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<F, const R: usize, const C: usize>([[F; C]; R]);

impl<F: Field, const N: usize> Vector<F, N> {
    pub fn new(entries: [F; N]) -> Self {
        Self(entries)
    }

    pub fn from_fn(f: impl FnMut(usize) -> F) -> Self {
        Self(std::array::from_fn(f))
    }

    pub fn zero() -> Self {
        Self::from_fn(|_| zero())
    }

    /// Standard basis vector `e_i`.
    pub fn basis(i: usize) -> Self {
        assert!(i < N, "basis index {i} out of range for dimension {N}");
        Self::from_fn(|k| if k == i { one() } else { zero() })
    }

    pub fn from_ints(entries: [i64; N]) -> Self {
        Self::from_fn(|k| F::from_int(entries[k]))
    }

    pub fn entries(&self) -> &[F; N] {
        &self.0
    }

    pub fn into_entries(self) -> [F; N] {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(is_zero)
    }

    pub fn scale(&self, s: &F) -> Self {
        Self::from_fn(|k| self.0[k].clone() * s.clone())
    }

    pub fn dot(&self, other: &Self) -> F {
        self.0.iter().zip(other.0.iter()).fold(zero(), |acc, (a, b)| acc + a.clone() * b.clone())
    }
}

impl<F, const N: usize> Index<usize> for Vector<F, N> {
    type Output = F;
    fn index(&self, i: usize) -> &F {
        &self.0[i]
    }
}

impl<F: Field, const N: usize> Add for &Vector<F, N> {
    type Output = Vector<F, N>;
    fn add(self, rhs: Self) -> Vector<F, N> {
        Vector::from_fn(|k| self.0[k].clone() + rhs.0[k].clone())
    }
}

impl<F: Field, const N: usize> Sub for &Vector<F, N> {
    type Output = Vector<F, N>;
    fn sub(self, rhs: Self) -> Vector<F, N> {
        Vector::from_fn(|k| self.0[k].clone() - rhs.0[k].clone())
    }
}

impl<F: Field, const N: usize> Neg for &Vector<F, N> {
    type Output = Vector<F, N>;
    fn neg(self) -> Vector<F, N> {
        Vector::from_fn(|k| -self.0[k].clone())
    }
}

impl<F: fmt::Display, const N: usize> fmt::Debug for Vector<F, N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, x) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "]")
    }
}

impl<F: Field, const R: usize, const C: usize> Matrix<F, R, C> {
    pub fn from_rows(rows: [[F; C]; R]) -> Self {
        Self(rows)
    }

    pub fn from_fn(mut f: impl FnMut(usize, usize) -> F) -> Self {
        Self(std::array::from_fn(|r| std::array::from_fn(|c| f(r, c))))
    }

    pub fn from_int_rows(rows: [[i64; C]; R]) -> Self {
        Self::from_fn(|r, c| F::from_int(rows[r][c]))
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(cols: [Vector<F, R>; C]) -> Self {
        Self::from_fn(|r, c| cols[c][r].clone())
    }

    pub fn zero() -> Self {
        Self::from_fn(|_, _| zero())
    }

    pub fn rows(&self) -> &[[F; C]; R] {
        &self.0
    }

    pub fn get(&self, r: usize, c: usize) -> &F {
        &self.0[r][c]
    }

    /// Copy with one entry replaced.
    pub fn with_entry(&self, r: usize, c: usize, value: F) -> Self {
        let mut out = self.clone();
        out.0[r][c] = value;
        out
    }

    pub fn column(&self, c: usize) -> Vector<F, R> {
        Vector::from_fn(|r| self.0[r][c].clone())
    }

    pub fn transpose(&self) -> Matrix<F, C, R> {
        Matrix::from_fn(|r, c| self.0[c][r].clone())
    }

    pub fn scale(&self, s: &F) -> Self {
        Self::from_fn(|r, c| self.0[r][c].clone() * s.clone())
    }

    pub fn mul_vec(&self, v: &Vector<F, C>) -> Vector<F, R> {
        Vector::from_fn(|r| {
            self.0[r]
                .iter()
                .zip(v.entries())
                .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                .fold(zero(), |acc, (a, b)| acc + a.clone() * b.clone())
        })
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().flatten().all(is_zero)
    }
}

impl<F: Field, const N: usize> Matrix<F, N, N> {
    pub fn identity() -> Self {
        Self::from_fn(|r, c| if r == c { one() } else { zero() })
    }

    pub fn diagonal(d: [F; N]) -> Self {
        Self::from_fn(|r, c| if r == c { d[r].clone() } else { zero() })
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity()
    }

    /// Exact determinant by Gaussian elimination.
    pub fn det(&self) -> F {
        let mut m: Vec<Vec<F>> = self.0.iter().map(|r| r.to_vec()).collect();
        let mut det = one::<F>();
        for col in 0..N {
            let Some(pivot) = (col..N).find(|&r| !m[r][col].is_zero()) else {
                return zero();
            };
            if pivot != col {
                m.swap(pivot, col);
                det = -det;
            }
            let p = m[col][col].clone();
            det = det * p.clone();
            for r in col + 1..N {
                if m[r][col].is_zero() {
                    continue;
                }
                let factor = m[r][col].clone() / p.clone();
                for c in col..N {
                    let v = m[col][c].clone() * factor.clone();
                    m[r][c] = m[r][c].clone() - v;
                }
            }
        }
        det
    }

    pub fn is_invertible(&self) -> bool {
        !self.det().is_zero()
    }

    /// Gauss-Jordan inverse; `None` when singular.
    pub fn inverse(&self) -> Option<Self> {
        let mut m: Vec<Vec<F>> = self
            .0
            .iter()
            .enumerate()
            .map(|(r, row)| {
                let mut v = row.to_vec();
                v.extend((0..N).map(|c| if c == r { one() } else { zero() }));
                v
            })
            .collect();
        for col in 0..N {
            let pivot = (col..N).find(|&r| !m[r][col].is_zero())?;
            m.swap(pivot, col);
            let p = m[col][col].clone();
            for c in 0..2 * N {
                m[col][c] = m[col][c].clone() / p.clone();
            }
            for r in 0..N {
                if r == col || m[r][col].is_zero() {
                    continue;
                }
                let factor = m[r][col].clone();
                for c in 0..2 * N {
                    let v = m[col][c].clone() * factor.clone();
                    m[r][c] = m[r][c].clone() - v;
                }
            }
        }
        Some(Self::from_fn(|r, c| m[r][N + c].clone()))
    }
}

impl<F: Field, const R: usize, const K: usize, const C: usize> Mul<&Matrix<F, K, C>> for &Matrix<F, R, K> {
    type Output = Matrix<F, R, C>;
    fn mul(self, rhs: &Matrix<F, K, C>) -> Matrix<F, R, C> {
        Matrix::from_fn(|r, c| {
            (0..K).fold(zero(), |acc, k| {
                let (a, b) = (&self.0[r][k], &rhs.0[k][c]);
                if a.is_zero() || b.is_zero() {
                    acc
                } else {
                    acc + a.clone() * b.clone()
                }
            })
        })
    }
}

impl<F: Field, const R: usize, const C: usize> Add for &Matrix<F, R, C> {
    type Output = Matrix<F, R, C>;
    fn add(self, rhs: Self) -> Matrix<F, R, C> {
        Matrix::from_fn(|r, c| self.0[r][c].clone() + rhs.0[r][c].clone())
    }
}

impl<F: Field, const R: usize, const C: usize> Sub for &Matrix<F, R, C> {
    type Output = Matrix<F, R, C>;
    fn sub(self, rhs: Self) -> Matrix<F, R, C> {
        Matrix::from_fn(|r, c| self.0[r][c].clone() - rhs.0[r][c].clone())
    }
}

impl<F: fmt::Display, const R: usize, const C: usize> fmt::Debug for Matrix<F, R, C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (r, row) in self.0.iter().enumerate() {
            if r > 0 {
                write!(f, "; ")?;
            }
            for (c, x) in row.iter().enumerate() {
                if c > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{x}")?;
            }
        }
        write!(f, "]")
    }
}

/// Reduced row-echelon form of a dynamically sized row list. Returns the
/// nonzero rows and their pivot columns.
pub(crate) fn rref<F: Field>(mut rows: Vec<Vec<F>>, ncols: usize) -> (Vec<Vec<F>>, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let lead = rows[rank][col].clone();
        for x in rows[rank].iter_mut() {
            *x = x.clone() / lead.clone();
        }
        for r in 0..rows.len() {
            if r == rank || rows[r][col].is_zero() {
                continue;
            }
            let factor = rows[r][col].clone();
            for c in 0..ncols {
                let v = rows[rank][c].clone() * factor.clone();
                rows[r][c] = rows[r][c].clone() - v;
            }
        }
        pivots.push(col);
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rows.truncate(rank);
    (rows, pivots)
}

/// Basis of `{x : rows * x = 0}`, one vector per free column.
pub(crate) fn nullspace<F: Field>(rows: Vec<Vec<F>>, ncols: usize) -> Vec<Vec<F>> {
    let (reduced, pivots) = rref(rows, ncols);
    (0..ncols)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![zero::<F>(); ncols];
            v[free] = one();
            for (row, &p) in reduced.iter().zip(&pivots) {
                v[p] = -row[free].clone();
            }
            v
        })
        .collect()
}

/// Linear subspace of `F^N` held as its reduced row-echelon basis, so two
/// subspaces are equal exactly when their bases are equal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace<F, const N: usize> {
    basis: Vec<Vector<F, N>>,
}

impl<F: Field, const N: usize> Subspace<F, N> {
    pub fn zero() -> Self {
        Self { basis: Vec::new() }
    }

    pub fn full() -> Self {
        Self::span((0..N).map(Vector::basis))
    }

    pub fn span<I: IntoIterator<Item = Vector<F, N>>>(vectors: I) -> Self {
        let rows: Vec<Vec<F>> = vectors.into_iter().map(|v| v.into_entries().to_vec()).collect();
        let (reduced, _) = rref(rows, N);
        let basis = reduced.into_iter().map(|r| Vector::from_fn(|k| r[k].clone())).collect();
        Self { basis }
    }

    pub(crate) fn from_rows(rows: Vec<Vec<F>>) -> Self {
        Self::span(rows.into_iter().map(|r| Vector::from_fn(|k| r[k].clone())))
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vector<F, N>] {
        &self.basis
    }

    pub fn contains(&self, v: &Vector<F, N>) -> bool {
        Self::span(self.basis.iter().cloned().chain(std::iter::once(v.clone()))).dim() == self.dim()
    }

    pub fn contains_subspace(&self, other: &Self) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &Self) -> Self {
        Self::span(self.basis.iter().chain(other.basis.iter()).cloned())
    }

    /// Coordinates of `v` with respect to the listed (independent) vectors,
    /// or `None` when `v` lies outside their span.
    pub fn coordinates(vectors: &[Vector<F, N>], v: &Vector<F, N>) -> Option<Vec<F>> {
        let m = vectors.len();
        // Solve sum_j a_j vectors[j] = v: N equations in m unknowns.
        let rows: Vec<Vec<F>> = (0..N)
            .map(|k| {
                let mut row: Vec<F> = vectors.iter().map(|b| b[k].clone()).collect();
                row.push(v[k].clone());
                row
            })
            .collect();
        let (reduced, pivots) = rref(rows, m + 1);
        if pivots.contains(&m) {
            return None;
        }
        let mut coords = vec![zero::<F>(); m];
        for (row, &p) in reduced.iter().zip(&pivots) {
            coords[p] = row[m].clone();
        }
        Some(coords)
    }
}

impl<F: fmt::Display, const N: usize> fmt::Debug for Subspace<F, N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.basis.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::q;
    use num_rational::BigRational as Q;

    #[test]
    fn det_and_inverse() {
        let m: Matrix<Q, 3, 3> = Matrix::from_int_rows([[2, 0, 1], [1, 3, 2], [1, 1, 1]]);
        // 2(3-2) - 0 + 1(1-3) = 0
        assert_eq!(m.det(), q(0, 1));
        assert!(m.inverse().is_none());

        let m: Matrix<Q, 3, 3> = Matrix::from_int_rows([[2, 0, 1], [1, 3, 2], [1, 1, 2]]);
        assert_eq!(m.det(), q(6, 1));
        let inv = m.inverse().unwrap();
        assert!((&m * &inv).is_identity());
        assert!((&inv * &m).is_identity());
    }

    #[test]
    fn det_needs_row_swap() {
        let m: Matrix<Q, 2, 2> = Matrix::from_int_rows([[0, 1], [1, 0]]);
        assert_eq!(m.det(), q(-1, 1));
    }

    #[test]
    fn subspace_echelon_is_canonical() {
        let a = Subspace::<Q, 4>::span([Vector::from_ints([1, 1, 0, 0]), Vector::from_ints([0, 1, 0, 1])]);
        let b = Subspace::<Q, 4>::span([
            Vector::from_ints([1, 2, 0, 1]),
            Vector::from_ints([2, 0, 0, -2]),
            Vector::from_ints([3, 2, 0, -1]),
        ]);
        assert_eq!(a.dim(), 2);
        assert_eq!(a, b);
        assert!(a.contains(&Vector::from_ints([1, 0, 0, -1])));
        assert!(!a.contains(&Vector::basis(2)));
    }

    #[test]
    fn nullspace_basis() {
        let rows: Vec<Vec<Q>> = vec![vec![q(1, 1), q(2, 1), q(0, 1)], vec![q(0, 1), q(0, 1), q(1, 1)]];
        let ns = nullspace(rows, 3);
        assert_eq!(ns, vec![vec![q(-2, 1), q(1, 1), q(0, 1)]]);
    }

    #[test]
    fn coordinates_in_span() {
        let vs = [Vector::<Q, 4>::from_ints([1, 0, 0, 1]), Vector::from_ints([0, 1, 0, 0])];
        let c = Subspace::coordinates(&vs, &Vector::from_ints([2, -3, 0, 2])).unwrap();
        assert_eq!(c, vec![q(2, 1), q(-3, 1)]);
        assert!(Subspace::coordinates(&vs, &Vector::basis(2)).is_none());
    }
}
