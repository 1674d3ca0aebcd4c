//! Anti-commutative algebras given by structure constants.

use crate::error::{Error, Result};
use crate::field::{zero, Field};
use crate::linalg::{nullspace, Matrix, Subspace, Vector};

/// Antisymmetric tensor `c[i][j][k]` with `e_i e_j = sum_k c[i][j][k] e_k`.
///
/// Stored dense; the nonzero entries with `i < j` are also kept as a list,
/// which is what [`multiply`](Self::multiply) iterates.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct StructureConstants<F, const N: usize> {
    dense: Vec<F>,
    nonzero: Vec<(usize, usize, usize, F)>,
}

impl<F: Field, const N: usize> StructureConstants<F, N> {
    fn idx(i: usize, j: usize, k: usize) -> usize {
        (i * N + j) * N + k
    }

    fn from_dense_unchecked(dense: Vec<F>) -> Self {
        let mut nonzero = Vec::new();
        for i in 0..N {
            for j in i + 1..N {
                for k in 0..N {
                    let v = &dense[Self::idx(i, j, k)];
                    if !v.is_zero() {
                        nonzero.push((i, j, k, v.clone()));
                    }
                }
            }
        }
        Self { dense, nonzero }
    }

    /// The zero product.
    pub fn zero() -> Self {
        Self::from_dense_unchecked(vec![zero(); N * N * N])
    }

    /// Build from products `e_i e_j = sum v e_k`, listed as `(i, j, k, v)`
    /// with `i < j`. Repeated `(i, j, k)` entries are summed; the mirror
    /// entries `c[j][i][k] = -v` are implied.
    pub fn from_products<I>(entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, usize, F)>,
    {
        let mut dense = vec![zero::<F>(); N * N * N];
        for (i, j, k, v) in entries {
            if i >= j || j >= N || k >= N {
                return Err(Error::BadEntryIndex { i, j, k });
            }
            let a = Self::idx(i, j, k);
            dense[a] = dense[a].clone() + v;
            let b = Self::idx(j, i, k);
            dense[b] = -dense[a].clone();
        }
        Ok(Self::from_dense_unchecked(dense))
    }

    /// Build from a full tensor, rejecting anything that is not antisymmetric.
    pub fn from_fn(mut c: impl FnMut(usize, usize, usize) -> F) -> Result<Self> {
        let mut dense = Vec::with_capacity(N * N * N);
        for i in 0..N {
            for j in 0..N {
                for k in 0..N {
                    dense.push(c(i, j, k));
                }
            }
        }
        for i in 0..N {
            for j in i..N {
                for k in 0..N {
                    let a = &dense[Self::idx(i, j, k)];
                    let b = &dense[Self::idx(j, i, k)];
                    if *a != -b.clone() {
                        return Err(Error::NotAntisymmetric { i, j, k });
                    }
                }
            }
        }
        Ok(Self::from_dense_unchecked(dense))
    }

    pub fn dim(&self) -> usize {
        N
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &F {
        &self.dense[Self::idx(i, j, k)]
    }

    /// Nonzero `(i, j, k, c[i][j][k])` with `i < j`.
    pub fn nonzero_entries(&self) -> &[(usize, usize, usize, F)] {
        &self.nonzero
    }

    /// `e_i e_j`.
    pub fn basis_product(&self, i: usize, j: usize) -> Vector<F, N> {
        Vector::from_fn(|k| self.get(i, j, k).clone())
    }

    /// Bilinear product `x y`.
    pub fn multiply(&self, x: &Vector<F, N>, y: &Vector<F, N>) -> Vector<F, N> {
        let mut out: [F; N] = std::array::from_fn(|_| zero());
        for (i, j, k, c) in &self.nonzero {
            let (xi, xj, yi, yj) = (&x[*i], &x[*j], &y[*i], &y[*j]);
            let mut w = zero::<F>();
            if !xi.is_zero() && !yj.is_zero() {
                w = w + xi.clone() * yj.clone();
            }
            if !xj.is_zero() && !yi.is_zero() {
                w = w - xj.clone() * yi.clone();
            }
            if !w.is_zero() {
                out[*k] = out[*k].clone() + w * c.clone();
            }
        }
        Vector::new(out)
    }

    /// `xy.z + zx.y + yz.x`.
    pub fn jacobian(&self, x: &Vector<F, N>, y: &Vector<F, N>, z: &Vector<F, N>) -> Vector<F, N> {
        let a = self.multiply(&self.multiply(x, y), z);
        let b = self.multiply(&self.multiply(z, x), y);
        let c = self.multiply(&self.multiply(y, z), x);
        &(&a + &b) + &c
    }

    /// Jacobi identity on every basis triple `i < j < k`; enough by
    /// trilinearity and the alternating property.
    pub fn is_lie(&self) -> bool {
        for i in 0..N {
            for j in i + 1..N {
                for k in j + 1..N {
                    let (x, y, z) = (Vector::basis(i), Vector::basis(j), Vector::basis(k));
                    if !self.jacobian(&x, &y, &z).is_zero() {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Span of `S T = {s t}` for subspaces `S`, `T`.
    pub fn product_space(&self, s: &Subspace<F, N>, t: &Subspace<F, N>) -> Subspace<F, N> {
        Subspace::span(
            s.basis().iter().flat_map(|a| t.basis().iter().map(move |b| (a, b))).map(|(a, b)| self.multiply(a, b)),
        )
    }

    /// The commutator algebra `g g`.
    pub fn derived_subalgebra(&self) -> Subspace<F, N> {
        let mut products = Vec::new();
        for i in 0..N {
            for j in i + 1..N {
                products.push(self.basis_product(i, j));
            }
        }
        Subspace::span(products)
    }

    /// `{x : x s = 0 for all s in S}`.
    pub fn annihilator(&self, s: &Subspace<F, N>) -> Subspace<F, N> {
        // Row (s, k): the k-th coordinate of x s as a linear form in x.
        let mut rows = Vec::new();
        for b in s.basis() {
            for k in 0..N {
                rows.push(
                    (0..N)
                        .map(|i| (0..N).fold(zero::<F>(), |acc, j| acc + self.get(i, j, k).clone() * b[j].clone()))
                        .collect(),
                );
            }
        }
        if rows.is_empty() {
            return Subspace::full();
        }
        Subspace::from_rows(nullspace(rows, N))
    }

    /// `g S` contained in `S`.
    pub fn is_ideal(&self, s: &Subspace<F, N>) -> bool {
        let all = Subspace::<F, N>::full();
        s.contains_subspace(&self.product_space(&all, s))
    }

    /// Structure constants in the basis given by the columns of `m`:
    /// `x *' y = m^-1 ((m x)(m y))`.
    pub fn apply_basis_change(&self, m: &Matrix<F, N, N>) -> Result<Self> {
        let inv = m.inverse().ok_or(Error::SingularMatrix)?;
        let cols: Vec<Vector<F, N>> = (0..N).map(|c| m.column(c)).collect();
        let mut entries = Vec::new();
        for i in 0..N {
            for j in i + 1..N {
                let prod = inv.mul_vec(&self.multiply(&cols[i], &cols[j]));
                for (k, v) in prod.into_entries().into_iter().enumerate() {
                    if !v.is_zero() {
                        entries.push((i, j, k, v));
                    }
                }
            }
        }
        Self::from_products(entries)
    }
}

/// Whether `m` is an algebra isomorphism from `b` onto `a`, i.e.
/// `m (e_i *_b e_j) = (m e_i) *_a (m e_j)` for all basis pairs.
///
/// This is the ground-truth check every witness in the crate is run through.
pub fn is_isomorphism<F: Field, const N: usize>(
    a: &StructureConstants<F, N>,
    b: &StructureConstants<F, N>,
    m: &Matrix<F, N, N>,
) -> Result<bool> {
    if !m.is_invertible() {
        return Err(Error::SingularMatrix);
    }
    let cols: Vec<Vector<F, N>> = (0..N).map(|c| m.column(c)).collect();
    for i in 0..N {
        for j in i + 1..N {
            let lhs = m.mul_vec(&b.basis_product(i, j));
            let rhs = a.multiply(&cols[i], &cols[j]);
            if lhs != rhs {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

impl<F: Field, const N: usize> std::fmt::Debug for StructureConstants<F, N> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut list = f.debug_list();
        for (i, j, k, v) in &self.nonzero {
            list.entry(&format_args!("e{i}e{j}: {v} e{k}"));
        }
        list.finish()
    }
}
