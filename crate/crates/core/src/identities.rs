//! Binary-Lie and Malcev identities decided by evaluation on a finite grid.
//!
//! Both defects are polynomials in the coordinates of their arguments. A
//! polynomial of degree at most `d` in each variable that vanishes on
//! `S^n` with `|S| > d` is identically zero over a field of characteristic
//! zero, so evaluating on a small integer grid decides the identity exactly.
//!
//! * binary Lie, `(y.xy)x + (xy.x)y`: degree 2 in each coordinate of `x`
//!   and of `y`, grid `{0,1,2}` for both.
//! * Malcev, `xy.xz - (xy.z)x - (yz.x)x - (zx.x)y`: degree 2 in `x`, 1 in
//!   `y` and `z`, grid `{0,1,2}` for `x` and `{0,1}` for `y`, `z`.

use crate::algebra::StructureConstants;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::Vector;

/// Grids are exponential in the dimension; this bounds them.
pub const MAX_GRID_DIM: usize = 4;

/// All vectors with coordinates in `{0, .., points - 1}`.
fn grid<F: Field, const N: usize>(points: i64) -> Vec<Vector<F, N>> {
    let total = (points as usize).pow(N as u32);
    (0..total)
        .map(|mut code| {
            Vector::from_fn(|_| {
                let digit = (code % points as usize) as i64;
                code /= points as usize;
                F::from_int(digit)
            })
        })
        .collect()
}

fn check_dim(n: usize) -> Result<()> {
    if n == 0 || n > MAX_GRID_DIM {
        return Err(Error::UnsupportedDimension(n));
    }
    Ok(())
}

/// `(y.xy)x + (xy.x)y`, which equals `J(x, y, xy)`.
pub fn binary_lie_defect<F: Field, const N: usize>(
    sc: &StructureConstants<F, N>,
    x: &Vector<F, N>,
    y: &Vector<F, N>,
) -> Vector<F, N> {
    let xy = sc.multiply(x, y);
    if xy.is_zero() {
        return Vector::zero();
    }
    let a = sc.multiply(&sc.multiply(y, &xy), x);
    let b = sc.multiply(&sc.multiply(&xy, x), y);
    &a + &b
}

/// `xy.xz - ((xy.z)x + (yz.x)x + (zx.x)y)`.
pub fn malcev_defect<F: Field, const N: usize>(
    sc: &StructureConstants<F, N>,
    x: &Vector<F, N>,
    y: &Vector<F, N>,
    z: &Vector<F, N>,
) -> Vector<F, N> {
    let xy = sc.multiply(x, y);
    let xz = sc.multiply(x, z);
    let lhs = sc.multiply(&xy, &xz);
    let r1 = sc.multiply(&sc.multiply(&xy, z), x);
    let r2 = sc.multiply(&sc.multiply(&sc.multiply(y, z), x), x);
    let r3 = sc.multiply(&sc.multiply(&sc.multiply(z, x), x), y);
    &lhs - &(&(&r1 + &r2) + &r3)
}

/// First grid pair `(x, y)` on which the binary-Lie identity fails, if any.
pub fn binary_lie_witness<F: Field, const N: usize>(
    sc: &StructureConstants<F, N>,
) -> Result<Option<(Vector<F, N>, Vector<F, N>)>> {
    check_dim(N)?;
    let points = grid::<F, N>(3);
    for x in &points {
        for y in &points {
            if !binary_lie_defect(sc, x, y).is_zero() {
                return Ok(Some((x.clone(), y.clone())));
            }
        }
    }
    Ok(None)
}

pub fn is_binary_lie<F: Field, const N: usize>(sc: &StructureConstants<F, N>) -> Result<bool> {
    binary_lie_witness(sc).map(|w| w.is_none())
}

type Triple<F, const N: usize> = (Vector<F, N>, Vector<F, N>, Vector<F, N>);

/// First grid triple on which the Malcev identity fails, if any.
pub fn malcev_witness<F: Field, const N: usize>(sc: &StructureConstants<F, N>) -> Result<Option<Triple<F, N>>> {
    check_dim(N)?;
    let xs = grid::<F, N>(3);
    let yz = grid::<F, N>(2);
    for x in &xs {
        // x = 0 makes every term vanish.
        if x.is_zero() {
            continue;
        }
        // Products that depend on x and one other argument are shared
        // across the inner loop.
        let xv: Vec<_> = yz.iter().map(|v| sc.multiply(x, v)).collect();
        let vxx: Vec<_> = yz.iter().map(|v| sc.multiply(&sc.multiply(v, x), x)).collect();
        for (a, y) in yz.iter().enumerate() {
            for (b, z) in yz.iter().enumerate() {
                let lhs = sc.multiply(&xv[a], &xv[b]);
                let r1 = sc.multiply(&sc.multiply(&xv[a], z), x);
                let r2 = sc.multiply(&sc.multiply(&sc.multiply(y, z), x), x);
                let r3 = sc.multiply(&vxx[b], y);
                let defect = &lhs - &(&(&r1 + &r2) + &r3);
                if !defect.is_zero() {
                    return Ok(Some((x.clone(), y.clone(), z.clone())));
                }
            }
        }
    }
    Ok(None)
}

pub fn is_malcev<F: Field, const N: usize>(sc: &StructureConstants<F, N>) -> Result<bool> {
    malcev_witness(sc).map(|w| w.is_none())
}
