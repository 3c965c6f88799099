//! Small dense exact-rational linear algebra for the polyhedral oracle.
//!
//! Everything here is Gaussian elimination over arbitrary-precision
//! rationals; sizes are tiny (dimension at most 8), so correctness beats
//! cleverness.

use alloc::vec::Vec;
use alloc::vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub(crate) fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Solves `m x = rhs` for square `m`; `None` when singular.
pub(crate) fn solve_square(m: &[Vec<BigRational>], rhs: &[BigRational]) -> Option<Vec<BigRational>> {
    let n = m.len();
    debug_assert!(m.iter().all(|r| r.len() == n) && rhs.len() == n);
    let mut a: Vec<Vec<BigRational>> = m
        .iter()
        .zip(rhs)
        .map(|(row, b)| row.iter().cloned().chain(core::iter::once(b.clone())).collect())
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        let p = a[col][col].clone();
        for c in col..=n {
            a[col][c] = &a[col][c] / &p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for c in col..=n {
                    a[r][c] = &a[r][c] - &f * &a[col][c];
                }
            }
        }
    }
    Some(a.into_iter().map(|row| row[n].clone()).collect())
}

/// Row rank of a rectangular rational matrix.
pub(crate) fn rank(m: &[Vec<BigRational>]) -> usize {
    if m.is_empty() {
        return 0;
    }
    let rows = m.len();
    let cols = m[0].len();
    let mut a: Vec<Vec<BigRational>> = m.to_vec();
    let mut r = 0;
    for col in 0..cols {
        if r == rows {
            break;
        }
        let Some(pivot) = (r..rows).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(r, pivot);
        let p = a[r][col].clone();
        for c in col..cols {
            a[r][c] = &a[r][c] / &p;
        }
        for i in 0..rows {
            if i != r && !a[i][col].is_zero() {
                let f = a[i][col].clone();
                for c in col..cols {
                    a[i][c] = &a[i][c] - &f * &a[r][c];
                }
            }
        }
        r += 1;
    }
    r
}

/// Determinant of an integer matrix, exact.
pub(crate) fn det_int(m: &[Vec<i64>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a: Vec<Vec<BigRational>> = m.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect();
    let mut det = BigRational::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return BigInt::zero();
        };
        if pivot != col {
            a.swap(col, pivot);
            det = -det;
        }
        let p = a[col][col].clone();
        det *= &p;
        for r in col + 1..n {
            if !a[r][col].is_zero() {
                let f = &a[r][col] / &p;
                for c in col..n {
                    a[r][c] = &a[r][c] - &f * &a[col][c];
                }
            }
        }
    }
    debug_assert!(det.is_integer());
    det.to_integer()
}

/// Inverse of an integer matrix with determinant ±1; entries stay integral.
pub(crate) fn invert_unimodular(m: &[Vec<i64>]) -> Option<Vec<Vec<i64>>> {
    let n = m.len();
    let det = det_int(m);
    if det.abs() != BigInt::one() {
        return None;
    }
    let a: Vec<Vec<BigRational>> = m.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect();
    let mut inv = vec![vec![0i64; n]; n];
    for col in 0..n {
        let mut e = vec![BigRational::zero(); n];
        e[col] = BigRational::one();
        let x = solve_square(&a, &e)?;
        for row in 0..n {
            debug_assert!(x[row].is_integer());
            let v = x[row].to_integer();
            inv[row][col] = i64::try_from(&v).ok()?;
        }
    }
    Some(inv)
}

/// Fraction-free (Bareiss) determinant over `i128`. `None` on overflow, so
/// callers can fall back to the arbitrary-precision path.
pub(crate) fn det_bareiss_i128(m: &[Vec<i128>]) -> Option<i128> {
    let n = m.len();
    if n == 0 {
        return Some(1);
    }
    let mut a: Vec<Vec<i128>> = m.to_vec();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            let Some(p) = (k + 1..n).find(|&r| a[r][k] != 0) else {
                return Some(0);
            };
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = a[i][j]
                    .checked_mul(a[k][k])?
                    .checked_sub(a[i][k].checked_mul(a[k][j])?)?;
                a[i][j] = t / prev; // exact division in Bareiss elimination
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    a[n - 1][n - 1].checked_mul(sign)
}

/// Affine rank of a point set minus one: the dimension of the affine hull.
/// Returns `None` for an empty set (`Some(0)` for a single point).
pub(crate) fn affine_dim(points: &[Vec<BigRational>]) -> Option<usize> {
    let first = points.first()?;
    let diffs: Vec<Vec<BigRational>> = points[1..]
        .iter()
        .map(|p| p.iter().zip(first).map(|(a, b)| a - b).collect())
        .collect();
    Some(rank(&diffs))
}
