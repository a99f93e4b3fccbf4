//! Exact linear algebra over the integers and rationals.
//!
//! Rank and determinant use Bareiss fraction-free elimination over `BigInt`,
//! which keeps intermediate entries as genuine minors (no rational blow-up
//! and no floating point). Inversion uses Gauss-Jordan over exact rationals.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::poly::Rational;

/// Rank of an integer matrix (rows of equal length) by fraction-free
/// Gaussian elimination. Consumes the matrix. An empty matrix or a matrix
/// with zero-length rows has rank 0.
pub fn integer_rank(mut m: Vec<Vec<BigInt>>) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    debug_assert!(m.iter().all(|r| r.len() == cols), "ragged matrix");
    let mut rank = 0;
    let mut prev = BigInt::one();
    for col in 0..cols {
        if rank == rows {
            break;
        }
        // Pivot: first row at or below `rank` with a nonzero entry; choosing
        // the first keeps the elimination deterministic.
        let Some(pivot_row) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot_row);
        let pivot = m[rank][col].clone();
        for r in rank + 1..rows {
            for c in col + 1..cols {
                // Bareiss update: every entry stays an exact minor of the
                // original matrix, so division by the previous pivot is exact.
                let val = (&pivot * &m[r][c] - &m[r][col] * &m[rank][c]) / &prev;
                m[r][c] = val;
            }
            m[r][col] = BigInt::zero();
        }
        prev = pivot;
        rank += 1;
    }
    rank
}

/// Determinant of a square integer matrix by Bareiss elimination.
pub fn integer_det(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    debug_assert!(m.iter().all(|r| r.len() == n), "matrix is not square");
    let mut prev = BigInt::one();
    let mut sign = BigInt::one();
    for col in 0..n - 1 {
        if m[col][col].is_zero() {
            let Some(pivot_row) = (col + 1..n).find(|&r| !m[r][col].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(col, pivot_row);
            sign = -sign;
        }
        let pivot = m[col][col].clone();
        for r in col + 1..n {
            for c in col + 1..n {
                let val = (&pivot * &m[r][c] - &m[r][col] * &m[col][c]) / &prev;
                m[r][c] = val;
            }
            m[r][col] = BigInt::zero();
        }
        prev = pivot;
    }
    sign * m[n - 1][n - 1].clone()
}

/// Rank of a rational matrix: rows are scaled to integers (clearing
/// denominators row by row leaves the row space unchanged), then eliminated
/// fraction-free.
pub fn rational_rank(rows: &[Vec<Rational>]) -> usize {
    let cleared: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|row| {
            let mut den_lcm = BigInt::one();
            for x in row {
                den_lcm = num_integer::Integer::lcm(&den_lcm, x.denom());
            }
            row.iter()
                .map(|x| x.numer() * (&den_lcm / x.denom()))
                .collect()
        })
        .collect();
    integer_rank(cleared)
}

/// Inverse of a square rational matrix by Gauss-Jordan elimination, or
/// `None` when singular.
pub fn rational_inverse(m: &[Vec<Rational>]) -> Option<Vec<Vec<Rational>>> {
    let n = m.len();
    assert!(m.iter().all(|r| r.len() == n), "matrix is not square");
    let mut a: Vec<Vec<Rational>> = m.to_vec();
    let mut inv: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { Rational::one() } else { Rational::zero() })
                .collect()
        })
        .collect();
    for col in 0..n {
        let pivot_row = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot_row);
        inv.swap(col, pivot_row);
        let pivot = a[col][col].clone();
        for c in 0..n {
            a[col][c] /= &pivot;
            inv[col][c] /= &pivot;
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let factor = a[r][col].clone();
            for c in 0..n {
                let d = &factor * &a[col][c];
                a[r][c] -= d;
                let d = &factor * &inv[col][c];
                inv[r][c] -= d;
            }
        }
    }
    Some(inv)
}

/// Absolute value helper used by tests and callers checking pivots.
pub fn is_nonzero(x: &BigInt) -> bool {
    !x.abs().is_zero()
}
