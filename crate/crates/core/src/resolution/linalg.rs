//! Dense exact linear algebra over ℚ.

#![allow(clippy::needless_range_loop)]

use num_traits::{One, Zero};

use crate::polyring::Q;

/// Determinant by fraction Gaussian elimination. `rows` is square.
pub fn determinant(mut rows: Vec<Vec<Q>>) -> Q {
    let n = rows.len();
    let mut det = Q::one();
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| !rows[r][col].is_zero()) else {
            return Q::zero();
        };
        if piv != col {
            rows.swap(piv, col);
            det = -det;
        }
        let p = rows[col][col].clone();
        det *= &p;
        for r in col + 1..n {
            if rows[r][col].is_zero() {
                continue;
            }
            let f = &rows[r][col] / &p;
            for c in col..n {
                let v = &rows[col][c] * &f;
                rows[r][c] -= v;
            }
        }
    }
    det
}

/// Solves `A x = b_k` for every right-hand side, where `columns` lists the
/// columns of the square matrix `A`. Returns `None` when `A` is singular.
pub fn solve_columns(columns: &[Vec<Q>], rhs: &[Vec<Q>]) -> Option<Vec<Vec<Q>>> {
    let n = columns.len();
    // augmented row-major matrix [A | B]
    let m = rhs.len();
    let mut a: Vec<Vec<Q>> = (0..n)
        .map(|r| {
            let mut row: Vec<Q> = columns.iter().map(|c| c[r].clone()).collect();
            row.extend(rhs.iter().map(|b| b[r].clone()));
            row
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(piv, col);
        let inv = a[col][col].recip();
        for c in col..n + m {
            a[col][c] *= &inv;
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone();
            for c in col..n + m {
                let v = &a[col][c] * &f;
                a[r][c] -= v;
            }
        }
    }
    Some(
        (0..m)
            .map(|k| (0..n).map(|r| a[r][n + k].clone()).collect())
            .collect(),
    )
}
