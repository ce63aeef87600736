//! Exact integer linear algebra: fraction-free (Bareiss) elimination
//! for ranks and determinants. Everything stays in `BigInt`; no floats.

use num::{BigInt, One, Signed, Zero};

/// Rank of an integer matrix over the rationals.
pub fn rank_int(mut m: Vec<Vec<BigInt>>) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut rank = 0;
    let mut row = 0;
    let mut prev = BigInt::one();
    for col in 0..cols {
        // smallest nonzero pivot keeps the Bareiss entries modest
        let pivot = (row..rows)
            .filter(|&r| !m[r][col].is_zero())
            .min_by_key(|&r| m[r][col].abs());
        let Some(p) = pivot else { continue };
        m.swap(row, p);
        let pivot_row = m[row].clone();
        for r in row + 1..rows {
            let lead = m[r][col].clone();
            for c in col..cols {
                let v = &pivot_row[col] * &m[r][c] - &lead * &pivot_row[c];
                m[r][c] = &v / &prev;
            }
        }
        prev = pivot_row[col].clone();
        rank += 1;
        row += 1;
        if row == rows {
            break;
        }
    }
    rank
}

/// Determinant of a square integer matrix (exact Bareiss).
pub fn det_int(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    assert!(m.iter().all(|r| r.len() == n), "det_int needs a square matrix");
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, p);
            sign = -sign;
        }
        let pivot_row = m[k].clone();
        for r in k + 1..n {
            let lead = m[r][k].clone();
            for c in k..n {
                let v = &pivot_row[k] * &m[r][c] - &lead * &pivot_row[c];
                m[r][c] = &v / &prev;
            }
        }
        prev = pivot_row[k].clone();
    }
    sign * m[n - 1][n - 1].clone()
}
