//! Ranks and real-linear kernel dimensions by exact Gaussian elimination.

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{Antiunitary, ExactMatrix, LinalgError};

/// Rank of a rational matrix given as rows of equal length.
///
/// Pivots on the first nonzero entry found scanning columns left to right.
pub fn rational_rank(mut rows: Vec<Vec<BigRational>>) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let nrows = rows.len();
    let mut rank = 0;
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(pivot) = (rank..nrows).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = BigRational::one() / &rows[rank][col];
        let pivot_row: Vec<BigRational> = rows[rank].iter().map(|e| e * &inv).collect();
        for row in rows.iter_mut().skip(rank + 1) {
            if row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (e, p) in row.iter_mut().zip(&pivot_row).skip(col) {
                *e -= &factor * p;
            }
        }
        rows[rank] = pivot_row;
        rank += 1;
    }
    rank
}

/// Real equations for `K·conj(v) = v` in the unknowns `(x, y)`, `v = x + iy`.
///
/// With `K = A + iB` this is `(A−I)x + By = 0` and `Bx − (A+I)y = 0`.
fn antilinear_fixed_rows(k: &ExactMatrix) -> Vec<Vec<BigRational>> {
    let n = k.rows();
    let mut rows = Vec::with_capacity(2 * n);
    for r in 0..n {
        let mut row = Vec::with_capacity(2 * n);
        for c in 0..n {
            let mut a = k.get(r, c).re.clone();
            if r == c {
                a -= BigRational::one();
            }
            row.push(a);
        }
        row.extend((0..n).map(|c| k.get(r, c).im.clone()));
        rows.push(row);
    }
    for r in 0..n {
        let mut row: Vec<BigRational> = (0..n).map(|c| k.get(r, c).im.clone()).collect();
        for c in 0..n {
            let mut a = -k.get(r, c).re.clone();
            if r == c {
                a -= BigRational::one();
            }
            row.push(a);
        }
        rows.push(row);
    }
    rows
}

/// Real equations for `M v = v` with `M = C + iE` complex-linear:
/// `(C−I)x − Ey = 0` and `Ex + (C−I)y = 0`.
fn linear_fixed_rows(m: &ExactMatrix) -> Vec<Vec<BigRational>> {
    let n = m.rows();
    let shifted = |r: usize, c: usize| {
        let mut a = m.get(r, c).re.clone();
        if r == c {
            a -= BigRational::one();
        }
        a
    };
    let mut rows = Vec::with_capacity(2 * n);
    for r in 0..n {
        let mut row: Vec<BigRational> = (0..n).map(|c| shifted(r, c)).collect();
        row.extend((0..n).map(|c| -m.get(r, c).im.clone()));
        rows.push(row);
    }
    for r in 0..n {
        let mut row: Vec<BigRational> = (0..n).map(|c| m.get(r, c).im.clone()).collect();
        row.extend((0..n).map(|c| shifted(r, c)));
        rows.push(row);
    }
    rows
}

/// Real dimension of `{v : J v = v}` for an antiunitary involution `J`.
///
/// Errors with [`LinalgError::NotInvolutive`] unless `J² = +I`.
pub fn real_fixed_dim(j: &Antiunitary) -> Result<usize, LinalgError> {
    real_fixed_dim_within(j, &[])
}

/// Real dimension of `{v : J v = v, M v = v for every M in fixed_by}`.
///
/// Each `M` is a complex-linear operator of the same size as `J`.
pub fn real_fixed_dim_within(j: &Antiunitary, fixed_by: &[ExactMatrix]) -> Result<usize, LinalgError> {
    if j.square().as_signed_identity() != Some(1) {
        return Err(LinalgError::NotInvolutive);
    }
    let n = j.dim();
    let mut rows = antilinear_fixed_rows(j.k());
    for m in fixed_by {
        if (m.rows(), m.cols()) != (n, n) {
            return Err(LinalgError::DimensionMismatch {
                op: "real_fixed_dim_within",
                lhs: (n, n),
                rhs: (m.rows(), m.cols()),
            });
        }
        rows.extend(linear_fixed_rows(m));
    }
    Ok(2 * n - rational_rank(rows))
}
