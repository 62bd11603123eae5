//! Dense matrices over the Gaussian rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{GaussianRational, LinalgError};

/// A dense row-major matrix with [`GaussianRational`] entries.
///
/// Matrices are immutable values; every operation returns a new matrix.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<GaussianRational>,
}

impl ExactMatrix {
    /// Builds a matrix from row-major entries.
    pub fn from_entries(
        rows: usize,
        cols: usize,
        entries: Vec<GaussianRational>,
    ) -> Result<Self, LinalgError> {
        if rows == 0 || cols == 0 {
            return Err(LinalgError::EmptyMatrix);
        }
        if entries.len() != rows * cols {
            return Err(LinalgError::EntryCount { expected: rows * cols, found: entries.len() });
        }
        Ok(Self { rows, cols, entries })
    }

    /// Builds a matrix from a list of equally long rows.
    pub fn from_rows(rows: Vec<Vec<GaussianRational>>) -> Result<Self, LinalgError> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(LinalgError::RaggedRows);
        }
        Self::from_entries(nrows, ncols, rows.into_iter().flatten().collect())
    }

    /// Convenience constructor from small integer real parts and imaginary parts.
    ///
    /// `re` and `im` must have the same shape.
    ///
    /// # Panics
    ///
    /// Panics on empty or ragged input.
    pub fn from_int_parts(re: &[&[i64]], im: &[&[i64]]) -> Self {
        assert_eq!(re.len(), im.len(), "real and imaginary parts differ in shape");
        let rows = re
            .iter()
            .zip(im)
            .map(|(r, i)| {
                assert_eq!(r.len(), i.len(), "real and imaginary parts differ in shape");
                r.iter()
                    .zip(i.iter())
                    .map(|(&a, &b)| GaussianRational::from_fractions(a, 1, b, 1))
                    .collect()
            })
            .collect();
        Self::from_rows(rows).expect("well-formed integer matrix")
    }

    /// Real integer matrix.
    ///
    /// # Panics
    ///
    /// Panics on empty or ragged input.
    pub fn from_ints(rows: &[&[i64]]) -> Self {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&a| GaussianRational::from_int(a)).collect())
            .collect();
        Self::from_rows(rows).expect("well-formed integer matrix")
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be positive");
        Self { rows, cols, entries: vec![GaussianRational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.entries[i * n + i] = GaussianRational::one();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[GaussianRational] {
        &self.entries
    }

    pub fn get(&self, r: usize, c: usize) -> &GaussianRational {
        &self.entries[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[GaussianRational] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(GaussianRational::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && self.entries.iter().enumerate().all(|(k, e)| {
                if k / self.cols == k % self.cols {
                    e.is_one()
                } else {
                    e.is_zero()
                }
            })
    }

    /// Whether every entry has zero imaginary part.
    pub fn is_real(&self) -> bool {
        self.entries.iter().all(GaussianRational::is_real)
    }

    /// First nonzero entry in row-major order, as `(row, col, value)`.
    pub fn first_nonzero(&self) -> Option<(usize, usize, &GaussianRational)> {
        self.entries
            .iter()
            .enumerate()
            .find(|(_, e)| !e.is_zero())
            .map(|(k, e)| (k / self.cols, k % self.cols, e))
    }

    /// `Some(c)` when `self = c · identity` for `c = ±1`.
    pub fn as_signed_identity(&self) -> Option<i8> {
        if !self.is_square() {
            return None;
        }
        let sign = self.get(0, 0).as_sign()?;
        let expected = if sign == 1 { self.clone() } else { -self };
        expected.is_identity().then_some(sign)
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self, LinalgError> {
        if self.cols != rhs.rows {
            return Err(LinalgError::DimensionMismatch {
                op: "mul",
                lhs: (self.rows, self.cols),
                rhs: (rhs.rows, rhs.cols),
            });
        }
        let mut out = Vec::with_capacity(self.rows * rhs.cols);
        for i in 0..self.rows {
            for j in 0..rhs.cols {
                let mut acc = GaussianRational::zero();
                for k in 0..self.cols {
                    let a = self.get(i, k);
                    if a.is_zero() {
                        continue;
                    }
                    let b = rhs.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    acc += &(a * b);
                }
                out.push(acc);
            }
        }
        Ok(Self { rows: self.rows, cols: rhs.cols, entries: out })
    }

    pub fn add(&self, rhs: &Self) -> Result<Self, LinalgError> {
        self.zip_with(rhs, "add", |a, b| a + b)
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self, LinalgError> {
        self.zip_with(rhs, "sub", |a, b| a - b)
    }

    fn zip_with(
        &self,
        rhs: &Self,
        op: &'static str,
        f: impl Fn(&GaussianRational, &GaussianRational) -> GaussianRational,
    ) -> Result<Self, LinalgError> {
        if (self.rows, self.cols) != (rhs.rows, rhs.cols) {
            return Err(LinalgError::DimensionMismatch {
                op,
                lhs: (self.rows, self.cols),
                rhs: (rhs.rows, rhs.cols),
            });
        }
        let entries = self.entries.iter().zip(&rhs.entries).map(|(a, b)| f(a, b)).collect();
        Ok(Self { rows: self.rows, cols: self.cols, entries })
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        self.map(|e| e * c)
    }

    fn map(&self, f: impl Fn(&GaussianRational) -> GaussianRational) -> Self {
        Self { rows: self.rows, cols: self.cols, entries: self.entries.iter().map(f).collect() }
    }

    /// Kronecker product: block `(i, j)` of the result is `self[i][j] · rhs`.
    pub fn kron(&self, rhs: &Self) -> Self {
        let rows = self.rows * rhs.rows;
        let cols = self.cols * rhs.cols;
        let mut entries = vec![GaussianRational::zero(); rows * cols];
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..rhs.rows {
                    for l in 0..rhs.cols {
                        let r = i * rhs.rows + k;
                        let c = j * rhs.cols + l;
                        entries[r * cols + c] = a * rhs.get(k, l);
                    }
                }
            }
        }
        Self { rows, cols, entries }
    }

    pub fn transpose(&self) -> Self {
        let mut entries = Vec::with_capacity(self.entries.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                entries.push(self.get(r, c).clone());
            }
        }
        Self { rows: self.cols, cols: self.rows, entries }
    }

    /// Entrywise complex conjugate.
    pub fn conj(&self) -> Self {
        self.map(GaussianRational::conj)
    }

    /// Conjugate transpose.
    pub fn dagger(&self) -> Self {
        self.transpose().conj()
    }

    pub fn is_hermitian(&self) -> bool {
        self.is_square() && self.dagger() == *self
    }

    pub fn is_unitary(&self) -> bool {
        self.is_square()
            && self.dagger().mul(self).map(|m| m.is_identity()).unwrap_or(false)
    }

    /// `self·rhs - rhs·self`.
    pub fn commutator(&self, rhs: &Self) -> Result<Self, LinalgError> {
        self.mul(rhs)?.sub(&rhs.mul(self)?)
    }

    /// `self·rhs + rhs·self`.
    pub fn anticommutator(&self, rhs: &Self) -> Result<Self, LinalgError> {
        self.mul(rhs)?.add(&rhs.mul(self)?)
    }

    /// Splits `self = A + iB` into its real and imaginary parts.
    pub fn split_re_im(&self) -> (Self, Self) {
        let re = self.map(|e| GaussianRational::real(e.re.clone()));
        let im = self.map(|e| GaussianRational::real(e.im.clone()));
        (re, im)
    }

    /// Applies the matrix to a column vector.
    pub fn apply(&self, v: &[GaussianRational]) -> Result<Vec<GaussianRational>, LinalgError> {
        if v.len() != self.cols {
            return Err(LinalgError::DimensionMismatch {
                op: "apply",
                lhs: (self.rows, self.cols),
                rhs: (v.len(), 1),
            });
        }
        Ok((0..self.rows)
            .map(|r| {
                self.row(r).iter().zip(v).fold(GaussianRational::zero(), |mut acc, (a, x)| {
                    acc += &(a * x);
                    acc
                })
            })
            .collect())
    }
}

impl Neg for &ExactMatrix {
    type Output = ExactMatrix;
    fn neg(self) -> ExactMatrix {
        self.map(|e| -e)
    }
}

/// Operator sugar for conformable matrices.
///
/// # Panics
///
/// Panics on dimension mismatch; use [`ExactMatrix::mul`] for a fallible product.
impl Mul for &ExactMatrix {
    type Output = ExactMatrix;
    fn mul(self, rhs: Self) -> ExactMatrix {
        ExactMatrix::mul(self, rhs).expect("conformable matrices")
    }
}

impl Add for &ExactMatrix {
    type Output = ExactMatrix;
    fn add(self, rhs: Self) -> ExactMatrix {
        ExactMatrix::add(self, rhs).expect("conformable matrices")
    }
}

impl Sub for &ExactMatrix {
    type Output = ExactMatrix;
    fn sub(self, rhs: Self) -> ExactMatrix {
        ExactMatrix::sub(self, rhs).expect("conformable matrices")
    }
}

impl fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.entries.iter().map(ToString::to_string).collect();
        let width = cells.iter().map(|c| c.chars().count()).max().unwrap_or(1);
        for r in 0..self.rows {
            write!(f, "[")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{:>width$}", cells[r * self.cols + c])?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

/// The Pauli matrices, used throughout as building blocks.
pub mod pauli {
    use super::ExactMatrix;

    pub fn sigma_x() -> ExactMatrix {
        ExactMatrix::from_ints(&[&[0, 1], &[1, 0]])
    }

    pub fn sigma_y() -> ExactMatrix {
        ExactMatrix::from_int_parts(&[&[0, 0], &[0, 0]], &[&[0, -1], &[1, 0]])
    }

    pub fn sigma_z() -> ExactMatrix {
        ExactMatrix::from_ints(&[&[1, 0], &[0, -1]])
    }
}
