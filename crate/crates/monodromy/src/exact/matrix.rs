//! Dense matrices and vectors over the rationals.
//!
//! Entries are [`BigRat`]; all kernels are exact. Elimination pivots on the
//! first nonzero entry in column order, so every routine is deterministic.
//! Determinant and rank use fraction-free Bareiss elimination on integer
//! matrices (rows of rational matrices are scaled integral first, which
//! changes neither the rank nor, after correction, the determinant);
//! kernel, image and inverse use rational Gauss-Jordan.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::poly::IntPoly;
use super::{BigRat, ExactError};

/// Dense row-major matrix of arbitrary-precision rationals.
#[derive(Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigRat>,
}

impl ExactMatrix {
    /// Builds a matrix from row-major entries. The entry count must equal
    /// `rows * cols` and both dimensions must be positive.
    pub fn new(rows: usize, cols: usize, data: Vec<BigRat>) -> Result<Self, ExactError> {
        if rows == 0 || cols == 0 {
            return Err(ExactError::BadShape(format!(
                "dimensions must be positive, got {rows}x{cols}"
            )));
        }
        if data.len() != rows * cols {
            return Err(ExactError::BadShape(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                data.len()
            )));
        }
        Ok(ExactMatrix { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix::new(rows, cols, vec![BigRat::zero(); rows * cols])
            .expect("positive dimensions")
    }

    pub fn identity(n: usize) -> Self {
        let mut m = ExactMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigRat::one());
        }
        m
    }

    /// Builds a matrix by evaluating `f(i, j)` at every position.
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> BigRat) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        ExactMatrix { rows, cols, data }
    }

    /// Convenience constructor from integer rows. Panics if the rows are ragged.
    pub fn from_int_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows[0].len();
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        ExactMatrix::from_fn(r, c, |i, j| BigRat::from_integer(BigInt::from(rows[i][j])))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &BigRat {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: BigRat) {
        self.data[i * self.cols + j] = value;
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|e| e.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    if i == j {
                        self.at(i, j).is_one()
                    } else {
                        self.at(i, j).is_zero()
                    }
                })
            })
    }

    pub fn is_integral(&self) -> bool {
        self.data.iter().all(|e| e.is_integer())
    }

    pub fn is_antisymmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows)
                .all(|i| (i..self.cols).all(|j| *self.at(i, j) == -self.at(j, i).clone()))
    }

    pub fn transpose(&self) -> Self {
        ExactMatrix::from_fn(self.cols, self.rows, |i, j| self.at(j, i).clone())
    }

    pub fn scale(&self, factor: &BigRat) -> Self {
        ExactMatrix::from_fn(self.rows, self.cols, |i, j| self.at(i, j) * factor)
    }

    /// Exact product; errors on an inner-dimension mismatch.
    pub fn checked_mul(&self, other: &ExactMatrix) -> Result<ExactMatrix, ExactError> {
        if self.cols != other.rows {
            return Err(ExactError::DimensionMismatch {
                left: (self.rows, self.cols),
                right: (other.rows, other.cols),
            });
        }
        let mut out = ExactMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.at(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.at(i, j) + a * b;
                    out.set(i, j, cur);
                }
            }
        }
        Ok(out)
    }

    /// Matrix-vector product; errors on a dimension mismatch.
    pub fn mul_vector(&self, v: &ExactVector) -> Result<ExactVector, ExactError> {
        if self.cols != v.len() {
            return Err(ExactError::DimensionMismatch {
                left: (self.rows, self.cols),
                right: (v.len(), 1),
            });
        }
        let entries = (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.at(i, j) * v.at(j)).sum())
            .collect();
        Ok(ExactVector::new(entries))
    }

    /// The bilinear pairing `x^t M y`.
    pub fn bilinear(&self, x: &ExactVector, y: &ExactVector) -> Result<BigRat, ExactError> {
        let my = self.mul_vector(y)?;
        if x.len() != my.len() {
            return Err(ExactError::DimensionMismatch {
                left: (x.len(), 1),
                right: (self.rows, self.cols),
            });
        }
        Ok(x.dot(&my))
    }

    /// Extracts column `j`.
    pub fn column(&self, j: usize) -> ExactVector {
        ExactVector::new((0..self.rows).map(|i| self.at(i, j).clone()).collect())
    }

    /// Exact inverse by Gauss-Jordan elimination.
    pub fn inverse(&self) -> Result<ExactMatrix, ExactError> {
        if !self.is_square() {
            return Err(ExactError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = ExactMatrix::identity(n);
        for col in 0..n {
            let pivot_row = (col..n)
                .find(|&r| !a.at(r, col).is_zero())
                .ok_or(ExactError::Singular)?;
            if pivot_row != col {
                a.swap_rows(pivot_row, col);
                inv.swap_rows(pivot_row, col);
            }
            let pivot = a.at(col, col).clone();
            for j in 0..n {
                a.set(col, j, a.at(col, j) / &pivot);
                inv.set(col, j, inv.at(col, j) / &pivot);
            }
            for r in 0..n {
                if r == col || a.at(r, col).is_zero() {
                    continue;
                }
                let factor = a.at(r, col).clone();
                for j in 0..n {
                    let va = a.at(r, j) - &factor * a.at(col, j);
                    a.set(r, j, va);
                    let vi = inv.at(r, j) - &factor * inv.at(col, j);
                    inv.set(r, j, vi);
                }
            }
        }
        Ok(inv)
    }

    /// Exact rank via fraction-free Bareiss elimination.
    pub fn rank(&self) -> usize {
        let (scaled, _) = self.integerized();
        bareiss_echelon(scaled, self.rows, self.cols).pivots
    }

    /// Exact determinant. Bareiss on the row-scaled integer matrix, with the
    /// scale divided back out.
    pub fn det(&self) -> Result<BigRat, ExactError> {
        if !self.is_square() {
            return Err(ExactError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let (scaled, row_scales) = self.integerized();
        let result = bareiss_echelon(scaled, self.rows, self.cols);
        if result.pivots < self.rows {
            return Ok(BigRat::zero());
        }
        let mut det = BigRat::from_integer(result.last_pivot);
        if result.sign < 0 {
            det = -det;
        }
        let mut scale = BigInt::one();
        for s in row_scales {
            scale *= s;
        }
        Ok(det / BigRat::from_integer(scale))
    }

    /// Basis of the null space `{v : Mv = 0}`, canonicalized to primitive
    /// integer vectors with positive leading coordinate. Basis vectors are
    /// ordered by their free column.
    pub fn kernel_basis(&self) -> Vec<ExactVector> {
        let (rref, pivot_cols) = self.rref();
        let pivot_of_col: Vec<Option<usize>> = {
            let mut v = vec![None; self.cols];
            for (row, &col) in pivot_cols.iter().enumerate() {
                v[col] = Some(row);
            }
            v
        };
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_of_col[free].is_some() {
                continue;
            }
            let mut entries = vec![BigRat::zero(); self.cols];
            entries[free] = BigRat::one();
            for (col, pivot) in pivot_of_col.iter().enumerate() {
                if let Some(row) = pivot {
                    entries[col] = -rref.at(*row, free).clone();
                }
            }
            basis.push(ExactVector::new(entries).canonical());
        }
        basis
    }

    /// Basis of the column space: the original columns at the pivot
    /// positions, canonicalized.
    pub fn image_basis(&self) -> Vec<ExactVector> {
        let (_, pivot_cols) = self.rref();
        pivot_cols
            .iter()
            .map(|&j| self.column(j).canonical())
            .collect()
    }

    /// Exact characteristic polynomial `det(xI - M)` of an integer matrix,
    /// by the Faddeev-LeVerrier recurrence.
    pub fn char_poly(&self) -> Result<IntPoly, ExactError> {
        if !self.is_square() {
            return Err(ExactError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        if !self.is_integral() {
            return Err(ExactError::NonIntegerEntries);
        }
        let n = self.rows;
        // coeffs[k] multiplies x^k; filled from the top down
        let mut coeffs = vec![BigRat::zero(); n + 1];
        coeffs[n] = BigRat::one();
        let mut m = self.clone();
        for k in 1..=n {
            let c = -m.trace() / BigRat::from_integer(BigInt::from(k as i64));
            coeffs[n - k] = c.clone();
            if k < n {
                let mut shifted = m;
                for i in 0..n {
                    let v = shifted.at(i, i) + &c;
                    shifted.set(i, i, v);
                }
                m = self.checked_mul(&shifted)?;
            }
        }
        let ints = coeffs
            .into_iter()
            .map(|c| {
                if c.is_integer() {
                    Ok(c.to_integer())
                } else {
                    Err(ExactError::NonIntegerEntries)
                }
            })
            .collect::<Result<Vec<_>, _>>()?;
        IntPoly::new(ints)
    }

    pub fn trace(&self) -> BigRat {
        (0..self.rows.min(self.cols))
            .map(|i| self.at(i, i).clone())
            .sum()
    }

    /// Entries as `f64`, row-major.
    pub fn to_f64(&self) -> Vec<f64> {
        self.data
            .iter()
            .map(|e| e.to_f64().unwrap_or(f64::NAN))
            .collect()
    }

    fn swap_rows(&mut self, r1: usize, r2: usize) {
        if r1 == r2 {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(r1 * self.cols + j, r2 * self.cols + j);
        }
    }

    /// Rational reduced row echelon form together with the pivot columns.
    fn rref(&self) -> (ExactMatrix, Vec<usize>) {
        let mut a = self.clone();
        let mut pivot_cols = Vec::new();
        let mut row = 0;
        for col in 0..a.cols {
            if row >= a.rows {
                break;
            }
            let Some(pivot_row) = (row..a.rows).find(|&r| !a.at(r, col).is_zero()) else {
                continue;
            };
            a.swap_rows(pivot_row, row);
            let pivot = a.at(row, col).clone();
            for j in 0..a.cols {
                a.set(row, j, a.at(row, j) / &pivot);
            }
            for r in 0..a.rows {
                if r == row || a.at(r, col).is_zero() {
                    continue;
                }
                let factor = a.at(r, col).clone();
                for j in 0..a.cols {
                    let v = a.at(r, j) - &factor * a.at(row, j);
                    a.set(r, j, v);
                }
            }
            pivot_cols.push(col);
            row += 1;
        }
        (a, pivot_cols)
    }

    /// Scales each row by the lcm of its denominators, returning the
    /// integer entries and the per-row scale factors.
    fn integerized(&self) -> (Vec<BigInt>, Vec<BigInt>) {
        let mut out = Vec::with_capacity(self.data.len());
        let mut scales = Vec::with_capacity(self.rows);
        for i in 0..self.rows {
            let mut lcm = BigInt::one();
            for j in 0..self.cols {
                lcm = lcm.lcm(self.at(i, j).denom());
            }
            for j in 0..self.cols {
                let e = self.at(i, j);
                out.push(e.numer() * (&lcm / e.denom()));
            }
            scales.push(lcm);
        }
        (out, scales)
    }
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ExactMatrix {}x{}", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.at(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.at(i, j).to_string()).collect();
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl Mul for &ExactMatrix {
    type Output = ExactMatrix;
    fn mul(self, rhs: &ExactMatrix) -> ExactMatrix {
        self.checked_mul(rhs).expect("matrix dimension mismatch")
    }
}

impl Add for &ExactMatrix {
    type Output = ExactMatrix;
    fn add(self, rhs: &ExactMatrix) -> ExactMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch");
        ExactMatrix::from_fn(self.rows, self.cols, |i, j| self.at(i, j) + rhs.at(i, j))
    }
}

impl Sub for &ExactMatrix {
    type Output = ExactMatrix;
    fn sub(self, rhs: &ExactMatrix) -> ExactMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch");
        ExactMatrix::from_fn(self.rows, self.cols, |i, j| self.at(i, j) - rhs.at(i, j))
    }
}

impl Neg for &ExactMatrix {
    type Output = ExactMatrix;
    fn neg(self) -> ExactMatrix {
        ExactMatrix::from_fn(self.rows, self.cols, |i, j| -self.at(i, j).clone())
    }
}

struct BareissResult {
    pivots: usize,
    sign: i8,
    last_pivot: BigInt,
}

/// Fraction-free Bareiss echelon reduction of an integer matrix given as a
/// flat row-major vector. Pivoting picks the first nonzero entry in column
/// order; row swaps flip the sign.
fn bareiss_echelon(mut data: Vec<BigInt>, rows: usize, cols: usize) -> BareissResult {
    let idx = |i: usize, j: usize| i * cols + j;
    let mut prev = BigInt::one();
    let mut sign: i8 = 1;
    let mut row = 0;
    let mut last_pivot = BigInt::one();
    for col in 0..cols {
        if row >= rows {
            break;
        }
        let Some(pivot_row) = (row..rows).find(|&r| !data[idx(r, col)].is_zero()) else {
            continue;
        };
        if pivot_row != row {
            for j in 0..cols {
                data.swap(idx(pivot_row, j), idx(row, j));
            }
            sign = -sign;
        }
        let pivot = data[idx(row, col)].clone();
        for r in row + 1..rows {
            let head = data[idx(r, col)].clone();
            for j in col + 1..cols {
                let value = (&data[idx(r, j)] * &pivot - &head * &data[idx(row, j)]) / &prev;
                data[idx(r, j)] = value;
            }
            data[idx(r, col)] = BigInt::zero();
        }
        prev = pivot.clone();
        last_pivot = pivot;
        row += 1;
    }
    BareissResult {
        pivots: row,
        sign,
        last_pivot,
    }
}

/// Dense vector of arbitrary-precision rationals.
#[derive(Clone, PartialEq, Eq)]
pub struct ExactVector {
    data: Vec<BigRat>,
}

impl ExactVector {
    pub fn new(data: Vec<BigRat>) -> Self {
        ExactVector { data }
    }

    pub fn zeros(n: usize) -> Self {
        ExactVector::new(vec![BigRat::zero(); n])
    }

    pub fn from_integers(entries: &[i64]) -> Self {
        ExactVector::new(
            entries
                .iter()
                .map(|&e| BigRat::from_integer(BigInt::from(e)))
                .collect(),
        )
    }

    pub fn from_bigints(entries: Vec<BigInt>) -> Self {
        ExactVector::new(entries.into_iter().map(BigRat::from_integer).collect())
    }

    pub fn len(&self) -> usize {
        self.data.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    pub fn at(&self, i: usize) -> &BigRat {
        &self.data[i]
    }

    pub fn entries(&self) -> &[BigRat] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|e| e.is_zero())
    }

    pub fn dot(&self, other: &ExactVector) -> BigRat {
        assert_eq!(self.len(), other.len(), "length mismatch");
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a * b)
            .sum()
    }

    pub fn scale(&self, factor: &BigRat) -> ExactVector {
        ExactVector::new(self.data.iter().map(|e| e * factor).collect())
    }

    pub fn neg(&self) -> ExactVector {
        ExactVector::new(self.data.iter().map(|e| -e.clone()).collect())
    }

    /// Canonical representative of the spanned line: denominators cleared,
    /// content divided out, first nonzero coordinate positive. The zero
    /// vector is returned unchanged.
    pub fn canonical(&self) -> ExactVector {
        if self.is_zero() {
            return self.clone();
        }
        let ints = primitive_integer_entries(&self.data);
        let flip = ints
            .iter()
            .find(|e| !e.is_zero())
            .map(|e| e.is_negative())
            .unwrap_or(false);
        let ints = if flip {
            ints.into_iter().map(|e| -e).collect()
        } else {
            ints
        };
        ExactVector::from_bigints(ints)
    }

    /// `true` when the two vectors span the same line (either may be zero
    /// only if both are).
    pub fn proportional_to(&self, other: &ExactVector) -> bool {
        if self.len() != other.len() {
            return false;
        }
        if self.is_zero() || other.is_zero() {
            return self.is_zero() && other.is_zero();
        }
        self.canonical() == other.canonical()
    }

    /// Entries as `BigInt` when all are integers.
    pub fn as_integers(&self) -> Option<Vec<BigInt>> {
        self.data
            .iter()
            .map(|e| e.is_integer().then(|| e.to_integer()))
            .collect()
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.data
            .iter()
            .map(|e| e.to_f64().unwrap_or(f64::NAN))
            .collect()
    }
}

/// Clears denominators and divides out the content, preserving signs.
pub(crate) fn primitive_integer_entries(entries: &[BigRat]) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for e in entries {
        lcm = lcm.lcm(e.denom());
    }
    let ints: Vec<BigInt> = entries.iter().map(|e| e.numer() * (&lcm / e.denom())).collect();
    let mut content = BigInt::zero();
    for e in &ints {
        content = content.gcd(e);
    }
    if content.is_zero() || content.is_one() {
        return ints;
    }
    ints.into_iter().map(|e| e / &content).collect()
}

impl fmt::Debug for ExactVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ExactVector{self}")
    }
}

impl fmt::Display for ExactVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.data.iter().map(|e| e.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{frac, rat};

    fn small(rows: &[Vec<i64>]) -> ExactMatrix {
        ExactMatrix::from_int_rows(rows)
    }

    /// Independent determinant oracle: cofactor expansion along row 0.
    fn det_cofactor(m: &ExactMatrix) -> BigRat {
        let n = m.rows();
        if n == 1 {
            return m.at(0, 0).clone();
        }
        let mut total = BigRat::zero();
        for j in 0..n {
            if m.at(0, j).is_zero() {
                continue;
            }
            let minor = ExactMatrix::from_fn(n - 1, n - 1, |r, c| {
                m.at(r + 1, if c < j { c } else { c + 1 }).clone()
            });
            let term = m.at(0, j) * &det_cofactor(&minor);
            if j % 2 == 0 {
                total = total + term;
            } else {
                total = total - term;
            }
        }
        total
    }

    #[test]
    fn identity_multiplication() {
        let m = small(&[vec![1, 2], vec![3, 4]]);
        let id = ExactMatrix::identity(2);
        assert_eq!(&id * &m, m);
        assert_eq!(&m * &id, m);
    }

    #[test]
    fn dimension_mismatch_is_an_error() {
        let m = small(&[vec![1, 2], vec![3, 4]]);
        let v = small(&[vec![1, 2, 3]]);
        assert!(matches!(
            m.checked_mul(&v),
            Err(ExactError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn inverse_roundtrip() {
        let m = small(&[vec![2, 1, 0], vec![0, 1, -1], vec![3, 0, 2]]);
        let inv = m.inverse().unwrap();
        assert!((&m * &inv).is_identity());
        assert!((&inv * &m).is_identity());
    }

    #[test]
    fn inverse_of_scalar() {
        // diag(2) as a 1x1 matrix inverts to diag(1/2)
        let m = small(&[vec![2]]);
        let inv = m.inverse().unwrap();
        assert_eq!(inv.at(0, 0), &frac(1, 2));
    }

    #[test]
    fn singular_matrix_has_no_inverse() {
        let m = small(&[vec![1, 2], vec![2, 4]]);
        assert_eq!(m.inverse().unwrap_err(), ExactError::Singular);
    }

    #[test]
    fn rank_and_kernel_dimensions() {
        assert_eq!(ExactMatrix::identity(6).rank(), 6);
        assert!(ExactMatrix::identity(6).kernel_basis().is_empty());

        let z = ExactMatrix::zeros(6, 6);
        assert_eq!(z.rank(), 0);
        let kernel = z.kernel_basis();
        assert_eq!(kernel.len(), 6);
        for (i, v) in kernel.iter().enumerate() {
            let mut expected = vec![0i64; 6];
            expected[i] = 1;
            assert_eq!(v, &ExactVector::from_integers(&expected));
        }
    }

    #[test]
    fn rank_plus_nullity_equals_cols() {
        let m = small(&[vec![1, 2, 3, 4], vec![2, 4, 6, 8], vec![0, 1, 0, 1]]);
        assert_eq!(m.rank() + m.kernel_basis().len(), m.cols());
        // kernel vectors actually lie in the kernel
        for v in m.kernel_basis() {
            assert!(m.mul_vector(&v).unwrap().is_zero());
        }
    }

    #[test]
    fn image_basis_spans_columns() {
        let m = small(&[vec![1, 2, 0], vec![2, 4, 0], vec![3, 6, 1]]);
        let image = m.image_basis();
        assert_eq!(image.len(), m.rank());
        assert_eq!(image[0], ExactVector::from_integers(&[1, 2, 3]));
    }

    #[test]
    fn determinant_matches_cofactor_oracle() {
        let cases = [
            small(&[vec![3]]),
            small(&[vec![2, 7], vec![1, -3]]),
            small(&[vec![0, 1, 2], vec![3, 0, 4], vec![5, 6, 0]]),
            small(&[
                vec![1, 2, 3, 4],
                vec![0, -1, 2, 0],
                vec![5, 0, 0, 2],
                vec![1, 1, 1, 1],
            ]),
        ];
        for m in &cases {
            assert_eq!(m.det().unwrap(), det_cofactor(m));
        }
    }

    #[test]
    fn determinant_of_rational_matrix() {
        let m = ExactMatrix::new(2, 2, vec![frac(1, 2), frac(1, 3), frac(1, 4), frac(1, 5)])
            .unwrap();
        assert_eq!(m.det().unwrap(), frac(1, 60));
        assert_eq!(m.det().unwrap(), det_cofactor(&m));
    }

    #[test]
    fn char_poly_of_identity() {
        // (x-1)^6 = x^6 - 6x^5 + 15x^4 - 20x^3 + 15x^2 - 6x + 1
        let p = ExactMatrix::identity(6).char_poly().unwrap();
        let expected = IntPoly::from_i64(&[1, -6, 15, -20, 15, -6, 1]).unwrap();
        assert_eq!(p, expected);
    }

    #[test]
    fn char_poly_rejects_rational_entries() {
        let m = ExactMatrix::new(1, 1, vec![frac(1, 2)]).unwrap();
        assert_eq!(m.char_poly().unwrap_err(), ExactError::NonIntegerEntries);
    }

    #[test]
    fn canonical_vector_normalization() {
        let v = ExactVector::new(vec![frac(-2, 3), frac(-4, 3), rat(-2)]);
        assert_eq!(v.canonical(), ExactVector::from_integers(&[1, 2, 3]));
        let zero = ExactVector::zeros(3);
        assert_eq!(zero.canonical(), zero);
    }

    #[test]
    fn proportionality() {
        let v = ExactVector::from_integers(&[2, -4, 6]);
        let w = ExactVector::from_integers(&[-1, 2, -3]);
        assert!(v.proportional_to(&w));
        assert!(!v.proportional_to(&ExactVector::from_integers(&[1, 2, 3])));
    }

    #[test]
    fn bilinear_pairing() {
        let m = small(&[vec![0, 1], vec![-1, 0]]);
        let x = ExactVector::from_integers(&[1, 0]);
        let y = ExactVector::from_integers(&[0, 1]);
        assert_eq!(m.bilinear(&x, &y).unwrap(), rat(1));
        assert_eq!(m.bilinear(&y, &x).unwrap(), rat(-1));
    }
}
