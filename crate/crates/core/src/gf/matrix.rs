use std::fmt;

use super::field::Field;
use crate::error::{Error, Result};

/// In-place reduced row echelon form of a row-major `rows x cols` block.
///
/// Returns the pivot columns; the first `pivots.len()` rows hold the
/// nonzero rows of the RREF and the rest are zero.
pub fn rref_slice(f: Field, data: &mut [u8], rows: usize, cols: usize) -> Vec<usize> {
    debug_assert_eq!(data.len(), rows * cols);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| data[i * cols + c] != 0) else {
            continue;
        };
        if p != r {
            for j in c..cols {
                data.swap(p * cols + j, r * cols + j);
            }
        }
        let inv = f.inv(data[r * cols + c]);
        if inv != 1 {
            for j in c..cols {
                data[r * cols + j] = f.mul(data[r * cols + j], inv);
            }
        }
        for i in 0..rows {
            if i == r {
                continue;
            }
            let factor = data[i * cols + c];
            if factor == 0 {
                continue;
            }
            let neg = f.neg(factor);
            for j in c..cols {
                let v = data[r * cols + j];
                if v != 0 {
                    data[i * cols + j] = f.mul_add(data[i * cols + j], neg, v);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Rank by forward elimination only, stopping once `cap` is reached.
///
/// Returns `min(rank, cap)`. The block is clobbered.
pub fn rank_capped(f: Field, data: &mut [u8], rows: usize, cols: usize, cap: usize) -> usize {
    let mut r = 0;
    for c in 0..cols {
        if r == rows || r >= cap {
            break;
        }
        let Some(p) = (r..rows).find(|&i| data[i * cols + c] != 0) else {
            continue;
        };
        if p != r {
            for j in c..cols {
                data.swap(p * cols + j, r * cols + j);
            }
        }
        let inv = f.inv(data[r * cols + c]);
        for i in r + 1..rows {
            let factor = data[i * cols + c];
            if factor == 0 {
                continue;
            }
            let scale = f.neg(f.mul(factor, inv));
            for j in c..cols {
                let v = data[r * cols + j];
                if v != 0 {
                    data[i * cols + j] = f.mul_add(data[i * cols + j], scale, v);
                }
            }
        }
        r += 1;
    }
    r.min(cap)
}

/// Right kernel `{x : M x = 0}` of a row-major block, as basis rows of length `cols`.
///
/// The basis is the standard one read off the RREF (one vector per free column),
/// so it is already in RREF up to row order.
pub fn kernel_slice(f: Field, data: &mut [u8], rows: usize, cols: usize) -> Vec<Vec<u8>> {
    let pivots = rref_slice(f, data, rows, cols);
    let mut is_pivot = vec![false; cols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut out = Vec::with_capacity(cols - pivots.len());
    for free in (0..cols).filter(|&c| !is_pivot[c]) {
        let mut x = vec![0u8; cols];
        x[free] = 1;
        for (r, &p) in pivots.iter().enumerate() {
            x[p] = f.neg(data[r * cols + free]);
        }
        out.push(x);
    }
    out
}

/// Result of [`Matrix::rref`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub matrix: Matrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

/// Dense matrix over a prime field, row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<u8>,
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Matrix {
        Matrix {
            field,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    /// Builds from raw residues; entries must already lie in `[0, q)`.
    pub fn from_data(field: Field, rows: usize, cols: usize, data: Vec<u8>) -> Result<Matrix> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        if let Some(&bad) = data.iter().find(|&&x| x as u32 >= field.q()) {
            return Err(Error::InvalidArgument(format!(
                "entry {bad} not reduced mod {}",
                field.q()
            )));
        }
        Ok(Matrix {
            field,
            rows,
            cols,
            data,
        })
    }

    /// Builds from integer rows, reducing every entry mod `q`.
    pub fn from_rows<R: AsRef<[i64]>>(field: Field, rows: &[R]) -> Result<Matrix> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.as_ref().len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            let row = row.as_ref();
            if row.len() != c {
                return Err(Error::DimensionMismatch("ragged rows".into()));
            }
            data.extend(row.iter().map(|&x| field.reduce(x)));
        }
        Ok(Matrix {
            field,
            rows: r,
            cols: c,
            data,
        })
    }

    /// Stacks equal-length vectors as rows.
    pub fn from_vectors(field: Field, cols: usize, vectors: &[Vec<u8>]) -> Matrix {
        let mut data = Vec::with_capacity(vectors.len() * cols);
        for v in vectors {
            assert_eq!(v.len(), cols, "vector length");
            data.extend_from_slice(v);
        }
        Matrix {
            field,
            rows: vectors.len(),
            cols,
            data,
        }
    }

    #[inline]
    pub fn field(&self) -> Field {
        self.field
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn data(&self) -> &[u8] {
        &self.data
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u8 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u8) {
        debug_assert!((v as u32) < self.field.q());
        self.data[i * self.cols + j] = v;
    }

    #[inline]
    pub fn row(&self, i: usize) -> &[u8] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vectors(&self) -> Vec<Vec<u8>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Vec<u8> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn to_rows_i64(&self) -> Vec<Vec<i64>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(|&x| x as i64).collect())
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j);
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product shape");
        assert_eq!(self.field, other.field, "matrix product field");
        let f = self.field;
        let mut out = Matrix::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let idx = i * other.cols + j;
                    out.data[idx] = f.mul_add(out.data[idx], a, other.get(k, j));
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[u8]) -> Vec<u8> {
        assert_eq!(self.cols, v.len());
        let f = self.field;
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(0u8, |acc, (&a, &b)| f.mul_add(acc, a, b))
            })
            .collect()
    }

    /// `x^t M y`.
    pub fn bilinear(&self, x: &[u8], y: &[u8]) -> u8 {
        assert_eq!(self.rows, x.len());
        assert_eq!(self.cols, y.len());
        let f = self.field;
        let mut acc = 0u8;
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            let mut r = 0u8;
            for (j, &yj) in y.iter().enumerate() {
                r = f.mul_add(r, self.get(i, j), yj);
            }
            acc = f.mul_add(acc, xi, r);
        }
        acc
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = self.field;
        Matrix {
            field: f,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(&a, &b)| f.add(a, b)).collect(),
        }
    }

    pub fn scale(&self, s: u8) -> Matrix {
        let f = self.field;
        Matrix {
            field: f,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&a| f.mul(a, s)).collect(),
        }
    }

    /// `self += s * other`
    pub fn axpy(&mut self, s: u8, other: &Matrix) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        if s == 0 {
            return;
        }
        let f = self.field;
        for (a, &b) in self.data.iter_mut().zip(&other.data) {
            *a = f.mul_add(*a, s, b);
        }
    }

    /// Linear combination `sum_i coeffs[i] * mats[i]`.
    pub fn combination(field: Field, rows: usize, cols: usize, coeffs: &[u8], mats: &[Matrix]) -> Matrix {
        assert_eq!(coeffs.len(), mats.len());
        let mut out = Matrix::zeros(field, rows, cols);
        for (&c, m) in coeffs.iter().zip(mats) {
            out.axpy(c, m);
        }
        out
    }

    /// Submatrix `rows r0..r1, cols c0..c1`.
    pub fn block(&self, r0: usize, r1: usize, c0: usize, c1: usize) -> Matrix {
        let mut out = Matrix::zeros(self.field, r1 - r0, c1 - c0);
        for i in r0..r1 {
            for j in c0..c1 {
                out.set(i - r0, j - c0, self.get(i, j));
            }
        }
        out
    }

    /// Zero diagonal and `A^t = -A`. Over odd characteristic this is the
    /// same as `v^t A v = 0` for all `v`.
    pub fn is_alternating(&self) -> bool {
        if !self.is_square() {
            return false;
        }
        let f = self.field;
        (0..self.rows)
            .all(|i| self.get(i, i) == 0 && (i + 1..self.cols).all(|j| self.get(i, j) == f.neg(self.get(j, i))))
    }

    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let pivots = rref_slice(self.field, &mut m.data, self.rows, self.cols);
        Rref {
            rank: pivots.len(),
            matrix: m,
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        let mut d = self.data.clone();
        rank_capped(self.field, &mut d, self.rows, self.cols, usize::MAX)
    }

    /// Basis rows of `{x : M x = 0}`.
    pub fn kernel(&self) -> Vec<Vec<u8>> {
        let mut d = self.data.clone();
        kernel_slice(self.field, &mut d, self.rows, self.cols)
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        if n == 0 {
            return Some(self.clone());
        }
        let mut aug = Matrix::zeros(self.field, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j));
            }
            aug.set(i, n + i, 1);
        }
        let pivots = rref_slice(self.field, &mut aug.data, n, 2 * n);
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(aug.block(0, n, n, 2 * n))
    }

    /// Row-major flattening.
    pub fn vectorize(&self) -> Vec<u8> {
        self.data.clone()
    }

    /// Strict upper triangle of a square matrix, row-major. For alternating
    /// matrices this determines the whole matrix.
    pub fn upper_entries(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(self.rows * self.rows.saturating_sub(1) / 2);
        for i in 0..self.rows {
            for j in i + 1..self.cols {
                out.push(self.get(i, j));
            }
        }
        out
    }

    /// Inverse of [`Matrix::upper_entries`].
    pub fn alternating_from_upper(field: Field, n: usize, upper: &[u8]) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        let mut k = 0;
        for i in 0..n {
            for j in i + 1..n {
                m.set(i, j, upper[k]);
                m.set(j, i, field.neg(upper[k]));
                k += 1;
            }
        }
        m
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.to_rows_i64())
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", row.join(" "))?;
        }
        Ok(())
    }
}
