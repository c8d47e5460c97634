//! Dense matrices over `F_p`.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::PrimeField;

/// A dense row-major matrix over a prime field. Zero-sized shapes are legal.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Matrix {
    #[serde(skip)]
    field: PrimeField,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl Matrix {
    pub fn zeros(field: PrimeField, rows: usize, cols: usize) -> Self {
        Matrix {
            field,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    /// Builds a matrix from row-major residues; entries are reduced mod p.
    pub fn from_flat(field: PrimeField, rows: usize, cols: usize, data: Vec<u32>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {}x{} matrix",
                data.len(),
                rows,
                cols
            )));
        }
        let p = field.p();
        let data = data.into_iter().map(|x| x % p).collect();
        Ok(Matrix {
            field,
            rows,
            cols,
            data,
        })
    }

    /// Builds a matrix from signed integer rows. Panics on ragged input.
    pub fn from_rows<R: AsRef<[i64]>>(field: PrimeField, rows: &[R]) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut m = Self::zeros(field, nrows, ncols);
        for (i, r) in rows.iter().enumerate() {
            let r = r.as_ref();
            assert_eq!(r.len(), ncols, "ragged rows");
            for (j, &x) in r.iter().enumerate() {
                m.data[i * ncols + j] = field.from_i64(x);
            }
        }
        m
    }

    /// A single column vector.
    pub fn column_vector(field: PrimeField, entries: &[u32]) -> Self {
        Matrix::from_flat(field, entries.len(), 1, entries.to_vec()).expect("shape")
    }

    /// Builds a matrix whose columns are the given vectors, each of length `rows`.
    pub fn from_columns(field: PrimeField, rows: usize, columns: &[Vec<u32>]) -> Self {
        let mut m = Self::zeros(field, rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), rows);
            for (i, &x) in c.iter().enumerate() {
                m.data[i * m.cols + j] = x % field.p();
            }
        }
        m
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
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
    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }
    pub fn data(&self) -> &[u32] {
        &self.data
    }
    pub fn into_data(self) -> Vec<u32> {
        self.data
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.cols + j]
    }
    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u32) {
        self.data[i * self.cols + j] = v % self.field.p();
    }
    #[inline]
    pub fn row(&self, i: usize) -> &[u32] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }
    #[inline]
    pub(crate) fn row_mut(&mut self, i: usize) -> &mut [u32] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<u32> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn columns(&self) -> Vec<Vec<u32>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..self.cols).all(|j| self.get(i, j) == u32::from(i == j)))
    }

    fn check_field(&self, other: &Matrix) {
        assert_eq!(
            self.field, other.field,
            "matrices over different fields"
        );
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.data[i * self.cols + j];
            }
        }
        t
    }

    /// Matrix product. Panics on shape mismatch; zero entries of `self` are skipped.
    pub fn mul(&self, other: &Matrix) -> Matrix {
        self.check_field(other);
        assert_eq!(
            self.cols, other.rows,
            "cannot multiply {}x{} by {}x{}",
            self.rows, self.cols, other.rows, other.cols
        );
        let p = self.field.p() as u64;
        let n = other.cols;
        let mut out = Matrix::zeros(self.field, self.rows, n);
        if n == 0 {
            return out;
        }
        if p == 2 {
            for i in 0..self.rows {
                let (orow, _) = (i * n, ());
                for k in 0..self.cols {
                    if self.data[i * self.cols + k] != 0 {
                        let brow = &other.data[k * n..(k + 1) * n];
                        for (o, &b) in out.data[orow..orow + n].iter_mut().zip(brow) {
                            *o ^= b;
                        }
                    }
                }
            }
            return out;
        }
        let mut acc = vec![0u64; n];
        // keeps accumulators below 2^63 before reducing
        let max_terms = (u64::MAX / 2) / ((p - 1) * (p - 1)).max(1);
        for i in 0..self.rows {
            acc.iter_mut().for_each(|a| *a = 0);
            let mut pending = 0u64;
            for k in 0..self.cols {
                let a = self.data[i * self.cols + k] as u64;
                if a == 0 {
                    continue;
                }
                let brow = &other.data[k * n..(k + 1) * n];
                for (s, &b) in acc.iter_mut().zip(brow) {
                    *s += a * b as u64;
                }
                pending += 1;
                if pending >= max_terms {
                    acc.iter_mut().for_each(|s| *s %= p);
                    pending = 0;
                }
            }
            for (o, s) in out.data[i * n..(i + 1) * n].iter_mut().zip(&acc) {
                *o = (*s % p) as u32;
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(self.cols, v.len());
        let p = self.field.p() as u64;
        (0..self.rows)
            .map(|i| {
                let s = self
                    .row(i)
                    .iter()
                    .zip(v)
                    .fold(0u64, |s, (&a, &b)| (s + a as u64 * b as u64) % p);
                s as u32
            })
            .collect()
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        self.check_field(other);
        assert_eq!(self.shape(), other.shape(), "shape mismatch in add");
        let f = self.field;
        Matrix {
            field: f,
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(&a, &b)| f.add(a, b))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        self.check_field(other);
        assert_eq!(self.shape(), other.shape(), "shape mismatch in sub");
        let f = self.field;
        Matrix {
            field: f,
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(&a, &b)| f.sub(a, b))
                .collect(),
        }
    }

    pub fn scale(&self, c: u32) -> Matrix {
        let f = self.field;
        Matrix {
            field: f,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&a| f.mul(a, c % f.p())).collect(),
        }
    }

    /// `self += c * other`
    pub fn add_scaled_assign(&mut self, c: u32, other: &Matrix) {
        self.check_field(other);
        assert_eq!(self.shape(), other.shape());
        let f = self.field;
        if c % f.p() == 0 {
            return;
        }
        for (a, &b) in self.data.iter_mut().zip(&other.data) {
            if b != 0 {
                *a = f.add(*a, f.mul(c, b));
            }
        }
    }

    /// Kronecker product: `(a ⊗ b)[i*b.rows + k][j*b.cols + l] = a[i][j] * b[k][l]`.
    pub fn kron(&self, other: &Matrix) -> Matrix {
        self.check_field(other);
        let f = self.field;
        let (br, bc) = other.shape();
        let mut out = Matrix::zeros(f, self.rows * br, self.cols * bc);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a == 0 {
                    continue;
                }
                for k in 0..br {
                    for l in 0..bc {
                        let b = other.get(k, l);
                        if b != 0 {
                            out.data[(i * br + k) * out.cols + j * bc + l] = f.mul(a, b);
                        }
                    }
                }
            }
        }
        out
    }

    /// Horizontal concatenation. All blocks must share the row count `rows`.
    pub fn hstack(field: PrimeField, rows: usize, blocks: &[&Matrix]) -> Matrix {
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Matrix::zeros(field, rows, cols);
        let mut off = 0;
        for b in blocks {
            assert_eq!(b.rows, rows, "hstack row mismatch");
            for i in 0..rows {
                out.data[i * cols + off..i * cols + off + b.cols].copy_from_slice(b.row(i));
            }
            off += b.cols;
        }
        out
    }

    /// Vertical concatenation. All blocks must share the column count `cols`.
    pub fn vstack(field: PrimeField, cols: usize, blocks: &[&Matrix]) -> Matrix {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let mut data = Vec::with_capacity(rows * cols);
        for b in blocks {
            assert_eq!(b.cols, cols, "vstack column mismatch");
            data.extend_from_slice(&b.data);
        }
        Matrix {
            field,
            rows,
            cols,
            data,
        }
    }

    /// Block-diagonal matrix.
    pub fn block_diag(field: PrimeField, blocks: &[&Matrix]) -> Matrix {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Matrix::zeros(field, rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            out.set_block(r0, c0, b);
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, b: &Matrix) {
        assert!(r0 + b.rows <= self.rows && c0 + b.cols <= self.cols);
        for i in 0..b.rows {
            let dst = (r0 + i) * self.cols + c0;
            self.data[dst..dst + b.cols].copy_from_slice(b.row(i));
        }
    }

    /// `self[r0.., c0..] += c * b`
    pub fn add_scaled_block(&mut self, r0: usize, c0: usize, c: u32, b: &Matrix) {
        let f = self.field;
        for i in 0..b.rows {
            let src = b.row(i);
            let dst = &mut self.row_mut(r0 + i)[c0..c0 + b.cols];
            for (d, &x) in dst.iter_mut().zip(src) {
                if x != 0 {
                    *d = f.add(*d, f.mul(c, x));
                }
            }
        }
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Matrix {
        assert!(r0 + rows <= self.rows && c0 + cols <= self.cols);
        let mut out = Matrix::zeros(self.field, rows, cols);
        for i in 0..rows {
            let src = (r0 + i) * self.cols + c0;
            out.data[i * cols..(i + 1) * cols].copy_from_slice(&self.data[src..src + cols]);
        }
        out
    }

    pub fn select_rows(&self, idx: &[usize]) -> Matrix {
        let mut out = Matrix::zeros(self.field, idx.len(), self.cols);
        for (k, &i) in idx.iter().enumerate() {
            out.data[k * self.cols..(k + 1) * self.cols].copy_from_slice(self.row(i));
        }
        out
    }

    pub fn select_columns(&self, idx: &[usize]) -> Matrix {
        let mut out = Matrix::zeros(self.field, self.rows, idx.len());
        for i in 0..self.rows {
            for (k, &j) in idx.iter().enumerate() {
                out.data[i * idx.len() + k] = self.get(i, j);
            }
        }
        out
    }

    /// Row-major flattening as a column vector (`vec` with row-major order).
    pub fn flatten(&self) -> Vec<u32> {
        self.data.clone()
    }

    /// Inverse of the flattening.
    pub fn unflatten(field: PrimeField, rows: usize, cols: usize, v: &[u32]) -> Matrix {
        Matrix::from_flat(field, rows, cols, v.to_vec()).expect("shape")
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix[F_{}; {}x{}]", self.field.p(), self.rows, self.cols)?;
        for i in 0..self.rows.min(16) {
            write!(f, "\n  {:?}", &self.row(i)[..self.cols.min(32)])?;
        }
        Ok(())
    }
}
