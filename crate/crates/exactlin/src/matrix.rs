// SPDX-License-Identifier: Apache-2.0

use std::fmt;

use crate::{vec, LinalgError, Rational, Result, Subspace};

/// Dense row-major matrix over ℚ.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Rational::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let ncols = rows.first().map_or(0, Vec::len);
        let nrows = rows.len();
        let mut data = Vec::with_capacity(nrows * ncols);
        for (r, row) in rows.into_iter().enumerate() {
            if row.len() != ncols {
                return Err(LinalgError::Ragged { row: r, expected: ncols, found: row.len() });
            }
            data.extend(row);
        }
        Ok(Matrix { rows: nrows, cols: ncols, data })
    }

    /// Builds a `rows × cols` matrix; an empty row list with `cols > 0`
    /// is allowed, unlike [`Matrix::from_rows`].
    pub fn from_row_vecs(cols: usize, rows: &[Vec<Rational>]) -> Result<Self> {
        let mut m = Self::zeros(rows.len(), cols);
        for (r, row) in rows.iter().enumerate() {
            if row.len() != cols {
                return Err(LinalgError::Ragged { row: r, expected: cols, found: row.len() });
            }
            m.data[r * cols..(r + 1) * cols].clone_from_slice(row);
        }
        Ok(m)
    }

    /// Matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(rows: usize, columns: &[Vec<Rational>]) -> Result<Self> {
        let mut m = Self::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            if col.len() != rows {
                return Err(LinalgError::DimensionMismatch { expected: rows, found: col.len() });
            }
            for (i, x) in col.iter().enumerate() {
                m.data[i * m.cols + j] = x.clone();
            }
        }
        Ok(m)
    }

    /// Convenience for tests and hard-coded tables. Panics on ragged input.
    pub fn from_ints(rows: &[&[i64]]) -> Self {
        Self::from_rows(rows.iter().map(|r| vec::from_ints(r)).collect())
            .expect("ragged integer matrix")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rational) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Rational> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<Rational>> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    pub fn row_vecs(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Rational::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.get(r, c).clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(LinalgError::DimensionMismatch { expected: self.cols, found: other.rows });
        }
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        if v.len() != self.cols {
            return Err(LinalgError::DimensionMismatch { expected: self.cols, found: v.len() });
        }
        let mut out = vec::zeros(self.rows);
        for (c, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (r, o) in out.iter_mut().enumerate() {
                let a = self.get(r, c);
                if !a.is_zero() {
                    *o += a * x;
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        self.zip_with(other, |a, b| a - b)
    }

    fn zip_with(&self, other: &Matrix, f: impl Fn(&Rational, &Rational) -> Rational) -> Result<Matrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(LinalgError::DimensionMismatch {
                expected: self.rows * self.cols,
                found: other.rows * other.cols,
            });
        }
        let data = self.data.iter().zip(&other.data).map(|(a, b)| f(a, b)).collect();
        Ok(Matrix { rows: self.rows, cols: self.cols, data })
    }

    pub fn scale(&self, c: &Rational) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| c * x).collect() }
    }

    /// Kronecker product; entry `((i·p + k), (j·q + l))` is `a[i][j]·b[k][l]`
    /// where `b` is `p × q`.
    pub fn kron(&self, other: &Matrix) -> Matrix {
        let (p, q) = (other.rows, other.cols);
        let mut out = Matrix::zeros(self.rows * p, self.cols * q);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..p {
                    for l in 0..q {
                        let b = other.get(k, l);
                        if !b.is_zero() {
                            out.set(i * p + k, j * q + l, a * b);
                        }
                    }
                }
            }
        }
        out
    }

    /// Reduced row echelon form together with the pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.rref_in_place(self.cols);
        (m, pivots)
    }

    /// Row-reduces in place, choosing pivots only among the first
    /// `pivot_cols` columns. Returns the pivot columns.
    pub(crate) fn rref_in_place(&mut self, pivot_cols: usize) -> Vec<usize> {
        let (rows, cols) = (self.rows, self.cols);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..pivot_cols {
            if r == rows {
                break;
            }
            let Some(p) = (r..rows).find(|&i| !self.get(i, c).is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..cols {
                    self.data.swap(p * cols + j, r * cols + j);
                }
            }
            let inv = self.get(r, c).recip().expect("nonzero pivot");
            for j in c..cols {
                let x = &self.data[r * cols + j] * &inv;
                self.data[r * cols + j] = x;
            }
            let pivot_row: Vec<Rational> = self.row(r).to_vec();
            for i in 0..rows {
                if i == r {
                    continue;
                }
                let f = self.get(i, c).clone();
                if f.is_zero() {
                    continue;
                }
                for (j, pj) in pivot_row.iter().enumerate().skip(c) {
                    if !pj.is_zero() {
                        let x = &self.data[i * cols + j] - &(&f * pj);
                        self.data[i * cols + j] = x;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// The null space `{v : M v = 0}`.
    pub fn kernel_basis(&self) -> Subspace {
        Subspace::from_independent_unchecked(self.cols, self.kernel_vectors())
    }

    /// The standard null-space vectors: one per free column, with a 1 in that
    /// column and zeros in the other free columns.
    pub fn kernel_vectors(&self) -> Vec<Vec<Rational>> {
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut out = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec::zeros(self.cols);
            v[free] = Rational::one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -r.get(row, free);
            }
            out.push(v);
        }
        out
    }

    /// Span of the columns (the image of the map).
    pub fn column_space(&self) -> Subspace {
        Subspace::span(self.rows, &self.columns()).expect("columns have matching length")
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, Rational::one());
        }
        let pivots = aug.rref_in_place(n);
        if pivots.len() != n {
            return None;
        }
        let mut inv = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, aug.get(i, n + j).clone());
            }
        }
        Some(inv)
    }

    /// Some solution `x` of `M x = b`, or `None` if the system is inconsistent.
    pub fn solve(&self, b: &[Rational]) -> Result<Option<Vec<Rational>>> {
        if b.len() != self.rows {
            return Err(LinalgError::DimensionMismatch { expected: self.rows, found: b.len() });
        }
        let mut aug = Matrix::zeros(self.rows, self.cols + 1);
        for (i, bi) in b.iter().enumerate() {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, self.cols, bi.clone());
        }
        let pivots = aug.rref_in_place(self.cols);
        for i in pivots.len()..self.rows {
            if !aug.get(i, self.cols).is_zero() {
                return Ok(None);
            }
        }
        let mut x = vec::zeros(self.cols);
        for (i, &p) in pivots.iter().enumerate() {
            x[p] = aug.get(i, self.cols).clone();
        }
        Ok(Some(x))
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{:?}", self.row(r))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from_int(n)
    }

    #[test]
    fn rref_rank_one() {
        let (r, p) = Matrix::from_ints(&[&[2, 4], &[1, 2]]).rref();
        assert_eq!(r, Matrix::from_ints(&[&[1, 2], &[0, 0]]));
        assert_eq!(p, vec![0]);
    }

    #[test]
    fn rref_identity() {
        let (r, p) = Matrix::identity(3).rref();
        assert_eq!(r, Matrix::identity(3));
        assert_eq!(p, vec![0, 1, 2]);
    }

    #[test]
    fn rref_swap() {
        // Hand reduction: swap the rows, already reduced.
        let (r, p) = Matrix::from_ints(&[&[0, 1], &[1, 0]]).rref();
        assert_eq!(r, Matrix::identity(2));
        assert_eq!(p, vec![0, 1]);
    }

    #[test]
    fn kernels() {
        assert_eq!(Matrix::zeros(2, 2).kernel_basis(), Subspace::full(2));
        assert_eq!(Matrix::identity(2).kernel_basis(), Subspace::zero(2));
        let k = Matrix::from_ints(&[&[1, 1]]).kernel_basis();
        // Direct solve: x + y = 0.
        assert_eq!(k, Subspace::span(2, &[vec![q(1), q(-1)]]).unwrap());
    }

    #[test]
    fn kron_examples() {
        assert_eq!(Matrix::identity(2).kron(&Matrix::identity(3)), Matrix::identity(6));
        let a = Matrix::from_ints(&[&[2]]);
        let b = Matrix::from_ints(&[&[0, 1], &[1, 0]]);
        assert_eq!(a.kron(&b), Matrix::from_ints(&[&[0, 2], &[2, 0]]));
    }

    #[test]
    fn kron_matches_tensor_index_convention() {
        let a = Matrix::from_ints(&[&[1, 2], &[3, 4]]);
        let b = Matrix::from_ints(&[&[0, 5, 1], &[6, 7, 2]]);
        let v = vec::from_ints(&[1, -1]);
        let w = vec::from_ints(&[2, 0, 3]);
        let lhs = a.kron(&b).mul_vec(&vec::tensor(&v, &w)).unwrap();
        let rhs = vec::tensor(&a.mul_vec(&v).unwrap(), &b.mul_vec(&w).unwrap());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn inverse_and_solve() {
        let m = Matrix::from_ints(&[&[2, 1], &[1, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv).unwrap(), Matrix::identity(2));
        assert!(Matrix::from_ints(&[&[1, 2], &[2, 4]]).inverse().is_none());
        let x = m.solve(&vec::from_ints(&[3, 2])).unwrap().unwrap();
        assert_eq!(x, vec::from_ints(&[1, 1]));
        let sing = Matrix::from_ints(&[&[1, 2], &[2, 4]]);
        assert_eq!(sing.solve(&vec::from_ints(&[1, 0])).unwrap(), None);
        assert!(m.solve(&vec::from_ints(&[1])).is_err());
    }

    #[test]
    fn mul_shape_errors() {
        let a = Matrix::zeros(2, 3);
        assert!(a.mul(&Matrix::zeros(2, 2)).is_err());
        assert!(a.mul_vec(&vec::zeros(2)).is_err());
    }
}
