// SPDX-License-Identifier: Apache-2.0

//! Exact linear algebra over ℚ.
//!
//! Everything here is exact: there is no floating point and no tolerance.
//! Vectors are plain `Vec<Rational>`; matrices are dense and row-major, with
//! the column convention that column `j` holds the image of the `j`-th basis
//! vector. Tensor products of based spaces index `e_i ⊗ e_j` as
//! `i * dim_b + j` (left factor major), and [`Matrix::kron`] follows the same
//! convention.

mod matrix;
mod rational;
mod sparse;
mod subspace;

pub use matrix::Matrix;
pub use rational::Rational;
pub use sparse::{EchelonReducer, QuotientSpace, SparseVec};
pub use subspace::Subspace;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("ragged matrix rows: row {row} has {found} entries, expected {expected}")]
    Ragged { row: usize, expected: usize, found: usize },
    #[error("cannot parse rational from {0:?}")]
    Parse(String),
    #[error("matrix is singular")]
    Singular,
}

pub type Result<T> = std::result::Result<T, LinalgError>;

/// Dense vector helpers shared across the crate and its users.
pub mod vec {
    use super::Rational;

    pub fn zeros(n: usize) -> Vec<Rational> {
        vec![Rational::zero(); n]
    }

    pub fn unit(n: usize, i: usize) -> Vec<Rational> {
        let mut v = zeros(n);
        v[i] = Rational::one();
        v
    }

    pub fn is_zero(v: &[Rational]) -> bool {
        v.iter().all(Rational::is_zero)
    }

    pub fn add(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        debug_assert_eq!(a.len(), b.len());
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    }

    pub fn sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        debug_assert_eq!(a.len(), b.len());
        a.iter().zip(b).map(|(x, y)| x - y).collect()
    }

    pub fn scale(c: &Rational, a: &[Rational]) -> Vec<Rational> {
        a.iter().map(|x| c * x).collect()
    }

    /// `acc += c * a`
    pub fn axpy(acc: &mut [Rational], c: &Rational, a: &[Rational]) {
        if c.is_zero() {
            return;
        }
        for (x, y) in acc.iter_mut().zip(a) {
            if !y.is_zero() {
                *x += c * y;
            }
        }
    }

    /// Coefficients of `a ⊗ b` under the left-major index convention.
    pub fn tensor(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        let mut out = Vec::with_capacity(a.len() * b.len());
        for x in a {
            for y in b {
                out.push(x * y);
            }
        }
        out
    }

    pub fn from_ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| Rational::from_int(x)).collect()
    }
}
