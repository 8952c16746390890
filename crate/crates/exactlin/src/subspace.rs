// SPDX-License-Identifier: Apache-2.0

use crate::{vec, LinalgError, Matrix, Rational, Result};

/// A subspace of ℚⁿ.
///
/// Two views are kept: the basis as supplied (independent vectors in the
/// caller's order, dependent generators dropped) and its reduced echelon
/// form. Membership coordinates are reported against the supplied basis;
/// equality compares echelon forms.
#[derive(Clone, Debug)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vec<Rational>>,
    echelon: Vec<Vec<Rational>>,
    pivots: Vec<usize>,
    /// `echelon[r] = Σ_i transform[r][i] · basis[i]`
    transform: Vec<Vec<Rational>>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: vec![], echelon: vec![], pivots: vec![], transform: vec![] }
    }

    pub fn full(ambient: usize) -> Self {
        Self::from_independent_unchecked(ambient, (0..ambient).map(|i| vec::unit(ambient, i)).collect())
    }

    /// Span of the given generators.
    pub fn span(ambient: usize, generators: &[Vec<Rational>]) -> Result<Self> {
        let mut s = Self::zero(ambient);
        for g in generators {
            s.insert(g.clone())?;
        }
        Ok(s)
    }

    pub(crate) fn from_independent_unchecked(ambient: usize, basis: Vec<Vec<Rational>>) -> Self {
        let mut s = Self::zero(ambient);
        for b in basis {
            let added = s.insert(b).expect("vectors of ambient length");
            debug_assert!(added);
        }
        s
    }

    /// Adds `v` to the basis if it is not already in the span; returns
    /// whether it was added.
    pub fn insert(&mut self, v: Vec<Rational>) -> Result<bool> {
        self.check_len(&v)?;
        let k = self.basis.len();
        // Reduce v against the echelon rows, tracking the combination of basis
        // vectors that the residue represents.
        let mut res = v.clone();
        let mut comb = vec::zeros(k + 1);
        comb[k] = Rational::one();
        for (row, &p) in self.pivots.iter().enumerate() {
            let c = res[p].clone();
            if !c.is_zero() {
                vec::axpy(&mut res, &-&c, &self.echelon[row]);
                for (x, t) in comb.iter_mut().zip(&self.transform[row]) {
                    if !t.is_zero() {
                        *x -= &c * t;
                    }
                }
            }
        }
        let Some(p) = res.iter().position(|x| !x.is_zero()) else {
            return Ok(false);
        };
        let inv = res[p].recip().expect("nonzero");
        let res = vec::scale(&inv, &res);
        let comb = vec::scale(&inv, &comb);
        for t in &mut self.transform {
            t.push(Rational::zero());
        }
        // Clear column p from existing rows.
        for row in 0..self.echelon.len() {
            let c = self.echelon[row][p].clone();
            if !c.is_zero() {
                vec::axpy(&mut self.echelon[row], &-&c, &res);
                vec::axpy(&mut self.transform[row], &-&c, &comb);
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.echelon.insert(at, res);
        self.transform.insert(at, comb);
        self.basis.push(v);
        Ok(true)
    }

    fn check_len(&self, v: &[Rational]) -> Result<()> {
        if v.len() != self.ambient {
            return Err(LinalgError::DimensionMismatch { expected: self.ambient, found: v.len() });
        }
        Ok(())
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Rational>] {
        &self.basis
    }

    /// Reduced echelon basis with strictly increasing pivots.
    pub fn echelon_basis(&self) -> &[Vec<Rational>] {
        &self.echelon
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates of `v` with respect to [`Subspace::basis`], or `None` if
    /// `v` is not in the subspace.
    pub fn solve_membership(&self, v: &[Rational]) -> Result<Option<Vec<Rational>>> {
        self.check_len(v)?;
        let mut res = v.to_vec();
        let mut coords = vec::zeros(self.basis.len());
        for (row, &p) in self.pivots.iter().enumerate() {
            let c = res[p].clone();
            if !c.is_zero() {
                vec::axpy(&mut res, &-&c, &self.echelon[row]);
                vec::axpy(&mut coords, &c, &self.transform[row]);
            }
        }
        Ok(vec::is_zero(&res).then_some(coords))
    }

    pub fn contains(&self, v: &[Rational]) -> Result<bool> {
        Ok(self.solve_membership(v)?.is_some())
    }

    pub fn contains_subspace(&self, other: &Subspace) -> Result<bool> {
        for b in &other.basis {
            if !self.contains(b)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Linear combination `Σ coords[i] · basis[i]`.
    pub fn combine(&self, coords: &[Rational]) -> Vec<Rational> {
        let mut out = vec::zeros(self.ambient);
        for (c, b) in coords.iter().zip(&self.basis) {
            vec::axpy(&mut out, c, b);
        }
        out
    }

    /// Matrix whose columns are the basis vectors (inclusion map).
    pub fn inclusion(&self) -> Matrix {
        Matrix::from_columns(self.ambient, &self.basis).expect("basis vectors have ambient length")
    }
}

impl PartialEq for Subspace {
    fn eq(&self, other: &Self) -> bool {
        self.ambient == other.ambient && self.echelon == other.echelon
    }
}

impl Eq for Subspace {}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(x: &[i64]) -> Vec<Rational> {
        vec::from_ints(x)
    }

    #[test]
    fn membership_examples() {
        let s = Subspace::span(2, &[v(&[1, 0])]).unwrap();
        assert_eq!(s.solve_membership(&v(&[3, 0])).unwrap(), Some(v(&[3])));
        assert_eq!(s.solve_membership(&v(&[0, 1])).unwrap(), None);
        // 2×2 solve: a(1,1) + b(1,-1) = (2,0) gives a = b = 1.
        let t = Subspace::span(2, &[v(&[1, 1]), v(&[1, -1])]).unwrap();
        assert_eq!(t.solve_membership(&v(&[2, 0])).unwrap(), Some(v(&[1, 1])));
    }

    #[test]
    fn membership_dimension_mismatch() {
        let s = Subspace::span(2, &[v(&[1, 0])]).unwrap();
        assert!(matches!(
            s.solve_membership(&v(&[1, 0, 0])),
            Err(LinalgError::DimensionMismatch { expected: 2, found: 3 })
        ));
    }

    #[test]
    fn dependent_generators_are_dropped() {
        let s = Subspace::span(3, &[v(&[1, 2, 3]), v(&[2, 4, 6]), v(&[0, 1, 1])]).unwrap();
        assert_eq!(s.dim(), 2);
        assert_eq!(s.basis()[1], v(&[0, 1, 1]));
        let coords = s.solve_membership(&v(&[1, 3, 4])).unwrap().unwrap();
        assert_eq!(s.combine(&coords), v(&[1, 3, 4]));
    }

    #[test]
    fn echelon_pivots_increase() {
        let s = Subspace::span(3, &[v(&[0, 0, 1]), v(&[0, 1, 1]), v(&[1, 1, 1])]).unwrap();
        assert_eq!(s.pivots(), &[0, 1, 2]);
        assert_eq!(s, Subspace::full(3));
    }
}
