// SPDX-License-Identifier: Apache-2.0

//! Sparse vectors and incremental echelon reduction.
//!
//! The quotient computations in the upper layers work in spaces with tens of
//! thousands of coordinates (words in a tensor algebra), almost all of which
//! are zero in any given relation. Those reductions go through here; the
//! dense [`crate::Matrix`] is used everywhere else.
//!
//! Rows are kept with their *largest* column as pivot, normalised so that the
//! pivot coefficient is 1. With columns ordered so that larger index means
//! "more complicated", normal forms are expressed in the smallest columns
//! possible.

use std::collections::{BTreeMap, HashMap};

use crate::{vec, LinalgError, Rational, Result};

/// Sorted `(index, nonzero coefficient)` pairs.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SparseVec {
    entries: Vec<(usize, Rational)>,
}

impl SparseVec {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn unit(i: usize) -> Self {
        SparseVec { entries: vec![(i, Rational::one())] }
    }

    pub fn from_dense(v: &[Rational]) -> Self {
        SparseVec {
            entries: v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, x)| (i, x.clone())).collect(),
        }
    }

    /// Builds from unsorted terms, summing duplicates and dropping zeros.
    pub fn from_terms(terms: impl IntoIterator<Item = (usize, Rational)>) -> Self {
        let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
        for (i, c) in terms {
            if c.is_zero() {
                continue;
            }
            *acc.entry(i).or_default() += c;
        }
        Self::from_map(acc)
    }

    pub fn from_map(map: BTreeMap<usize, Rational>) -> Self {
        SparseVec { entries: map.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }

    pub fn to_dense(&self, n: usize) -> Vec<Rational> {
        let mut v = vec::zeros(n);
        for (i, c) in &self.entries {
            v[*i] = c.clone();
        }
        v
    }

    pub fn iter(&self) -> impl Iterator<Item = &(usize, Rational)> {
        self.entries.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn leading(&self) -> Option<&(usize, Rational)> {
        self.entries.last()
    }

    pub fn get(&self, i: usize) -> Rational {
        match self.entries.binary_search_by_key(&i, |(j, _)| *j) {
            Ok(k) => self.entries[k].1.clone(),
            Err(_) => Rational::zero(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::new();
        }
        SparseVec { entries: self.entries.iter().map(|(i, x)| (*i, c * x)).collect() }
    }

    pub fn add_scaled(&self, c: &Rational, other: &SparseVec) -> Self {
        Self::from_terms(self.entries.iter().cloned().chain(other.entries.iter().map(|(i, x)| (*i, c * x))))
    }

    pub fn sub(&self, other: &SparseVec) -> Self {
        self.add_scaled(&Rational::from_int(-1), other)
    }

    pub fn max_index(&self) -> Option<usize> {
        self.entries.last().map(|(i, _)| *i)
    }
}

impl FromIterator<(usize, Rational)> for SparseVec {
    fn from_iter<T: IntoIterator<Item = (usize, Rational)>>(iter: T) -> Self {
        Self::from_terms(iter)
    }
}

/// Incrementally maintained echelon basis of a subspace, pivoting on the
/// largest column.
#[derive(Clone, Debug, Default)]
pub struct EchelonReducer {
    /// pivot column → row with coefficient 1 at the pivot (stored last).
    rows: HashMap<usize, SparseVec>,
}

impl EchelonReducer {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.rows.contains_key(&col)
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }

    pub fn row(&self, pivot: usize) -> Option<&SparseVec> {
        self.rows.get(&pivot)
    }

    /// Full normal form: the unique representative of `v + span` supported
    /// on non-pivot columns.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut acc: BTreeMap<usize, Rational> = v.entries.iter().cloned().collect();
        let mut out = Vec::new();
        while let Some((col, c)) = acc.pop_last() {
            if c.is_zero() {
                continue;
            }
            match self.rows.get(&col) {
                Some(row) => {
                    for (i, x) in &row.entries[..row.entries.len() - 1] {
                        let e = acc.entry(*i).or_default();
                        *e -= &c * x;
                    }
                }
                None => out.push((col, c)),
            }
        }
        out.reverse();
        SparseVec { entries: out }
    }

    /// Adds `v` to the spanned subspace. Returns the new pivot, or `None`
    /// when `v` was already in the span.
    pub fn insert(&mut self, v: &SparseVec) -> Option<usize> {
        let r = self.reduce(v);
        let (p, lead) = r.leading()?.clone();
        let inv = lead.recip().expect("nonzero leading coefficient");
        self.rows.insert(p, r.scale(&inv));
        Some(p)
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_zero()
    }
}

/// `ℚⁿ / R` for a subspace `R` held by an [`EchelonReducer`]. The quotient
/// basis is the set of non-pivot ("standard") columns in increasing order.
#[derive(Clone, Debug)]
pub struct QuotientSpace {
    ambient: usize,
    reducer: EchelonReducer,
    standard: Vec<usize>,
    position: HashMap<usize, usize>,
}

impl QuotientSpace {
    pub fn new(ambient: usize, reducer: EchelonReducer) -> Self {
        let standard: Vec<usize> = (0..ambient).filter(|c| !reducer.is_pivot(*c)).collect();
        let position = standard.iter().enumerate().map(|(k, &c)| (c, k)).collect();
        QuotientSpace { ambient, reducer, standard, position }
    }

    /// Quotient of `ℚⁿ` by the span of `relations`.
    pub fn from_relations<'a>(ambient: usize, relations: impl IntoIterator<Item = &'a SparseVec>) -> Self {
        let mut red = EchelonReducer::new();
        for r in relations {
            red.insert(r);
        }
        Self::new(ambient, red)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.standard.len()
    }

    /// Ambient columns that form the quotient basis.
    pub fn standard(&self) -> &[usize] {
        &self.standard
    }

    pub fn reducer(&self) -> &EchelonReducer {
        &self.reducer
    }

    pub fn project_sparse(&self, v: &SparseVec) -> Result<Vec<Rational>> {
        if let Some(m) = v.max_index() {
            if m >= self.ambient {
                return Err(LinalgError::DimensionMismatch { expected: self.ambient, found: m + 1 });
            }
        }
        let nf = self.reducer.reduce(v);
        let mut out = vec::zeros(self.dim());
        for (c, x) in nf.iter() {
            out[self.position[c]] = x.clone();
        }
        Ok(out)
    }

    pub fn project(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        if v.len() != self.ambient {
            return Err(LinalgError::DimensionMismatch { expected: self.ambient, found: v.len() });
        }
        self.project_sparse(&SparseVec::from_dense(v))
    }

    /// Canonical representative of a quotient vector.
    pub fn lift(&self, coords: &[Rational]) -> SparseVec {
        coords
            .iter()
            .zip(&self.standard)
            .filter(|(x, _)| !x.is_zero())
            .map(|(x, &c)| (c, x.clone()))
            .collect()
    }

    pub fn is_zero_class(&self, v: &SparseVec) -> bool {
        self.reducer.contains(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sv(terms: &[(usize, i64)]) -> SparseVec {
        terms.iter().map(|&(i, c)| (i, Rational::from_int(c))).collect()
    }

    #[test]
    fn reduction_prefers_small_columns() {
        let mut red = EchelonReducer::new();
        // e2 = e0 + e1, e1 = 2 e0
        assert_eq!(red.insert(&sv(&[(2, 1), (0, -1), (1, -1)])), Some(2));
        assert_eq!(red.insert(&sv(&[(1, 1), (0, -2)])), Some(1));
        assert_eq!(red.reduce(&sv(&[(2, 1)])), sv(&[(0, 3)]));
        assert_eq!(red.insert(&sv(&[(2, 1), (0, -3)])), None);
        assert_eq!(red.rank(), 2);
    }

    #[test]
    fn quotient_projection_and_lift() {
        let rels = [sv(&[(1, 1), (0, -1)]), sv(&[(3, 1)])];
        let q = QuotientSpace::from_relations(4, rels.iter());
        assert_eq!(q.standard(), &[0, 2]);
        assert_eq!(q.project(&vec::from_ints(&[1, 1, 5, 7])).unwrap(), vec::from_ints(&[2, 5]));
        let back = q.lift(&vec::from_ints(&[2, 5]));
        assert_eq!(back, sv(&[(0, 2), (2, 5)]));
        assert!(q.project(&vec::from_ints(&[1])).is_err());
        assert!(q.is_zero_class(&sv(&[(1, 4), (0, -4), (3, 9)])));
    }

    #[test]
    fn sparse_arithmetic() {
        let a = sv(&[(0, 1), (3, 2)]);
        let b = sv(&[(3, 2), (5, 1)]);
        assert_eq!(a.sub(&b), sv(&[(0, 1), (5, -1)]));
        assert_eq!(a.get(3), Rational::from_int(2));
        assert_eq!(a.get(4), Rational::zero());
        assert_eq!(SparseVec::from_dense(&a.to_dense(6)), a);
    }
}
