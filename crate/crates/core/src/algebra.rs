// SPDX-License-Identifier: Apache-2.0

//! Finite-dimensional algebras and coalgebras given by structure constants.

use exactlin::{vec, Matrix, Rational, SparseVec, Subspace};

use crate::error::{input, Result};
use crate::report::{Check, CheckConfig, Report};

/// An associative unital algebra on a fixed basis `e_0 … e_{n-1}`.
///
/// `e_i e_j` is stored sparsely at index `i * n + j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinDimAlgebra {
    dim: usize,
    mult: Vec<SparseVec>,
    unit: Vec<Rational>,
    labels: Vec<String>,
}

fn default_labels(prefix: &str, n: usize) -> Vec<String> {
    (0..n).map(|i| format!("{prefix}{i}")).collect()
}

impl FinDimAlgebra {
    /// Builds an algebra from `(i, j, k, c)` terms meaning "`c·e_k` occurs in
    /// `e_i e_j`". Repeated terms are summed.
    pub fn new(
        dim: usize,
        labels: Vec<String>,
        unit: Vec<Rational>,
        terms: impl IntoIterator<Item = (usize, usize, usize, Rational)>,
    ) -> Result<Self> {
        let mut buckets: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); dim * dim];
        for (i, j, k, c) in terms {
            if i >= dim || j >= dim || k >= dim {
                return Err(input(format!("product term ({i},{j},{k}) out of range for dimension {dim}")));
            }
            buckets[i * dim + j].push((k, c));
        }
        let mult = buckets.into_iter().map(SparseVec::from_terms).collect();
        Self::from_products(dim, labels, unit, mult)
    }

    pub fn from_products(dim: usize, labels: Vec<String>, unit: Vec<Rational>, mult: Vec<SparseVec>) -> Result<Self> {
        if unit.len() != dim {
            return Err(input(format!("unit has {} entries, expected {dim}", unit.len())));
        }
        if mult.len() != dim * dim {
            return Err(input(format!("product table has {} entries, expected {}", mult.len(), dim * dim)));
        }
        if mult.iter().any(|v| v.max_index().is_some_and(|m| m >= dim)) {
            return Err(input("product result index out of range"));
        }
        let labels = if labels.is_empty() { default_labels("e", dim) } else { labels };
        if labels.len() != dim {
            return Err(input(format!("{} labels for dimension {dim}", labels.len())));
        }
        Ok(FinDimAlgebra { dim, mult, unit, labels })
    }

    /// The ground field ℚ as a one-dimensional algebra.
    pub fn ground_field() -> Self {
        Self::new(1, vec!["1".into()], vec![Rational::one()], [(0, 0, 0, Rational::one())]).expect("valid")
    }

    /// `End(ℚⁿ)` on the matrix units `E_{rc}` (index `r·n + c`), so that the
    /// coefficient vector of a matrix is its row-major entry list.
    pub fn endomorphisms(n: usize) -> Self {
        let mut terms = Vec::new();
        for r in 0..n {
            for c in 0..n {
                for d in 0..n {
                    terms.push((r * n + c, c * n + d, r * n + d, Rational::one()));
                }
            }
        }
        let mut unit = vec::zeros(n * n);
        for i in 0..n {
            unit[i * n + i] = Rational::one();
        }
        let labels = (0..n * n).map(|k| format!("E{}{}", k / n, k % n)).collect();
        Self::new(n * n, labels, unit, terms).expect("valid")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unit(&self) -> &[Rational] {
        &self.unit
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn basis_product(&self, i: usize, j: usize) -> &SparseVec {
        &self.mult[i * self.dim + j]
    }

    pub fn basis(&self, i: usize) -> Vec<Rational> {
        vec::unit(self.dim, i)
    }

    /// Structure constants as `(i, j, k, c)` terms, sorted.
    pub fn structure_terms(&self) -> Vec<(usize, usize, usize, Rational)> {
        let mut out = Vec::new();
        for i in 0..self.dim {
            for j in 0..self.dim {
                for (k, c) in self.basis_product(i, j).iter() {
                    out.push((i, j, *k, c.clone()));
                }
            }
        }
        out
    }

    pub fn mul(&self, a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        let mut out = vec::zeros(self.dim);
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let xy = x * y;
                for (k, c) in self.basis_product(i, j).iter() {
                    out[*k] += &xy * c;
                }
            }
        }
        out
    }

    pub fn mul3(&self, a: &[Rational], b: &[Rational], c: &[Rational]) -> Vec<Rational> {
        self.mul(&self.mul(a, b), c)
    }

    pub fn product_of(&self, factors: &[&[Rational]]) -> Vec<Rational> {
        factors.iter().fold(self.unit.clone(), |acc, f| self.mul(&acc, f))
    }

    /// Matrix of `x ↦ a·x`.
    pub fn left_mult(&self, a: &[Rational]) -> Matrix {
        let cols: Vec<Vec<Rational>> = (0..self.dim).map(|j| self.mul(a, &self.basis(j))).collect();
        Matrix::from_columns(self.dim, &cols).expect("square")
    }

    /// Matrix of `x ↦ x·a`.
    pub fn right_mult(&self, a: &[Rational]) -> Matrix {
        let cols: Vec<Vec<Rational>> = (0..self.dim).map(|j| self.mul(&self.basis(j), a)).collect();
        Matrix::from_columns(self.dim, &cols).expect("square")
    }

    pub fn opposite(&self) -> Self {
        let mut mult = vec![SparseVec::new(); self.dim * self.dim];
        for i in 0..self.dim {
            for j in 0..self.dim {
                mult[j * self.dim + i] = self.basis_product(i, j).clone();
            }
        }
        FinDimAlgebra { dim: self.dim, mult, unit: self.unit.clone(), labels: self.labels.clone() }
    }

    /// `A ⊗ B` with factorwise multiplication, basis index `i·dim_B + j`.
    pub fn tensor(&self, other: &FinDimAlgebra) -> Self {
        let (n, m) = (self.dim, other.dim);
        let d = n * m;
        let mut mult = Vec::with_capacity(d * d);
        for i in 0..d {
            for j in 0..d {
                let (a1, b1) = (i / m, i % m);
                let (a2, b2) = (j / m, j % m);
                let left = self.basis_product(a1, a2);
                let right = other.basis_product(b1, b2);
                let mut terms = Vec::with_capacity(left.nnz() * right.nnz());
                for (k, x) in left.iter() {
                    for (l, y) in right.iter() {
                        terms.push((k * m + l, x * y));
                    }
                }
                mult.push(SparseVec::from_terms(terms));
            }
        }
        let labels = self
            .labels
            .iter()
            .flat_map(|a| other.labels.iter().map(move |b| format!("{a}⊗{b}")))
            .collect();
        FinDimAlgebra { dim: d, mult, unit: vec::tensor(&self.unit, &other.unit), labels }
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim).all(|i| (0..self.dim).all(|j| self.basis_product(i, j) == self.basis_product(j, i)))
    }

    /// Smallest subspace containing `gens` (and the unit, if asked) that is
    /// closed under multiplication.
    pub fn span_closure(&self, gens: &[Vec<Rational>], with_unit: bool) -> Subspace {
        let mut all = Vec::with_capacity(gens.len() + 1);
        if with_unit {
            all.push(self.unit.clone());
        }
        all.extend(gens.iter().cloned());
        multiplicative_closure(self.dim, &all, |x, y| self.mul(x, y))
    }

    /// The algebra structure on a multiplicatively closed subspace, in the
    /// coordinates of `s.basis()`, with the given element as unit.
    pub fn subalgebra(&self, s: &Subspace, unit: &[Rational], labels: Vec<String>) -> Result<Self> {
        let n = s.dim();
        let coords = |v: &[Rational]| -> Result<Vec<Rational>> {
            s.solve_membership(v)?.ok_or_else(|| input("subspace is not closed under multiplication"))
        };
        let mut mult = Vec::with_capacity(n * n);
        for a in s.basis() {
            for b in s.basis() {
                mult.push(SparseVec::from_dense(&coords(&self.mul(a, b))?));
            }
        }
        let unit = coords(unit)?;
        let labels = if labels.is_empty() { default_labels("b", n) } else { labels };
        Self::from_products(n, labels, unit, mult)
    }
}

/// Smallest subspace of `ℚ^dim` containing `gens` and closed under the
/// bilinear product `mul`. Works for non-unital products as well.
pub fn multiplicative_closure<F>(dim: usize, gens: &[Vec<Rational>], mul: F) -> Subspace
where
    F: Fn(&[Rational], &[Rational]) -> Vec<Rational>,
{
    let mut s = Subspace::zero(dim);
    for g in gens {
        s.insert(g.clone()).expect("generator has the ambient dimension");
    }
    // Every product of two basis vectors is visited once with at least one
    // factor new since the previous sweep.
    let mut frontier = 0;
    while frontier < s.dim() {
        let end = s.dim();
        for a in frontier..end {
            for b in 0..end {
                let x = s.basis()[a].clone();
                let y = s.basis()[b].clone();
                s.insert(mul(&x, &y)).expect("product has the ambient dimension");
                s.insert(mul(&y, &x)).expect("product has the ambient dimension");
            }
        }
        frontier = end;
    }
    s
}

/// Associativity on all basis triples and the two unit laws.
pub fn check_algebra(a: &FinDimAlgebra, cfg: &CheckConfig) -> Report {
    let n = a.dim();
    let mut r = Report::new();
    let triples = cfg.cases(&[n, n, n]);
    r.push(Check::equalities("associativity", &triples, |t| {
        let (x, y, z) = (a.basis(t[0]), a.basis(t[1]), a.basis(t[2]));
        (a.mul(&a.mul(&x, &y), &z), a.mul(&x, &a.mul(&y, &z)))
    }));
    let singles = cfg.cases(&[n]);
    r.push(Check::equalities("unit.left", &singles, |t| (a.mul(a.unit(), &a.basis(t[0])), a.basis(t[0]))));
    r.push(Check::equalities("unit.right", &singles, |t| (a.mul(&a.basis(t[0]), a.unit()), a.basis(t[0]))));
    r
}

/// A coalgebra on a fixed basis. `Δ(e_i)` is a sparse vector over the
/// `n²`-dimensional tensor square (index `j·n + k` for `e_j ⊗ e_k`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinDimCoalgebra {
    dim: usize,
    comult: Vec<SparseVec>,
    counit: Vec<Rational>,
}

impl FinDimCoalgebra {
    /// `(i, j, k, c)` means "`c·e_j⊗e_k` occurs in `Δ(e_i)`".
    pub fn new(
        dim: usize,
        counit: Vec<Rational>,
        terms: impl IntoIterator<Item = (usize, usize, usize, Rational)>,
    ) -> Result<Self> {
        if counit.len() != dim {
            return Err(input(format!("counit has {} entries, expected {dim}", counit.len())));
        }
        let mut buckets: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); dim];
        for (i, j, k, c) in terms {
            if i >= dim || j >= dim || k >= dim {
                return Err(input(format!("coproduct term ({i},{j},{k}) out of range for dimension {dim}")));
            }
            buckets[i].push((j * dim + k, c));
        }
        let comult = buckets.into_iter().map(SparseVec::from_terms).collect();
        Ok(FinDimCoalgebra { dim, comult, counit })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn counit(&self) -> &[Rational] {
        &self.counit
    }

    pub fn delta_basis(&self, i: usize) -> &SparseVec {
        &self.comult[i]
    }

    /// Structure constants as `(i, j, k, c)` terms, sorted.
    pub fn structure_terms(&self) -> Vec<(usize, usize, usize, Rational)> {
        let mut out = Vec::new();
        for (i, d) in self.comult.iter().enumerate() {
            for (jk, c) in d.iter() {
                out.push((i, jk / self.dim, jk % self.dim, c.clone()));
            }
        }
        out
    }

    pub fn delta(&self, v: &[Rational]) -> Vec<Rational> {
        let mut out = vec::zeros(self.dim * self.dim);
        for (i, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (jk, c) in self.comult[i].iter() {
                out[*jk] += x * c;
            }
        }
        out
    }

    pub fn eps(&self, v: &[Rational]) -> Rational {
        v.iter().zip(&self.counit).filter(|(x, _)| !x.is_zero()).map(|(x, e)| x * e).sum()
    }
}

/// Applies `f ⊗ g` to a vector in `V ⊗ W` (dense, left-major), where `f`
/// and `g` are given by their matrices.
pub fn tensor_map(f: &Matrix, g: &Matrix, v: &[Rational]) -> Vec<Rational> {
    let (n, m) = (f.cols(), g.cols());
    let (p, q) = (f.rows(), g.rows());
    let mut out = vec::zeros(p * q);
    for (idx, x) in v.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        let (i, j) = (idx / m, idx % m);
        debug_assert!(i < n);
        for a in 0..p {
            let fa = f.get(a, i);
            if fa.is_zero() {
                continue;
            }
            let fx = fa * x;
            for b in 0..q {
                let gb = g.get(b, j);
                if !gb.is_zero() {
                    out[a * q + b] += &fx * gb;
                }
            }
        }
    }
    out
}

/// Coassociativity and the counit laws on every basis element.
pub fn check_coalgebra(c: &FinDimCoalgebra, cfg: &CheckConfig) -> Report {
    let n = c.dim();
    let id = Matrix::identity(n);
    let delta_m = {
        let cols: Vec<Vec<Rational>> = (0..n).map(|i| c.delta(&vec::unit(n, i))).collect();
        Matrix::from_columns(n * n, &cols).expect("shape")
    };
    let eps_m = Matrix::from_row_vecs(n, &[c.counit().to_vec()]).expect("shape");
    let singles = cfg.cases(&[n]);
    let mut r = Report::new();
    r.push(Check::equalities("coassociativity", &singles, |t| {
        let d = c.delta(&vec::unit(n, t[0]));
        (tensor_map(&delta_m, &id, &d), tensor_map(&id, &delta_m, &d))
    }));
    r.push(Check::equalities("counit.left", &singles, |t| {
        let d = c.delta(&vec::unit(n, t[0]));
        (tensor_map(&eps_m, &id, &d), vec::unit(n, t[0]))
    }));
    r.push(Check::equalities("counit.right", &singles, |t| {
        let d = c.delta(&vec::unit(n, t[0]));
        (tensor_map(&id, &eps_m, &d), vec::unit(n, t[0]))
    }));
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z2() -> FinDimAlgebra {
        let one = Rational::one();
        FinDimAlgebra::new(
            2,
            vec!["e".into(), "g".into()],
            vec![one.clone(), Rational::zero()],
            [(0, 0, 0, one.clone()), (0, 1, 1, one.clone()), (1, 0, 1, one.clone()), (1, 1, 0, one)],
        )
        .unwrap()
    }

    #[test]
    fn one_dimensional_algebra_passes() {
        assert!(check_algebra(&FinDimAlgebra::ground_field(), &CheckConfig::default()).passed());
    }

    #[test]
    fn group_algebra_passes_and_perturbation_fails() {
        let a = z2();
        assert!(check_algebra(&a, &CheckConfig::default()).passed());
        let mut terms = a.structure_terms();
        terms[1].3 = Rational::from_int(2); // e·g = 2g
        let bad = FinDimAlgebra::new(2, vec![], a.unit().to_vec(), terms).unwrap();
        let r = check_algebra(&bad, &CheckConfig::default());
        let f = r.first_failure().unwrap();
        assert_eq!(f.id, "associativity");
        // (e·e)·g = 2g but e·(e·g) = 4g
        assert_eq!(f.witness.as_ref().unwrap().indices, vec![0, 0, 1]);
    }

    #[test]
    fn endomorphism_algebra_is_matrix_multiplication() {
        let e = FinDimAlgebra::endomorphisms(2);
        assert!(check_algebra(&e, &CheckConfig::default()).passed());
        let a = Matrix::from_ints(&[&[1, 2], &[3, 4]]);
        let b = Matrix::from_ints(&[&[0, 1], &[5, -1]]);
        let flat = |m: &Matrix| m.row_vecs().concat();
        assert_eq!(e.mul(&flat(&a), &flat(&b)), flat(&a.mul(&b).unwrap()));
    }

    #[test]
    fn span_closure_and_subalgebra() {
        let e = FinDimAlgebra::endomorphisms(2);
        // Upper-triangular matrices are generated by E00 and E01 with the unit.
        let s = e.span_closure(&[vec::unit(4, 0), vec::unit(4, 1)], true);
        assert_eq!(s.dim(), 3);
        let sub = e.subalgebra(&s, e.unit(), vec![]).unwrap();
        assert!(check_algebra(&sub, &CheckConfig::default()).passed());
        assert!(!sub.is_commutative());
    }

    #[test]
    fn tensor_and_opposite() {
        let a = z2();
        let t = a.tensor(&a);
        assert_eq!(t.dim(), 4);
        assert!(check_algebra(&t, &CheckConfig::default()).passed());
        let e = FinDimAlgebra::endomorphisms(2);
        let op = e.opposite();
        let (x, y) = (vec::unit(4, 1), vec::unit(4, 2));
        assert_eq!(op.mul(&x, &y), e.mul(&y, &x));
    }

    #[test]
    fn bad_shapes_are_input_errors() {
        assert!(FinDimAlgebra::new(1, vec![], vec![Rational::one()], [(0, 1, 0, Rational::one())]).is_err());
        assert!(FinDimCoalgebra::new(2, vec![Rational::one()], []).is_err());
    }
}
