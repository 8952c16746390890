// SPDX-License-Identifier: Apache-2.0

//! Tensor powers of a finite-dimensional algebra and their balanced
//! quotients `C ⊗_A C ⊗_B C ⊗ …`.
//!
//! A tensor in `C^{⊗k}` is a dense coefficient vector of length `n^k`, the
//! basis tensor `e_{i₁} ⊗ … ⊗ e_{i_k}` sitting at index `i₁ n^{k-1} + … + i_k`.

use exactlin::{vec, Matrix, QuotientSpace, Rational, SparseVec};

use crate::algebra::FinDimAlgebra;

/// One balancing condition between adjacent legs: for every pair
/// `(P, Q)`, `P x ⊗ y ≡ x ⊗ Q y`.
pub type Balancing = Vec<(Matrix, Matrix)>;

/// `C^{⊗k}` modulo the balancing conditions between legs `j` and `j + 1`.
#[derive(Clone, Debug)]
pub struct BalancedTensor {
    n: usize,
    legs: usize,
    quotient: QuotientSpace,
}

impl BalancedTensor {
    /// `joins[j]` balances legs `j` and `j + 1`; there are `joins.len() + 1`
    /// legs.
    pub fn new(n: usize, joins: &[&Balancing]) -> Self {
        let legs = joins.len() + 1;
        let ambient = n.pow(legs as u32);
        let mut relations = Vec::new();
        for (j, balancing) in joins.iter().enumerate() {
            let inner = n.pow((legs - j - 2) as u32);
            for (p, q) in balancing.iter() {
                for idx in 0..ambient {
                    let x = (idx / (inner * n)) % n;
                    let y = (idx / inner) % n;
                    let base = idx - (x * n + y) * inner;
                    let mut terms = Vec::new();
                    for r in 0..n {
                        let pr = p.get(r, x);
                        if !pr.is_zero() {
                            terms.push((base + (r * n + y) * inner, pr.clone()));
                        }
                        let qr = q.get(r, y);
                        if !qr.is_zero() {
                            terms.push((base + (x * n + r) * inner, -qr.clone()));
                        }
                    }
                    let rel = SparseVec::from_terms(terms);
                    if !rel.is_zero() {
                        relations.push(rel);
                    }
                }
            }
        }
        BalancedTensor { n, legs, quotient: QuotientSpace::from_relations(ambient, &relations) }
    }

    /// The plain tensor power, with no balancing.
    pub fn plain(n: usize, legs: usize) -> Self {
        let ambient = n.pow(legs as u32);
        BalancedTensor { n, legs, quotient: QuotientSpace::from_relations(ambient, std::iter::empty()) }
    }

    pub fn legs(&self) -> usize {
        self.legs
    }

    pub fn factor_dim(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.quotient.dim()
    }

    pub fn ambient_dim(&self) -> usize {
        self.quotient.ambient_dim()
    }

    /// Class of a tensor, in quotient coordinates.
    pub fn project(&self, t: &[Rational]) -> Vec<Rational> {
        self.quotient.project(t).expect("tensor of the right length")
    }

    /// Canonical representative of a class.
    pub fn lift(&self, coords: &[Rational]) -> Vec<Rational> {
        self.quotient.lift(coords).to_dense(self.ambient_dim())
    }

    pub fn is_zero(&self, t: &[Rational]) -> bool {
        self.quotient.is_zero_class(&SparseVec::from_dense(t))
    }

    pub fn same_class(&self, a: &[Rational], b: &[Rational]) -> bool {
        self.is_zero(&vec::sub(a, b))
    }
}

/// Columns of `f` applied to the basis, i.e. `f(e_i)` for every `i`.
pub(crate) fn images(f: &Matrix) -> Vec<Vec<Rational>> {
    f.columns()
}

/// `(f ⊗ g)(t)` for `t ∈ C ⊗ C`, with `f`, `g` given by their basis images.
pub(crate) fn apply2(f: &[Vec<Rational>], g: &[Vec<Rational>], t: &[Rational]) -> Vec<Rational> {
    let (n, m) = (f.len(), g.len());
    let (fo, go) = (f.first().map_or(0, Vec::len), g.first().map_or(0, Vec::len));
    let mut out = vec::zeros(fo * go);
    for (k, c) in t.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let (i, j) = (k / m, k % m);
        debug_assert!(i < n);
        for (a, fa) in f[i].iter().enumerate() {
            if fa.is_zero() {
                continue;
            }
            let s = c * fa;
            for (b, gb) in g[j].iter().enumerate() {
                if !gb.is_zero() {
                    out[a * go + b] += &(&s * gb);
                }
            }
        }
    }
    out
}

/// Sum of `t_{ij} · φ(i, j)` over the non-zero coefficients of
/// `t ∈ C ⊗ C`, for an arbitrary bilinear-on-basis `φ`.
pub(crate) fn contract2(n: usize, t: &[Rational], out_dim: usize, phi: impl Fn(usize, usize) -> Vec<Rational>) -> Vec<Rational> {
    let mut out = vec::zeros(out_dim);
    for (k, c) in t.iter().enumerate() {
        if !c.is_zero() {
            vec::axpy(&mut out, c, &phi(k / n, k % n));
        }
    }
    out
}

/// Factorwise product in `C ⊗ C`.
pub(crate) fn tensor_mul(c: &FinDimAlgebra, u: &[Rational], v: &[Rational]) -> Vec<Rational> {
    let n = c.dim();
    let mut out = vec::zeros(n * n);
    let nz = |t: &[Rational]| -> Vec<(usize, Rational)> {
        t.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(k, x)| (k, x.clone())).collect()
    };
    let (us, vs) = (nz(u), nz(v));
    for (p, up) in &us {
        let (i, j) = (p / n, p % n);
        for (q, vq) in &vs {
            let (k, l) = (q / n, q % n);
            let coeff = up * vq;
            let (left, right) = (c.basis_product(i, k), c.basis_product(j, l));
            for (a, x) in left.iter() {
                let cx = &coeff * x;
                for (b, y) in right.iter() {
                    out[a * n + b] += &(&cx * y);
                }
            }
        }
    }
    out
}

/// `t ⊗ e_j` or `e_j ⊗ t`-style splicing: replaces leg `leg` of a basis
/// tensor of `C^{⊗k}` by a tensor of `C^{⊗2}`, giving `C^{⊗(k+1)}`.
pub(crate) fn expand_leg(n: usize, legs: usize, t: &[Rational], leg: usize, f: &[Vec<Rational>]) -> Vec<Rational> {
    let inner = n.pow((legs - leg - 1) as u32);
    let mut out = vec::zeros(n.pow(legs as u32 + 1));
    for (k, c) in t.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let x = (k / inner) % n;
        let (hi, lo) = (k / (inner * n), k % inner);
        for (r, fr) in f[x].iter().enumerate() {
            if !fr.is_zero() {
                out[(hi * n * n + r) * inner + lo] += &(c * fr);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{groupoid_algebra, FiniteGroupoid};

    #[test]
    fn plain_tensor_has_full_dimension() {
        let t = BalancedTensor::plain(3, 2);
        assert_eq!(t.dim(), 9);
    }

    #[test]
    fn balancing_over_the_whole_algebra_is_the_tensor_over_it() {
        // C ⊗_C C ≅ C for C = kZ2, balancing by right and left multiplication.
        let c = groupoid_algebra(&FiniteGroupoid::cyclic(2)).alg().clone();
        let joins: Balancing = (0..2).map(|i| (c.right_mult(&c.basis(i)), c.left_mult(&c.basis(i)))).collect();
        let t = BalancedTensor::new(2, &[&joins]);
        assert_eq!(t.dim(), 2);
        let g_1 = vec::tensor(&c.basis(1), &c.basis(0));
        let one_g = vec::tensor(&c.basis(0), &c.basis(1));
        assert!(t.same_class(&g_1, &one_g));
    }

    #[test]
    fn expand_leg_splices_in_the_middle() {
        let n = 2;
        let t = vec::tensor(&vec::unit(2, 1), &vec::unit(2, 0));
        let dup: Vec<Vec<Rational>> = (0..n).map(|i| vec::tensor(&vec::unit(2, i), &vec::unit(2, i))).collect();
        let out = expand_leg(n, 2, &t, 0, &dup);
        let want = vec::tensor(&vec::tensor(&vec::unit(2, 1), &vec::unit(2, 1)), &vec::unit(2, 0));
        assert_eq!(out, want);
        let out = expand_leg(n, 2, &t, 1, &dup);
        let want = vec::tensor(&vec::tensor(&vec::unit(2, 1), &vec::unit(2, 0)), &vec::unit(2, 0));
        assert_eq!(out, want);
    }
}
