// SPDX-License-Identifier: Apache-2.0

//! Weak Hopf algebras by structure constants, the axiom suite and the
//! canonical projections ε_t, ε_s.

use exactlin::{vec, Matrix, Rational, Subspace};

use crate::algebra::{check_algebra, check_coalgebra, FinDimAlgebra, FinDimCoalgebra};
use crate::error::{inconsistent, input, Result};
use crate::report::{Check, CheckConfig, Report};

/// Terms of an iterated coproduct: each entry is a list of basis indices
/// (one per tensor leg) with its coefficient.
pub type Terms = Vec<(Vec<usize>, Rational)>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AntipodeInverse {
    /// Given with the input and verified by [`check_weak_hopf`].
    Supplied(Matrix),
    /// Not given; obtained by exact matrix inversion.
    Computed(Matrix),
    /// Not given and the antipode matrix is singular.
    Singular,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeakHopfAlgebra {
    alg: FinDimAlgebra,
    coalg: FinDimCoalgebra,
    antipode: Matrix,
    inverse: AntipodeInverse,
}

impl WeakHopfAlgebra {
    pub fn new(
        alg: FinDimAlgebra,
        coalg: FinDimCoalgebra,
        antipode: Matrix,
        antipode_inverse: Option<Matrix>,
    ) -> Result<Self> {
        let n = alg.dim();
        if coalg.dim() != n {
            return Err(input(format!("algebra has dimension {n} but coalgebra has {}", coalg.dim())));
        }
        if antipode.rows() != n || antipode.cols() != n {
            return Err(input(format!("antipode is {}x{}, expected {n}x{n}", antipode.rows(), antipode.cols())));
        }
        let inverse = match antipode_inverse {
            Some(m) if m.rows() != n || m.cols() != n => {
                return Err(input(format!("antipode inverse is {}x{}, expected {n}x{n}", m.rows(), m.cols())))
            }
            Some(m) => AntipodeInverse::Supplied(m),
            None => match antipode.inverse() {
                Some(m) => AntipodeInverse::Computed(m),
                None => AntipodeInverse::Singular,
            },
        };
        Ok(WeakHopfAlgebra { alg, coalg, antipode, inverse })
    }

    pub fn dim(&self) -> usize {
        self.alg.dim()
    }

    pub fn alg(&self) -> &FinDimAlgebra {
        &self.alg
    }

    pub fn coalg(&self) -> &FinDimCoalgebra {
        &self.coalg
    }

    pub fn labels(&self) -> &[String] {
        self.alg.labels()
    }

    pub fn antipode(&self) -> &Matrix {
        &self.antipode
    }

    pub fn inverse_status(&self) -> &AntipodeInverse {
        &self.inverse
    }

    /// The matrix of `S⁻¹`, supplied or computed.
    pub fn antipode_inverse(&self) -> Option<&Matrix> {
        match &self.inverse {
            AntipodeInverse::Supplied(m) | AntipodeInverse::Computed(m) => Some(m),
            AntipodeInverse::Singular => None,
        }
    }

    pub fn unit(&self) -> &[Rational] {
        self.alg.unit()
    }

    pub fn basis(&self, i: usize) -> Vec<Rational> {
        vec::unit(self.dim(), i)
    }

    pub fn mul(&self, a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        self.alg.mul(a, b)
    }

    pub fn delta(&self, v: &[Rational]) -> Vec<Rational> {
        self.coalg.delta(v)
    }

    pub fn eps(&self, v: &[Rational]) -> Rational {
        self.coalg.eps(v)
    }

    pub fn s(&self, v: &[Rational]) -> Vec<Rational> {
        self.antipode.mul_vec(v).expect("antipode is square of algebra dimension")
    }

    pub fn s_inv(&self, v: &[Rational]) -> Option<Vec<Rational>> {
        self.antipode_inverse().map(|m| m.mul_vec(v).expect("square"))
    }

    /// `Δ^{(legs-1)}(v)` as Sweedler terms.
    pub fn coproduct_terms(&self, v: &[Rational], legs: usize) -> Terms {
        assert!(legs >= 1);
        let mut terms: Terms =
            v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (vec![i], c.clone())).collect();
        let n = self.dim();
        for _ in 1..legs {
            let mut next = Vec::new();
            for (idx, c) in terms {
                let last = *idx.last().expect("nonempty");
                for (jk, d) in self.coalg.delta_basis(last).iter() {
                    let mut w = idx.clone();
                    *w.last_mut().expect("nonempty") = jk / n;
                    w.push(jk % n);
                    next.push((w, &c * d));
                }
            }
            terms = next;
        }
        terms
    }

    pub fn basis_coproduct(&self, i: usize, legs: usize) -> Terms {
        self.coproduct_terms(&self.basis(i), legs)
    }

    /// Dense vector of a pure tensor of basis elements.
    pub fn pure_tensor_index(&self, idx: &[usize]) -> usize {
        idx.iter().fold(0, |acc, &i| acc * self.dim() + i)
    }

    /// `ε_t(h) = ε(1₁h)1₂`
    pub fn eps_t(&self, h: &[Rational]) -> Vec<Rational> {
        let mut out = vec::zeros(self.dim());
        for (idx, c) in self.coproduct_terms(self.unit(), 2) {
            let e = self.eps(&self.mul(&self.basis(idx[0]), h));
            vec::axpy(&mut out, &(&c * &e), &self.basis(idx[1]));
        }
        out
    }

    /// `ε_s(h) = 1₁ε(h1₂)`
    pub fn eps_s(&self, h: &[Rational]) -> Vec<Rational> {
        let mut out = vec::zeros(self.dim());
        for (idx, c) in self.coproduct_terms(self.unit(), 2) {
            let e = self.eps(&self.mul(h, &self.basis(idx[1])));
            vec::axpy(&mut out, &(&c * &e), &self.basis(idx[0]));
        }
        out
    }

    /// Product in `H^{⊗k}` of two dense tensors.
    pub fn tensor_mul(&self, k: usize, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        tensor_power_mul(&self.alg, k, x, y)
    }

    pub fn is_cocommutative(&self) -> bool {
        is_cocommutative(self)
    }
}

/// Multiplication in `A^{⊗k}` on dense left-major coefficient vectors.
pub fn tensor_power_mul(alg: &FinDimAlgebra, k: usize, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
    let n = alg.dim();
    let total = n.pow(k as u32);
    let mut out = vec::zeros(total);
    let split = |mut i: usize| {
        let mut v = vec![0; k];
        for slot in v.iter_mut().rev() {
            *slot = i % n;
            i /= n;
        }
        v
    };
    for (a, xa) in x.iter().enumerate() {
        if xa.is_zero() {
            continue;
        }
        let ia = split(a);
        for (b, yb) in y.iter().enumerate() {
            if yb.is_zero() {
                continue;
            }
            let ib = split(b);
            // Expand the product factor by factor.
            let mut partial: Vec<(usize, Rational)> = vec![(0, xa * yb)];
            for leg in 0..k {
                let prod = alg.basis_product(ia[leg], ib[leg]);
                let mut next = Vec::with_capacity(partial.len() * prod.nnz());
                for (acc, c) in &partial {
                    for (m, d) in prod.iter() {
                        next.push((acc * n + m, c * d));
                    }
                }
                partial = next;
                if partial.is_empty() {
                    break;
                }
            }
            for (i, c) in partial {
                out[i] += c;
            }
        }
    }
    out
}

fn dense_from_terms(n: usize, legs: usize, terms: &Terms) -> Vec<Rational> {
    let mut out = vec::zeros(n.pow(legs as u32));
    for (idx, c) in terms {
        let i = idx.iter().fold(0, |acc, &j| acc * n + j);
        out[i] += c;
    }
    out
}

fn tensor_of(parts: &[Vec<Rational>]) -> Vec<Rational> {
    parts.iter().skip(1).fold(parts[0].clone(), |acc, p| vec::tensor(&acc, p))
}

/// The full weak Hopf axiom list: algebra (i), coalgebra (ii), multiplicative
/// coproduct (iii), weak multiplicativity of ε (iv), the Δ²(1) identities (v)
/// and the antipode axioms (vi)–(viii), plus the antipode inverse if any.
pub fn check_weak_hopf(h: &WeakHopfAlgebra, cfg: &CheckConfig) -> Report {
    let n = h.dim();
    let mut r = Report::new();
    r.merge("i", check_algebra(h.alg(), cfg));
    r.merge("ii", check_coalgebra(h.coalg(), cfg));

    let pairs = cfg.cases(&[n, n]);
    r.push(Check::equalities("iii.multiplicative", &pairs, |t| {
        let lhs = h.delta(&h.mul(&h.basis(t[0]), &h.basis(t[1])));
        let rhs = h.tensor_mul(2, &h.delta(&h.basis(t[0])), &h.delta(&h.basis(t[1])));
        (lhs, rhs)
    }));

    let triples = cfg.cases(&[n, n, n]);
    let eps_iv = |t: &[usize], swap: bool| -> Rational {
        let (k, g) = (h.basis(t[0]), h.basis(t[2]));
        h.basis_coproduct(t[1], 2)
            .iter()
            .map(|(idx, c)| {
                let (a, b) = if swap { (idx[1], idx[0]) } else { (idx[0], idx[1]) };
                c * &h.eps(&h.mul(&k, &h.basis(a))) * h.eps(&h.mul(&h.basis(b), &g))
            })
            .sum()
    };
    let mid = |t: &[usize]| h.eps(&h.alg().mul3(&h.basis(t[0]), &h.basis(t[1]), &h.basis(t[2])));
    r.push(Check::equalities("iv.left", &triples, |t| (vec![eps_iv(t, false)], vec![mid(t)])));
    r.push(Check::equalities("iv.right", &triples, |t| (vec![mid(t)], vec![eps_iv(t, true)])));

    let one = h.unit().to_vec();
    let d1 = h.delta(&one);
    let d2 = dense_from_terms(n, 3, &h.coproduct_terms(&one, 3));
    let one_d1 = vec::tensor(&one, &d1);
    let d1_one = vec::tensor(&d1, &one);
    let single = cfg.cases(&[1]);
    r.push(Check::equalities("v.left", &single, |_| (h.tensor_mul(3, &one_d1, &d1_one), d2.clone())));
    r.push(Check::equalities("v.right", &single, |_| (d2.clone(), h.tensor_mul(3, &d1_one, &one_d1))));

    let singles = cfg.cases(&[n]);
    r.push(Check::equalities("vi.target", &singles, |t| {
        let mut lhs = vec::zeros(n);
        for (idx, c) in h.basis_coproduct(t[0], 2) {
            vec::axpy(&mut lhs, &c, &h.mul(&h.basis(idx[0]), &h.s(&h.basis(idx[1]))));
        }
        (lhs, h.eps_t(&h.basis(t[0])))
    }));
    r.push(Check::equalities("vii.source", &singles, |t| {
        let mut lhs = vec::zeros(n);
        for (idx, c) in h.basis_coproduct(t[0], 2) {
            vec::axpy(&mut lhs, &c, &h.mul(&h.s(&h.basis(idx[0])), &h.basis(idx[1])));
        }
        (lhs, h.eps_s(&h.basis(t[0])))
    }));
    r.push(Check::equalities("viii.antipode", &singles, |t| {
        let mut rhs = vec::zeros(n);
        for (idx, c) in h.basis_coproduct(t[0], 3) {
            let p = h.alg().mul3(&h.s(&h.basis(idx[0])), &h.basis(idx[1]), &h.s(&h.basis(idx[2])));
            vec::axpy(&mut rhs, &c, &p);
        }
        (h.s(&h.basis(t[0])), rhs)
    }));

    r.push(match h.inverse_status() {
        AntipodeInverse::Supplied(m) => {
            let id = Matrix::identity(n);
            let ok = h.antipode().mul(m).ok() == Some(id.clone()) && m.mul(h.antipode()).ok() == Some(id);
            Check::from_bool("antipode.inverse", ok, "supplied inverse verified against S")
        }
        AntipodeInverse::Computed(_) => Check::pass("antipode.inverse", 1).with_note("computed by exact inversion"),
        AntipodeInverse::Singular => Check::fail("antipode.inverse", "antipode matrix is singular"),
    });
    r
}

/// Matrices of ε_t and ε_s with their images H_t and H_s.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalProjections {
    pub eps_t: Matrix,
    pub eps_s: Matrix,
    pub ht: Subspace,
    pub hs: Subspace,
}

/// Computes ε_t, ε_s and their images, and asserts the intrinsic
/// characterisations `z ∈ H_t ⇔ Δz = 1₁z ⊗ 1₂`, `w ∈ H_s ⇔ Δw = 1₁ ⊗ w1₂`,
/// `Δ(H_t) ⊂ H ⊗ H_t`, together with idempotence of both projections.
pub fn canonical_projections(h: &WeakHopfAlgebra) -> Result<CanonicalProjections> {
    let n = h.dim();
    let cols_t: Vec<Vec<Rational>> = (0..n).map(|i| h.eps_t(&h.basis(i))).collect();
    let cols_s: Vec<Vec<Rational>> = (0..n).map(|i| h.eps_s(&h.basis(i))).collect();
    let eps_t = Matrix::from_columns(n, &cols_t)?;
    let eps_s = Matrix::from_columns(n, &cols_s)?;
    let ht = eps_t.column_space();
    let hs = eps_s.column_space();

    if eps_t.mul(&eps_t)? != eps_t || eps_s.mul(&eps_s)? != eps_s {
        return Err(inconsistent("ε_t or ε_s is not idempotent"));
    }

    let d1 = h.delta(h.unit());
    let one = h.unit().to_vec();
    // z ↦ Δz − (1₁z ⊗ 1₂) and w ↦ Δw − (1₁ ⊗ w1₂), as n² × n matrices.
    let target_defect: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            let z = h.basis(i);
            vec::sub(&h.delta(&z), &h.tensor_mul(2, &d1, &vec::tensor(&z, &one)))
        })
        .collect();
    let source_defect: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            let w = h.basis(i);
            vec::sub(&h.delta(&w), &h.tensor_mul(2, &vec::tensor(&one, &w), &d1))
        })
        .collect();
    let ht_char = Matrix::from_columns(n * n, &target_defect)?.kernel_basis();
    let hs_char = Matrix::from_columns(n * n, &source_defect)?.kernel_basis();
    if ht_char != ht {
        return Err(inconsistent(format!(
            "image of ε_t (dim {}) differs from {{z : Δz = 1₁z⊗1₂}} (dim {})",
            ht.dim(),
            ht_char.dim()
        )));
    }
    if hs_char != hs {
        return Err(inconsistent(format!(
            "image of ε_s (dim {}) differs from {{w : Δw = 1₁⊗w1₂}} (dim {})",
            hs.dim(),
            hs_char.dim()
        )));
    }
    let h_ht = Subspace::span(
        n * n,
        &(0..n).flat_map(|i| ht.basis().iter().map(move |z| (i, z))).map(|(i, z)| vec::tensor(&h.basis(i), z)).collect::<Vec<_>>(),
    )?;
    for z in ht.basis() {
        if !h_ht.contains(&h.delta(z))? {
            return Err(inconsistent("Δ(H_t) is not contained in H ⊗ H_t"));
        }
    }
    Ok(CanonicalProjections { eps_t, eps_s, ht, hs })
}

type Bilinear<'a> = dyn Fn(&[Rational], &[Rational]) -> Vec<Rational> + 'a;
type Trilinear<'a> = dyn Fn(&[Rational], &[Rational], &[Rational]) -> Vec<Rational> + 'a;

/// The five identities valid in any weak Hopf algebra:
/// (1) h₁⊗h₂S(h₃) = 1₁h⊗1₂, (2) S(h₁)h₂⊗h₃ = 1₁⊗h1₂, (3) S(1) = 1,
/// (4) h₁⊗S(h₂)h₃ = h1₁⊗S(1₂), (5) h₁S(h₂)⊗h₃ = S(1₁)⊗1₂h.
pub fn lemma21_suite(h: &WeakHopfAlgebra, cfg: &CheckConfig) -> Report {
    let n = h.dim();
    let singles = cfg.cases(&[n]);
    let b = |i: usize| h.basis(i);
    let one_terms = h.coproduct_terms(h.unit(), 2);
    let one_side = |f: &Bilinear<'_>| -> Vec<Rational> {
        let mut out = vec::zeros(n * n);
        for (idx, c) in &one_terms {
            vec::axpy(&mut out, c, &f(&b(idx[0]), &b(idx[1])));
        }
        out
    };
    let three = |i: usize, f: &Trilinear<'_>| {
        let mut out = vec::zeros(n * n);
        for (idx, c) in h.basis_coproduct(i, 3) {
            vec::axpy(&mut out, &c, &f(&b(idx[0]), &b(idx[1]), &b(idx[2])));
        }
        out
    };

    let mut r = Report::new();
    r.push(Check::equalities("1", &singles, |t| {
        let lhs = three(t[0], &|x, y, z| vec::tensor(x, &h.mul(y, &h.s(z))));
        let rhs = one_side(&|u, v| vec::tensor(&h.mul(u, &b(t[0])), v));
        (lhs, rhs)
    }));
    r.push(Check::equalities("2", &singles, |t| {
        let lhs = three(t[0], &|x, y, z| vec::tensor(&h.mul(&h.s(x), y), z));
        let rhs = one_side(&|u, v| vec::tensor(u, &h.mul(&b(t[0]), v)));
        (lhs, rhs)
    }));
    r.push(Check::equalities("3", &cfg.cases(&[1]), |_| (h.s(h.unit()), h.unit().to_vec())));
    r.push(Check::equalities("4", &singles, |t| {
        let lhs = three(t[0], &|x, y, z| vec::tensor(x, &h.mul(&h.s(y), z)));
        let rhs = one_side(&|u, v| vec::tensor(&h.mul(&b(t[0]), u), &h.s(v)));
        (lhs, rhs)
    }));
    r.push(Check::equalities("5", &singles, |t| {
        let lhs = three(t[0], &|x, y, z| vec::tensor(&h.mul(x, &h.s(y)), z));
        let rhs = one_side(&|u, v| vec::tensor(&h.s(u), &h.mul(v, &b(t[0]))));
        (lhs, rhs)
    }));
    r
}

/// True iff `τ∘Δ = Δ`.
pub fn is_cocommutative(h: &WeakHopfAlgebra) -> bool {
    let n = h.dim();
    (0..n).all(|i| {
        let d = h.coalg().delta_basis(i);
        d.iter().all(|(jk, c)| d.get((jk % n) * n + jk / n) == *c)
    })
}

/// Helper for callers that need `x₁ ⊗ … ⊗ x_k` of explicit vectors.
pub fn tensor_vectors(parts: &[Vec<Rational>]) -> Vec<Rational> {
    tensor_of(parts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{groupoid_algebra, sweedler_pair, FiniteGroupoid};

    fn with_counit(h: &WeakHopfAlgebra, counit: Vec<Rational>) -> WeakHopfAlgebra {
        let coalg = FinDimCoalgebra::new(h.dim(), counit, h.coalg().structure_terms()).unwrap();
        WeakHopfAlgebra::new(h.alg().clone(), coalg, h.antipode().clone(), h.antipode_inverse().cloned()).unwrap()
    }

    #[test]
    fn group_algebra_projections_are_scalar() {
        let h = groupoid_algebra(&FiniteGroupoid::cyclic(2));
        let p = canonical_projections(&h).unwrap();
        assert_eq!(p.ht.dim(), 1);
        assert!(p.ht.contains(h.unit()).unwrap());
        assert_eq!(h.eps_t(&h.basis(1)), h.unit().to_vec());
        assert_eq!(h.delta(h.unit()), vec::tensor(h.unit(), h.unit()));
        assert!(lemma21_suite(&h, &CheckConfig::default()).passed());
    }

    #[test]
    fn sweedler_pair_target_space_is_spanned_by_block_units() {
        let h = sweedler_pair();
        let p = canonical_projections(&h).unwrap();
        for proj in [&p.ht, &p.hs] {
            assert!(proj.contains(&h.basis(0)).unwrap());
            assert!(proj.contains(&h.basis(4)).unwrap());
        }
        assert_eq!(h.eps_t(h.unit()), h.unit().to_vec());
    }

    #[test]
    fn perturbed_counit_breaks_weak_multiplicativity() {
        let h = sweedler_pair();
        let mut counit = h.coalg().counit().to_vec();
        counit[2] = Rational::zero(); // ε(e_g) = 0
        let r = check_weak_hopf(&with_counit(&h, counit), &CheckConfig::default());
        assert!(r.any_failed_with_prefix("iv."));
    }

    #[test]
    fn wrong_supplied_inverse_is_reported() {
        let h = groupoid_algebra(&FiniteGroupoid::cyclic(3));
        let bad = WeakHopfAlgebra::new(
            h.alg().clone(),
            h.coalg().clone(),
            h.antipode().clone(),
            Some(Matrix::identity(3)),
        )
        .unwrap();
        let r = check_weak_hopf(&bad, &CheckConfig::default());
        assert!(r.get("antipode.inverse").unwrap().failed());
        assert!(r.get("viii.antipode").unwrap().passed());
    }

    #[test]
    fn shape_mismatch_is_an_input_error() {
        let h = groupoid_algebra(&FiniteGroupoid::cyclic(2));
        let r = WeakHopfAlgebra::new(h.alg().clone(), h.coalg().clone(), Matrix::identity(3), None);
        assert!(matches!(r, Err(crate::Error::Input(_))));
    }
}
