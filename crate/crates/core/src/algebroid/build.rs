// SPDX-License-Identifier: Apache-2.0

use exactlin::{vec, Matrix, Rational, Subspace};

use super::tensor::{tensor_mul, BalancedTensor, Balancing};
use crate::error::{inconsistent, precondition, Result};
use crate::hpar::{e_calculus, universal_factorization, EElements, HparAlgebra};
use crate::partial::PartialRep;
use crate::report::CheckConfig;
use crate::wha::{Terms, WeakHopfAlgebra};

/// The left and right bialgebroid structures on `H_par^w`, over `A_par^w`
/// and its tilde counterpart, together with the antipode `𝒮`.
///
/// Everything is stored in carrier coordinates. The base algebras are
/// subspaces of the carrier; `s` and `s̃` are their inclusions and
/// `t = 𝒮′∘s`, `t̃ = 𝒮′∘s̃`. The coproducts take values in the balanced
/// tensors [`HopfAlgebroidData::left_tensor`] (`C ⊗_A C`, balanced by
/// `t(a)x ⊗ y ≡ x ⊗ s(a)y`) and [`HopfAlgebroidData::right_tensor`]
/// (`C ⊗_Ã C`, balanced by `x s̃(b) ⊗ y ≡ x ⊗ y t̃(b)`).
#[derive(Clone, Debug)]
pub struct HopfAlgebroidData {
    hp: HparAlgebra,
    ee: EElements,
    antipode: Matrix,
    antipode_inv: Matrix,
    eps_l: Matrix,
    eps_r: Matrix,
    delta_l: Matrix,
    delta_r: Matrix,
    left_join: Balancing,
    right_join: Balancing,
    left: BalancedTensor,
    right: BalancedTensor,
}

impl HopfAlgebroidData {
    pub fn hpar(&self) -> &HparAlgebra {
        &self.hp
    }

    pub fn e_elements(&self) -> &EElements {
        &self.ee
    }

    /// `A_par^w` inside the carrier.
    pub fn base(&self) -> &Subspace {
        self.ee.apar()
    }

    /// The right-hand base algebra, generated by the `Ẽ_h`.
    pub fn base_tilde(&self) -> &Subspace {
        self.ee.apar_tilde()
    }

    /// `𝒮([h¹]⋯[hⁿ]) = [S hⁿ]⋯[S h¹]`, on the carrier.
    pub fn antipode(&self) -> &Matrix {
        &self.antipode
    }

    /// `𝒮′`, the same with `S⁻¹`; inverse to `𝒮`.
    pub fn antipode_inverse(&self) -> &Matrix {
        &self.antipode_inv
    }

    pub fn s(&self, a: &[Rational]) -> Vec<Rational> {
        a.to_vec()
    }

    pub fn t(&self, a: &[Rational]) -> Vec<Rational> {
        self.antipode_inv.mul_vec(a).expect("carrier dimension")
    }

    pub fn s_tilde(&self, a: &[Rational]) -> Vec<Rational> {
        a.to_vec()
    }

    pub fn t_tilde(&self, a: &[Rational]) -> Vec<Rational> {
        self.antipode_inv.mul_vec(a).expect("carrier dimension")
    }

    pub fn apply_antipode(&self, x: &[Rational]) -> Vec<Rational> {
        self.antipode.mul_vec(x).expect("carrier dimension")
    }

    /// Left counit, as a carrier-valued map with image in `A_par^w`.
    pub fn eps_l(&self) -> &Matrix {
        &self.eps_l
    }

    /// Right counit, with image in the tilde base.
    pub fn eps_r(&self) -> &Matrix {
        &self.eps_r
    }

    /// `Δ_l`, from the carrier into coordinates of [`Self::left_tensor`].
    pub fn delta_l(&self) -> &Matrix {
        &self.delta_l
    }

    /// `Δ_r`, into coordinates of [`Self::right_tensor`].
    pub fn delta_r(&self) -> &Matrix {
        &self.delta_r
    }

    pub fn left_tensor(&self) -> &BalancedTensor {
        &self.left
    }

    pub fn right_tensor(&self) -> &BalancedTensor {
        &self.right
    }

    /// Balancing pairs defining `⊗_A` between adjacent legs.
    pub fn left_balancing(&self) -> &Balancing {
        &self.left_join
    }

    /// Balancing pairs defining `⊗_Ã`.
    pub fn right_balancing(&self) -> &Balancing {
        &self.right_join
    }

    /// Canonical representative in `C ⊗ C` of `Δ_l(x)`.
    pub fn delta_l_lift(&self, x: &[Rational]) -> Vec<Rational> {
        self.left.lift(&self.delta_l.mul_vec(x).expect("carrier dimension"))
    }

    pub fn delta_r_lift(&self, x: &[Rational]) -> Vec<Rational> {
        self.right.lift(&self.delta_r.mul_vec(x).expect("carrier dimension"))
    }
}

/// Every combination of one Sweedler term per entry, with the product of
/// their coefficients.
fn combinations(splits: &[Terms]) -> Vec<(Vec<&[usize]>, Rational)> {
    let mut out: Vec<(Vec<&[usize]>, Rational)> = vec![(Vec::new(), Rational::one())];
    for terms in splits {
        let mut next = Vec::with_capacity(out.len() * terms.len());
        for (prefix, c) in &out {
            for (legs, d) in terms {
                let mut p = prefix.clone();
                p.push(legs.as_slice());
                next.push((p, c * d));
            }
        }
        out = next;
    }
    out
}

fn product_in_h(h: &WeakHopfAlgebra, factors: impl Iterator<Item = usize>) -> Vec<Rational> {
    factors.fold(h.unit().to_vec(), |acc, i| h.mul(&acc, &h.basis(i)))
}

/// `ε_l([h¹]⋯[hⁿ]) = E_{h¹₁} E_{h¹₂h²₁} ⋯ E_{h¹ₙ⋯hⁿ₁}`: letter `i` is split
/// into `n - i` legs and factor `j` collects leg `j - i` of letters `0..=j`.
fn eps_left_word(hp: &HparAlgebra, ee: &EElements, w: &[usize]) -> Vec<Rational> {
    let (h, c) = (hp.base(), hp.carrier());
    let n = w.len();
    let splits: Vec<Terms> = w.iter().enumerate().map(|(i, &x)| h.basis_coproduct(x, n - i)).collect();
    let mut acc = vec::zeros(c.dim());
    for (legs, coeff) in combinations(&splits) {
        let factors: Vec<Vec<Rational>> =
            (0..n).map(|j| ee.e_of(&product_in_h(h, (0..=j).map(|i| legs[i][j - i])))).collect();
        let refs: Vec<&[Rational]> = factors.iter().map(Vec::as_slice).collect();
        vec::axpy(&mut acc, &coeff, &c.product_of(&refs));
    }
    acc
}

/// `ε_r([h¹]⋯[hⁿ]) = Ẽ_{h¹₁h²₁⋯hⁿ₁} Ẽ_{h²₂⋯hⁿ₂} ⋯ Ẽ_{hⁿₙ}`: letter `i` is
/// split into `i + 1` legs and factor `j` collects leg `j` of letters `j..n`.
fn eps_right_word(hp: &HparAlgebra, ee: &EElements, w: &[usize]) -> Vec<Rational> {
    let (h, c) = (hp.base(), hp.carrier());
    let n = w.len();
    let splits: Vec<Terms> = w.iter().enumerate().map(|(i, &x)| h.basis_coproduct(x, i + 1)).collect();
    let mut acc = vec::zeros(c.dim());
    for (legs, coeff) in combinations(&splits) {
        let factors: Vec<Vec<Rational>> =
            (0..n).map(|j| ee.e_tilde_of(&product_in_h(h, (j..n).map(|i| legs[i][j])))).collect();
        let refs: Vec<&[Rational]> = factors.iter().map(Vec::as_slice).collect();
        vec::axpy(&mut acc, &coeff, &c.product_of(&refs));
    }
    acc
}

/// `[h₁] ⊗ [h₂]` in `C ⊗ C` for each basis element `h`.
pub(crate) fn letter_coproducts(hp: &HparAlgebra) -> Vec<Vec<Rational>> {
    let h = hp.base();
    let n = hp.dim();
    (0..h.dim())
        .map(|i| {
            let mut t = vec::zeros(n * n);
            for (ix, c) in h.basis_coproduct(i, 2) {
                let (l, r) = (hp.bracket().column(ix[0]), hp.bracket().column(ix[1]));
                vec::axpy(&mut t, &c, &vec::tensor(&l, &r));
            }
            t
        })
        .collect()
}

/// `[h¹₁]⋯[hⁿ₁] ⊗ [h¹₂]⋯[hⁿ₂]` in the plain tensor `C ⊗ C`, for every word
/// of length at most the saturation depth, indexed like the ideal rows. The
/// empty word goes to `empty`.
pub(crate) fn word_coproducts(hp: &HparAlgebra, empty: Vec<Rational>) -> Vec<Vec<Rational>> {
    let c = hp.carrier();
    let ws = hp.word_space();
    let letters = letter_coproducts(hp);
    let total = ws.count(hp.saturation());
    let mut out: Vec<Vec<Rational>> = Vec::with_capacity(total);
    out.push(empty);
    for idx in 1..total {
        let w = ws.word(idx);
        let (last, prefix) = w.split_last().expect("non-empty word");
        out.push(tensor_mul(c, &out[ws.index(prefix)], &letters[*last]));
    }
    out
}

pub(crate) fn row_value(values: &[Vec<Rational>], dim: usize, row: &exactlin::SparseVec) -> Vec<Rational> {
    let mut acc = vec::zeros(dim);
    for (w, c) in row.iter() {
        vec::axpy(&mut acc, c, &values[*w]);
    }
    acc
}

/// Extends `h ↦ [S(h)]` (or `S⁻¹`) to an anti-homomorphism, i.e. an algebra
/// map into the opposite carrier.
pub(crate) fn anti_extension(hp: &HparAlgebra, s: &Matrix, name: &str) -> Result<Matrix> {
    let pr = PartialRep::new(hp.base().clone(), hp.carrier().opposite(), hp.bracket().mul(s)?)?;
    universal_factorization(hp, &pr, &CheckConfig::default())
        .map(|f| f.matrix)
        .map_err(|e| inconsistent(format!("{name} does not descend to H_par^w: {e}")))
}

/// Builds the Hopf algebroid data of `H_par^w`.
///
/// `𝒮` and `𝒮′` are the anti-multiplicative extensions of `[h] ↦ [S h]` and
/// `[h] ↦ [S⁻¹ h]`; `Δ_l`, `Δ_r`, `ε_l`, `ε_r` are defined on words by their
/// formulas and are checked to kill every row of the defining ideal, so that
/// they are well defined on the carrier. Needs `S⁻¹`.
pub fn build_algebroid(hp: &HparAlgebra) -> Result<HopfAlgebroidData> {
    let h = hp.base();
    let s_inv = h
        .antipode_inverse()
        .ok_or_else(|| precondition("the Hopf algebroid structure needs the inverse antipode"))?
        .clone();
    let ee = e_calculus(hp)?;
    let c = hp.carrier();
    let n = c.dim();
    let antipode = anti_extension(hp, h.antipode(), "𝒮")?;
    let antipode_inv = anti_extension(hp, &s_inv, "𝒮′")?;
    let t = |a: &[Rational]| antipode_inv.mul_vec(a).expect("carrier dimension");

    let left_join: Balancing = ee.apar().basis().iter().map(|a| (c.left_mult(&t(a)), c.left_mult(a))).collect();
    let right_join: Balancing = ee.apar_tilde().basis().iter().map(|b| (c.right_mult(b), c.right_mult(&t(b)))).collect();
    let left = BalancedTensor::new(n, &[&left_join]);
    let right = BalancedTensor::new(n, &[&right_join]);

    let ws = hp.word_space();
    let deltas = word_coproducts(hp, vec::tensor(c.unit(), c.unit()));
    let words: Vec<Vec<usize>> = (0..deltas.len()).map(|i| ws.word(i)).collect();
    let eps_l_words: Vec<Vec<Rational>> = words.iter().map(|w| eps_left_word(hp, &ee, w)).collect();
    let eps_r_words: Vec<Vec<Rational>> = words.iter().map(|w| eps_right_word(hp, &ee, w)).collect();
    for (lead, row) in hp.ideal_rows() {
        let d = row_value(&deltas, n * n, row);
        let culprit = if !left.is_zero(&d) {
            Some("Δ_l")
        } else if !right.is_zero(&d) {
            Some("Δ_r")
        } else if !vec::is_zero(&row_value(&eps_l_words, n, row)) {
            Some("ε_l")
        } else if !vec::is_zero(&row_value(&eps_r_words, n, row)) {
            Some("ε_r")
        } else {
            None
        };
        if let Some(map) = culprit {
            return Err(inconsistent(format!("{map} does not vanish on the ideal row led by word {:?}", ws.word(*lead))));
        }
    }

    let std_index: Vec<usize> = hp.standard_words().iter().map(|w| ws.index(w)).collect();
    let cols = |f: &dyn Fn(usize) -> Vec<Rational>, rows: usize| Matrix::from_columns(rows, &std_index.iter().map(|&i| f(i)).collect::<Vec<_>>());
    let delta_l = cols(&|i| left.project(&deltas[i]), left.dim())?;
    let delta_r = cols(&|i| right.project(&deltas[i]), right.dim())?;
    let eps_l = cols(&|i| eps_l_words[i].clone(), n)?;
    let eps_r = cols(&|i| eps_r_words[i].clone(), n)?;
    Ok(HopfAlgebroidData {
        hp: hp.clone(),
        ee,
        antipode,
        antipode_inv,
        eps_l,
        eps_r,
        delta_l,
        delta_r,
        left_join,
        right_join,
        left,
        right,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebroid::check_hopf_algebroid;
    use crate::constructors::{groupoid_algebra, FiniteGroupoid};
    use crate::hpar::build_hpar;

    fn z3() -> HopfAlgebroidData {
        let hp = build_hpar(&groupoid_algebra(&FiniteGroupoid::cyclic(3)), 8).unwrap();
        build_algebroid(&hp).unwrap()
    }

    #[test]
    fn counits_recover_the_e_elements() {
        let data = z3();
        let (hp, ee) = (data.hpar(), data.e_elements());
        for i in 0..hp.base().dim() {
            let x = hp.bracket().column(i);
            assert_eq!(data.eps_l().mul_vec(&x).unwrap(), ee.e().column(i));
            assert_eq!(data.eps_r().mul_vec(&x).unwrap(), ee.e_tilde().column(i));
        }
    }

    #[test]
    fn target_maps_fix_the_bases_of_a_group_algebra() {
        let data = z3();
        for a in data.base().basis().iter().chain(data.base_tilde().basis()) {
            assert_eq!(&data.t(a), a);
        }
    }

    #[test]
    fn corrupted_structure_maps_are_caught() {
        let cfg = CheckConfig::exhaustive();
        let mut bad = z3();
        bad.eps_l = bad.eps_l.scale(&Rational::from(2));
        let r = check_hopf_algebroid(&bad, &cfg);
        assert!(r.any_failed_with_prefix("left.counit"), "{}", r.summary());
        assert!(!r.any_failed_with_prefix("right."));

        let mut bad = z3();
        bad.antipode = Matrix::identity(bad.hp.dim());
        let r = check_hopf_algebroid(&bad, &cfg);
        assert!(r.any_failed_with_prefix("antipode."), "{}", r.summary());

        let mut bad = z3();
        bad.delta_r = bad.delta_r.scale(&Rational::from(-1));
        let r = check_hopf_algebroid(&bad, &cfg);
        assert!(r.any_failed_with_prefix("right.counit-first"), "{}", r.summary());
    }
}
