// SPDX-License-Identifier: Apache-2.0

//! `H_par^w` of a cocommutative base as a unital quantum inverse semigroup.
//!
//! The coproduct here is the word formula `[h¹]⋯[hⁿ] ↦ [h¹₁]⋯[hⁿ₁] ⊗
//! [h¹₂]⋯[hⁿ₂]` into the plain tensor `C ⊗ C`; it is unrelated to the
//! balanced coproducts of [`crate::algebroid`], and need not send `1` to
//! `1 ⊗ 1`. Convolution of endomaps is `f ∗ g = μ∘(f ⊗ g)∘Δ`.

use exactlin::{vec, Matrix, Rational};

use crate::algebra::multiplicative_closure;
use crate::algebroid::{anti_extension, contract2, expand_leg, letter_coproducts, row_value, tensor_mul, word_coproducts};
use crate::error::{inconsistent, precondition, Result};
use crate::hpar::HparAlgebra;
use crate::partial::{check_partial_rep, PartialRep};
use crate::report::{Check, CheckConfig, Report};
use crate::wha::{is_cocommutative, WeakHopfAlgebra};

#[derive(Clone, Debug)]
pub struct QisgData {
    hp: HparAlgebra,
    delta: Matrix,
    pseudo_antipode: Matrix,
}

impl QisgData {
    pub fn hpar(&self) -> &HparAlgebra {
        &self.hp
    }

    /// `Δ`, as an `N² × N` matrix into the plain tensor square.
    pub fn delta(&self) -> &Matrix {
        &self.delta
    }

    /// `𝒮`, the anti-multiplicative extension of `[h] ↦ [S h]`.
    pub fn pseudo_antipode(&self) -> &Matrix {
        &self.pseudo_antipode
    }

    pub fn coproduct(&self, x: &[Rational]) -> Vec<Rational> {
        self.delta.mul_vec(x).expect("carrier dimension")
    }

    /// `f ∗ g` for carrier endomaps given as matrices.
    pub fn convolve(&self, f: &Matrix, g: &Matrix) -> Matrix {
        let c = self.hp.carrier();
        let n = c.dim();
        let cols: Vec<Vec<Rational>> = (0..n)
            .map(|x| {
                contract2(n, &self.delta.column(x), n, |i, j| {
                    c.mul(&f.column(i), &g.column(j))
                })
            })
            .collect();
        Matrix::from_columns(n, &cols).expect("square")
    }
}

/// The precondition of [`build_qisg`], exposed so front ends can report a
/// skip before attempting to build `H_par^w`.
pub fn require_cocommutative(h: &WeakHopfAlgebra) -> Result<()> {
    if is_cocommutative(h) {
        Ok(())
    } else {
        Err(precondition("not cocommutative"))
    }
}

/// Builds `Δ` and `𝒮`. Requires a cocommutative base; `Δ` is evaluated on
/// every word up to the saturation depth and must vanish on the defining
/// ideal.
pub fn build_qisg(hp: &HparAlgebra) -> Result<QisgData> {
    require_cocommutative(hp.base())?;
    let n = hp.dim();
    // The empty word is the unit of H_par^w, i.e. the class of [1_H], so it
    // goes to [1₁] ⊗ [1₂] rather than to 1 ⊗ 1.
    let mut unit_image = vec::zeros(n * n);
    for (i, c) in hp.base().unit().iter().enumerate() {
        vec::axpy(&mut unit_image, c, &letter_coproducts(hp)[i]);
    }
    let deltas = word_coproducts(hp, unit_image);
    let ws = hp.word_space();
    for (lead, row) in hp.ideal_rows() {
        if !vec::is_zero(&row_value(&deltas, n * n, row)) {
            return Err(inconsistent(format!("Δ does not vanish on the ideal row led by word {:?}", ws.word(*lead))));
        }
    }
    let cols: Vec<Vec<Rational>> = hp.standard_words().iter().map(|w| deltas[ws.index(w)].clone()).collect();
    let delta = Matrix::from_columns(n * n, &cols)?;
    let pseudo_antipode = anti_extension(hp, hp.base().antipode(), "𝒮")?;
    Ok(QisgData { hp: hp.clone(), delta, pseudo_antipode })
}

/// The unital QISG axioms: `Δ` multiplicative and coassociative, `𝒮`
/// anti-multiplicative and unital, `I∗𝒮∗I = I`, `𝒮∗I∗𝒮 = 𝒮`, and the
/// images of `I∗𝒮` and `𝒮∗I` commuting. Also records whether `Δ(1) = 1 ⊗ 1`
/// and checks that `h ↦ Δ[h]` is a partial representation into the
/// subalgebra of `C ⊗ C` it generates.
pub fn check_qisg(q: &QisgData, cfg: &CheckConfig) -> Report {
    let c = q.hp.carrier();
    let n = c.dim();
    let mul = |x: &[Rational], y: &[Rational]| c.mul(x, y);
    let e = |i: usize| c.basis(i);
    let one = c.unit().to_vec();
    let sv = |x: &[Rational]| q.pseudo_antipode.mul_vec(x).expect("carrier dimension");
    let d_basis: Vec<Vec<Rational>> = q.delta.columns();
    let id = Matrix::identity(n);
    let i_s = q.convolve(&id, &q.pseudo_antipode);
    let s_i = q.convolve(&q.pseudo_antipode, &id);
    let on = |m: &Matrix, x: &[Rational]| m.mul_vec(x).expect("carrier dimension");
    // μ₃∘(f ⊗ g ⊗ k)∘Δ², with Δ² = (Δ ⊗ I)∘Δ.
    let triple = |x: usize, f: &dyn Fn(&[Rational]) -> Vec<Rational>, g: &dyn Fn(&[Rational]) -> Vec<Rational>, k: &dyn Fn(&[Rational]) -> Vec<Rational>| {
        let t = expand_leg(n, 2, &d_basis[x], 0, &d_basis);
        let mut acc = vec::zeros(n);
        for (idx, coeff) in t.iter().enumerate() {
            if !coeff.is_zero() {
                let (a, b, z) = (idx / (n * n), (idx / n) % n, idx % n);
                vec::axpy(&mut acc, coeff, &c.product_of(&[&f(&e(a)), &g(&e(b)), &k(&e(z))]));
            }
        }
        acc
    };
    let ident = |x: &[Rational]| x.to_vec();

    let mut r = Report::new();
    r.push(Check::equalities("QISG2.multiplicative", &cfg.cases(&[n, n]), |t| {
        (q.coproduct(&mul(&e(t[0]), &e(t[1]))), tensor_mul(c, &d_basis[t[0]], &d_basis[t[1]]))
    }));
    r.push(Check::equalities("QISG2.coassociative", &cfg.cases(&[n]), |t| {
        let v = &d_basis[t[0]];
        (expand_leg(n, 2, v, 0, &d_basis), expand_leg(n, 2, v, 1, &d_basis))
    }));
    r.push(Check::equalities("QISG3.anti-multiplicative", &cfg.cases(&[n, n]), |t| {
        (sv(&mul(&e(t[0]), &e(t[1]))), mul(&sv(&e(t[1])), &sv(&e(t[0]))))
    }));
    r.push(Check::equalities("QISG3.I*S*I", &cfg.cases(&[n]), |t| (triple(t[0], &ident, &sv, &ident), e(t[0]))));
    r.push(Check::equalities("QISG3.S*I*S", &cfg.cases(&[n]), |t| (triple(t[0], &sv, &ident, &sv), sv(&e(t[0])))));
    r.push(Check::equalities("QISG4", &cfg.cases(&[n, n]), |t| {
        let (a, b) = (on(&i_s, &e(t[0])), on(&s_i, &e(t[1])));
        (mul(&a, &b), mul(&b, &a))
    }));
    r.push(Check::from_bool("unital", sv(&one) == one, "𝒮(1) = 1"));
    let unit_preserving = q.coproduct(&one) == vec::tensor(&one, &one);
    r.push(Check::pass("delta-unit", 1).with_note(if unit_preserving { "Δ(1) = 1 ⊗ 1" } else { "Δ(1) ≠ 1 ⊗ 1 (permitted)" }));
    r.push(generators_check(q, cfg));
    r
}

/// `h ↦ Δ[h]` as a partial representation into the unital subalgebra of
/// `C ⊗ C` generated by its image, with unit `Δ[1_H]`.
fn generators_check(q: &QisgData, cfg: &CheckConfig) -> Check {
    let c = q.hp.carrier();
    let h = q.hp.base();
    let images: Vec<Vec<Rational>> = (0..h.dim()).map(|i| q.coproduct(&q.hp.bracket().column(i))).collect();
    let span = multiplicative_closure(c.dim() * c.dim(), &images, |x, y| tensor_mul(c, x, y));
    let square = c.tensor(c);
    let unit = q.coproduct(&q.hp.bracket_of(h.unit()));
    let built = square.subalgebra(&span, &unit, Vec::new()).and_then(|sub| {
        let coords: Vec<Vec<Rational>> =
            images.iter().map(|v| span.solve_membership(v).ok().flatten().expect("generator lies in its span")).collect();
        PartialRep::new(h.clone(), sub, Matrix::from_columns(span.dim(), &coords)?)
    });
    match built {
        Ok(pr) => {
            let rep = check_partial_rep(&pr, cfg);
            match rep.first_failure() {
                None => Check::pass("generators.partial-rep", rep.checks.len()),
                Some(f) => Check::fail("generators.partial-rep", format!("{} fails", f.id)),
            }
        }
        Err(err) => Check::fail("generators.partial-rep", err.to_string()),
    }
}
