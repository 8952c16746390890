// SPDX-License-Identifier: Apache-2.0

//! The elements `E_h = [h₁][S(h₂)]`, `Ẽ_h = [S(h₁)][h₂]` and the subalgebra
//! `A_par^w` they generate.

use exactlin::{vec, Matrix, Rational, Subspace};

use super::build::{HparAlgebra, WordQuotient};
use super::words::Poly;
use crate::algebra::multiplicative_closure;
use crate::error::{inconsistent, Result};
use crate::partial::{check_partial_action, PartialAction};
use crate::report::{Check, CheckConfig, Report};
use crate::wha::{is_cocommutative, WeakHopfAlgebra};

#[derive(Clone, Debug)]
pub struct EElements {
    e: Matrix,
    e_tilde: Matrix,
    apar: Subspace,
    apar_tilde: Subspace,
}

impl EElements {
    /// Matrix of `h ↦ E_h`, into carrier coordinates.
    pub fn e(&self) -> &Matrix {
        &self.e
    }

    /// Matrix of `h ↦ Ẽ_h`.
    pub fn e_tilde(&self) -> &Matrix {
        &self.e_tilde
    }

    pub fn e_of(&self, h: &[Rational]) -> Vec<Rational> {
        self.e.mul_vec(h).expect("dimension of H")
    }

    pub fn e_tilde_of(&self, h: &[Rational]) -> Vec<Rational> {
        self.e_tilde.mul_vec(h).expect("dimension of H")
    }

    /// `A_par^w`, the unital subalgebra generated by the `E_h`.
    pub fn apar(&self) -> &Subspace {
        &self.apar
    }

    /// The unital subalgebra generated by the `Ẽ_h`.
    pub fn apar_tilde(&self) -> &Subspace {
        &self.apar_tilde
    }
}

/// Symbolic `E_h` and `Ẽ_h` as polynomials in the letters, so the same
/// identities can be evaluated in any [`WordQuotient`].
pub(super) struct Symbols<'a> {
    pub(super) h: &'a WeakHopfAlgebra,
}

impl Symbols<'_> {
    pub(super) fn br(&self, x: &[Rational]) -> Poly {
        Poly::letter(x)
    }

    pub(super) fn br_s(&self, x: &[Rational]) -> Poly {
        Poly::letter(&self.h.s(x))
    }

    pub(super) fn sum2(&self, x: &[Rational], f: impl Fn(&[Rational], &[Rational]) -> Poly) -> Poly {
        let mut out = Poly::default();
        for (ix, c) in self.h.coproduct_terms(x, 2) {
            out.add_scaled(&c, &f(&self.h.basis(ix[0]), &self.h.basis(ix[1])));
        }
        out
    }

    pub(super) fn sum3(&self, x: &[Rational], f: impl Fn(&[Rational], &[Rational], &[Rational]) -> Poly) -> Poly {
        let mut out = Poly::default();
        for (ix, c) in self.h.coproduct_terms(x, 3) {
            out.add_scaled(&c, &f(&self.h.basis(ix[0]), &self.h.basis(ix[1]), &self.h.basis(ix[2])));
        }
        out
    }

    pub(super) fn e(&self, x: &[Rational]) -> Poly {
        self.sum2(x, |a, b| self.br(a).mul(&self.br_s(b)))
    }

    pub(super) fn et(&self, x: &[Rational]) -> Poly {
        self.sum2(x, |a, b| self.br_s(a).mul(&self.br(b)))
    }
}

pub(super) fn class<Q: WordQuotient + ?Sized>(q: &Q, p: &Poly) -> Vec<Rational> {
    let terms: Vec<(Vec<usize>, Rational)> = p.terms().map(|(w, c)| (w.clone(), c.clone())).collect();
    q.class_of(&terms).unwrap_or_else(|| panic!("quotient too shallow for words of length {}", p.degree()))
}

pub fn e_calculus(hp: &HparAlgebra) -> Result<EElements> {
    let h = hp.base();
    let sym = Symbols { h };
    let c = hp.carrier();
    let cols = |f: &dyn Fn(&[Rational]) -> Poly| -> Vec<Vec<Rational>> {
        (0..h.dim()).map(|i| class(hp, &f(&h.basis(i)))).collect()
    };
    let e = Matrix::from_columns(c.dim(), &cols(&|x| sym.e(x)))?;
    let e_tilde = Matrix::from_columns(c.dim(), &cols(&|x| sym.et(x)))?;
    let closure = |m: &Matrix| {
        let mut gens = vec![c.unit().to_vec()];
        gens.extend(m.columns());
        multiplicative_closure(c.dim(), &gens, |x, y| c.mul(x, y))
    };
    let apar = closure(&e);
    let apar_tilde = closure(&e_tilde);
    if apar.dim() > c.dim() || apar_tilde.dim() > c.dim() {
        return Err(inconsistent("saturation exceeded the carrier"));
    }
    Ok(EElements { e, e_tilde, apar, apar_tilde })
}

/// Both sides of an identity in two arguments, as polynomials in brackets.
type PairRule<'a> = dyn Fn(&[Rational], &[Rational]) -> (Poly, Poly) + Sync + 'a;

/// The commutation and multiplication rules of the `E`-calculus, on all
/// basis pairs `(h, k)` (or a seeded sample), evaluated in `q`.
///
/// Rules that need `S⁻¹` are skipped when the base carries none, and
/// `E_hE_k = E_kE_h` is only required of cocommutative bases. Also checks
/// `E_{1_H} = 1` and that `E_g` is idempotent for group-like basis elements.
pub fn propee_suite<Q: WordQuotient + ?Sized>(q: &Q, cfg: &CheckConfig) -> Report {
    let h = q.base();
    let n = h.dim();
    let sym = Symbols { h };
    let cl = |p: &Poly| class(q, p);
    let b = |i: usize| h.basis(i);
    let s_inv = |x: &[Rational]| h.s_inv(x);
    let pairs = cfg.cases(&[n, n]);
    let singles = cfg.cases(&[n]);
    let mut r = Report::new();

    let pair_rule = |id: &str, f: &PairRule<'_>| {
        Check::equalities(id, &pairs, |t| {
            let (lhs, rhs) = f(&b(t[0]), &b(t[1]));
            (cl(&lhs), cl(&rhs))
        })
    };
    let single_rule = |id: &str, f: &(dyn Fn(&[Rational]) -> (Poly, Poly) + Sync)| {
        Check::equalities(id, &singles, |t| {
            let (lhs, rhs) = f(&b(t[0]));
            (cl(&lhs), cl(&rhs))
        })
    };

    r.push(Check::equalities("E-unit", &cfg.cases(&[1]), |_| (cl(&sym.e(h.unit())), cl(&Poly::one()))));
    r.push(pair_rule("E.slide-antipode", &|x, k| {
        let lhs = sym.e(k).mul(&sym.br_s(x));
        (lhs, sym.sum2(x, |x1, x2| sym.br_s(x1).mul(&sym.e(&h.mul(x2, k)))))
    }));
    r.push(pair_rule("E.slide-bracket", &|x, k| {
        let lhs = sym.br(x).mul(&sym.e(k));
        (lhs, sym.sum2(x, |x1, x2| sym.e(&h.mul(x1, k)).mul(&sym.br(x2))))
    }));
    r.push(single_rule("E.coproduct", &|x| (sym.sum2(x, |x1, x2| sym.e(x1).mul(&sym.e(x2))), sym.e(x))));
    r.push(pair_rule("Et.slide-bracket", &|x, k| {
        let lhs = sym.et(k).mul(&sym.br(x));
        (lhs, sym.sum2(x, |x1, x2| sym.br(x1).mul(&sym.et(&h.mul(k, x2)))))
    }));
    r.push(pair_rule("Et.slide-antipode", &|x, k| {
        let lhs = sym.br_s(x).mul(&sym.et(k));
        (lhs, sym.sum2(x, |x1, x2| sym.et(&h.mul(k, x1)).mul(&sym.br_s(x2))))
    }));
    r.push(single_rule("Et.coproduct", &|x| (sym.sum2(x, |x1, x2| sym.et(x1).mul(&sym.et(x2))), sym.et(x))));
    r.push(pair_rule("bracket-E-Et", &|x, k| {
        let lhs = sym.br(x).mul(&sym.e(k));
        (lhs, sym.sum2(x, |x1, x2| Poly::product(&[&sym.br(x1), &sym.e(k), &sym.et(x2)])))
    }));
    r.push(pair_rule("E-antipode-Et", &|x, k| {
        let lhs = sym.e(k).mul(&sym.br_s(x));
        (lhs, sym.sum2(x, |x1, x2| Poly::product(&[&sym.et(x1), &sym.e(k), &sym.br_s(x2)])))
    }));
    r.push(pair_rule("Et-bracket-E", &|x, k| {
        let lhs = sym.et(k).mul(&sym.br(x));
        (lhs, sym.sum2(x, |x1, x2| Poly::product(&[&sym.e(x1), &sym.et(k), &sym.br(x2)])))
    }));
    r.push(pair_rule("antipode-Et-E", &|x, k| {
        let lhs = sym.br_s(x).mul(&sym.et(k));
        (lhs, sym.sum2(x, |x1, x2| Poly::product(&[&sym.br_s(x1), &sym.et(k), &sym.e(x2)])))
    }));
    r.push(pair_rule("E-Et-commute", &|x, k| (sym.e(x).mul(&sym.et(k)), sym.et(k).mul(&sym.e(x)))));
    if h.antipode_inverse().is_some() {
        r.push(pair_rule("Et.twisted-product", &|x, k| {
            let lhs = sym.sum3(x, |x1, x2, x3| {
                let si = s_inv(x3).expect("antipode inverse");
                sym.et(&h.mul(&h.mul(k, &si), x1)).mul(&sym.et(x2))
            });
            (lhs, sym.et(x).mul(&sym.et(k)))
        }));
    } else {
        r.push(Check::skipped("Et.twisted-product", "antipode inverse not supplied"));
    }
    r.push(single_rule("E.twisted-coproduct", &|x| {
        (sym.sum3(x, |x1, x2, x3| sym.e(&h.mul(x1, &h.s(x3))).mul(&sym.e(x2))), sym.e(x))
    }));
    if is_cocommutative(h) {
        r.push(pair_rule("E-commute", &|x, k| (sym.e(x).mul(&sym.e(k)), sym.e(k).mul(&sym.e(x)))));
    } else {
        r.push(Check::skipped("E-commute", "not cocommutative"));
    }

    let grouplike: Vec<usize> = (0..n)
        .filter(|&i| {
            let d = h.basis_coproduct(i, 2);
            h.eps(&b(i)).is_one() && d.len() == 1 && d[0].0 == [i, i] && d[0].1.is_one()
        })
        .collect();
    r.push(Check::equalities("grouplike-idempotent", &cfg.cases(&[grouplike.len()]), |t| {
        let e = sym.e(&b(grouplike[t[0]]));
        (cl(&e.mul(&e)), cl(&e))
    }));

    if h.antipode_inverse().is_none() {
        for id in ["E-slide-bracket", "Et-slide-bracket", "E-bracket-Et", "bracket-Et-E"] {
            r.push(Check::skipped(format!("inverse.{id}"), "antipode inverse not supplied"));
        }
        return r;
    }
    let si = |x: &[Rational]| s_inv(x).expect("antipode inverse");
    r.push(pair_rule("inverse.E-slide-bracket", &|x, k| {
        let lhs = sym.e(k).mul(&sym.br(x));
        (lhs, sym.sum2(x, |x1, x2| sym.br(x2).mul(&sym.e(&h.mul(&si(x1), k)))))
    }));
    r.push(pair_rule("inverse.Et-slide-bracket", &|x, k| {
        let lhs = sym.br(x).mul(&sym.et(k));
        (lhs, sym.sum2(x, |x1, x2| sym.et(&h.mul(k, &si(x2))).mul(&sym.br(x1))))
    }));
    r.push(pair_rule("inverse.E-bracket-Et", &|x, k| {
        let lhs = sym.e(k).mul(&sym.br(x));
        (lhs, sym.sum2(x, |x1, x2| Poly::product(&[&sym.et(&si(x2)), &sym.e(k), &sym.br(x1)])))
    }));
    r.push(pair_rule("inverse.bracket-Et-E", &|x, k| {
        let lhs = sym.br(x).mul(&sym.et(k));
        (lhs, sym.sum2(x, |x1, x2| Poly::product(&[&sym.br(x2), &sym.et(k), &sym.e(&si(x1))])))
    }));
    r
}

/// `h·a = [h₁]a[S(h₂)]` restricted to `A_par^w`, in the coordinates of
/// `ee.apar().basis()`.
///
/// Fails with an internal inconsistency if an image leaves `A_par^w` or the
/// result is not a symmetric partial action.
pub fn apar_action(hp: &HparAlgebra, ee: &EElements, cfg: &CheckConfig) -> Result<PartialAction> {
    let h = hp.base();
    let c = hp.carrier();
    let apar = ee.apar();
    let alg = c.subalgebra(apar, c.unit(), Vec::new())?;
    let mut act = Vec::with_capacity(h.dim());
    for i in 0..h.dim() {
        let mut cols = Vec::with_capacity(apar.dim());
        for a in apar.basis() {
            let image = conjugate(hp, &h.basis(i), a);
            let coords = apar.solve_membership(&image)?.ok_or_else(|| inconsistent(format!("{}·a leaves A_par^w", h.labels()[i])))?;
            cols.push(coords);
        }
        act.push(Matrix::from_columns(apar.dim(), &cols)?);
    }
    let pa = PartialAction::from_matrices(h.clone(), alg, act)?;
    let check = check_partial_action(&pa, cfg);
    if !check.is_symmetric_partial_action() {
        let id = check.report.first_failure().map_or("PA4", |f| f.id.as_str()).to_string();
        return Err(inconsistent(format!("conjugation on A_par^w is not a symmetric partial action ({id} fails)")));
    }
    Ok(pa)
}

/// `[h₁]a[S(h₂)]` in the carrier.
fn conjugate(hp: &HparAlgebra, x: &[Rational], a: &[Rational]) -> Vec<Rational> {
    let h = hp.base();
    let c = hp.carrier();
    let mut out = vec::zeros(c.dim());
    for (ix, coef) in h.coproduct_terms(x, 2) {
        let left = hp.bracket_of(&h.basis(ix[0]));
        let right = hp.bracket_of(&h.s(&h.basis(ix[1])));
        vec::axpy(&mut out, &coef, &c.product_of(&[&left, a, &right]));
    }
    out
}

/// The action from [`apar_action`] against its defining formula: the unit
/// acts trivially, `h·E_k = E_{h₁k}E_{h₂}`, and the action axioms (merged
/// under `action.`).
pub fn check_apar_action(hp: &HparAlgebra, ee: &EElements, pa: &PartialAction, cfg: &CheckConfig) -> Report {
    let h = hp.base();
    let c = hp.carrier();
    let apar = ee.apar();
    let n = h.dim();
    let embed = |coords: &[Rational]| apar.combine(coords);
    let coords = |v: &[Rational]| apar.solve_membership(v).ok().flatten();
    let mut r = Report::new();
    r.push(Check::equalities("unit", &cfg.cases(&[apar.dim()]), |t| {
        (embed(&pa.act(h.unit(), &vec::unit(apar.dim(), t[0]))), apar.basis()[t[0]].clone())
    }));
    r.push(Check::equalities("E-image", &cfg.cases(&[n, n]), |t| {
        let ek = ee.e_of(&h.basis(t[1]));
        let lhs = coords(&ek).map(|a| embed(&pa.act(&h.basis(t[0]), &a))).unwrap_or_default();
        let mut rhs = vec::zeros(c.dim());
        for (ix, coef) in h.basis_coproduct(t[0], 2) {
            let e1 = ee.e_of(&h.mul(&h.basis(ix[0]), &h.basis(t[1])));
            vec::axpy(&mut rhs, &coef, &c.mul(&e1, &ee.e_of(&h.basis(ix[1]))));
        }
        (lhs, rhs)
    }));
    let check = check_partial_action(pa, cfg);
    r.merge("action", check.report);
    r.push(check.symmetry);
    r
}
