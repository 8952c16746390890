// SPDX-License-Identifier: Apache-2.0

//! Symmetric partial module algebras as algebra objects over `H_par^w`, and
//! back.
//!
//! Starting from a symmetric partial action on `B`, `B` becomes an
//! `H_par^w`-module through `ρ`, the factorization of `h ↦ (b ↦ h·b)`, and
//! an `A_par^w`-bimodule through `E_h b = ρ(E_h)b` and `b E_h = ρ(𝒮′(E_h))b`,
//! where `𝒮′(E_h) = [h₂][S⁻¹(h₁)]`. The checks confirm that these agree with
//! multiplication by `h·1_B`, that the multiplication of `B` is balanced and
//! that `ρ` is compatible with it; reading the action back off `ρ([h])`
//! must give the original tensor.

use exactlin::{vec, Matrix, Rational};

use super::build::HparAlgebra;
use super::ecalc::{class, EElements, Symbols};
use super::factor::{relations_vanish, universal_factorization};
use super::words::Poly;
use crate::error::{input, Result};
use crate::partial::{check_partial_action, endo_rep_from_action, PartialAction, PartialRep};
use crate::report::{Check, CheckConfig, Report};

/// `ρ` applied to a polynomial in the letters, as an `m × m` matrix.
type Rho<'a> = dyn Fn(&Poly) -> Matrix + 'a;

fn unflatten(m: usize, v: &[Rational]) -> Matrix {
    Matrix::from_row_vecs(m, &v.chunks(m).map(<[Rational]>::to_vec).collect::<Vec<_>>()).expect("square endomorphism")
}

/// Round trip through `H_par^w` itself: `ρ = π̂` for the endomorphism
/// representation of `pa`. The `E_h` are taken from `ee` and cross-checked
/// against their defining words.
pub fn algebra_object_roundtrip(hp: &HparAlgebra, ee: &EElements, pa: &PartialAction, cfg: &CheckConfig) -> Result<Report> {
    if pa.hopf() != hp.base() {
        return Err(input("partial action is over a different weak Hopf algebra"));
    }
    let pr = endo_rep_from_action(pa, cfg)?;
    let fac = universal_factorization(hp, &pr, cfg)?;
    let m = pa.algebra().dim();
    let rho = |p: &Poly| unflatten(m, &fac.apply(&class(hp, p)));
    let mut r = Report::new();
    let h = hp.base();
    let sym = Symbols { h };
    r.push(Check::equalities("E-elements", &cfg.cases(&[h.dim()]), |t| {
        (ee.e_of(&h.basis(t[0])), class(hp, &sym.e(&h.basis(t[0]))))
    }));
    r.merge("factorization", fac.report.clone());
    let core = roundtrip_core(pa, &rho, cfg);
    for c in core.checks {
        r.push(c);
    }
    Ok(r)
}

/// Round trip without a carrier, for bases whose `H_par^w` has no closure
/// certificate. `ρ` is evaluated on words as the product of the letter
/// images; that this descends to `H_par^w` is exactly the vanishing of
/// every defining relation, reported under `presentation.`.
pub fn presentation_roundtrip(pa: &PartialAction, cfg: &CheckConfig) -> Result<Report> {
    let pr = endo_rep_from_action(pa, cfg)?;
    let m = pa.algebra().dim();
    let rho = |p: &Poly| word_image(&pr, m, p);
    let mut r = Report::new();
    r.merge("presentation", relations_vanish(&pr));
    let core = roundtrip_core(pa, &rho, cfg);
    for c in core.checks {
        r.push(c);
    }
    Ok(r)
}

fn word_image(pr: &PartialRep, m: usize, p: &Poly) -> Matrix {
    let letters: Vec<Matrix> = (0..pr.hopf().dim()).map(|i| unflatten(m, &pr.apply_basis(i))).collect();
    let mut acc = Matrix::zeros(m, m);
    for (w, c) in p.terms() {
        let word = w.iter().fold(Matrix::identity(m), |x, &i| x.mul(&letters[i]).expect("square"));
        acc = acc.add(&word.scale(c)).expect("square");
    }
    acc
}

fn roundtrip_core(pa: &PartialAction, rho: &Rho<'_>, cfg: &CheckConfig) -> Report {
    let h = pa.hopf();
    let b = pa.algebra();
    let (n, m) = (h.dim(), b.dim());
    let sym = Symbols { h };
    let basis = |i: usize| b.basis(i);
    let on = |x: &Matrix, v: &[Rational]| x.mul_vec(v).expect("dimension of B");
    let one = b.unit().to_vec();
    let h1 = |i: usize| pa.act(&h.basis(i), &one);

    let e_left: Vec<Matrix> = (0..n).map(|i| rho(&sym.e(&h.basis(i)))).collect();
    let e_right: Option<Vec<Matrix>> = h.antipode_inverse().map(|_| {
        (0..n)
            .map(|i| {
                let p = sym.sum2(&h.basis(i), |x1, x2| sym.br(x2).mul(&Poly::letter(&h.s_inv(x1).expect("antipode inverse"))));
                rho(&p)
            })
            .collect()
    });
    let bracket: Vec<Matrix> = (0..n).map(|i| rho(&sym.br(&h.basis(i)))).collect();
    let mut r = Report::new();

    r.push(Check::equalities("left-E", &cfg.cases(&[n, m]), |t| (on(&e_left[t[0]], &basis(t[1])), b.mul(&h1(t[0]), &basis(t[1])))));
    r.push(Check::equalities("left-linear", &cfg.cases(&[n, m, m]), |t| {
        let lhs = on(&e_left[t[0]], &b.mul(&basis(t[1]), &basis(t[2])));
        (lhs, b.mul(&on(&e_left[t[0]], &basis(t[1])), &basis(t[2])))
    }));
    r.push(Check::equalities("unit-bracket", &cfg.cases(&[n]), |t| (on(&bracket[t[0]], &one), on(&e_left[t[0]], &one))));
    match &e_right {
        Some(e_right) => {
            r.push(Check::equalities("right-E", &cfg.cases(&[n, m]), |t| {
                (on(&e_right[t[0]], &basis(t[1])), b.mul(&basis(t[1]), &h1(t[0])))
            }));
            r.push(Check::equalities("right-linear", &cfg.cases(&[n, m, m]), |t| {
                let lhs = on(&e_right[t[0]], &b.mul(&basis(t[1]), &basis(t[2])));
                (lhs, b.mul(&basis(t[1]), &on(&e_right[t[0]], &basis(t[2]))))
            }));
            r.push(Check::equalities("unit-E", &cfg.cases(&[n]), |t| (on(&e_left[t[0]], &one), on(&e_right[t[0]], &one))));
            r.push(Check::equalities("balanced", &cfg.cases(&[n, m, m]), |t| {
                let lhs = b.mul(&on(&e_right[t[0]], &basis(t[1])), &basis(t[2]));
                (lhs, b.mul(&basis(t[1]), &on(&e_left[t[0]], &basis(t[2]))))
            }));
        }
        None => {
            for id in ["right-E", "right-linear", "unit-E", "balanced"] {
                r.push(Check::skipped(id, "antipode inverse not supplied"));
            }
        }
    }
    r.push(Check::equalities("module-algebra", &cfg.cases(&[n, m, m]), |t| {
        let lhs = on(&bracket[t[0]], &b.mul(&basis(t[1]), &basis(t[2])));
        let mut rhs = vec::zeros(m);
        for (ix, c) in h.basis_coproduct(t[0], 2) {
            vec::axpy(&mut rhs, &c, &b.mul(&on(&bracket[ix[0]], &basis(t[1])), &on(&bracket[ix[1]], &basis(t[2]))));
        }
        (lhs, rhs)
    }));

    let recovered = PartialAction::from_matrices(h.clone(), b.clone(), bracket.clone()).expect("shapes of B");
    r.push(Check::from_bool(
        "roundtrip",
        recovered.matrices() == pa.matrices(),
        "action read back from ρ([h]) against the original tensor",
    ));
    let again = check_partial_action(&recovered, cfg);
    r.merge("recovered", again.report);
    let mut sym_check = again.symmetry;
    sym_check.id = format!("recovered.{}", sym_check.id);
    r.push(sym_check);
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{groupoid_algebra, FiniteGroupoid};
    use crate::hpar::{build_hpar, e_calculus};

    #[test]
    fn global_action_round_trips() {
        let cfg = CheckConfig::default();
        let h = groupoid_algebra(&FiniteGroupoid::cyclic(2));
        let hp = build_hpar(&h, 6).unwrap();
        let ee = e_calculus(&hp).unwrap();
        let pa = PartialAction::dual_regular(&h);
        let r = algebra_object_roundtrip(&hp, &ee, &pa, &cfg).unwrap();
        assert!(r.passed(), "{:?}", r.first_failure());
        let p = presentation_roundtrip(&pa, &cfg).unwrap();
        assert!(p.passed(), "{:?}", p.first_failure());
    }
}
