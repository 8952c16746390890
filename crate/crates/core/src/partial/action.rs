// SPDX-License-Identifier: Apache-2.0

use exactlin::{vec, Matrix, Rational};

use super::sweedler_sum;
use crate::algebra::FinDimAlgebra;
use crate::error::{input, Result};
use crate::report::{Check, CheckConfig, Report};
use crate::wha::{canonical_projections, WeakHopfAlgebra};

/// A linear map `H ⊗ A → A`, stored as one `dim A × dim A` matrix per basis
/// element of `H` (column `j` of `act[i]` is `e_i · a_j`).
///
/// Construction only checks shapes; whether the map is a (symmetric) partial
/// action is decided by [`check_partial_action`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialAction {
    h: WeakHopfAlgebra,
    a: FinDimAlgebra,
    act: Vec<Matrix>,
}

impl PartialAction {
    /// From `(i, j, k, c)` terms: `c·a_k` occurs in `e_i · a_j`.
    pub fn new(
        h: WeakHopfAlgebra,
        a: FinDimAlgebra,
        terms: impl IntoIterator<Item = (usize, usize, usize, Rational)>,
    ) -> Result<Self> {
        let (n, m) = (h.dim(), a.dim());
        let mut act = vec![Matrix::zeros(m, m); n];
        for (i, j, k, c) in terms {
            if i >= n || j >= m || k >= m {
                return Err(input(format!("action term ({i},{j},{k}) out of range")));
            }
            let old = act[i].get(k, j).clone();
            act[i].set(k, j, old + c);
        }
        Ok(PartialAction { h, a, act })
    }

    pub fn from_matrices(h: WeakHopfAlgebra, a: FinDimAlgebra, act: Vec<Matrix>) -> Result<Self> {
        let m = a.dim();
        if act.len() != h.dim() {
            return Err(input(format!("{} action matrices for dim H = {}", act.len(), h.dim())));
        }
        if act.iter().any(|x| x.rows() != m || x.cols() != m) {
            return Err(input(format!("action matrices must be {m}x{m}")));
        }
        Ok(PartialAction { h, a, act })
    }

    /// `h · λ = ε(h)λ` on the ground field. A partial action exactly when
    /// `ε(1_H) = 1`, i.e. essentially in the Hopf case.
    pub fn counit(h: &WeakHopfAlgebra) -> Self {
        let act = (0..h.dim()).map(|i| Matrix::from_row_vecs(1, &[vec![h.coalg().counit()[i].clone()]]).expect("1x1")).collect();
        PartialAction { h: h.clone(), a: FinDimAlgebra::ground_field(), act }
    }

    /// The global action `(h ⇀ f)(x) = f(xh)` of `H` on its dual algebra
    /// `H*` (basis dual to that of `H`, convolution product, unit ε).
    pub fn dual_regular(h: &WeakHopfAlgebra) -> Self {
        let n = h.dim();
        let mut terms = Vec::new();
        for k in 0..n {
            for (jl, c) in h.coalg().delta_basis(k).iter() {
                terms.push((jl / n, jl % n, k, c.clone()));
            }
        }
        let labels = h.labels().iter().map(|l| format!("δ[{l}]")).collect();
        let dual = FinDimAlgebra::new(n, labels, h.coalg().counit().to_vec(), terms).expect("dual structure in range");
        // e_g ⇀ δ_i = Σ_x [coefficient of e_i in e_x e_g] δ_x
        let mut act = vec![Matrix::zeros(n, n); n];
        for (x, g, i, c) in h.alg().structure_terms() {
            let old = act[g].get(x, i).clone();
            act[g].set(x, i, old + c);
        }
        PartialAction { h: h.clone(), a: dual, act }
    }

    pub fn hopf(&self) -> &WeakHopfAlgebra {
        &self.h
    }

    pub fn algebra(&self) -> &FinDimAlgebra {
        &self.a
    }

    pub fn matrices(&self) -> &[Matrix] {
        &self.act
    }

    /// Matrix of `a ↦ h · a`.
    pub fn operator(&self, h: &[Rational]) -> Matrix {
        let m = self.a.dim();
        let mut out = Matrix::zeros(m, m);
        for (i, c) in h.iter().enumerate() {
            if !c.is_zero() {
                out = out.add(&self.act[i].scale(c)).expect("same shape");
            }
        }
        out
    }

    pub fn act(&self, h: &[Rational], a: &[Rational]) -> Vec<Rational> {
        let mut out = vec::zeros(self.a.dim());
        for (i, c) in h.iter().enumerate() {
            if !c.is_zero() {
                vec::axpy(&mut out, c, &self.act[i].mul_vec(a).expect("dimension of A"));
            }
        }
        out
    }

    fn act_basis(&self, i: usize, a: &[Rational]) -> Vec<Rational> {
        self.act[i].mul_vec(a).expect("dimension of A")
    }

    /// The action tensor as sorted `(i, j, k, c)` terms.
    pub fn terms(&self) -> Vec<(usize, usize, usize, Rational)> {
        let m = self.a.dim();
        let mut out = Vec::new();
        for (i, x) in self.act.iter().enumerate() {
            for j in 0..m {
                for k in 0..m {
                    let c = x.get(k, j);
                    if !c.is_zero() {
                        out.push((i, j, k, c.clone()));
                    }
                }
            }
        }
        out
    }
}

/// Outcome of [`check_partial_action`]. `report` holds the partial-action
/// axioms and their consequences; symmetry is reported separately because a
/// non-symmetric partial action is still a partial action.
#[derive(Clone, Debug)]
pub struct ActionCheck {
    pub report: Report,
    pub symmetric: bool,
    pub symmetry: Check,
}

impl ActionCheck {
    pub fn is_partial_action(&self) -> bool {
        self.report.passed()
    }

    pub fn is_symmetric_partial_action(&self) -> bool {
        self.report.passed() && self.symmetric
    }
}

/// PA1–PA3 on basis tuples, PA4 for the symmetric flag, and the two standard
/// consequences: `(h·a)(k·b) = (1₁h·a)(1₂k·b)` and `w·(h·a) = wh·a` for `w`
/// in `H_s` (and in `H_t` when the action is symmetric).
pub fn check_partial_action(pa: &PartialAction, cfg: &CheckConfig) -> ActionCheck {
    let h = &pa.h;
    let alg = &pa.a;
    let (n, m) = (h.dim(), alg.dim());
    let one_a = alg.unit().to_vec();
    let b = |j: usize| alg.basis(j);
    let mut r = Report::new();

    r.push(Check::equalities("PA1", &cfg.cases(&[n, m, m]), |t| {
        let lhs = pa.act_basis(t[0], &alg.mul(&b(t[1]), &b(t[2])));
        let rhs = sweedler_sum(m, &h.basis_coproduct(t[0], 2), |ix| {
            alg.mul(&pa.act_basis(ix[0], &b(t[1])), &pa.act_basis(ix[1], &b(t[2])))
        });
        (lhs, rhs)
    }));
    r.push(Check::equalities("PA2", &cfg.cases(&[m]), |t| (pa.act(h.unit(), &b(t[0])), b(t[0]))));

    let nested = |t: &[usize]| pa.act_basis(t[0], &pa.act_basis(t[1], &b(t[2])));
    r.push(Check::equalities("PA3", &cfg.cases(&[n, n, m]), |t| {
        let rhs = sweedler_sum(m, &h.basis_coproduct(t[0], 2), |ix| {
            let left = pa.act_basis(ix[0], &one_a);
            let right = pa.act(&h.mul(&h.basis(ix[1]), &h.basis(t[1])), &b(t[2]));
            alg.mul(&left, &right)
        });
        (nested(t), rhs)
    }));
    let symmetry = Check::equalities("PA4", &cfg.cases(&[n, n, m]), |t| {
        let rhs = sweedler_sum(m, &h.basis_coproduct(t[0], 2), |ix| {
            let left = pa.act(&h.mul(&h.basis(ix[0]), &h.basis(t[1])), &b(t[2]));
            alg.mul(&left, &pa.act_basis(ix[1], &one_a))
        });
        (nested(t), rhs)
    });
    let symmetric = symmetry.passed();

    r.push(Check::equalities("unit-split", &cfg.cases(&[n, n, m, m]), |t| {
        let lhs = alg.mul(&pa.act_basis(t[0], &b(t[2])), &pa.act_basis(t[1], &b(t[3])));
        let rhs = sweedler_sum(m, &h.coproduct_terms(h.unit(), 2), |ix| {
            let x = pa.act(&h.mul(&h.basis(ix[0]), &h.basis(t[0])), &b(t[2]));
            let y = pa.act(&h.mul(&h.basis(ix[1]), &h.basis(t[1])), &b(t[3]));
            alg.mul(&x, &y)
        });
        (lhs, rhs)
    }));

    match canonical_projections(h) {
        Ok(p) => {
            let counital = |id: &str, basis: &[Vec<Rational>]| {
                Check::equalities(id, &cfg.cases(&[basis.len(), n, m]), |t| {
                    let w = &basis[t[0]];
                    let lhs = pa.act(w, &pa.act_basis(t[1], &b(t[2])));
                    let rhs = pa.act(&h.mul(w, &h.basis(t[1])), &b(t[2]));
                    (lhs, rhs)
                })
            };
            r.push(counital("source-global", p.hs.basis()));
            if symmetric {
                r.push(counital("target-global", p.ht.basis()));
            } else {
                r.push(Check::skipped("target-global", "action is not symmetric"));
            }
        }
        Err(e) => r.push(Check::fail("source-global", format!("canonical projections unavailable: {e}"))),
    }
    ActionCheck { report: r, symmetric, symmetry }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{groupoid_algebra, sweedler_pair, FiniteGroupoid};

    #[test]
    fn counit_action_of_a_group_is_symmetric() {
        let h = groupoid_algebra(&FiniteGroupoid::cyclic(2));
        let c = check_partial_action(&PartialAction::counit(&h), &CheckConfig::default());
        assert!(c.is_symmetric_partial_action(), "{:?}", c.report.first_failure());
    }

    #[test]
    fn counit_action_needs_counital_unit() {
        // ε(1_H) = 2 for two objects, so 1_H · 1 = 2 ≠ 1.
        let h = groupoid_algebra(&FiniteGroupoid::discrete(2));
        let c = check_partial_action(&PartialAction::counit(&h), &CheckConfig::default());
        assert!(c.report.get("PA2").unwrap().failed());
    }

    #[test]
    fn dual_regular_actions_are_global() {
        for h in [
            groupoid_algebra(&FiniteGroupoid::cyclic(3)),
            groupoid_algebra(&FiniteGroupoid::pair(2)),
            sweedler_pair(),
        ] {
            let pa = PartialAction::dual_regular(&h);
            let c = check_partial_action(&pa, &CheckConfig::default());
            assert!(c.is_symmetric_partial_action(), "{:?}", c.report.first_failure());
        }
    }

    #[test]
    fn action_terms_round_trip() {
        let h = groupoid_algebra(&FiniteGroupoid::cyclic(2));
        let pa = PartialAction::dual_regular(&h);
        let again = PartialAction::new(h, pa.algebra().clone(), pa.terms()).unwrap();
        assert_eq!(again, pa);
        assert!(PartialAction::new(again.hopf().clone(), again.algebra().clone(), [(5, 0, 0, Rational::one())]).is_err());
    }
}
