// SPDX-License-Identifier: Apache-2.0

use exactlin::{vec, Matrix, Rational};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::action::{check_partial_action, PartialAction};
use super::sweedler_sum;
use crate::algebra::FinDimAlgebra;
use crate::error::{inconsistent, input, precondition, Result};
use crate::report::{Check, CheckConfig, Report};
use crate::wha::{canonical_projections, WeakHopfAlgebra};

/// A linear map `π: H → B` into a finite-dimensional algebra, given by its
/// `dim B × dim H` matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialRep {
    h: WeakHopfAlgebra,
    target: FinDimAlgebra,
    pi: Matrix,
}

impl PartialRep {
    pub fn new(h: WeakHopfAlgebra, target: FinDimAlgebra, pi: Matrix) -> Result<Self> {
        if pi.rows() != target.dim() || pi.cols() != h.dim() {
            return Err(input(format!(
                "map is {}x{}, expected {}x{}",
                pi.rows(),
                pi.cols(),
                target.dim(),
                h.dim()
            )));
        }
        Ok(PartialRep { h, target, pi })
    }

    /// `π = id: H → H`.
    pub fn identity(h: &WeakHopfAlgebra) -> Self {
        PartialRep { h: h.clone(), target: h.alg().clone(), pi: Matrix::identity(h.dim()) }
    }

    /// A functional `H → ℚ` given by its values on the basis.
    pub fn scalar(h: &WeakHopfAlgebra, values: &[Rational]) -> Result<Self> {
        let pi = Matrix::from_row_vecs(h.dim(), &[values.to_vec()])?;
        Self::new(h.clone(), FinDimAlgebra::ground_field(), pi)
    }

    pub fn hopf(&self) -> &WeakHopfAlgebra {
        &self.h
    }

    pub fn target(&self) -> &FinDimAlgebra {
        &self.target
    }

    pub fn matrix(&self) -> &Matrix {
        &self.pi
    }

    pub fn apply(&self, v: &[Rational]) -> Vec<Rational> {
        self.pi.mul_vec(v).expect("dimension of H")
    }

    pub fn apply_basis(&self, i: usize) -> Vec<Rational> {
        self.pi.column(i)
    }

    fn p_s(&self, i: usize) -> Vec<Rational> {
        self.apply(&self.h.antipode().column(i))
    }

    fn mul(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        self.target.mul(x, y)
    }

    fn mul3(&self, x: &[Rational], y: &[Rational], z: &[Rational]) -> Vec<Rational> {
        self.target.mul3(x, y, z)
    }
}

/// PR1–PR6 on all basis elements and basis pairs.
pub fn check_partial_rep(pr: &PartialRep, cfg: &CheckConfig) -> Report {
    let h = &pr.h;
    let n = h.dim();
    let d = pr.target.dim();
    let p = |v: &[Rational]| pr.apply(v);
    let e = |i: usize| h.basis(i);
    let pb = |i: usize| pr.apply_basis(i);
    let s = |i: usize| h.antipode().column(i);
    let pairs = cfg.cases(&[n, n]);
    let mut r = Report::new();

    r.push(Check::equalities("PR1", &cfg.cases(&[1]), |_| (p(h.unit()), pr.target.unit().to_vec())));
    r.push(Check::equalities("PR2", &pairs, |t| {
        let terms = h.basis_coproduct(t[1], 2);
        let lhs = sweedler_sum(d, &terms, |ix| pr.mul3(&pb(t[0]), &pb(ix[0]), &pr.p_s(ix[1])));
        let rhs = sweedler_sum(d, &terms, |ix| pr.mul(&p(&h.mul(&e(t[0]), &e(ix[0]))), &pr.p_s(ix[1])));
        (lhs, rhs)
    }));
    r.push(Check::equalities("PR3", &pairs, |t| {
        let terms = h.basis_coproduct(t[1], 2);
        let lhs = sweedler_sum(d, &terms, |ix| pr.mul3(&pb(t[0]), &pr.p_s(ix[0]), &pb(ix[1])));
        let rhs = sweedler_sum(d, &terms, |ix| pr.mul(&p(&h.mul(&e(t[0]), &s(ix[0]))), &pb(ix[1])));
        (lhs, rhs)
    }));
    r.push(Check::equalities("PR4", &pairs, |t| {
        let terms = h.basis_coproduct(t[0], 2);
        let lhs = sweedler_sum(d, &terms, |ix| pr.mul3(&pb(ix[0]), &pr.p_s(ix[1]), &pb(t[1])));
        let rhs = sweedler_sum(d, &terms, |ix| pr.mul(&pb(ix[0]), &p(&h.mul(&s(ix[1]), &e(t[1])))));
        (lhs, rhs)
    }));
    r.push(Check::equalities("PR5", &pairs, |t| {
        let terms = h.basis_coproduct(t[0], 2);
        let lhs = sweedler_sum(d, &terms, |ix| pr.mul3(&pr.p_s(ix[0]), &pb(ix[1]), &pb(t[1])));
        let rhs = sweedler_sum(d, &terms, |ix| pr.mul(&pr.p_s(ix[0]), &p(&h.mul(&e(ix[1]), &e(t[1])))));
        (lhs, rhs)
    }));
    r.push(Check::equalities("PR6", &cfg.cases(&[n]), |t| {
        let rhs = sweedler_sum(d, &h.basis_coproduct(t[0], 3), |ix| pr.mul3(&pb(ix[0]), &pr.p_s(ix[1]), &pb(ix[2])));
        (pb(t[0]), rhs)
    }));
    r
}

/// Truth values of the equivalent conditions, in order (i)–(iv) and, when
/// `S⁻¹` is available, (v)–(vii).
fn equivalent_conditions(pr: &PartialRep) -> Vec<(&'static str, bool)> {
    let h = &pr.h;
    let n = h.dim();
    let d = pr.target.dim();
    let pb = |i: usize| pr.apply_basis(i);
    let p = |v: &[Rational]| pr.apply(v);
    let one_b = pr.target.unit().to_vec();
    let unit_terms = h.coproduct_terms(h.unit(), 2);

    let mut out = Vec::new();
    out.push((
        "(i) π(h) = π(h₁)π(S(h₂))π(h₃)",
        (0..n).all(|i| {
            pb(i) == sweedler_sum(d, &h.basis_coproduct(i, 3), |ix| pr.mul3(&pb(ix[0]), &pr.p_s(ix[1]), &pb(ix[2])))
        }),
    ));
    out.push(("(ii) π(1₁)π(S(1₂)) = 1", sweedler_sum(d, &unit_terms, |ix| pr.mul(&pb(ix[0]), &pr.p_s(ix[1]))) == one_b));
    out.push(("(iii) π(S(1₁))π(1₂) = 1", sweedler_sum(d, &unit_terms, |ix| pr.mul(&pr.p_s(ix[0]), &pb(ix[1]))) == one_b));
    out.push((
        "(iv) π(S(h)) = π(S(h₁))π(h₂)π(S(h₃))",
        (0..n).all(|i| {
            pr.p_s(i)
                == sweedler_sum(d, &h.basis_coproduct(i, 3), |ix| pr.mul3(&pr.p_s(ix[0]), &pb(ix[1]), &pr.p_s(ix[2])))
        }),
    ));
    if let Some(sinv) = h.antipode_inverse() {
        let p_si = |i: usize| p(&sinv.column(i));
        out.push((
            "(v) π(h) = π(h₃)π(S⁻¹(h₂))π(h₁)",
            (0..n).all(|i| {
                pb(i) == sweedler_sum(d, &h.basis_coproduct(i, 3), |ix| pr.mul3(&pb(ix[2]), &p_si(ix[1]), &pb(ix[0])))
            }),
        ));
        out.push(("(vi) π(S⁻¹(1₂))π(1₁) = 1", sweedler_sum(d, &unit_terms, |ix| pr.mul(&p_si(ix[1]), &pb(ix[0]))) == one_b));
        out.push(("(vii) π(1₂)π(S⁻¹(1₁)) = 1", sweedler_sum(d, &unit_terms, |ix| pr.mul(&pb(ix[1]), &p_si(ix[0]))) == one_b));
    }
    out
}

/// For a map satisfying PR1–PR5, evaluates the equivalent forms of PR6 and
/// checks that they all have the same truth value.
pub fn six_equiv_suite(pr: &PartialRep, cfg: &CheckConfig) -> Report {
    let base = check_partial_rep(pr, cfg);
    let mut r = Report::new();
    let prefix_ok = ["PR1", "PR2", "PR3", "PR4", "PR5"].iter().all(|id| base.get(id).is_some_and(Check::passed));
    if !prefix_ok {
        r.push(Check::skipped("equivalent", "PR1–PR5 do not all hold"));
        return r;
    }
    let conds = equivalent_conditions(pr);
    let agree = conds.iter().all(|(_, v)| *v == conds[0].1);
    let note = conds.iter().map(|(name, v)| format!("{name}: {v}")).collect::<Vec<_>>().join("; ");
    r.push(Check::from_bool("equivalent", agree, note));
    r
}

/// Result of the search for a functional satisfying PR1–PR5 but not PR6.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome {
    /// A counterexample, with the truth values of the equivalent conditions.
    Found { values: Vec<Rational>, conditions: Vec<bool> },
    NotFound { candidates: usize, seed: u64 },
}

/// Looks for `π: H → ℚ` with PR1–PR5 but not PR6. Small-integer value
/// vectors are enumerated exhaustively while the space is small, otherwise
/// sampled with a seeded generator; the coordinate of one basis element in the
/// support of `1_H` is solved for so that PR1 always holds.
pub fn pr6_counterexample_search(h: &WeakHopfAlgebra, seed: u64, budget: usize) -> Result<SearchOutcome> {
    let n = h.dim();
    let unit = h.unit();
    let pivot = unit.iter().position(|c| !c.is_zero()).ok_or_else(|| input("unit of H is zero"))?;
    let free: Vec<usize> = (0..n).filter(|&i| i != pivot).collect();
    let palette = [-1i64, 0, 1, 2];
    let exhaustive = (palette.len() as f64).powi(free.len() as i32) <= budget as f64;
    let total = if exhaustive { palette.len().pow(free.len() as u32) } else { budget };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let strict = CheckConfig::exhaustive();
    for attempt in 0..total {
        let mut values = vec::zeros(n);
        let mut code = attempt;
        for &i in &free {
            let pick = if exhaustive {
                let k = code % palette.len();
                code /= palette.len();
                k
            } else {
                rng.gen_range(0..palette.len())
            };
            values[i] = Rational::from_int(palette[pick]);
        }
        // π(1_H) = 1 fixes the pivot coordinate.
        let rest: Rational = free.iter().map(|&i| &unit[i] * &values[i]).sum();
        values[pivot] = (Rational::one() - rest) / unit[pivot].clone();
        let pr = PartialRep::scalar(h, &values)?;
        let report = check_partial_rep(&pr, &strict);
        let prefix_ok = ["PR2", "PR3", "PR4", "PR5"].iter().all(|id| report.get(id).is_some_and(Check::passed));
        if prefix_ok && report.get("PR6").is_some_and(Check::failed) {
            let conditions = equivalent_conditions(&pr).into_iter().map(|(_, v)| v).collect();
            return Ok(SearchOutcome::Found { values, conditions });
        }
    }
    Ok(SearchOutcome::NotFound { candidates: total, seed })
}

/// The three characterisations of a global representation and whether `π`
/// is one.
#[derive(Clone, Debug)]
pub struct Globality {
    pub global: bool,
    /// `[ε_t-condition, ε_s-condition, multiplicativity]`
    pub conditions: [bool; 3],
    pub report: Report,
}

pub fn globality_criterion(pr: &PartialRep) -> Globality {
    let h = &pr.h;
    let n = h.dim();
    let d = pr.target.dim();
    let pb = |i: usize| pr.apply_basis(i);
    let p = |v: &[Rational]| pr.apply(v);
    let s = |i: usize| h.antipode().column(i);

    let target_cond = (0..n).all(|i| {
        let terms = h.basis_coproduct(i, 2);
        let a = sweedler_sum(d, &terms, |ix| pr.mul(&pb(ix[0]), &pr.p_s(ix[1])));
        let b = p(&sweedler_sum(n, &terms, |ix| h.mul(&h.basis(ix[0]), &s(ix[1]))));
        let c = p(&h.eps_t(&h.basis(i)));
        a == b && b == c
    });
    let source_cond = (0..n).all(|i| {
        let terms = h.basis_coproduct(i, 2);
        let a = sweedler_sum(d, &terms, |ix| pr.mul(&pr.p_s(ix[0]), &pb(ix[1])));
        let b = p(&sweedler_sum(n, &terms, |ix| h.mul(&s(ix[0]), &h.basis(ix[1]))));
        let c = p(&h.eps_s(&h.basis(i)));
        a == b && b == c
    });
    let multiplicative =
        (0..n).all(|i| (0..n).all(|j| pr.mul(&pb(i), &pb(j)) == p(&h.mul(&h.basis(i), &h.basis(j)))));
    let conditions = [target_cond, source_cond, multiplicative];
    let agree = conditions.iter().all(|&c| c == multiplicative);
    let mut report = Report::new();
    report.push(Check::from_bool(
        "equivalent",
        agree,
        format!("ε_t-condition: {target_cond}; ε_s-condition: {source_cond}; multiplicative: {multiplicative}"),
    ));
    Globality { global: multiplicative, conditions, report }
}

/// `π(w)π(h) = π(wh)`, `π(h)π(z) = π(hz)`, `π(z)π(h) = π(zh)`,
/// `π(h)π(w) = π(hw)` for `w` in a basis of `H_s`, `z` in a basis of `H_t`.
pub fn hs_ht_suite(pr: &PartialRep, cfg: &CheckConfig) -> Report {
    let h = &pr.h;
    let n = h.dim();
    let mut r = Report::new();
    let proj = match canonical_projections(h) {
        Ok(p) => p,
        Err(e) => {
            r.push(Check::fail("projections", e.to_string()));
            return r;
        }
    };
    let p = |v: &[Rational]| pr.apply(v);
    let side = |id: &str, basis: &[Vec<Rational>], special_left: bool| {
        Check::equalities(id, &cfg.cases(&[basis.len(), n]), |t| {
            let (x, y) = (&basis[t[0]], h.basis(t[1]));
            if special_left {
                (pr.mul(&p(x), &p(&y)), p(&h.mul(x, &y)))
            } else {
                (pr.mul(&p(&y), &p(x)), p(&h.mul(&y, x)))
            }
        })
    };
    r.push(side("source.left", proj.hs.basis(), true));
    r.push(side("target.right", proj.ht.basis(), false));
    r.push(side("target.left", proj.ht.basis(), true));
    r.push(side("source.right", proj.hs.basis(), false));
    r
}

/// `π(h) = (a ↦ h · a)` as a map into `End(A)` (matrix units, row-major).
/// Requires a symmetric partial action; the result is checked.
pub fn endo_rep_from_action(pa: &PartialAction, cfg: &CheckConfig) -> Result<PartialRep> {
    let check = check_partial_action(pa, cfg);
    if !check.is_partial_action() {
        let id = check.report.first_failure().map(|c| c.id.clone()).unwrap_or_default();
        return Err(precondition(format!("not a partial action ({id} fails)")));
    }
    if !check.symmetric {
        return Err(precondition("partial action is not symmetric"));
    }
    let h = pa.hopf();
    let m = pa.algebra().dim();
    let cols: Vec<Vec<Rational>> = pa.matrices().iter().map(|x| x.row_vecs().concat()).collect();
    let pi = Matrix::from_columns(m * m, &cols)?;
    let pr = PartialRep::new(h.clone(), FinDimAlgebra::endomorphisms(m), pi)?;
    let report = check_partial_rep(&pr, cfg);
    if let Some(f) = report.first_failure() {
        return Err(inconsistent(format!("induced map fails {} although the action is symmetric", f.id)));
    }
    Ok(pr)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{groupoid_algebra, sweedler_pair, FiniteGroupoid};

    fn ints(v: &[i64]) -> Vec<Rational> {
        vec::from_ints(v)
    }

    #[test]
    fn identity_reps_are_global_partial_reps() {
        let cfg = CheckConfig::default();
        for h in [
            groupoid_algebra(&FiniteGroupoid::cyclic(2)),
            groupoid_algebra(&FiniteGroupoid::discrete(2)),
            groupoid_algebra(&FiniteGroupoid::pair(2)),
            sweedler_pair(),
        ] {
            let pr = PartialRep::identity(&h);
            assert!(check_partial_rep(&pr, &cfg).passed());
            assert!(six_equiv_suite(&pr, &cfg).passed());
            let g = globality_criterion(&pr);
            assert!(g.global && g.report.passed());
            assert!(hs_ht_suite(&pr, &cfg).passed());
        }
    }

    #[test]
    fn idempotent_functional_on_z2_is_partial_but_not_global() {
        // π(e) = 1, π(g) = 0: PR axioms by direct evaluation, π(g)² = 0 ≠ π(g²) = 1.
        let h = groupoid_algebra(&FiniteGroupoid::cyclic(2));
        let pr = PartialRep::scalar(&h, &ints(&[1, 0])).unwrap();
        assert!(check_partial_rep(&pr, &CheckConfig::default()).passed());
        let g = globality_criterion(&pr);
        assert!(!g.global);
        assert_eq!(g.conditions, [false, false, false]);
        assert!(g.report.passed());
    }

    #[test]
    fn arbitrary_functional_fails_with_witness() {
        let h = groupoid_algebra(&FiniteGroupoid::cyclic(2));
        let pr = PartialRep::scalar(&h, &ints(&[1, 3])).unwrap();
        let r = check_partial_rep(&pr, &CheckConfig::default());
        let f = r.first_failure().unwrap();
        assert!(f.witness.is_some());
    }

    #[test]
    fn sweedler_block_functional() {
        // π(e_1) = 1 and 0 elsewhere.
        let h = sweedler_pair();
        let mut values = vec::zeros(8);
        values[0] = Rational::one();
        let pr = PartialRep::scalar(&h, &values).unwrap();
        let cfg = CheckConfig::default();
        assert!(check_partial_rep(&pr, &cfg).passed());
        assert!(six_equiv_suite(&pr, &cfg).passed());
        assert!(hs_ht_suite(&pr, &cfg).passed());
        assert!(!globality_criterion(&pr).global);
        // π(e_1)π(e_h) = π(e_h), with e_1 in H_s.
        assert_eq!(pr.apply(&h.mul(&h.basis(0), &h.basis(3))), pr.apply_basis(3));
    }

    #[test]
    fn counterexample_search_is_deterministic() {
        let h = groupoid_algebra(&FiniteGroupoid::discrete(2));
        let a = pr6_counterexample_search(&h, 7, 500).unwrap();
        let b = pr6_counterexample_search(&h, 7, 500).unwrap();
        assert_eq!(a, b);
        if let SearchOutcome::Found { conditions, .. } = a {
            assert!(conditions.iter().all(|c| !c));
        }
    }

    #[test]
    fn endomorphism_rep_of_dual_regular_action_is_regular() {
        let h = groupoid_algebra(&FiniteGroupoid::cyclic(2));
        let pa = PartialAction::dual_regular(&h);
        let pr = endo_rep_from_action(&pa, &CheckConfig::default()).unwrap();
        // g acts on functions by translation: a permutation matrix with zero diagonal.
        assert_eq!(pr.apply_basis(1), ints(&[0, 1, 1, 0]));
        assert!(globality_criterion(&pr).global);
    }
}
