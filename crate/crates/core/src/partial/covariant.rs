// SPDX-License-Identifier: Apache-2.0

use exactlin::{Matrix, Rational};

use super::action::PartialAction;
use super::rep::{check_partial_rep, endo_rep_from_action, PartialRep};
use super::smash::{phi0, pi0, SmashProduct};
use super::sweedler_sum;
use crate::algebra::FinDimAlgebra;
use crate::error::{inconsistent, input, precondition, Result};
use crate::report::{Check, CheckConfig, Report};

/// An algebra map `φ: A → B` (matrix `dim B × dim A`) and a partial
/// representation `π: H → B` for a given partial action of `H` on `A`.
#[derive(Clone, Debug)]
pub struct CovariantPair {
    action: PartialAction,
    phi: Matrix,
    pi: PartialRep,
}

impl CovariantPair {
    pub fn new(action: PartialAction, phi: Matrix, pi: PartialRep) -> Result<Self> {
        if pi.hopf() != action.hopf() {
            return Err(input("partial representation and action use different weak Hopf algebras"));
        }
        if phi.rows() != pi.target().dim() || phi.cols() != action.algebra().dim() {
            return Err(input(format!(
                "phi is {}x{}, expected {}x{}",
                phi.rows(),
                phi.cols(),
                pi.target().dim(),
                action.algebra().dim()
            )));
        }
        Ok(CovariantPair { action, phi, pi })
    }

    /// `(φ₀, π₀)` into the partial smash product.
    pub fn canonical(sp: &SmashProduct) -> Self {
        CovariantPair { action: sp.action().clone(), phi: phi0(sp), pi: pi0(sp) }
    }

    /// `φ(a) = left multiplication by a` and `π(h) = (a ↦ h·a)`, both in
    /// `End(A)`.
    pub fn endomorphism(pa: &PartialAction, cfg: &CheckConfig) -> Result<Self> {
        let pi = endo_rep_from_action(pa, cfg)?;
        let a = pa.algebra();
        let cols: Vec<Vec<Rational>> = (0..a.dim()).map(|i| a.left_mult(&a.basis(i)).row_vecs().concat()).collect();
        let phi = Matrix::from_columns(a.dim() * a.dim(), &cols)?;
        Ok(CovariantPair { action: pa.clone(), phi, pi })
    }

    pub fn action(&self) -> &PartialAction {
        &self.action
    }

    pub fn phi(&self) -> &Matrix {
        &self.phi
    }

    pub fn pi(&self) -> &PartialRep {
        &self.pi
    }

    pub fn target(&self) -> &FinDimAlgebra {
        self.pi.target()
    }

    fn phi_of(&self, a: &[Rational]) -> Vec<Rational> {
        self.phi.mul_vec(a).expect("dimension of A")
    }

    /// Multiplies a chain of target elements left to right.
    fn prod(&self, xs: &[&[Rational]]) -> Vec<Rational> {
        self.target().product_of(xs)
    }

    /// Scaling the algebra map is the cheapest way to break a pair; kept
    /// public for perturbation tests and the CLI.
    pub fn with_phi_scaled(&self, c: &Rational) -> Self {
        CovariantPair { phi: self.phi.scale(c), ..self.clone() }
    }
}

/// `φ` multiplicative and unital, `π` a partial representation (prefix
/// `pi.`), CP1, CP2, and the two identities every covariant pair forces on
/// `π`.
pub fn check_covariant_pair(cp: &CovariantPair, cfg: &CheckConfig) -> Report {
    let pa = &cp.action;
    let (h, a) = (pa.hopf(), pa.algebra());
    let b = cp.target();
    let (n, m) = (h.dim(), a.dim());
    let d = b.dim();
    let p = |i: usize| cp.pi.apply_basis(i);
    let ps = |i: usize| cp.pi.apply(&h.antipode().column(i));
    let mut r = Report::new();

    r.push(Check::equalities("phi.multiplicative", &cfg.cases(&[m, m]), |t| {
        let lhs = cp.phi_of(&a.mul(&a.basis(t[0]), &a.basis(t[1])));
        (lhs, b.mul(&cp.phi.column(t[0]), &cp.phi.column(t[1])))
    }));
    r.push(Check::equalities("phi.unital", &cfg.cases(&[1]), |_| (cp.phi_of(a.unit()), b.unit().to_vec())));
    r.merge("pi", check_partial_rep(&cp.pi, cfg));

    r.push(Check::equalities("CP1", &cfg.cases(&[n, m]), |t| {
        let lhs = cp.phi_of(&pa.act(&h.basis(t[0]), &a.basis(t[1])));
        let fa = cp.phi.column(t[1]);
        let rhs = sweedler_sum(d, &h.basis_coproduct(t[0], 2), |ix| cp.prod(&[&p(ix[0]), &fa, &ps(ix[1])]));
        (lhs, rhs)
    }));
    r.push(Check::equalities("CP2", &cfg.cases(&[n, m]), |t| {
        let fa = cp.phi.column(t[1]);
        let terms = h.basis_coproduct(t[0], 2);
        let lhs = sweedler_sum(d, &terms, |ix| cp.prod(&[&fa, &ps(ix[0]), &p(ix[1])]));
        let rhs = sweedler_sum(d, &terms, |ix| cp.prod(&[&ps(ix[0]), &p(ix[1]), &fa]));
        (lhs, rhs)
    }));
    r.push(Check::equalities("consequence.pi", &cfg.cases(&[n]), |t| {
        let rhs = sweedler_sum(d, &h.basis_coproduct(t[0], 3), |ix| cp.prod(&[&p(ix[0]), &ps(ix[1]), &p(ix[2])]));
        (p(t[0]), rhs)
    }));
    r.push(Check::equalities("consequence.pi-antipode", &cfg.cases(&[n]), |t| {
        let rhs = sweedler_sum(d, &h.basis_coproduct(t[0], 3), |ix| cp.prod(&[&ps(ix[0]), &p(ix[1]), &ps(ix[2])]));
        (ps(t[0]), rhs)
    }));
    r
}

/// `Φ: A #̲ H → B`, as a `dim B × dim(A #̲ H)` matrix, with the checks that
/// justify it.
#[derive(Clone, Debug)]
pub struct Factorization {
    pub matrix: Matrix,
    pub report: Report,
}

impl Factorization {
    pub fn apply(&self, x: &[Rational]) -> Vec<Rational> {
        self.matrix.mul_vec(x).expect("partial smash dimension")
    }
}

/// The algebra map `Φ(a # h) = φ(a)π(h)` restricted to the partial smash
/// product. Fails if the pair is not covariant, if `Φ̃` does not vanish on
/// the balancing relations, or if the resulting map does not have the
/// expected properties.
pub fn covariant_factorization(cp: &CovariantPair, sp: &SmashProduct, cfg: &CheckConfig) -> Result<Factorization> {
    let pa = sp.action();
    if pa != cp.action() {
        return Err(input("covariant pair and smash product come from different actions"));
    }
    let pair = check_covariant_pair(cp, cfg);
    if let Some(f) = pair.first_failure() {
        return Err(precondition(format!("not a covariant pair ({} fails)", f.id)));
    }
    let (h, a) = (pa.hopf(), pa.algebra());
    let n = h.dim();
    let b = cp.target();
    let tilde = |p: usize| b.mul(&cp.phi.column(p / n), &cp.pi.apply_basis(p % n));
    let on_rep = |v: &exactlin::SparseVec| {
        let mut out = exactlin::vec::zeros(b.dim());
        for (p, c) in v.iter() {
            exactlin::vec::axpy(&mut out, c, &tilde(*p));
        }
        out
    };
    for (k, rel) in sp.relations().iter().enumerate() {
        if !exactlin::vec::is_zero(&on_rep(rel)) {
            return Err(inconsistent(format!("φ(a)π(h) is not balanced on relation {k}")));
        }
    }
    let alg = sp.algebra();
    let cols: Vec<Vec<Rational>> = (0..alg.dim()).map(|i| on_rep(&sp.representative(&alg.basis(i)))).collect();
    let matrix = Matrix::from_columns(b.dim(), &cols)?;
    let fac = Factorization { matrix, report: Report::new() };

    let mut r = Report::new();
    r.push(Check::equalities("multiplicative", &cfg.cases(&[alg.dim(), alg.dim()]), |t| {
        let lhs = fac.apply(&alg.mul(&alg.basis(t[0]), &alg.basis(t[1])));
        (lhs, b.mul(&fac.apply(&alg.basis(t[0])), &fac.apply(&alg.basis(t[1]))))
    }));
    r.push(Check::equalities("unital", &cfg.cases(&[1]), |_| (fac.apply(alg.unit()), b.unit().to_vec())));
    let p0 = pi0(sp);
    let f0 = phi0(sp);
    r.push(Check::equalities("after-pi0", &cfg.cases(&[n]), |t| (fac.apply(&p0.apply_basis(t[0])), cp.pi.apply_basis(t[0]))));
    r.push(Check::equalities("after-phi0", &cfg.cases(&[a.dim()]), |t| (fac.apply(&f0.column(t[0])), cp.phi.column(t[0]))));
    r.push(Check::equalities("definition", &cfg.cases(&[a.dim(), n]), |t| {
        let x = sp.underline(&a.basis(t[0]), &h.basis(t[1]));
        let rhs = b.mul(&b.mul(&cp.phi.column(t[0]), &cp.pi.apply_basis(t[1])), b.unit());
        // a #̲ h = (a # h)(1 # 1) and Φ(1 #̲ 1) = 1, so Φ(a #̲ h) = φ(a)π(h).
        (fac.apply(&x), rhs)
    }));
    if let Some(f) = r.first_failure() {
        return Err(inconsistent(format!("factorization fails {}", f.id)));
    }
    Ok(Factorization { matrix: fac.matrix, report: r })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{groupoid_algebra, FiniteGroupoid};
    use crate::partial::smash::smash_product;

    #[test]
    fn canonical_pair_factors_through_identity() {
        let cfg = CheckConfig::default();
        let h = groupoid_algebra(&FiniteGroupoid::cyclic(2));
        let sp = smash_product(&PartialAction::dual_regular(&h)).unwrap();
        let cp = CovariantPair::canonical(&sp);
        assert!(check_covariant_pair(&cp, &cfg).passed());
        let fac = covariant_factorization(&cp, &sp, &cfg).unwrap();
        assert_eq!(fac.matrix, Matrix::identity(sp.algebra().dim()));
    }

    #[test]
    fn endomorphism_pair_is_covariant() {
        let cfg = CheckConfig::default();
        let h = groupoid_algebra(&FiniteGroupoid::pair(2));
        let pa = PartialAction::dual_regular(&h);
        let cp = CovariantPair::endomorphism(&pa, &cfg).unwrap();
        assert!(check_covariant_pair(&cp, &cfg).passed(), "{:?}", check_covariant_pair(&cp, &cfg).first_failure());
        let sp = smash_product(&pa).unwrap();
        assert!(covariant_factorization(&cp, &sp, &cfg).is_ok());
    }

    #[test]
    fn scaled_phi_is_not_an_algebra_map() {
        let cfg = CheckConfig::default();
        let h = groupoid_algebra(&FiniteGroupoid::cyclic(2));
        let sp = smash_product(&PartialAction::counit(&h)).unwrap();
        let bad = CovariantPair::canonical(&sp).with_phi_scaled(&Rational::from_int(2));
        let r = check_covariant_pair(&bad, &cfg);
        assert!(r.get("phi.unital").unwrap().failed());
        assert!(r.get("phi.multiplicative").unwrap().failed());
        // CP1 is homogeneous in φ and survives the scaling.
        assert!(r.get("CP1").unwrap().passed());
        assert!(matches!(covariant_factorization(&bad, &sp, &cfg), Err(crate::Error::Precondition(_))));
    }
}
