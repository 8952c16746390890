// SPDX-License-Identifier: Apache-2.0

use exactlin::{vec, Matrix, QuotientSpace, Rational, SparseVec, Subspace};

use super::action::{check_partial_action, PartialAction};
use super::rep::PartialRep;
use super::sweedler_sum;
use crate::algebra::{multiplicative_closure, FinDimAlgebra};
use crate::error::{inconsistent, precondition, Result};
use crate::report::{Check, CheckConfig, Report};
use crate::wha::canonical_projections;

/// `A # H = A ⊗_{H_t} H` for a symmetric partial action, together with its
/// partial smash subalgebra.
///
/// Pure tensors `a_i ⊗ e_j` are indexed `i·dim H + j`. The carrier is the
/// quotient of `A ⊗ H` by the balancing relations `a◁z ⊗ h − a ⊗ zh`,
/// `a◁z = a(S_R⁻¹(z)·1_A)`, and its elements are written in the coordinates
/// of the quotient's standard basis. The partial smash subalgebra is a
/// subspace of those coordinates, and [`SmashProduct::algebra`] is its
/// algebra structure in the coordinates of `partial_subspace().basis()`.
#[derive(Clone, Debug)]
pub struct SmashProduct {
    action: PartialAction,
    relations: Vec<SparseVec>,
    quotient: QuotientSpace,
    /// Products of standard quotient basis elements, index `i·q + j`.
    table: Vec<Vec<Rational>>,
    partial: Subspace,
    algebra: FinDimAlgebra,
}

/// `(a_i # e_j)(a_k # e_l) = a_i(e_j₁·a_k) # e_j₂ e_l` on pure basis tensors.
fn rep_mul_basis(pa: &PartialAction, p: usize, q: usize) -> Vec<Rational> {
    let h = pa.hopf();
    let a = pa.algebra();
    let n = h.dim();
    let (i, j, k, l) = (p / n, p % n, q / n, q % n);
    let mut out = vec::zeros(a.dim() * n);
    for (ix, c) in h.basis_coproduct(j, 2) {
        let left = a.mul(&a.basis(i), &pa.act(&h.basis(ix[0]), &a.basis(k)));
        let right = h.mul(&h.basis(ix[1]), &h.basis(l));
        vec::axpy(&mut out, &c, &vec::tensor(&left, &right));
    }
    out
}

fn rep_mul(pa: &PartialAction, x: &SparseVec, y: &SparseVec) -> Vec<Rational> {
    let mut out = vec::zeros(pa.algebra().dim() * pa.hopf().dim());
    for (p, c) in x.iter() {
        for (q, d) in y.iter() {
            vec::axpy(&mut out, &(c * d), &rep_mul_basis(pa, *p, *q));
        }
    }
    out
}

/// Balancing relations: for every basis `a` of `A`, `z` of `H_t`, `h` of `H`.
fn balancing_relations(pa: &PartialAction) -> Result<Vec<SparseVec>> {
    let h = pa.hopf();
    let a = pa.algebra();
    let proj = canonical_projections(h)?;
    // S restricted to H_s is a bijection onto H_t; invert it on coordinates.
    let hs = proj.hs.inclusion();
    let s_on_hs = h.antipode().mul(&hs)?;
    let one_a = a.unit().to_vec();
    let mut out = Vec::new();
    for z in proj.ht.basis() {
        let coords = s_on_hs
            .solve(z)?
            .ok_or_else(|| inconsistent("S does not map H_s onto H_t"))?;
        let w = hs.mul_vec(&coords)?;
        let w_one = pa.act(&w, &one_a);
        for i in 0..a.dim() {
            let ai = a.basis(i);
            let balanced = a.mul(&ai, &w_one);
            for j in 0..h.dim() {
                let hj = h.basis(j);
                let r = vec::sub(&vec::tensor(&balanced, &hj), &vec::tensor(&ai, &h.mul(z, &hj)));
                let r = SparseVec::from_dense(&r);
                if !r.is_zero() {
                    out.push(r);
                }
            }
        }
    }
    Ok(out)
}

/// Builds the smash product of a symmetric partial action.
pub fn smash_product(pa: &PartialAction) -> Result<SmashProduct> {
    let check = check_partial_action(pa, &CheckConfig::exhaustive());
    if let Some(f) = check.report.first_failure() {
        return Err(precondition(format!("not a partial action ({} fails)", f.id)));
    }
    if !check.symmetric {
        return Err(precondition("partial action is not symmetric"));
    }
    let ambient = pa.algebra().dim() * pa.hopf().dim();
    let relations = balancing_relations(pa)?;
    let quotient = QuotientSpace::from_relations(ambient, &relations);

    // The product has to descend to the quotient on both sides.
    for r in &relations {
        for p in 0..ambient {
            let e = SparseVec::unit(p);
            if !quotient.is_zero_class(&SparseVec::from_dense(&rep_mul(pa, r, &e)))
                || !quotient.is_zero_class(&SparseVec::from_dense(&rep_mul(pa, &e, r)))
            {
                return Err(inconsistent(format!(
                    "smash multiplication is not well defined on the balanced tensor product (basis tensor {p})"
                )));
            }
        }
    }

    let std = quotient.standard().to_vec();
    let q = std.len();
    let mut table = Vec::with_capacity(q * q);
    for &p in &std {
        for &r in &std {
            table.push(quotient.project(&rep_mul_basis(pa, p, r))?);
        }
    }

    let mut sp = SmashProduct {
        action: pa.clone(),
        relations,
        quotient,
        table,
        partial: Subspace::zero(q),
        algebra: FinDimAlgebra::ground_field(),
    };
    let one_one = sp.class(pa.algebra().unit(), pa.hopf().unit());
    let m = pa.algebra().dim();
    let n = pa.hopf().dim();
    let mut gens = Vec::with_capacity(m * n);
    for i in 0..m {
        for j in 0..n {
            let x = sp.class(&pa.algebra().basis(i), &pa.hopf().basis(j));
            gens.push(sp.carrier_mul(&x, &one_one));
        }
    }
    let partial = multiplicative_closure(q, &gens, |x, y| sp.carrier_mul(x, y));
    let unit = sp.carrier_mul(&one_one, &one_one);
    let coords = |v: &[Rational]| -> Result<Vec<Rational>> {
        partial
            .solve_membership(v)?
            .ok_or_else(|| inconsistent("partial smash subspace is not closed under multiplication"))
    };
    let k = partial.dim();
    let mut terms = Vec::new();
    for (i, x) in partial.basis().iter().enumerate() {
        if sp.carrier_mul(&unit, x) != *x || sp.carrier_mul(x, &unit) != *x {
            return Err(inconsistent("(1#1)(1#1) is not a unit of the partial smash product"));
        }
        for (j, y) in partial.basis().iter().enumerate() {
            for (l, c) in coords(&sp.carrier_mul(x, y))?.into_iter().enumerate() {
                if !c.is_zero() {
                    terms.push((i, j, l, c));
                }
            }
        }
    }
    let labels = (0..k).map(|i| format!("s{i}")).collect();
    sp.algebra = FinDimAlgebra::new(k, labels, coords(&unit)?, terms)?;
    sp.partial = partial;
    Ok(sp)
}

impl SmashProduct {
    pub fn action(&self) -> &PartialAction {
        &self.action
    }

    /// Dimension of `A ⊗_{H_t} H`.
    pub fn carrier_dim(&self) -> usize {
        self.quotient.dim()
    }

    pub fn quotient(&self) -> &QuotientSpace {
        &self.quotient
    }

    pub fn relations(&self) -> &[SparseVec] {
        &self.relations
    }

    /// The partial smash subalgebra inside the carrier.
    pub fn partial_subspace(&self) -> &Subspace {
        &self.partial
    }

    pub fn algebra(&self) -> &FinDimAlgebra {
        &self.algebra
    }

    /// Carrier coordinates of `a # h`.
    pub fn class(&self, a: &[Rational], h: &[Rational]) -> Vec<Rational> {
        self.quotient.project(&vec::tensor(a, h)).expect("dimension of A ⊗ H")
    }

    pub fn carrier_mul(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        let q = self.quotient.dim();
        let mut out = vec::zeros(q);
        for (i, c) in x.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (j, d) in y.iter().enumerate() {
                if !d.is_zero() {
                    vec::axpy(&mut out, &(c * d), &self.table[i * q + j]);
                }
            }
        }
        out
    }

    /// Coordinates in the partial smash algebra of a carrier element, if it
    /// lies in the subalgebra.
    pub fn to_partial(&self, x: &[Rational]) -> Option<Vec<Rational>> {
        self.partial.solve_membership(x).expect("carrier dimension")
    }

    /// `a #̲ h = (a # h)(1 # 1)` in partial smash coordinates.
    pub fn underline(&self, a: &[Rational], h: &[Rational]) -> Vec<Rational> {
        let pa = &self.action;
        let one_one = self.class(pa.algebra().unit(), pa.hopf().unit());
        let x = self.carrier_mul(&self.class(a, h), &one_one);
        self.to_partial(&x).expect("generators lie in the partial smash")
    }

    /// Representative in `A ⊗ H` of a partial smash element.
    pub fn representative(&self, coords: &[Rational]) -> SparseVec {
        self.quotient.lift(&self.partial.combine(coords))
    }
}

/// `π₀(h) = 1 #̲ h`.
pub fn pi0(sp: &SmashProduct) -> PartialRep {
    let pa = sp.action();
    let h = pa.hopf();
    let one_a = pa.algebra().unit();
    let cols: Vec<Vec<Rational>> = (0..h.dim()).map(|j| sp.underline(one_a, &h.basis(j))).collect();
    let pi = Matrix::from_columns(sp.algebra().dim(), &cols).expect("partial smash dimension");
    PartialRep::new(h.clone(), sp.algebra().clone(), pi).expect("shapes agree")
}

/// `φ₀(a) = a #̲ 1`.
pub fn phi0(sp: &SmashProduct) -> Matrix {
    let pa = sp.action();
    let a = pa.algebra();
    let one_h = pa.hopf().unit();
    let cols: Vec<Vec<Rational>> = (0..a.dim()).map(|i| sp.underline(&a.basis(i), one_h)).collect();
    Matrix::from_columns(sp.algebra().dim(), &cols).expect("partial smash dimension")
}

/// `a #̲ h = (a #̲ 1)(1 #̲ h)` on basis pairs, and `φ₀` is an injective
/// unital algebra morphism.
pub fn prop25_suite(sp: &SmashProduct, cfg: &CheckConfig) -> Report {
    let pa = sp.action();
    let (a, h) = (pa.algebra(), pa.hopf());
    let alg = sp.algebra();
    let phi = phi0(sp);
    let f = |v: &[Rational]| phi.mul_vec(v).expect("dimension of A");
    let mut r = Report::new();
    r.push(Check::equalities("factorization", &cfg.cases(&[a.dim(), h.dim()]), |t| {
        let lhs = sp.underline(&a.basis(t[0]), &h.basis(t[1]));
        let rhs = alg.mul(&sp.underline(&a.basis(t[0]), h.unit()), &sp.underline(a.unit(), &h.basis(t[1])));
        (lhs, rhs)
    }));
    r.push(Check::equalities("phi0.multiplicative", &cfg.cases(&[a.dim(), a.dim()]), |t| {
        (f(&a.mul(&a.basis(t[0]), &a.basis(t[1]))), alg.mul(&phi.column(t[0]), &phi.column(t[1])))
    }));
    r.push(Check::equalities("phi0.unital", &cfg.cases(&[1]), |_| (f(a.unit()), alg.unit().to_vec())));
    let rank = phi.rank();
    r.push(Check::from_bool("phi0.injective", rank == a.dim(), format!("rank {rank} for dim A = {}", a.dim())));
    r
}

/// `Σ a(h₁·1) ⊗ h₂` for basis `a`, `h`, as carrier vectors; used by tests and
/// the CLI to report the rank of the generating set.
pub fn generator_rank(sp: &SmashProduct) -> usize {
    let pa = sp.action();
    let (a, h) = (pa.algebra(), pa.hopf());
    let one_a = a.unit().to_vec();
    let mut s = Subspace::zero(sp.carrier_dim());
    for i in 0..a.dim() {
        for j in 0..h.dim() {
            let v = sweedler_sum(a.dim() * h.dim(), &h.basis_coproduct(j, 2), |ix| {
                vec::tensor(&a.mul(&a.basis(i), &pa.act(&h.basis(ix[0]), &one_a)), &h.basis(ix[1]))
            });
            s.insert(sp.quotient().project(&v).expect("dimension of A ⊗ H")).expect("carrier dimension");
        }
    }
    s.dim()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{groupoid_algebra, FiniteGroupoid};
    use crate::partial::rep::{check_partial_rep, globality_criterion};

    #[test]
    fn global_counit_action_gives_group_algebra() {
        let h = groupoid_algebra(&FiniteGroupoid::cyclic(2));
        let sp = smash_product(&PartialAction::counit(&h)).unwrap();
        assert_eq!(sp.carrier_dim(), 2);
        assert_eq!(sp.algebra().dim(), 2);
        assert_eq!(generator_rank(&sp), 2);
        let p0 = pi0(&sp);
        assert!(check_partial_rep(&p0, &CheckConfig::default()).passed());
        assert!(globality_criterion(&p0).global);
        assert!(prop25_suite(&sp, &CheckConfig::default()).passed());
    }

    #[test]
    fn groupoid_dual_action_balances_over_target_algebra() {
        // For ℚG of the pair groupoid on two objects acting on its dual,
        // A ⊗_{H_t} H has dimension 4·4/2 = 8.
        let h = groupoid_algebra(&FiniteGroupoid::pair(2));
        let sp = smash_product(&PartialAction::dual_regular(&h)).unwrap();
        assert_eq!(sp.carrier_dim(), 8);
        assert!(prop25_suite(&sp, &CheckConfig::default()).passed());
        let p0 = pi0(&sp);
        assert!(check_partial_rep(&p0, &CheckConfig::default()).passed());
        assert_eq!(p0.apply(h.unit()), sp.algebra().unit().to_vec());
    }

    #[test]
    fn non_partial_action_is_rejected() {
        let h = groupoid_algebra(&FiniteGroupoid::discrete(2));
        assert!(matches!(smash_product(&PartialAction::counit(&h)), Err(crate::Error::Precondition(_))));
    }
}
