// SPDX-License-Identifier: Apache-2.0

use exactlin::{vec, Matrix, Rational};

use super::action::PartialAction;
use super::rep::{check_partial_rep, PartialRep};
use super::sweedler_sum;
use crate::algebra::FinDimAlgebra;
use crate::error::{input, Result};
use crate::report::{Check, CheckConfig, Report};
use crate::wha::WeakHopfAlgebra;

/// A vector space `M` with a linear map `• : H ⊗ M → M`, one matrix per
/// basis element of `H`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialModule {
    h: WeakHopfAlgebra,
    dim: usize,
    act: Vec<Matrix>,
}

impl PartialModule {
    pub fn new(h: WeakHopfAlgebra, dim: usize, act: Vec<Matrix>) -> Result<Self> {
        if act.len() != h.dim() || act.iter().any(|x| x.rows() != dim || x.cols() != dim) {
            return Err(input(format!("expected {} matrices of size {dim}x{dim}", h.dim())));
        }
        Ok(PartialModule { h, dim, act })
    }

    /// The underlying module of a partial module algebra.
    pub fn from_action(pa: &PartialAction) -> Self {
        PartialModule { h: pa.hopf().clone(), dim: pa.algebra().dim(), act: pa.matrices().to_vec() }
    }

    /// `h • m = π(h)(m)` for a map into `End(ℚⁿ)` on matrix units.
    pub fn from_rep(pr: &PartialRep) -> Result<Self> {
        let d = pr.target().dim();
        let n = (d as f64).sqrt().round() as usize;
        if n * n != d || *pr.target() != FinDimAlgebra::endomorphisms(n) {
            return Err(input("target is not an endomorphism algebra on matrix units"));
        }
        let act = (0..pr.hopf().dim())
            .map(|i| Matrix::from_row_vecs(n, &pr.apply_basis(i).chunks(n).map(<[Rational]>::to_vec).collect::<Vec<_>>()))
            .collect::<exactlin::Result<Vec<_>>>()?;
        Self::new(pr.hopf().clone(), n, act)
    }

    pub fn hopf(&self) -> &WeakHopfAlgebra {
        &self.h
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn matrices(&self) -> &[Matrix] {
        &self.act
    }

    fn act(&self, h: &[Rational], m: &[Rational]) -> Vec<Rational> {
        let mut out = vec::zeros(self.dim);
        for (i, c) in h.iter().enumerate() {
            if !c.is_zero() {
                vec::axpy(&mut out, c, &self.act[i].mul_vec(m).expect("module dimension"));
            }
        }
        out
    }

    /// The induced `π_•: H → End(M)`.
    pub fn to_rep(&self) -> PartialRep {
        let cols: Vec<Vec<Rational>> = self.act.iter().map(|x| x.row_vecs().concat()).collect();
        let pi = Matrix::from_columns(self.dim * self.dim, &cols).expect("consistent shapes");
        PartialRep::new(self.h.clone(), FinDimAlgebra::endomorphisms(self.dim), pi).expect("consistent shapes")
    }
}

/// PM1–PM6 on basis triples `(h, k, m)`, the same axioms for the induced
/// map `π_•` (prefixed `induced.`), and agreement between the two verdicts.
pub fn check_partial_module(pm: &PartialModule, cfg: &CheckConfig) -> Report {
    let h = &pm.h;
    let (n, d) = (h.dim(), pm.dim);
    let e = |i: usize| h.basis(i);
    let s = |i: usize| h.antipode().column(i);
    let m = |j: usize| vec::unit(d, j);
    let on = |x: &[Rational], v: &[Rational]| pm.act(x, v);
    let triples = cfg.cases(&[n, n, d]);
    let mut r = Report::new();

    r.push(Check::equalities("PM1", &cfg.cases(&[d]), |t| (on(h.unit(), &m(t[0])), m(t[0]))));
    r.push(Check::equalities("PM2", &triples, |t| {
        let terms = h.basis_coproduct(t[1], 2);
        let lhs = sweedler_sum(d, &terms, |ix| on(&e(t[0]), &on(&e(ix[0]), &on(&s(ix[1]), &m(t[2])))));
        let rhs = sweedler_sum(d, &terms, |ix| on(&h.mul(&e(t[0]), &e(ix[0])), &on(&s(ix[1]), &m(t[2]))));
        (lhs, rhs)
    }));
    r.push(Check::equalities("PM3", &triples, |t| {
        let terms = h.basis_coproduct(t[1], 2);
        let lhs = sweedler_sum(d, &terms, |ix| on(&e(t[0]), &on(&s(ix[0]), &on(&e(ix[1]), &m(t[2])))));
        let rhs = sweedler_sum(d, &terms, |ix| on(&h.mul(&e(t[0]), &s(ix[0])), &on(&e(ix[1]), &m(t[2]))));
        (lhs, rhs)
    }));
    r.push(Check::equalities("PM4", &triples, |t| {
        let terms = h.basis_coproduct(t[0], 2);
        let lhs = sweedler_sum(d, &terms, |ix| on(&e(ix[0]), &on(&s(ix[1]), &on(&e(t[1]), &m(t[2])))));
        let rhs = sweedler_sum(d, &terms, |ix| on(&e(ix[0]), &on(&h.mul(&s(ix[1]), &e(t[1])), &m(t[2]))));
        (lhs, rhs)
    }));
    r.push(Check::equalities("PM5", &triples, |t| {
        let terms = h.basis_coproduct(t[0], 2);
        let lhs = sweedler_sum(d, &terms, |ix| on(&s(ix[0]), &on(&e(ix[1]), &on(&e(t[1]), &m(t[2])))));
        let rhs = sweedler_sum(d, &terms, |ix| on(&s(ix[0]), &on(&h.mul(&e(ix[1]), &e(t[1])), &m(t[2]))));
        (lhs, rhs)
    }));
    r.push(Check::equalities("PM6", &cfg.cases(&[n, d]), |t| {
        let lhs = sweedler_sum(d, &h.basis_coproduct(t[0], 3), |ix| on(&e(ix[0]), &on(&s(ix[1]), &on(&e(ix[2]), &m(t[1])))));
        (lhs, on(&e(t[0]), &m(t[1])))
    }));

    let module_ok = r.passed();
    let induced = check_partial_rep(&pm.to_rep(), cfg);
    let rep_ok = induced.passed();
    r.merge("induced", induced);
    r.push(Check::from_bool(
        "agreement",
        module_ok == rep_ok,
        format!("module axioms: {module_ok}; induced partial representation: {rep_ok}"),
    ));
    r
}
