// SPDX-License-Identifier: Apache-2.0

//! Factoring a partial representation through `H_par^w`.
//!
//! `π̂` is computed twice. The first route evaluates `π` letter by letter on
//! words and reads the result off the standard words, after checking that
//! every row of the relation ideal evaluates to zero. The second never looks
//! at the ideal: it saturates the graph `{(x, π̂(x))}` inside `N ⊕ B` from
//! `(1, 1_B)` under `(x, y) ↦ ([e_i]x, π(e_i)y)` and fails if the graph is
//! not the graph of a function.

use exactlin::{vec, Matrix, Rational, Subspace};

use super::build::{relation_families, HparAlgebra, HparTruncation, WordQuotient};
use super::words::WordSpace;
use crate::error::{inconsistent, input, precondition, Result};
use crate::partial::{check_partial_rep, PartialRep};
use crate::report::{Check, CheckConfig, Report};

/// `π̂`, as a `dim B × dim N` matrix, with the checks that justify it.
#[derive(Clone, Debug)]
pub struct UniversalFactorization {
    pub matrix: Matrix,
    pub report: Report,
}

impl UniversalFactorization {
    pub fn apply(&self, x: &[Rational]) -> Vec<Rational> {
        self.matrix.mul_vec(x).expect("carrier dimension")
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }
}

/// `π(w₁)⋯π(w_k)` for every word of length `≤ depth`, indexed like `ws`.
fn word_values(pr: &PartialRep, ws: &WordSpace, depth: usize) -> Vec<Vec<Rational>> {
    let b = pr.target();
    let letters: Vec<Vec<Rational>> = (0..pr.hopf().dim()).map(|i| pr.apply_basis(i)).collect();
    let mut out: Vec<Vec<Rational>> = Vec::with_capacity(ws.count(depth));
    out.push(b.unit().to_vec());
    for idx in 1..ws.count(depth) {
        let w = ws.word(idx);
        let (last, prefix) = w.split_last().expect("non-empty word");
        out.push(b.mul(&out[ws.index(prefix)], &letters[*last]));
    }
    out
}

fn evaluate(values: &[Vec<Rational>], dim: usize, row: &exactlin::SparseVec) -> Vec<Rational> {
    let mut acc = vec::zeros(dim);
    for (w, c) in row.iter() {
        vec::axpy(&mut acc, c, &values[*w]);
    }
    acc
}

/// Every defining relation, instantiated at basis elements, evaluates to
/// zero under `π` extended multiplicatively to words. This is exactly the
/// condition for `π` to factor through `T(H)/I`.
pub fn relations_vanish(pr: &PartialRep) -> Report {
    let b = pr.target();
    let letters: Vec<Vec<Rational>> = (0..pr.hopf().dim()).map(|i| pr.apply_basis(i)).collect();
    let word = |w: &[usize]| w.iter().fold(b.unit().to_vec(), |acc, &i| b.mul(&acc, &letters[i]));
    let mut by_family: Vec<(usize, usize, Option<usize>)> = vec![(0, 0, None); 6];
    for (k, (fam, poly)) in relation_families(pr.hopf()).iter().enumerate() {
        let mut acc = vec::zeros(b.dim());
        for (w, c) in poly.terms() {
            vec::axpy(&mut acc, c, &word(w));
        }
        let slot = &mut by_family[usize::from(*fam) - 1];
        slot.0 += 1;
        if !vec::is_zero(&acc) {
            slot.1 += 1;
            slot.2.get_or_insert(k);
        }
    }
    let mut r = Report::new();
    for (f, (cases, failures, first)) in by_family.into_iter().enumerate() {
        let id = format!("wHpar{}", f + 1);
        r.push(match first {
            None => Check::pass(id, cases),
            Some(k) => Check::fail(id, format!("{failures} of {cases} instances do not vanish; first is relation {k}")),
        });
    }
    r
}

fn require_rep(hopf: &crate::WeakHopfAlgebra, pr: &PartialRep, cfg: &CheckConfig) -> Result<()> {
    if pr.hopf() != hopf {
        return Err(input("partial representation is over a different weak Hopf algebra"));
    }
    if let Some(f) = check_partial_rep(pr, cfg).first_failure() {
        return Err(precondition(format!("not a partial representation ({} fails)", f.id)));
    }
    Ok(())
}

/// The second route: `π̂ = Y X⁻¹` where the columns of `(X; Y)` span the
/// saturated graph.
fn graph_route(hp: &HparAlgebra, pr: &PartialRep) -> Result<Matrix> {
    let (n, d) = (hp.dim(), pr.target().dim());
    let b = pr.target();
    let letters: Vec<Vec<Rational>> = (0..pr.hopf().dim()).map(|i| pr.apply_basis(i)).collect();
    let mut graph = Subspace::zero(n + d);
    let mut queue = vec![(hp.carrier().unit().to_vec(), b.unit().to_vec())];
    while let Some((x, y)) = queue.pop() {
        if !graph.insert([x.as_slice(), y.as_slice()].concat())? {
            continue;
        }
        if graph.dim() > n {
            return Err(inconsistent("the graph of π̂ has a vertical component: π does not factor"));
        }
        for (i, letter) in letters.iter().enumerate() {
            queue.push((hp.left_operator(i).mul_vec(&x)?, b.mul(letter, &y)));
        }
    }
    let basis = graph.basis();
    let x = Matrix::from_columns(n, &basis.iter().map(|v| v[..n].to_vec()).collect::<Vec<_>>())?;
    let y = Matrix::from_columns(d, &basis.iter().map(|v| v[n..].to_vec()).collect::<Vec<_>>())?;
    let x_inv = x.inverse().ok_or_else(|| inconsistent("the graph of π̂ does not project onto the carrier"))?;
    Ok(y.mul(&x_inv)?)
}

/// The unique algebra map `π̂: H_par^w → B` with `π̂∘[·] = π`.
///
/// Fails with a precondition error if `π` is not a partial representation,
/// and with an internal inconsistency if either route breaks down or the
/// two disagree; that would mean the carrier is wrong.
pub fn universal_factorization(hp: &HparAlgebra, pr: &PartialRep, cfg: &CheckConfig) -> Result<UniversalFactorization> {
    require_rep(hp.base(), pr, cfg)?;
    let b = pr.target();
    let ws = hp.word_space();
    let values = word_values(pr, ws, hp.saturation());
    for (lead, row) in hp.ideal_rows() {
        if !vec::is_zero(&evaluate(&values, b.dim(), row)) {
            return Err(inconsistent(format!("π does not vanish on the ideal row led by {:?}", ws.word(*lead))));
        }
    }
    let cols: Vec<Vec<Rational>> = hp.standard_words().iter().map(|w| values[ws.index(w)].clone()).collect();
    let matrix = Matrix::from_columns(b.dim(), &cols)?;
    let graph = graph_route(hp, pr)?;
    let fac = UniversalFactorization { matrix, report: Report::new() };

    let c = hp.carrier();
    let mut r = Report::new();
    r.push(Check::pass("well-defined", hp.ideal_rows().len()));
    r.push(Check::from_bool("routes-agree", graph == fac.matrix, "word evaluation against graph saturation"));
    r.push(Check::equalities("multiplicative", &cfg.cases(&[c.dim(), c.dim()]), |t| {
        (fac.apply(&c.mul(&c.basis(t[0]), &c.basis(t[1]))), b.mul(&fac.apply(&c.basis(t[0])), &fac.apply(&c.basis(t[1]))))
    }));
    r.push(Check::equalities("unital", &cfg.cases(&[1]), |_| (fac.apply(c.unit()), b.unit().to_vec())));
    r.push(Check::equalities("after-bracket", &cfg.cases(&[pr.hopf().dim()]), |t| {
        (fac.apply(&hp.bracket().column(t[0])), pr.apply_basis(t[0]))
    }));
    if let Some(f) = r.first_failure() {
        return Err(inconsistent(format!("universal factorization fails {}", f.id)));
    }
    Ok(UniversalFactorization { matrix: fac.matrix, report: r })
}

/// The same construction on a finite stage `V_D/I_D` of the presentation,
/// for bases whose `H_par^w` has no closure certificate.
///
/// The map `V_D/I_D → B` is certified by evaluation on the ideal rows; the
/// second route evaluates every word of length `≤ D` directly and compares
/// with the map applied to its normal form. The factorization through
/// `H_par^w` itself is certified by [`relations_vanish`], merged under
/// `presentation.`. Multiplicativity is checked on pairs of standard words
/// whose product still has length `≤ D`.
pub fn truncated_factorization(
    tr: &HparTruncation,
    pr: &PartialRep,
    cfg: &CheckConfig,
) -> Result<UniversalFactorization> {
    require_rep(tr.base(), pr, cfg)?;
    let b = pr.target();
    let ws = tr.word_space();
    let values = word_values(pr, ws, tr.depth());
    let rows = tr.ideal_rows();
    for (lead, row) in &rows {
        if !vec::is_zero(&evaluate(&values, b.dim(), row)) {
            return Err(inconsistent(format!("π does not vanish on the ideal row led by {:?}", ws.word(*lead))));
        }
    }
    let standard = tr.standard_words();
    let cols: Vec<Vec<Rational>> = standard.iter().map(|w| values[ws.index(w)].clone()).collect();
    let fac = UniversalFactorization { matrix: Matrix::from_columns(b.dim(), &cols)?, report: Report::new() };
    let nf = |w: &[usize]| tr.normal_form(w).expect("word within depth");

    let mut r = Report::new();
    r.push(Check::pass("well-defined", rows.len()));
    r.merge("presentation", relations_vanish(pr));
    let all = ws.count(tr.depth());
    r.push(Check::equalities("routes-agree", &cfg.cases(&[all]), |t| (fac.apply(&nf(&ws.word(t[0]))), values[t[0]].clone())));
    let pairs: Vec<(usize, usize)> = (0..standard.len())
        .flat_map(|u| (0..standard.len()).map(move |v| (u, v)))
        .filter(|&(u, v)| standard[u].len() + standard[v].len() <= tr.depth())
        .collect();
    r.push(Check::equalities("multiplicative", &cfg.cases(&[pairs.len()]), |t| {
        let (u, v) = pairs[t[0]];
        let uv = [standard[u].as_slice(), standard[v].as_slice()].concat();
        (fac.apply(&nf(&uv)), b.mul(&fac.matrix.column(u), &fac.matrix.column(v)))
    }));
    r.push(Check::equalities("unital", &cfg.cases(&[1]), |_| (fac.apply(&nf(&[])), b.unit().to_vec())));
    r.push(Check::equalities("after-bracket", &cfg.cases(&[pr.hopf().dim()]), |t| {
        let class = tr.class_of(&[(vec![t[0]], Rational::one())]).expect("letters are within depth");
        (fac.apply(&class), pr.apply_basis(t[0]))
    }));
    if let Some(f) = r.first_failure() {
        return Err(inconsistent(format!("truncated factorization fails {}", f.id)));
    }
    Ok(UniversalFactorization { matrix: fac.matrix, report: r })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{groupoid_algebra, FiniteGroupoid};
    use crate::hpar::build_hpar;

    #[test]
    fn bracket_factors_through_identity() {
        let cfg = CheckConfig::default();
        let hp = build_hpar(&groupoid_algebra(&FiniteGroupoid::cyclic(3)), 6).unwrap();
        let fac = universal_factorization(&hp, &hp.bracket_rep(), &cfg).unwrap();
        assert_eq!(fac.matrix, Matrix::identity(hp.dim()));
    }

    #[test]
    fn identity_rep_is_onto_the_group_algebra() {
        let cfg = CheckConfig::default();
        let h = groupoid_algebra(&FiniteGroupoid::cyclic(2));
        let hp = build_hpar(&h, 6).unwrap();
        let fac = universal_factorization(&hp, &PartialRep::identity(&h), &cfg).unwrap();
        assert_eq!((fac.matrix.rows(), fac.matrix.cols()), (2, 3));
        assert_eq!(fac.rank(), 2);
    }

    #[test]
    fn non_representation_is_rejected() {
        let cfg = CheckConfig::default();
        let h = groupoid_algebra(&FiniteGroupoid::cyclic(2));
        let hp = build_hpar(&h, 6).unwrap();
        let bad = PartialRep::scalar(&h, &vec::from_ints(&[1, 2])).unwrap();
        assert!(matches!(universal_factorization(&hp, &bad, &cfg), Err(crate::Error::Precondition(_))));
        assert!(!relations_vanish(&bad).passed());
    }
}
