// SPDX-License-Identifier: Apache-2.0

use std::collections::HashMap;

use exactlin::{vec, EchelonReducer, Matrix, Rational, SparseVec};

use super::words::{Poly, WordSpace};
use crate::algebra::FinDimAlgebra;
use crate::error::{precondition, Error, Result};
use crate::partial::{check_partial_rep, PartialRep};
use crate::report::{CheckConfig, Report};
use crate::wha::{check_weak_hopf, WeakHopfAlgebra};

pub const DEFAULT_MAX_DEGREE: usize = 6;

/// Upper bound on the number of words the saturation may index.
pub const DEFAULT_MAX_WORDS: usize = 50_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BuildOptions {
    pub max_degree: usize,
    pub max_words: usize,
}

impl Default for BuildOptions {
    fn default() -> Self {
        BuildOptions { max_degree: DEFAULT_MAX_DEGREE, max_words: DEFAULT_MAX_WORDS }
    }
}

/// `H_par^w = T(H)/I` for a finite-dimensional weak Hopf algebra, in the
/// basis of standard (non-reducible) words.
///
/// Construction works in the filtration `V_D` of words of length `≤ D`, with
/// `I_D` spanned by the relation instances `u·r·v` that fit in `V_D`. For
/// growing `D` it looks for a degree `d ≤ D` such that
///
/// 1. every word of length `d` is reducible modulo `I_D`,
/// 2. left multiplication by each letter is well defined on
///    `N = V_{d-1}/(I_D ∩ V_{d-1})`, and
/// 3. every defining relation acts as zero on `N` through those operators.
///
/// Then `N` is a `T(H)/I`-module generated by the class of the empty word
/// with `I_D ⊂ I`, so `N ≅ T(H)/I`: the result is exact, not a truncation.
/// The saturation depth `D` usually has to exceed `d`, because relations
/// among short words are often only visible through longer ones.
#[derive(Clone, Debug)]
pub struct HparAlgebra {
    base: WeakHopfAlgebra,
    carrier: FinDimAlgebra,
    bracket: Matrix,
    degree: usize,
    saturation: usize,
    standard: Vec<Vec<usize>>,
    left: Vec<Matrix>,
    trajectory: Vec<usize>,
    ideal_rows: Vec<(usize, SparseVec)>,
    ws: WordSpace,
}

/// The defining relations instantiated at basis elements, labelled 1–6.
pub(crate) fn relation_families(h: &WeakHopfAlgebra) -> Vec<(u8, Poly)> {
    let n = h.dim();
    let one = Rational::one();
    let minus = -Rational::one();
    let e = |i: usize| h.basis(i);
    let s = |i: usize| h.antipode().column(i);
    let mut out = Vec::new();

    let mut unit = Poly::default();
    unit.add_product(&one, &[h.unit().to_vec()]);
    unit.add_term(Vec::new(), minus.clone());
    out.push((1, unit));

    for i in 0..n {
        for j in 0..n {
            let mut p2 = Poly::default();
            let mut p3 = Poly::default();
            for (ix, c) in h.basis_coproduct(j, 2) {
                p2.add_product(&c, &[e(i), e(ix[0]), s(ix[1])]);
                p2.add_product(&-&c, &[h.mul(&e(i), &e(ix[0])), s(ix[1])]);
                p3.add_product(&c, &[e(i), s(ix[0]), e(ix[1])]);
                p3.add_product(&-&c, &[h.mul(&e(i), &s(ix[0])), e(ix[1])]);
            }
            let mut p4 = Poly::default();
            let mut p5 = Poly::default();
            for (ix, c) in h.basis_coproduct(i, 2) {
                p4.add_product(&c, &[e(ix[0]), s(ix[1]), e(j)]);
                p4.add_product(&-&c, &[e(ix[0]), h.mul(&s(ix[1]), &e(j))]);
                p5.add_product(&c, &[s(ix[0]), e(ix[1]), e(j)]);
                p5.add_product(&-&c, &[s(ix[0]), h.mul(&e(ix[1]), &e(j))]);
            }
            for (fam, p) in [(2, p2), (3, p3), (4, p4), (5, p5)] {
                if !p.is_zero() {
                    out.push((fam, p));
                }
            }
        }
    }
    for i in 0..n {
        let mut p6 = Poly::default();
        p6.add_product(&one, &[e(i)]);
        for (ix, c) in h.basis_coproduct(i, 3) {
            p6.add_product(&-&c, &[e(ix[0]), s(ix[1]), e(ix[2])]);
        }
        if !p6.is_zero() {
            out.push((6, p6));
        }
    }
    out
}

struct Certificate {
    standard: Vec<usize>,
    left: Vec<Matrix>,
}

fn normal_form(red: &EchelonReducer, pos: &HashMap<usize, usize>, v: &SparseVec) -> Option<Vec<Rational>> {
    let mut out = vec::zeros(pos.len());
    for (c, x) in red.reduce(v).iter() {
        out[*pos.get(c)?] = x.clone();
    }
    Some(out)
}

fn operator(left: &[Matrix], dim: usize, w: &[usize]) -> Matrix {
    w.iter().fold(Matrix::identity(dim), |acc, &i| acc.mul(&left[i]).expect("square"))
}

fn certify(ws: &WordSpace, red: &EchelonReducer, relations: &[(u8, Poly)], d: usize, n: usize) -> Option<Certificate> {
    let top = ws.offset(d);
    if (top..ws.offset(d + 1)).any(|w| !red.is_pivot(w)) {
        return None;
    }
    let standard: Vec<usize> = (0..top).filter(|w| !red.is_pivot(*w)).collect();
    let pos: HashMap<usize, usize> = standard.iter().enumerate().map(|(k, &w)| (w, k)).collect();
    let dim = standard.len();

    let mut left = Vec::with_capacity(n);
    for i in 0..n {
        let mut cols = Vec::with_capacity(dim);
        for &s in &standard {
            let mut w = vec![i];
            w.extend(ws.word(s));
            cols.push(normal_form(red, &pos, &SparseVec::unit(ws.index(&w)))?);
        }
        left.push(Matrix::from_columns(dim, &cols).expect("square"));
    }

    // Left multiplication descends to V_{d-1}/(I_D ∩ V_{d-1}).
    let mut low: Vec<usize> = red.pivots().filter(|&p| p < top).collect();
    low.sort_unstable();
    for p in low {
        let row = red.row(p).expect("pivot row");
        for i in 0..n {
            let shifted: SparseVec = row
                .iter()
                .map(|(w, c)| {
                    let mut full = vec![i];
                    full.extend(ws.word(*w));
                    (ws.index(&full), c.clone())
                })
                .collect();
            if !red.contains(&shifted) {
                return None;
            }
        }
    }

    // Every defining relation annihilates N.
    for (_, poly) in relations {
        let mut acc = Matrix::zeros(dim, dim);
        for (w, c) in poly.terms() {
            acc = acc.add(&operator(&left, dim, w).scale(c)).expect("square");
        }
        if !acc.is_zero() {
            return None;
        }
    }
    Some(Certificate { standard, left })
}

/// Relation instances of growing length, reduced to echelon form.
struct Saturation {
    ws: WordSpace,
    relations: Vec<(u8, Poly)>,
    red: EchelonReducer,
    depth: usize,
    trajectory: Vec<usize>,
}

impl Saturation {
    fn new(h: &WeakHopfAlgebra) -> Self {
        Saturation {
            ws: WordSpace::new(h.dim()),
            relations: relation_families(h),
            red: EchelonReducer::new(),
            depth: 0,
            trajectory: Vec::new(),
        }
    }

    /// Adds every instance `u·r·v` of length exactly `depth + 1`, or reports
    /// the budget as exhausted.
    fn extend(&mut self, max_words: usize) -> Result<()> {
        let d = self.depth + 1;
        if self.ws.count(d) > max_words {
            return Err(Error::NotStabilized { max_degree: self.depth, trajectory: self.trajectory.clone() });
        }
        for (_, poly) in &self.relations {
            let deg = poly.degree();
            if deg > d {
                continue;
            }
            let free = d - deg;
            for lu in 0..=free {
                for u in self.ws.words_of_len(lu) {
                    for v in self.ws.words_of_len(free - lu) {
                        self.red.insert(&poly.sandwich(&self.ws, &u, &v));
                    }
                }
            }
        }
        self.depth = d;
        self.trajectory.push((0..self.ws.count(d)).filter(|w| !self.red.is_pivot(*w)).count());
        Ok(())
    }
}

fn require_weak_hopf(h: &WeakHopfAlgebra) -> Result<()> {
    match check_weak_hopf(h, &CheckConfig::default()).first_failure() {
        Some(f) => Err(precondition(format!("not a weak Hopf algebra ({} fails)", f.id))),
        None => Ok(()),
    }
}

/// [`build_hpar_with`] with the default word budget.
pub fn build_hpar(h: &WeakHopfAlgebra, max_degree: usize) -> Result<HparAlgebra> {
    build_hpar_with(h, BuildOptions { max_degree, ..BuildOptions::default() })
}

pub fn build_hpar_with(h: &WeakHopfAlgebra, opts: BuildOptions) -> Result<HparAlgebra> {
    require_weak_hopf(h)?;
    let mut sat = Saturation::new(h);
    while sat.depth < opts.max_degree {
        sat.extend(opts.max_words)?;
        for k in 1..=sat.depth {
            if let Some(cert) = certify(&sat.ws, &sat.red, &sat.relations, k, h.dim()) {
                return Ok(assemble(h, sat, cert, k));
            }
        }
    }
    Err(Error::NotStabilized { max_degree: opts.max_degree, trajectory: sat.trajectory })
}

fn assemble(h: &WeakHopfAlgebra, sat: Saturation, cert: Certificate, degree: usize) -> HparAlgebra {
    let Saturation { ws, red, depth: saturation, trajectory, .. } = sat;
    let dim = cert.standard.len();
    let standard: Vec<Vec<usize>> = cert.standard.iter().map(|&w| ws.word(w)).collect();
    let apply = |w: &[usize], x: Vec<Rational>| {
        w.iter().rev().fold(x, |acc, &i| cert.left[i].mul_vec(&acc).expect("carrier dimension"))
    };
    let empty = cert.standard.iter().position(|&w| w == 0);
    // The empty word is never a leading term: relation 1 leads with a letter.
    let unit = vec::unit(dim, empty.expect("empty word is standard"));
    let mut terms = Vec::new();
    for (a, wa) in standard.iter().enumerate() {
        for b in 0..dim {
            for (k, c) in apply(wa, vec::unit(dim, b)).into_iter().enumerate() {
                if !c.is_zero() {
                    terms.push((a, b, k, c));
                }
            }
        }
    }
    let labels = standard
        .iter()
        .map(|w| {
            if w.is_empty() {
                "1".to_string()
            } else {
                w.iter().map(|&i| format!("[{}]", h.labels()[i])).collect()
            }
        })
        .collect();
    let carrier = FinDimAlgebra::new(dim, labels, unit.clone(), terms).expect("terms in range");
    let cols: Vec<Vec<Rational>> = (0..h.dim()).map(|i| cert.left[i].mul_vec(&unit).expect("carrier dimension")).collect();
    let bracket = Matrix::from_columns(dim, &cols).expect("carrier dimension");
    let mut ideal_rows: Vec<(usize, SparseVec)> = red.pivots().map(|p| (p, red.row(p).expect("pivot").clone())).collect();
    ideal_rows.sort_unstable_by_key(|(p, _)| *p);
    HparAlgebra { base: h.clone(), carrier, bracket, degree, saturation, standard, left: cert.left, trajectory, ideal_rows, ws }
}

impl HparAlgebra {
    pub fn base(&self) -> &WeakHopfAlgebra {
        &self.base
    }

    pub fn carrier(&self) -> &FinDimAlgebra {
        &self.carrier
    }

    pub fn dim(&self) -> usize {
        self.carrier.dim()
    }

    /// Matrix of `h ↦ [h]`.
    pub fn bracket(&self) -> &Matrix {
        &self.bracket
    }

    pub fn bracket_of(&self, h: &[Rational]) -> Vec<Rational> {
        self.bracket.mul_vec(h).expect("dimension of H")
    }

    pub fn bracket_rep(&self) -> PartialRep {
        PartialRep::new(self.base.clone(), self.carrier.clone(), self.bracket.clone()).expect("shapes agree")
    }

    /// Degree `d` at which the closure certificate was obtained; standard
    /// words have length `< d`.
    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Word length `D` of the relation instances used by the certificate.
    pub fn saturation(&self) -> usize {
        self.saturation
    }

    /// Words of the carrier basis, in basis order.
    pub fn standard_words(&self) -> &[Vec<usize>] {
        &self.standard
    }

    /// `dim V_D/I_D` for `D = 1, 2, …` up to the saturation depth.
    pub fn trajectory(&self) -> &[usize] {
        &self.trajectory
    }

    /// Left multiplication by `[e_i]` on the carrier.
    pub fn left_operator(&self, i: usize) -> &Matrix {
        &self.left[i]
    }

    /// Carrier coordinates of the class of an arbitrary word.
    pub fn reduce_word(&self, w: &[usize]) -> Vec<Rational> {
        let unit = self.carrier.unit().to_vec();
        w.iter().rev().fold(unit, |acc, &i| self.left[i].mul_vec(&acc).expect("carrier dimension"))
    }

    /// The echelon basis of `I_d` as `(leading word, row)` pairs, rows over
    /// word indices; see [`HparAlgebra::word`].
    pub fn ideal_rows(&self) -> &[(usize, SparseVec)] {
        &self.ideal_rows
    }

    pub fn word(&self, index: usize) -> Vec<usize> {
        self.ws.word(index)
    }
}

/// The finite stage `V_D/I_D` of the presentation, used when the closure
/// certificate is out of reach. Nothing here claims `V_D/I_D` embeds in
/// `H_par^w`; it is the space on which the defining relations of length
/// `≤ D` have been imposed.
#[derive(Clone, Debug)]
pub struct HparTruncation {
    base: WeakHopfAlgebra,
    depth: usize,
    trajectory: Vec<usize>,
    standard: Vec<usize>,
    pos: HashMap<usize, usize>,
    red: EchelonReducer,
    ws: WordSpace,
}

/// Saturates to depth `depth` (subject to the word budget) without looking
/// for a certificate.
pub fn truncate_hpar(h: &WeakHopfAlgebra, depth: usize, max_words: usize) -> Result<HparTruncation> {
    require_weak_hopf(h)?;
    let mut sat = Saturation::new(h);
    while sat.depth < depth {
        sat.extend(max_words)?;
    }
    let standard: Vec<usize> = (0..sat.ws.count(depth)).filter(|w| !sat.red.is_pivot(*w)).collect();
    let pos = standard.iter().enumerate().map(|(k, &w)| (w, k)).collect();
    Ok(HparTruncation { base: h.clone(), depth, trajectory: sat.trajectory, standard, pos, red: sat.red, ws: sat.ws })
}

impl HparTruncation {
    pub fn base(&self) -> &WeakHopfAlgebra {
        &self.base
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn dim(&self) -> usize {
        self.standard.len()
    }

    pub fn trajectory(&self) -> &[usize] {
        &self.trajectory
    }

    pub fn standard_words(&self) -> Vec<Vec<usize>> {
        self.standard.iter().map(|&w| self.ws.word(w)).collect()
    }

    /// Coordinates of a word of length `≤ D` in the standard basis.
    pub fn normal_form(&self, w: &[usize]) -> Option<Vec<Rational>> {
        if w.len() > self.depth {
            return None;
        }
        normal_form(&self.red, &self.pos, &SparseVec::unit(self.ws.index(w)))
    }

    /// All words of length `≤ D`, in index order.
    pub fn words(&self) -> impl Iterator<Item = Vec<usize>> + '_ {
        (0..self.ws.count(self.depth)).map(|i| self.ws.word(i))
    }

    /// The echelon basis of `I_D`, rows over word indices.
    pub fn ideal_rows(&self) -> Vec<(usize, SparseVec)> {
        let mut rows: Vec<(usize, SparseVec)> = self.red.pivots().map(|p| (p, self.red.row(p).expect("pivot").clone())).collect();
        rows.sort_unstable_by_key(|(p, _)| *p);
        rows
    }

    pub fn word(&self, index: usize) -> Vec<usize> {
        self.ws.word(index)
    }
}

/// A space that assigns a class to every linear combination of words over
/// the basis of `H`, compatibly with the defining relations: the carrier of
/// `H_par^w` itself, or a finite stage `V_D/I_D` of its presentation. An
/// identity between words that holds in either holds in `H_par^w`.
pub trait WordQuotient: Sync {
    fn base(&self) -> &WeakHopfAlgebra;

    /// Dimension of the space the classes live in.
    fn dim(&self) -> usize;

    /// The class of `Σ c·w`, or `None` if some word is out of range.
    fn class_of(&self, terms: &[(Vec<usize>, Rational)]) -> Option<Vec<Rational>>;
}

impl WordQuotient for HparAlgebra {
    fn base(&self) -> &WeakHopfAlgebra {
        &self.base
    }

    fn dim(&self) -> usize {
        self.carrier.dim()
    }

    fn class_of(&self, terms: &[(Vec<usize>, Rational)]) -> Option<Vec<Rational>> {
        let mut out = vec::zeros(self.dim());
        for (w, c) in terms {
            vec::axpy(&mut out, c, &self.reduce_word(w));
        }
        Some(out)
    }
}

impl WordQuotient for HparTruncation {
    fn base(&self) -> &WeakHopfAlgebra {
        &self.base
    }

    fn dim(&self) -> usize {
        self.standard.len()
    }

    fn class_of(&self, terms: &[(Vec<usize>, Rational)]) -> Option<Vec<Rational>> {
        if terms.iter().any(|(w, _)| w.len() > self.depth) {
            return None;
        }
        let v: SparseVec = terms.iter().map(|(w, c)| (self.ws.index(w), c.clone())).collect();
        normal_form(&self.red, &self.pos, &v)
    }
}

impl HparAlgebra {
    pub(crate) fn word_space(&self) -> &WordSpace {
        &self.ws
    }
}

impl HparTruncation {
    pub(crate) fn word_space(&self) -> &WordSpace {
        &self.ws
    }
}

/// `[·]` is a partial representation into the carrier, and the carrier is an
/// associative unital algebra.
pub fn bracket_rep_check(hp: &HparAlgebra, cfg: &CheckConfig) -> Report {
    let mut r = check_partial_rep(&hp.bracket_rep(), cfg);
    r.merge("carrier", crate::algebra::check_algebra(&hp.carrier, cfg));
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{groupoid_algebra, FiniteGroupoid};

    #[test]
    fn trivial_group_gives_ground_field() {
        let hp = build_hpar(&groupoid_algebra(&FiniteGroupoid::trivial()), 6).unwrap();
        assert_eq!(hp.dim(), 1);
        assert!(bracket_rep_check(&hp, &CheckConfig::default()).passed());
    }

    #[test]
    fn z2_has_three_dimensions() {
        let hp = build_hpar(&groupoid_algebra(&FiniteGroupoid::cyclic(2)), 6).unwrap();
        assert_eq!(hp.dim(), 3);
        assert_eq!(hp.standard_words()[0], Vec::<usize>::new());
        assert!(bracket_rep_check(&hp, &CheckConfig::default()).passed());
        // [g][g] is the idempotent E_g, not the unit.
        assert_ne!(hp.reduce_word(&[1, 1]), hp.carrier().unit().to_vec());
        assert_eq!(hp.reduce_word(&[1, 1, 1]), hp.reduce_word(&[1]));
    }

    #[test]
    fn truncation_matches_trajectory() {
        let h = groupoid_algebra(&FiniteGroupoid::cyclic(3));
        let tr = truncate_hpar(&h, 3, DEFAULT_MAX_WORDS).unwrap();
        assert_eq!(tr.trajectory(), &[3, 7, 9]);
        assert_eq!(tr.dim(), 9);
        assert_eq!(tr.normal_form(&[]).unwrap(), tr.normal_form(&[0]).unwrap());
        assert!(tr.normal_form(&[0, 0, 0, 0]).is_none());
    }

    #[test]
    fn budget_exhaustion_reports_trajectory() {
        let h = groupoid_algebra(&FiniteGroupoid::cyclic(3));
        let err = build_hpar_with(&h, BuildOptions { max_degree: 6, max_words: 20 }).unwrap_err();
        match err {
            Error::NotStabilized { max_degree, trajectory } => {
                assert_eq!(max_degree, 2);
                assert_eq!(trajectory.len(), 2);
            }
            other => panic!("unexpected {other:?}"),
        }
    }
}
