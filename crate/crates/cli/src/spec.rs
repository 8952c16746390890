// SPDX-License-Identifier: Apache-2.0

//! The JSON input format.
//!
//! Every file is an object with `"format": "whapar/v1"` and a `"kind"`
//! selecting one of four bodies. Structure tensors are sparse lists of
//! `[i, j, k, "p/q"]` entries and rationals are strings (integers are also
//! accepted). See `docs/schema.md` for the full description.

use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use thiserror::Error;
use whapar::constructors::{groupoid_algebra, FiniteGroupoid};
use whapar::partial::{PartialAction, PartialRep};
use whapar::wha::AntipodeInverse;
use whapar::{FinDimAlgebra, FinDimCoalgebra, Matrix, Rational, WeakHopfAlgebra};

pub const FORMAT: &str = "whapar/v1";

/// `[i, j, k, c]`: the meaning depends on the table (see each field).
pub type Entry = (usize, usize, usize, Rational);

#[derive(Debug, Error)]
pub enum LoadError {
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{path}:{line}:{column}: {message}")]
    Parse { path: String, line: usize, column: usize, message: String },
    #[error("{path}: unsupported format {found:?}, expected {FORMAT:?}")]
    Format { path: String, found: String },
    #[error("{path}: {message}")]
    Invalid { path: String, message: String },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraSpec {
    pub labels: Vec<String>,
    pub unit: Vec<Rational>,
    /// `[i, j, k, c]`: `c·e_k` occurs in `e_i e_j`.
    pub mult: Vec<Entry>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WeakHopfSpec {
    pub labels: Vec<String>,
    pub unit: Vec<Rational>,
    /// `[i, j, k, c]`: `c·e_k` occurs in `e_i e_j`.
    pub mult: Vec<Entry>,
    pub counit: Vec<Rational>,
    /// `[i, j, k, c]`: `c·e_j ⊗ e_k` occurs in `Δ(e_i)`.
    pub comult: Vec<Entry>,
    /// Dense rows; column `j` is `S(e_j)`.
    pub antipode: Vec<Vec<Rational>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub antipode_inverse: Option<Vec<Vec<Rational>>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupoidSpec {
    pub objects: Vec<String>,
    pub arrows: Vec<String>,
    pub source: Vec<usize>,
    pub target: Vec<usize>,
    /// Identity arrow of each object.
    pub identities: Vec<usize>,
    /// `[g, h, g∘h]` for every composable pair (`source(g) = target(h)`).
    pub compose: Vec<(usize, usize, usize)>,
}

/// The weak Hopf algebra a partial action or representation is over:
/// either a path (relative to the referring file) or an inline body.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum HopfRef {
    Path(String),
    Inline(Box<HopfBody>),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum HopfBody {
    WeakHopf(WeakHopfSpec),
    Groupoid(GroupoidSpec),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ActionSpec {
    pub hopf: HopfRef,
    pub algebra: AlgebraSpec,
    /// `[i, j, k, c]`: `c·a_k` occurs in `e_i · a_j`.
    pub action: Vec<Entry>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RepSpec {
    pub hopf: HopfRef,
    pub target: AlgebraSpec,
    /// `[i, k, c]`: `c·b_k` occurs in `π(e_i)`.
    pub pi: Vec<(usize, usize, Rational)>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Body {
    WeakHopf(WeakHopfSpec),
    Groupoid(GroupoidSpec),
    PartialAction(ActionSpec),
    PartialRepresentation(RepSpec),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpecFile {
    pub format: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub description: Option<String>,
    #[serde(flatten)]
    pub body: Body,
}

impl SpecFile {
    pub fn new(description: Option<&str>, body: Body) -> Self {
        SpecFile { format: FORMAT.to_string(), description: description.map(str::to_string), body }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("spec files serialize") + "\n"
    }
}

/// A loaded input, with the groupoid it came from when there is one.
#[derive(Clone, Debug)]
pub enum Loaded {
    Hopf(WeakHopfAlgebra),
    Action(PartialAction),
    Rep(PartialRep),
}

#[derive(Clone, Debug)]
pub struct Input {
    pub path: String,
    pub sha256: String,
    pub groupoid: Option<FiniteGroupoid>,
    pub loaded: Loaded,
}

impl Input {
    /// The weak Hopf algebra underlying any kind of input.
    pub fn hopf(&self) -> &WeakHopfAlgebra {
        match &self.loaded {
            Loaded::Hopf(h) => h,
            Loaded::Action(pa) => pa.hopf(),
            Loaded::Rep(pr) => pr.hopf(),
        }
    }

    pub fn kind(&self) -> &'static str {
        match (&self.loaded, &self.groupoid) {
            (Loaded::Hopf(_), Some(_)) => "groupoid",
            (Loaded::Hopf(_), None) => "weak_hopf",
            (Loaded::Action(_), _) => "partial_action",
            (Loaded::Rep(_), _) => "partial_representation",
        }
    }
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    format!("{:x}", Sha256::digest(bytes))
}

fn read(path: &Path) -> Result<(Vec<u8>, SpecFile), LoadError> {
    let shown = path.display().to_string();
    let bytes = fs::read(path).map_err(|source| LoadError::Io { path: shown.clone(), source })?;
    let file: SpecFile = serde_json::from_slice(&bytes).map_err(|e| LoadError::Parse {
        path: shown.clone(),
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    if file.format != FORMAT {
        return Err(LoadError::Format { path: shown, found: file.format });
    }
    Ok((bytes, file))
}

/// Reads and validates an input file. The digest covers the file itself
/// and, for references, the referenced base file.
pub fn load(path: &Path) -> Result<Input, LoadError> {
    let shown = path.display().to_string();
    let invalid = |e: whapar::Error| LoadError::Invalid { path: shown.clone(), message: e.to_string() };
    let (bytes, file) = read(path)?;
    let mut hasher = Sha256::new();
    hasher.update(&bytes);
    let dir = path.parent().map(Path::to_path_buf).unwrap_or_default();
    let mut resolve = |r: &HopfRef| -> Result<(WeakHopfAlgebra, Option<FiniteGroupoid>), LoadError> {
        let body = match r {
            HopfRef::Inline(b) => (**b).clone(),
            HopfRef::Path(p) => {
                let base: PathBuf = dir.join(p);
                let (base_bytes, base_file) = read(&base)?;
                hasher.update(&base_bytes);
                match base_file.body {
                    Body::WeakHopf(w) => HopfBody::WeakHopf(w),
                    Body::Groupoid(g) => HopfBody::Groupoid(g),
                    _ => {
                        return Err(LoadError::Invalid {
                            path: base.display().to_string(),
                            message: "expected a weak_hopf or groupoid file".into(),
                        })
                    }
                }
            }
        };
        hopf_from_body(&body).map_err(invalid)
    };
    let (loaded, groupoid) = match &file.body {
        Body::WeakHopf(w) => (Loaded::Hopf(w.build().map_err(invalid)?), None),
        Body::Groupoid(g) => {
            let g = g.build().map_err(invalid)?;
            (Loaded::Hopf(groupoid_algebra(&g)), Some(g))
        }
        Body::PartialAction(a) => {
            let (h, g) = resolve(&a.hopf)?;
            (Loaded::Action(a.build(h).map_err(invalid)?), g)
        }
        Body::PartialRepresentation(r) => {
            let (h, g) = resolve(&r.hopf)?;
            (Loaded::Rep(r.build(h).map_err(invalid)?), g)
        }
    };
    Ok(Input { path: shown, sha256: format!("{:x}", hasher.finalize()), groupoid, loaded })
}

fn hopf_from_body(body: &HopfBody) -> whapar::Result<(WeakHopfAlgebra, Option<FiniteGroupoid>)> {
    match body {
        HopfBody::WeakHopf(w) => Ok((w.build()?, None)),
        HopfBody::Groupoid(g) => {
            let g = g.build()?;
            Ok((groupoid_algebra(&g), Some(g)))
        }
    }
}

fn dense(rows: &[Vec<Rational>], n: usize, what: &str) -> whapar::Result<Matrix> {
    if rows.len() != n || rows.iter().any(|r| r.len() != n) {
        return Err(whapar::Error::Input(format!("{what} must be a {n}x{n} matrix")));
    }
    Ok(Matrix::from_rows(rows.to_vec())?)
}

impl AlgebraSpec {
    pub fn build(&self) -> whapar::Result<FinDimAlgebra> {
        FinDimAlgebra::new(self.unit.len(), self.labels.clone(), self.unit.clone(), self.mult.iter().cloned())
    }

    pub fn from_algebra(a: &FinDimAlgebra) -> Self {
        AlgebraSpec { labels: a.labels().to_vec(), unit: a.unit().to_vec(), mult: a.structure_terms() }
    }
}

impl WeakHopfSpec {
    pub fn build(&self) -> whapar::Result<WeakHopfAlgebra> {
        let n = self.unit.len();
        let alg = FinDimAlgebra::new(n, self.labels.clone(), self.unit.clone(), self.mult.iter().cloned())?;
        let coalg = FinDimCoalgebra::new(n, self.counit.clone(), self.comult.iter().cloned())?;
        let s = dense(&self.antipode, n, "antipode")?;
        let s_inv = self.antipode_inverse.as_ref().map(|m| dense(m, n, "antipode_inverse")).transpose()?;
        WeakHopfAlgebra::new(alg, coalg, s, s_inv)
    }

    pub fn from_weak_hopf(h: &WeakHopfAlgebra) -> Self {
        let inverse = match h.inverse_status() {
            AntipodeInverse::Supplied(m) => Some(m.row_vecs()),
            AntipodeInverse::Computed(_) | AntipodeInverse::Singular => None,
        };
        WeakHopfSpec {
            labels: h.labels().to_vec(),
            unit: h.unit().to_vec(),
            mult: h.alg().structure_terms(),
            counit: h.coalg().counit().to_vec(),
            comult: h.coalg().structure_terms(),
            antipode: h.antipode().row_vecs(),
            antipode_inverse: inverse,
        }
    }
}

impl GroupoidSpec {
    pub fn build(&self) -> whapar::Result<FiniteGroupoid> {
        FiniteGroupoid::new(
            self.objects.clone(),
            self.arrows.clone(),
            self.source.clone(),
            self.target.clone(),
            self.identities.clone(),
            &self.compose,
        )
    }

    pub fn from_groupoid(g: &FiniteGroupoid) -> Self {
        let n = g.num_arrows();
        GroupoidSpec {
            objects: g.objects().to_vec(),
            arrows: g.arrows().to_vec(),
            source: (0..n).map(|a| g.source(a)).collect(),
            target: (0..n).map(|a| g.target(a)).collect(),
            identities: g.identities().to_vec(),
            compose: g.composition_triples(),
        }
    }
}

impl ActionSpec {
    pub fn build(&self, h: WeakHopfAlgebra) -> whapar::Result<PartialAction> {
        PartialAction::new(h, self.algebra.build()?, self.action.iter().cloned())
    }

    pub fn from_action(pa: &PartialAction, hopf: HopfRef) -> Self {
        ActionSpec { hopf, algebra: AlgebraSpec::from_algebra(pa.algebra()), action: pa.terms() }
    }
}

impl RepSpec {
    pub fn build(&self, h: WeakHopfAlgebra) -> whapar::Result<PartialRep> {
        let target = self.target.build()?;
        let mut pi = Matrix::zeros(target.dim(), h.dim());
        for (i, k, c) in &self.pi {
            if *i >= h.dim() || *k >= target.dim() {
                return Err(whapar::Error::Input(format!("pi entry ({i},{k}) out of range")));
            }
            let old = pi.get(*k, *i).clone();
            pi.set(*k, *i, old + c.clone());
        }
        PartialRep::new(h, target, pi)
    }

    pub fn from_rep(pr: &PartialRep, hopf: HopfRef) -> Self {
        let m = pr.matrix();
        let mut pi = Vec::new();
        for i in 0..m.cols() {
            for k in 0..m.rows() {
                if !m.get(k, i).is_zero() {
                    pi.push((i, k, m.get(k, i).clone()));
                }
            }
        }
        RepSpec { hopf, target: AlgebraSpec::from_algebra(pr.target()), pi }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use whapar::constructors::sweedler_pair;

    #[test]
    fn weak_hopf_round_trips_through_json() {
        let h = sweedler_pair();
        let file = SpecFile::new(Some("sweedler"), Body::WeakHopf(WeakHopfSpec::from_weak_hopf(&h)));
        let back: SpecFile = serde_json::from_str(&file.to_json()).unwrap();
        let Body::WeakHopf(w) = back.body else { panic!("kind changed") };
        assert_eq!(w.build().unwrap(), h);
    }

    #[test]
    fn rationals_are_strings() {
        let spec = AlgebraSpec { labels: vec!["a".into()], unit: vec![Rational::new(1, 2)], mult: vec![] };
        let json = serde_json::to_string(&spec).unwrap();
        assert!(json.contains("\"1/2\""), "{json}");
    }

    #[test]
    fn unknown_kind_is_a_parse_error() {
        let err = serde_json::from_str::<SpecFile>(r#"{"format":"whapar/v1","kind":"monoid"}"#).unwrap_err();
        assert!(err.to_string().contains("monoid"));
    }

    proptest! {
        #[test]
        fn cyclic_groupoids_round_trip(n in 1usize..6) {
            let g = FiniteGroupoid::cyclic(n);
            let spec = GroupoidSpec::from_groupoid(&g);
            let json = serde_json::to_string(&SpecFile::new(None, Body::Groupoid(spec))).unwrap();
            let back: SpecFile = serde_json::from_str(&json).unwrap();
            let Body::Groupoid(s) = back.body else { panic!("kind changed") };
            prop_assert_eq!(s.build().unwrap(), g);
        }

        #[test]
        fn rational_entries_survive(p in -50i64..50, q in 1i64..50) {
            let spec = AlgebraSpec { labels: vec!["a".into()], unit: vec![Rational::new(p, q)], mult: vec![(0, 0, 0, Rational::new(q, p.abs() + 1))] };
            let back: AlgebraSpec = serde_json::from_str(&serde_json::to_string(&spec).unwrap()).unwrap();
            prop_assert_eq!(back, spec);
        }
    }
}
