// SPDX-License-Identifier: Apache-2.0

//! Check reports.
//!
//! Every verification in the crate produces a [`Report`]: a flat list of named
//! [`Check`]s. A check records how many cases it evaluated, how many failed,
//! and the first failing case as a witness (basis indices plus both sides of
//! the identity), so a failure can be reproduced by hand.

use exactlin::Rational;
use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped { reason: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub indices: Vec<usize>,
    pub lhs: Vec<Rational>,
    pub rhs: Vec<Rational>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub id: String,
    #[serde(flatten)]
    pub status: Status,
    pub cases: usize,
    pub failures: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sampled_with_seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Check {
    fn with_status(id: impl Into<String>, status: Status, cases: usize, failures: usize) -> Self {
        Check {
            id: id.into(),
            status,
            cases,
            failures,
            sampled_with_seed: None,
            witness: None,
            note: None,
        }
    }

    pub fn pass(id: impl Into<String>, cases: usize) -> Self {
        Self::with_status(id, Status::Pass, cases, 0)
    }

    pub fn fail(id: impl Into<String>, note: impl Into<String>) -> Self {
        Self::with_status(id, Status::Fail, 1, 1).with_note(note)
    }

    pub fn skipped(id: impl Into<String>, reason: impl Into<String>) -> Self {
        Self::with_status(id, Status::Skipped { reason: reason.into() }, 0, 0)
    }

    pub fn from_bool(id: impl Into<String>, ok: bool, note: impl Into<String>) -> Self {
        let c = if ok { Self::pass(id, 1) } else { Self::with_status(id, Status::Fail, 1, 1) };
        c.with_note(note)
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        let note = note.into();
        if !note.is_empty() {
            self.note = Some(note);
        }
        self
    }

    pub fn with_witness(mut self, w: Witness) -> Self {
        self.witness = Some(w);
        self
    }

    /// Evaluates `f` on every case and compares the two sides exactly.
    /// Cases are evaluated in parallel; the witness is the first failing case
    /// in input order, so the result does not depend on scheduling.
    pub fn equalities<F>(id: impl Into<String>, cases: &Cases, f: F) -> Self
    where
        F: Fn(&[usize]) -> (Vec<Rational>, Vec<Rational>) + Sync,
    {
        let outcomes: Vec<Option<(Vec<Rational>, Vec<Rational>)>> = cases
            .tuples
            .par_iter()
            .map(|t| {
                let (l, r) = f(t);
                (l != r).then_some((l, r))
            })
            .collect();
        let failures = outcomes.iter().filter(|o| o.is_some()).count();
        let status = if failures == 0 { Status::Pass } else { Status::Fail };
        let mut check = Self::with_status(id, status, cases.tuples.len(), failures);
        check.sampled_with_seed = cases.sampled_with_seed;
        if let Some((k, Some((lhs, rhs)))) = outcomes.into_iter().enumerate().find(|(_, o)| o.is_some()) {
            check.witness = Some(Witness { indices: cases.tuples[k].clone(), lhs, rhs });
        }
        check
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn failed(&self) -> bool {
        self.status == Status::Fail
    }

    pub fn is_skipped(&self) -> bool {
        matches!(self.status, Status::Skipped { .. })
    }
}

/// Scalar helper for witnesses of scalar identities.
pub fn scalar(x: Rational) -> Vec<Rational> {
    vec![x]
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    /// Appends another report's checks, prefixing their ids with `prefix.`.
    pub fn merge(&mut self, prefix: &str, other: Report) {
        for mut c in other.checks {
            if !prefix.is_empty() {
                c.id = format!("{prefix}.{}", c.id);
            }
            self.checks.push(c);
        }
    }

    /// True when no check failed (skipped checks do not count as failures).
    pub fn passed(&self) -> bool {
        !self.checks.iter().any(Check::failed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.failed())
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.failures().next()
    }

    pub fn get(&self, id: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.id == id)
    }

    /// Status of the check with exactly this id.
    pub fn status(&self, id: &str) -> Option<&Status> {
        self.get(id).map(|c| &c.status)
    }

    /// True if any check whose id starts with `prefix` failed.
    pub fn any_failed_with_prefix(&self, prefix: &str) -> bool {
        self.failures().any(|c| c.id.starts_with(prefix))
    }

    pub fn summary(&self) -> String {
        let pass = self.checks.iter().filter(|c| c.passed()).count();
        let fail = self.failures().count();
        let skip = self.checks.iter().filter(|c| c.is_skipped()).count();
        format!("{pass} passed, {fail} failed, {skip} skipped")
    }
}

/// How basis tuples are enumerated by the identity suites.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CheckConfig {
    pub seed: u64,
    /// Enumerate every tuple regardless of size.
    pub exhaustive: bool,
    /// Number of tuples drawn when sampling.
    pub sample_size: usize,
}

pub const DEFAULT_SEED: u64 = 0x5eed_2024;

/// Dimensions below this are always checked exhaustively.
pub const EXHAUSTIVE_BELOW: usize = 12;

impl Default for CheckConfig {
    fn default() -> Self {
        CheckConfig { seed: DEFAULT_SEED, exhaustive: false, sample_size: 4096 }
    }
}

/// A list of basis-index tuples to evaluate an identity on.
#[derive(Clone, Debug)]
pub struct Cases {
    pub tuples: Vec<Vec<usize>>,
    pub sampled_with_seed: Option<u64>,
}

impl Cases {
    pub fn len(&self) -> usize {
        self.tuples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tuples.is_empty()
    }
}

impl CheckConfig {
    pub fn exhaustive() -> Self {
        CheckConfig { exhaustive: true, ..Self::default() }
    }

    /// All tuples in `dims[0] × dims[1] × …`, or a seeded sample of them when
    /// some dimension is large and exhaustive mode is off.
    pub fn cases(&self, dims: &[usize]) -> Cases {
        let total: usize = dims.iter().product();
        let small = dims.iter().all(|&d| d < EXHAUSTIVE_BELOW);
        if self.exhaustive || small || total <= self.sample_size {
            return Cases { tuples: (0..total).map(|k| unflatten(k, dims)).collect(), sampled_with_seed: None };
        }
        // Mix the shape into the seed so different suites draw different tuples
        // while staying reproducible.
        let mut salt = self.seed;
        for &d in dims {
            salt = salt.wrapping_mul(0x9E37_79B9_7F4A_7C15).wrapping_add(d as u64);
        }
        let mut rng = ChaCha8Rng::seed_from_u64(salt);
        let mut picked: Vec<usize> = sample(&mut rng, total, self.sample_size).into_iter().collect();
        picked.sort_unstable();
        Cases { tuples: picked.into_iter().map(|k| unflatten(k, dims)).collect(), sampled_with_seed: Some(self.seed) }
    }
}

fn unflatten(mut k: usize, dims: &[usize]) -> Vec<usize> {
    let mut out = vec![0; dims.len()];
    for (slot, &d) in out.iter_mut().zip(dims).rev() {
        *slot = k % d;
        k /= d;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_dims_are_exhaustive_in_lexicographic_order() {
        let c = CheckConfig::default().cases(&[2, 3]);
        assert_eq!(c.tuples.len(), 6);
        assert_eq!(c.tuples[0], vec![0, 0]);
        assert_eq!(c.tuples[5], vec![1, 2]);
        assert!(c.sampled_with_seed.is_none());
    }

    #[test]
    fn sampling_is_deterministic() {
        let cfg = CheckConfig { sample_size: 50, ..CheckConfig::default() };
        let a = cfg.cases(&[20, 20, 20]);
        let b = cfg.cases(&[20, 20, 20]);
        assert_eq!(a.tuples, b.tuples);
        assert_eq!(a.tuples.len(), 50);
        assert_eq!(a.sampled_with_seed, Some(DEFAULT_SEED));
        let all = CheckConfig { exhaustive: true, ..cfg }.cases(&[20, 20, 20]);
        assert_eq!(all.tuples.len(), 8000);
    }

    #[test]
    fn equalities_report_first_witness() {
        let cases = CheckConfig::default().cases(&[4]);
        let c = Check::equalities("t", &cases, |t| {
            (scalar(Rational::from_int(t[0] as i64)), scalar(Rational::from_int((t[0] % 2) as i64)))
        });
        assert!(c.failed());
        assert_eq!(c.failures, 2);
        assert_eq!(c.witness.unwrap().indices, vec![2]);
    }
}
