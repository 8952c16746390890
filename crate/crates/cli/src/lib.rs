// SPDX-License-Identifier: Apache-2.0

//! Command implementations behind the `whapar` binary.
//!
//! Each command loads one input file (see [`spec`]), runs a pipeline of
//! library checks and collects them into a [`RunReport`]. The binary only
//! parses arguments, prints the report and exits with
//! [`RunReport::exit_code`].

pub mod report;
pub mod spec;

use std::path::Path;
use std::time::Instant;

use whapar::algebroid::{build_algebroid, check_hopf_algebroid};
use whapar::constructors::birget_rhodes;
use whapar::hpar::{
    algebra_object_roundtrip, birget_rhodes_oracle, bracket_rep_check, build_hpar_with, e_calculus, presentation_roundtrip,
    propee_suite, smash_iso_check, truncate_hpar, truncated_factorization, universal_factorization, BuildOptions,
    HparAlgebra, DEFAULT_MAX_DEGREE, DEFAULT_MAX_WORDS,
};
use whapar::partial::{
    check_partial_action, check_partial_rep, generator_rank, globality_criterion, hs_ht_suite, pi0, prop25_suite,
    six_equiv_suite, smash_product, PartialAction, PartialRep,
};
use whapar::qisg::{build_qisg, check_qisg, require_cocommutative};
use whapar::wha::{canonical_projections, check_weak_hopf, lemma21_suite};
use whapar::{Check, CheckConfig, Error, WeakHopfAlgebra};

pub use report::{RunReport, RunStatus, Section};
pub use spec::{load, Input, LoadError, Loaded};

/// Depth of the finite stage used when `H_par^w` does not stabilize.
pub const TRUNCATION_DEPTH: usize = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Check,
    Hpar,
    Algebroid,
    Qisg,
    Smash,
    Parrep,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Check => "check",
            Command::Hpar => "hpar",
            Command::Algebroid => "algebroid",
            Command::Qisg => "qisg",
            Command::Smash => "smash",
            Command::Parrep => "parrep",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Options {
    pub seed: u64,
    pub exhaustive: bool,
    pub max_degree: usize,
    /// Compare `H_par^w` with the Birget–Rhodes expansion (groupoid input).
    pub oracle: bool,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            seed: whapar::report::DEFAULT_SEED,
            exhaustive: false,
            max_degree: DEFAULT_MAX_DEGREE,
            oracle: false,
        }
    }
}

impl Options {
    pub fn check_config(&self) -> CheckConfig {
        CheckConfig { seed: self.seed, exhaustive: self.exhaustive, ..CheckConfig::default() }
    }
}

/// Runs one command on one file. Never panics on bad input: load errors
/// become an `input_error` report.
pub fn run(command: Command, path: &Path, opts: &Options) -> RunReport {
    let start = Instant::now();
    let shown = path.display().to_string();
    let mut rr = RunReport::new(command.name(), &shown, opts.seed, opts.exhaustive, opts.max_degree);
    match load(path) {
        Err(e) => {
            rr.status = RunStatus::InputError;
            rr.message = Some(e.to_string());
        }
        Ok(input) => {
            rr.input_sha256 = Some(input.sha256.clone());
            rr.fact("kind", input.kind());
            rr.fact("hopf_dim", input.hopf().dim());
            let mut ctx = Ctx { rr: &mut rr, opts, cfg: opts.check_config() };
            match command {
                Command::Check => ctx.check(&input),
                Command::Hpar => ctx.hpar(&input),
                Command::Algebroid => ctx.algebroid(&input),
                Command::Qisg => ctx.qisg(&input),
                Command::Smash => ctx.smash(&input),
                Command::Parrep => ctx.parrep(&input),
            }
        }
    }
    rr.finish();
    rr.elapsed_ms = Some(start.elapsed().as_millis() as u64);
    rr
}

struct Ctx<'a> {
    rr: &'a mut RunReport,
    opts: &'a Options,
    cfg: CheckConfig,
}

impl Ctx<'_> {
    /// Builds `H_par^w`; on non-stabilization records the trajectory and
    /// sets the exit status, on other errors records a failed check.
    fn build(&mut self, h: &WeakHopfAlgebra) -> Option<HparAlgebra> {
        let opts = BuildOptions { max_degree: self.opts.max_degree, ..BuildOptions::default() };
        match build_hpar_with(h, opts) {
            Ok(hp) => {
                self.rr.fact("hpar_dim", hp.dim());
                self.rr.fact("degree", hp.degree());
                self.rr.fact("saturation", hp.saturation());
                self.rr.fact("trajectory", hp.trajectory().to_vec());
                self.rr.fact("certified", true);
                Some(hp)
            }
            Err(Error::NotStabilized { max_degree, trajectory }) => {
                self.not_stabilized(max_degree, &trajectory);
                None
            }
            Err(e) => {
                self.rr.single("build", Check::fail("hpar", e.to_string()));
                None
            }
        }
    }

    fn not_stabilized(&mut self, max_degree: usize, trajectory: &[usize]) {
        self.rr.status = RunStatus::NotStabilized;
        self.rr.fact("certified", false);
        self.rr.fact("trajectory", trajectory.to_vec());
        self.rr.message =
            Some(format!("not stabilized by degree {max_degree}; dimension trajectory {trajectory:?}"));
    }

    fn failure(&mut self, section: &str, id: &str, e: Error) {
        self.rr.single(section, Check::fail(id, e.to_string()));
    }

    fn check(&mut self, input: &Input) {
        let h = input.hopf();
        self.rr.section("weak-hopf", check_weak_hopf(h, &self.cfg));
        self.rr.section("lemma21", lemma21_suite(h, &self.cfg));
        match canonical_projections(h) {
            Ok(p) => {
                self.rr.fact("dim_ht", p.ht.dim());
                self.rr.fact("dim_hs", p.hs.dim());
                self.rr.single("projections", Check::pass("canonical-projections", 1));
            }
            Err(e) => self.failure("projections", "canonical-projections", e),
        }
        match &input.loaded {
            Loaded::Hopf(_) => {}
            Loaded::Action(pa) => {
                self.action_checks(pa);
            }
            Loaded::Rep(pr) => self.rr.section("partial-rep", check_partial_rep(pr, &self.cfg)),
        }
    }

    /// The partial-action axioms; symmetry is recorded as a fact because a
    /// non-symmetric partial action is still valid input.
    fn action_checks(&mut self, pa: &PartialAction) -> bool {
        let ac = check_partial_action(pa, &self.cfg);
        self.rr.fact("symmetric", ac.symmetric);
        let ok = ac.is_partial_action();
        self.rr.section("partial-action", ac.report);
        ok
    }

    fn hpar(&mut self, input: &Input) {
        let Some(hp) = self.build(input.hopf()) else { return };
        self.rr.section("bracket", bracket_rep_check(&hp, &self.cfg));
        self.rr.section("propee", propee_suite(&hp, &self.cfg));
        match e_calculus(&hp) {
            Ok(ee) => {
                self.rr.fact("apar_dim", ee.apar().dim());
                self.rr.fact("apar_tilde_dim", ee.apar_tilde().dim());
                self.rr.section("smash-iso", smash_iso_check(&hp, &ee, &self.cfg));
            }
            Err(e) => self.failure("e-calculus", "e-elements", e),
        }
        let mut headline = format!("dim={}", hp.dim());
        if self.opts.oracle {
            match &input.groupoid {
                Some(g) => {
                    let size = birget_rhodes(g).len();
                    self.rr.fact("oracle", size);
                    self.rr.section("oracle", birget_rhodes_oracle(g, &hp, &self.cfg));
                    headline.push_str(&format!(", oracle={size}"));
                }
                None => self.rr.single("oracle", Check::skipped("birget-rhodes", "input is not a groupoid")),
            }
        }
        headline.push_str(", certified");
        self.rr.message = Some(headline);
    }

    fn algebroid(&mut self, input: &Input) {
        let Some(hp) = self.build(input.hopf()) else { return };
        match build_algebroid(&hp) {
            Ok(data) => {
                self.rr.fact("base_dim", data.base().dim());
                self.rr.fact("left_tensor_dim", data.left_tensor().dim());
                self.rr.fact("right_tensor_dim", data.right_tensor().dim());
                self.rr.section("algebroid", check_hopf_algebroid(&data, &self.cfg));
            }
            Err(e) => self.failure("algebroid", "structure-maps", e),
        }
    }

    fn qisg(&mut self, input: &Input) {
        if let Err(Error::Precondition(reason)) = require_cocommutative(input.hopf()) {
            self.rr.status = RunStatus::Skipped;
            self.rr.message = Some(format!("skipped: {reason}"));
            self.rr.single("qisg", Check::skipped("qisg", reason));
            return;
        }
        let Some(hp) = self.build(input.hopf()) else { return };
        match build_qisg(&hp) {
            Ok(q) => self.rr.section("qisg", check_qisg(&q, &self.cfg)),
            Err(e) => self.failure("qisg", "structure-maps", e),
        }
    }

    fn smash(&mut self, input: &Input) {
        match &input.loaded {
            Loaded::Action(pa) => {
                if !self.action_checks(pa) {
                    return;
                }
                let sp = match smash_product(pa) {
                    Ok(sp) => sp,
                    Err(e) => return self.failure("smash", "construction", e),
                };
                self.rr.fact("smash_dim", sp.algebra().dim());
                self.rr.fact("generator_rank", generator_rank(&sp));
                self.rr.section("smash", prop25_suite(&sp, &self.cfg));
                let p = pi0(&sp);
                self.rr.section("pi0", check_partial_rep(&p, &self.cfg));
                self.factorize(&p);
            }
            _ => {
                let Some(hp) = self.build(input.hopf()) else { return };
                match e_calculus(&hp) {
                    Ok(ee) => self.rr.section("smash-iso", smash_iso_check(&hp, &ee, &self.cfg)),
                    Err(e) => self.failure("e-calculus", "e-elements", e),
                }
            }
        }
    }

    fn parrep(&mut self, input: &Input) {
        match &input.loaded {
            Loaded::Rep(pr) => {
                self.rr.section("partial-rep", check_partial_rep(pr, &self.cfg));
                self.rr.section("six-equiv", six_equiv_suite(pr, &self.cfg));
                self.rr.section("hs-ht", hs_ht_suite(pr, &self.cfg));
                let g = globality_criterion(pr);
                self.rr.fact("global", g.global);
                self.rr.section("globality", g.report);
                self.factorize(pr);
            }
            Loaded::Action(pa) => {
                if !self.action_checks(pa) {
                    return;
                }
                self.roundtrip(pa);
            }
            Loaded::Hopf(h) => self.factorize(&PartialRep::identity(h)),
        }
    }

    /// The algebra-object round trip through `H_par^w` when it certifies,
    /// otherwise through the presentation.
    fn roundtrip(&mut self, pa: &PartialAction) {
        let result = match self.build_quiet(pa.hopf()) {
            Some(hp) => {
                self.rr.fact("route", "algebra-object");
                e_calculus(&hp).and_then(|ee| algebra_object_roundtrip(&hp, &ee, pa, &self.cfg))
            }
            None => {
                self.rr.fact("route", "presentation");
                presentation_roundtrip(pa, &self.cfg)
            }
        };
        match result {
            Ok(r) => self.rr.section("roundtrip", r),
            Err(e) => self.failure("roundtrip", "roundtrip", e),
        }
    }

    /// `π̂` through `H_par^w` when it certifies, otherwise through the
    /// finite stage of depth [`TRUNCATION_DEPTH`].
    fn factorize(&mut self, pr: &PartialRep) {
        let result = match self.build_quiet(pr.hopf()) {
            Some(hp) => universal_factorization(&hp, pr, &self.cfg),
            None => {
                self.rr.fact("truncation_depth", TRUNCATION_DEPTH);
                truncate_hpar(pr.hopf(), TRUNCATION_DEPTH, DEFAULT_MAX_WORDS)
                    .and_then(|tr| truncated_factorization(&tr, pr, &self.cfg))
            }
        };
        match result {
            Ok(f) => {
                self.rr.fact("factorization_rank", f.rank());
                self.rr.section("factorization", f.report);
            }
            Err(e) => self.failure("factorization", "exists", e),
        }
    }

    /// Like [`Ctx::build`], but non-stabilization only selects the
    /// finite-stage route instead of ending the run.
    fn build_quiet(&mut self, h: &WeakHopfAlgebra) -> Option<HparAlgebra> {
        let opts = BuildOptions { max_degree: self.opts.max_degree, ..BuildOptions::default() };
        match build_hpar_with(h, opts) {
            Ok(hp) => {
                self.rr.fact("hpar_dim", hp.dim());
                self.rr.fact("certified", true);
                Some(hp)
            }
            Err(e) => {
                self.rr.fact("certified", false);
                if !matches!(e, Error::NotStabilized { .. }) {
                    self.rr.fact("build_error", e.to_string());
                }
                None
            }
        }
    }
}
