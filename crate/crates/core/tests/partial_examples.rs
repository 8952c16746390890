// SPDX-License-Identifier: Apache-2.0

//! The partial action of the sweedler pair on its ground field, the partial
//! representations it induces, and the smash/covariant-pair machinery on it.

use exactlin::{vec, Matrix, Rational, Subspace};
use proptest::prelude::*;
use whapar::constructors::{groupoid_algebra, sweedler_pair, FiniteGroupoid};
use whapar::partial::*;
use whapar::wha::canonical_projections;
use whapar::{CheckConfig, FinDimAlgebra, WeakHopfAlgebra};

const E1: usize = 0;
const EX: usize = 1;
const EG: usize = 2;
const EH: usize = 3;
const F1: usize = 4;

fn on_field(h: &WeakHopfAlgebra, ones: &[usize]) -> PartialAction {
    let terms = ones.iter().map(|&i| (i, 0, 0, Rational::one()));
    PartialAction::new(h.clone(), FinDimAlgebra::ground_field(), terms).unwrap()
}

/// `e_1 · 1 = 1` and every other basis element acts by zero.
fn block_action() -> PartialAction {
    on_field(&sweedler_pair(), &[E1])
}

#[test]
fn block_action_is_a_symmetric_partial_action() {
    let c = check_partial_action(&block_action(), &CheckConfig::exhaustive());
    assert!(c.is_symmetric_partial_action(), "{:?}", c.report.first_failure());
}

#[test]
fn letting_both_units_act_by_one_breaks_unitality() {
    // 1_H = e_1 + f_1, so 1_H · 1 = 2.
    let c = check_partial_action(&on_field(&sweedler_pair(), &[E1, F1]), &CheckConfig::exhaustive());
    let pa2 = c.report.get("PA2").unwrap();
    assert!(pa2.failed());
    assert_eq!(pa2.witness.as_ref().unwrap().lhs, vec![Rational::from_int(2)]);
    // With e_g · 1 = 1 added, PA3 is among the failures as well.
    let c = check_partial_action(&on_field(&sweedler_pair(), &[E1, F1, EG]), &CheckConfig::exhaustive());
    assert!(c.report.get("PA3").unwrap().failed());
}

#[test]
fn nilpotent_perturbation_fails_pa3_only() {
    let c = check_partial_action(&on_field(&sweedler_pair(), &[E1, EX]), &CheckConfig::exhaustive());
    let failed: Vec<_> = c.report.failures().map(|c| c.id.as_str()).collect();
    assert_eq!(failed, ["PA3"]);
    // e_g acting by one is the counit action on the first block: still global.
    let c = check_partial_action(&on_field(&sweedler_pair(), &[E1, EG]), &CheckConfig::exhaustive());
    assert!(c.is_symmetric_partial_action());
}

#[test]
fn induced_endomorphism_rep_is_the_block_functional() {
    let pr = endo_rep_from_action(&block_action(), &CheckConfig::default()).unwrap();
    let mut expected = vec::zeros(8);
    expected[E1] = Rational::one();
    assert_eq!(pr.matrix().row(0), expected.as_slice());
    assert!(!globality_criterion(&pr).global);
    assert!(six_equiv_suite(&pr, &CheckConfig::default()).passed());
}

#[test]
fn non_symmetric_action_has_no_endomorphism_rep() {
    // The nilpotent perturbation is not even a partial action.
    let err = endo_rep_from_action(&on_field(&sweedler_pair(), &[E1, EX]), &CheckConfig::default()).unwrap_err();
    assert!(matches!(err, whapar::Error::Precondition(_)));
}

#[test]
fn block_action_module_passes() {
    let pm = PartialModule::from_action(&block_action());
    assert!(check_partial_module(&pm, &CheckConfig::exhaustive()).passed());
}

/// Independent computation of the smash carrier for an action on ℚ:
/// `ℚ ⊗_{H_t} H = H / span{(w·1) h − S(w) h : w ∈ H_s}`, and the rank of
/// `{(h₁·1) h₂}` in it.
fn field_smash_oracle(pa: &PartialAction) -> (usize, usize) {
    let h = pa.hopf();
    let n = h.dim();
    let proj = canonical_projections(h).unwrap();
    let one = vec![Rational::one()];
    let mut rel = Subspace::zero(n);
    for w in proj.hs.basis() {
        let c = pa.act(w, &one)[0].clone();
        let z = h.s(w);
        for j in 0..n {
            let hj = h.basis(j);
            rel.insert(vec::sub(&vec::scale(&c, &hj), &h.mul(&z, &hj))).unwrap();
        }
    }
    let carrier = n - rel.dim();
    let mut gens = rel.clone();
    for j in 0..n {
        let mut g = vec::zeros(n);
        for (ix, c) in h.basis_coproduct(j, 2) {
            let scalar = pa.act(&h.basis(ix[0]), &one)[0].clone();
            vec::axpy(&mut g, &(c * scalar), &h.basis(ix[1]));
        }
        gens.insert(g).unwrap();
    }
    (carrier, gens.dim() - rel.dim())
}

#[test]
fn block_action_smash_matches_oracle() {
    let pa = block_action();
    let sp = smash_product(&pa).unwrap();
    let (carrier, rank) = field_smash_oracle(&pa);
    assert_eq!(sp.carrier_dim(), carrier);
    assert_eq!(generator_rank(&sp), rank);
    // Golden values: the f-block is balanced away and the generators span
    // the classes of e_1 and e_h.
    assert_eq!((carrier, rank, sp.algebra().dim()), (4, 2, 2));
    assert!(prop25_suite(&sp, &CheckConfig::exhaustive()).passed());
}

#[test]
fn pi0_of_block_smash_is_supported_on_e1_and_eh() {
    let sp = smash_product(&block_action()).unwrap();
    let p0 = pi0(&sp);
    let support: Vec<usize> = (0..8).filter(|&i| !vec::is_zero(&p0.apply_basis(i))).collect();
    assert_eq!(support, [E1, EH]);
    assert!(check_partial_rep(&p0, &CheckConfig::exhaustive()).passed());
    let g = globality_criterion(&p0);
    assert!(!g.global);
    assert_eq!(g.conditions, [false, false, false]);
    assert_eq!(p0.apply(p0.hopf().unit()), sp.algebra().unit().to_vec());
}

#[test]
fn factorization_to_the_ground_field_is_surjective() {
    let cfg = CheckConfig::default();
    let pa = block_action();
    let sp = smash_product(&pa).unwrap();
    let cp = CovariantPair::endomorphism(&pa, &cfg).unwrap();
    assert!(check_covariant_pair(&cp, &cfg).passed());
    let fac = covariant_factorization(&cp, &sp, &cfg).unwrap();
    assert_eq!(fac.matrix.rows(), 1);
    assert_eq!(fac.matrix.rank(), 1);
    assert!(fac.report.passed());
}

#[test]
fn endomorphism_rep_and_pi0_are_intertwined() {
    let cfg = CheckConfig::default();
    for pa in [
        block_action(),
        PartialAction::dual_regular(&groupoid_algebra(&FiniteGroupoid::cyclic(3))),
        PartialAction::dual_regular(&groupoid_algebra(&FiniteGroupoid::pair(2))),
    ] {
        let sp = smash_product(&pa).unwrap();
        let cp = CovariantPair::endomorphism(&pa, &cfg).unwrap();
        let fac = covariant_factorization(&cp, &sp, &cfg).unwrap();
        let p0 = pi0(&sp);
        for i in 0..pa.hopf().dim() {
            assert_eq!(fac.apply(&p0.apply_basis(i)), cp.pi().apply_basis(i));
        }
    }
}

#[test]
fn canonical_pair_of_every_smash_is_covariant() {
    let cfg = CheckConfig::default();
    for pa in [block_action(), PartialAction::counit(&groupoid_algebra(&FiniteGroupoid::cyclic(2)))] {
        let sp = smash_product(&pa).unwrap();
        let cp = CovariantPair::canonical(&sp);
        assert!(check_covariant_pair(&cp, &cfg).passed());
        let fac = covariant_factorization(&cp, &sp, &cfg).unwrap();
        assert_eq!(fac.matrix, Matrix::identity(sp.algebra().dim()));
    }
}

#[test]
fn counterexample_search_reports_its_seed() {
    match pr6_counterexample_search(&sweedler_pair(), 11, 300).unwrap() {
        SearchOutcome::NotFound { candidates, seed } => assert_eq!((candidates, seed), (300, 11)),
        SearchOutcome::Found { conditions, .. } => assert!(conditions.iter().all(|c| !c)),
    }
}

fn small() -> impl Strategy<Value = Rational> {
    (-2i64..=2).prop_map(Rational::from_int)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    /// A functional passes the representation axioms exactly when the
    /// one-dimensional module it defines passes the module axioms.
    #[test]
    fn functional_rep_and_module_agree(values in proptest::collection::vec(small(), 4)) {
        let h = groupoid_algebra(&FiniteGroupoid::pair(2));
        let pr = PartialRep::scalar(&h, &values).unwrap();
        let act = values.iter().map(|v| Matrix::from_rows(vec![vec![v.clone()]]).unwrap()).collect();
        let pm = PartialModule::new(h, 1, act).unwrap();
        let r = check_partial_module(&pm, &CheckConfig::exhaustive());
        prop_assert_eq!(r.get("agreement").unwrap().passed(), true);
        prop_assert_eq!(check_partial_rep(&pr, &CheckConfig::exhaustive()).passed(), r.get("PM6").unwrap().passed()
            && ["PM1", "PM2", "PM3", "PM4", "PM5"].iter().all(|id| r.get(id).unwrap().passed()));
    }

    /// Whenever the first five axioms hold, the equivalent forms of the sixth agree.
    #[test]
    fn six_conditions_agree(values in proptest::collection::vec(small(), 2)) {
        let h = groupoid_algebra(&FiniteGroupoid::discrete(2));
        let pr = PartialRep::scalar(&h, &values).unwrap();
        let r = six_equiv_suite(&pr, &CheckConfig::exhaustive());
        prop_assert!(r.first_failure().is_none());
    }
}
