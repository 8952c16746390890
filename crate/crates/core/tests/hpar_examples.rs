// SPDX-License-Identifier: Apache-2.0

//! `H_par^w` on the groupoid corpus, checked against the Birget–Rhodes
//! expansion, and the sweedler pair through finite stages of the
//! presentation.

use exactlin::{vec, Matrix, Rational};
use whapar::constructors::{birget_rhodes, groupoid_algebra, sweedler_pair, FiniteGroupoid};
use whapar::hpar::*;
use whapar::partial::*;
use whapar::{CheckConfig, Error, FinDimAlgebra};

fn corpus() -> Vec<(&'static str, FiniteGroupoid)> {
    vec![
        ("trivial", FiniteGroupoid::trivial()),
        ("Z2", FiniteGroupoid::cyclic(2)),
        ("Z3", FiniteGroupoid::cyclic(3)),
        ("Z4", FiniteGroupoid::cyclic(4)),
        ("V4", FiniteGroupoid::klein_four()),
        ("discrete2", FiniteGroupoid::discrete(2)),
        ("pair2", FiniteGroupoid::pair(2)),
    ]
}

fn hpar_of(g: &FiniteGroupoid) -> HparAlgebra {
    build_hpar(&groupoid_algebra(g), DEFAULT_MAX_DEGREE).unwrap()
}

#[test]
fn dimensions_match_birget_rhodes() {
    let cfg = CheckConfig::default();
    for (name, g) in corpus() {
        let hp = hpar_of(&g);
        assert_eq!(hp.dim(), birget_rhodes(&g).len(), "{name}");
        let r = birget_rhodes_oracle(&g, &hp, &cfg);
        assert!(r.passed(), "{name}: {:?}", r.first_failure());
        let b = bracket_rep_check(&hp, &cfg);
        assert!(b.passed(), "{name}: {:?}", b.first_failure());
    }
}

#[test]
fn golden_dimensions() {
    let dims: Vec<usize> = corpus().iter().map(|(_, g)| hpar_of(g).dim()).collect();
    assert_eq!(dims, [1, 3, 8, 20, 20, 2, 6]);
}

#[test]
fn certificate_depths() {
    // (certificate degree, saturation depth); Z3 needs words of length five.
    let z3 = hpar_of(&FiniteGroupoid::cyclic(3));
    assert_eq!((z3.degree(), z3.saturation()), (4, 5));
    assert_eq!(z3.trajectory(), &[3, 7, 9, 10, 10]);
    let z2 = hpar_of(&FiniteGroupoid::cyclic(2));
    assert_eq!((z2.degree(), z2.saturation()), (3, 3));
    assert!(z2.standard_words().iter().all(|w| w.len() < z2.degree()));
}

#[test]
fn oracle_rejects_a_foreign_carrier() {
    let hp = hpar_of(&FiniteGroupoid::cyclic(2));
    let r = birget_rhodes_oracle(&FiniteGroupoid::cyclic(3), &hp, &CheckConfig::default());
    assert!(r.get("base").unwrap().failed());
}

#[test]
fn e_calculus_holds_everywhere() {
    let cfg = CheckConfig::default();
    for (name, g) in corpus() {
        let hp = hpar_of(&g);
        let r = propee_suite(&hp, &cfg);
        assert!(r.passed(), "{name}: {:?}", r.first_failure());
        // Groupoid algebras are cocommutative, so nothing is skipped.
        assert!(r.checks.iter().all(|c| !c.is_skipped()), "{name}");
    }
}

#[test]
fn apar_dimensions_count_units_of_the_expansion() {
    let expected = [("Z2", 2), ("Z3", 4)];
    for (name, g) in corpus() {
        let hp = hpar_of(&g);
        let ee = e_calculus(&hp).unwrap();
        let units = birget_rhodes(&g).elements().iter().filter(|(_, a)| g.identities().contains(a)).count();
        assert_eq!(ee.apar().dim(), units, "{name}");
        if let Some((_, d)) = expected.iter().find(|(n, _)| *n == name) {
            assert_eq!(ee.apar().dim(), *d);
        }
        assert!(ee.apar().contains(hp.carrier().unit()).unwrap());
        for c in ee.e().columns() {
            assert!(ee.apar().contains(&c).unwrap());
        }
    }
}

#[test]
fn apar_action_is_conjugation() {
    let cfg = CheckConfig::default();
    for (name, g) in corpus() {
        let hp = hpar_of(&g);
        let ee = e_calculus(&hp).unwrap();
        let pa = apar_action(&hp, &ee, &cfg).unwrap();
        let r = check_apar_action(&hp, &ee, &pa, &cfg);
        assert!(r.passed(), "{name}: {:?}", r.first_failure());
    }
}

#[test]
fn z2_conjugation_by_g_on_the_unit() {
    // g·1 = [g]1[g⁻¹] = E_g, a proper idempotent of A_par^w.
    let g = FiniteGroupoid::cyclic(2);
    let hp = hpar_of(&g);
    let ee = e_calculus(&hp).unwrap();
    let pa = apar_action(&hp, &ee, &CheckConfig::default()).unwrap();
    let h = hp.base();
    let one = ee.apar().solve_membership(hp.carrier().unit()).unwrap().unwrap();
    let image = ee.apar().combine(&pa.act(&h.basis(1), &one));
    let eg = ee.e_of(&h.basis(1));
    assert_eq!(image, eg);
    assert_eq!(hp.carrier().mul(&eg, &eg), eg);
    assert_ne!(eg, hp.carrier().unit().to_vec());
}

#[test]
fn smash_isomorphism() {
    let cfg = CheckConfig::default();
    for (name, g) in corpus() {
        let hp = hpar_of(&g);
        let ee = e_calculus(&hp).unwrap();
        let r = smash_iso_check(&hp, &ee, &cfg);
        assert!(r.passed(), "{name}: {:?}", r.first_failure());
    }
}

#[test]
fn factorizations_of_the_corpus_representations() {
    let cfg = CheckConfig::default();
    for (name, g) in corpus() {
        let h = groupoid_algebra(&g);
        let hp = hpar_of(&g);
        let mut reps = vec![hp.bracket_rep(), PartialRep::identity(&h)];
        for pa in [PartialAction::dual_regular(&h), PartialAction::counit(&h)] {
            if !check_partial_action(&pa, &cfg).is_symmetric_partial_action() {
                continue;
            }
            reps.push(endo_rep_from_action(&pa, &cfg).unwrap());
            reps.push(pi0(&smash_product(&pa).unwrap()));
        }
        for pr in reps {
            let fac = universal_factorization(&hp, &pr, &cfg).unwrap();
            assert!(fac.report.passed(), "{name}");
            assert_eq!(fac.report.status("routes-agree"), Some(&whapar::Status::Pass));
        }
    }
}

#[test]
fn identity_rep_of_z2_is_surjective() {
    let h = groupoid_algebra(&FiniteGroupoid::cyclic(2));
    let hp = build_hpar(&h, DEFAULT_MAX_DEGREE).unwrap();
    let fac = universal_factorization(&hp, &PartialRep::identity(&h), &CheckConfig::default()).unwrap();
    assert_eq!((fac.matrix.cols(), fac.rank()), (3, 2));
}

#[test]
fn global_actions_round_trip() {
    let cfg = CheckConfig::default();
    for (name, g) in corpus() {
        let h = groupoid_algebra(&g);
        let hp = hpar_of(&g);
        let ee = e_calculus(&hp).unwrap();
        let pa = PartialAction::dual_regular(&h);
        let r = algebra_object_roundtrip(&hp, &ee, &pa, &cfg).unwrap();
        assert!(r.passed(), "{name}: {:?}", r.first_failure());
    }
}

#[test]
fn genuinely_partial_action_round_trips() {
    // H_par^w acting on its own A_par^w by conjugation is partial, not global.
    let cfg = CheckConfig::default();
    let hp = hpar_of(&FiniteGroupoid::cyclic(3));
    let ee = e_calculus(&hp).unwrap();
    let pa = apar_action(&hp, &ee, &cfg).unwrap();
    let one = ee.apar().solve_membership(hp.carrier().unit()).unwrap().unwrap();
    assert_ne!(pa.act(&hp.base().basis(1), &one), one, "a group element must not fix the unit");
    let r = algebra_object_roundtrip(&hp, &ee, &pa, &cfg).unwrap();
    assert!(r.passed(), "{:?}", r.first_failure());
}

#[test]
fn roundtrip_rejects_non_symmetric_input() {
    let cfg = CheckConfig::default();
    let h = groupoid_algebra(&FiniteGroupoid::discrete(2));
    let hp = build_hpar(&h, DEFAULT_MAX_DEGREE).unwrap();
    let ee = e_calculus(&hp).unwrap();
    // ε(1) = 2 here, so the counit action is not even unital.
    assert!(matches!(algebra_object_roundtrip(&hp, &ee, &PartialAction::counit(&h), &cfg), Err(Error::Precondition(_))));
}

// ---- the sweedler pair ----------------------------------------------------

const E1: usize = 0;
const EX: usize = 1;
const EH: usize = 3;

fn functional(values: &[(usize, i64)]) -> PartialRep {
    let mut v = vec::zeros(8);
    for &(i, x) in values {
        v[i] = Rational::from_int(x);
    }
    PartialRep::scalar(&sweedler_pair(), &v).unwrap()
}

#[test]
fn sweedler_does_not_stabilize() {
    match build_hpar(&sweedler_pair(), DEFAULT_MAX_DEGREE) {
        Err(Error::NotStabilized { max_degree, trajectory }) => {
            assert_eq!(max_degree, 5);
            assert_eq!(trajectory, [8, 57, 244, 1124, 5676]);
        }
        other => panic!("expected non-stabilization, got {other:?}"),
    }
}

#[test]
fn sweedler_hpar_has_a_line_of_characters() {
    // π_t(e_1) = 1, π_t(e_x) = π_t(e_h) = t. Every axiom is a polynomial in t
    // of degree at most three, so four values prove it for all t. Distinct
    // characters of an algebra are linearly independent, so H_par^w of the
    // sweedler pair is infinite-dimensional and no budget can stabilize it.
    let cfg = CheckConfig::exhaustive();
    for t in 0..4 {
        let pr = functional(&[(E1, 1), (EX, t), (EH, t)]);
        assert!(check_partial_rep(&pr, &cfg).passed(), "t = {t}");
        assert!(relations_vanish(&pr).passed(), "t = {t}");
    }
}

#[test]
fn sweedler_e_calculus_on_a_finite_stage() {
    let tr = truncate_hpar(&sweedler_pair(), 5, DEFAULT_MAX_WORDS).unwrap();
    assert_eq!(tr.dim(), 5676);
    let r = propee_suite(&tr, &CheckConfig::default());
    assert!(r.passed(), "{:?}", r.first_failure());
    assert!(r.get("E-commute").unwrap().is_skipped());
    assert!(matches!(&r.get("E-commute").unwrap().status, whapar::Status::Skipped { reason } if reason == "not cocommutative"));
}

#[test]
fn sweedler_block_functional_factors() {
    let cfg = CheckConfig::default();
    let tr = truncate_hpar(&sweedler_pair(), 3, DEFAULT_MAX_WORDS).unwrap();
    let pr = functional(&[(E1, 1)]);
    let fac = truncated_factorization(&tr, &pr, &cfg).unwrap();
    assert!(fac.report.passed());
    assert_eq!(fac.matrix.rows(), 1);
    assert_eq!(fac.rank(), 1);
    // The literal data π(e_1) = π(f_1) = 1 is not a partial representation.
    let literal = functional(&[(E1, 1), (4, 1)]);
    assert!(matches!(truncated_factorization(&tr, &literal, &cfg), Err(Error::Precondition(_))));
    assert!(relations_vanish(&literal).get("wHpar1").unwrap().failed());
}

#[test]
fn sweedler_block_action_round_trips() {
    let h = sweedler_pair();
    let pa = PartialAction::new(h, FinDimAlgebra::ground_field(), [(E1, 0, 0, Rational::one())]).unwrap();
    let r = presentation_roundtrip(&pa, &CheckConfig::exhaustive()).unwrap();
    assert!(r.passed(), "{:?}", r.first_failure());
    assert_eq!(r.status("roundtrip"), Some(&whapar::Status::Pass));
}

#[test]
fn sweedler_dual_action_round_trips() {
    let pa = PartialAction::dual_regular(&sweedler_pair());
    let r = presentation_roundtrip(&pa, &CheckConfig::default()).unwrap();
    assert!(r.passed(), "{:?}", r.first_failure());
    let m = Matrix::identity(8);
    assert_eq!(pa.operator(sweedler_pair().unit()), m);
}
