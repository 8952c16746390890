// SPDX-License-Identifier: Apache-2.0

use whapar::constructors::{groupoid_algebra, FiniteGroupoid};
use whapar::hpar::{build_hpar, DEFAULT_MAX_DEGREE};
use whapar::qisg::{build_qisg, check_qisg};
use whapar::CheckConfig;

fn corpus() -> Vec<(&'static str, FiniteGroupoid)> {
    vec![
        ("trivial", FiniteGroupoid::trivial()),
        ("Z2", FiniteGroupoid::cyclic(2)),
        ("Z3", FiniteGroupoid::cyclic(3)),
        ("discrete2", FiniteGroupoid::discrete(2)),
        ("pair2", FiniteGroupoid::pair(2)),
    ]
}

#[test]
fn cocommutative_corpus_is_a_unital_qisg() {
    for (name, g) in corpus() {
        let hp = build_hpar(&groupoid_algebra(&g), DEFAULT_MAX_DEGREE).unwrap();
        let q = build_qisg(&hp).unwrap();
        let r = check_qisg(&q, &CheckConfig::exhaustive());
        let failed: Vec<_> = r.failures().map(|c| (c.id.clone(), c.note.clone())).collect();
        assert!(failed.is_empty(), "{name}: {failed:?}");
        for id in ["QISG3.I*S*I", "QISG3.S*I*S", "QISG4", "unital", "generators.partial-rep"] {
            assert!(r.get(id).is_some_and(|c| c.passed()), "{name}: {id}");
        }
    }
}

#[test]
fn coproduct_preserves_the_unit_only_for_groups() {
    for (name, g) in corpus() {
        let hp = build_hpar(&groupoid_algebra(&g), DEFAULT_MAX_DEGREE).unwrap();
        let r = check_qisg(&build_qisg(&hp).unwrap(), &CheckConfig::default());
        let note = r.get("delta-unit").and_then(|c| c.note.clone()).unwrap();
        let preserved = note == "Δ(1) = 1 ⊗ 1";
        assert_eq!(preserved, g.is_group(), "{name}: {note}");
    }
}
