// SPDX-License-Identifier: Apache-2.0

use exactlin::{vec, Matrix, Rational, Subspace};
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| Rational::new(n, d))
}

fn matrix(max_rows: usize, max_cols: usize) -> impl Strategy<Value = Matrix> {
    (1..=max_rows, 1..=max_cols).prop_flat_map(|(r, c)| {
        prop::collection::vec(prop::collection::vec(rational(), c), r)
            .prop_map(|rows| Matrix::from_rows(rows).unwrap())
    })
}

fn square(n: usize) -> impl Strategy<Value = Matrix> {
    prop::collection::vec(prop::collection::vec(rational(), n), n)
        .prop_map(|rows| Matrix::from_rows(rows).unwrap())
}

proptest! {
    #[test]
    fn rref_is_idempotent(m in matrix(5, 5)) {
        let (r, p) = m.rref();
        let (rr, pp) = r.rref();
        prop_assert_eq!(rr, r);
        prop_assert_eq!(pp, p);
    }

    #[test]
    fn rref_preserves_row_space(m in matrix(4, 5)) {
        let (r, _) = m.rref();
        let a = Subspace::span(m.cols(), &m.row_vecs()).unwrap();
        let b = Subspace::span(m.cols(), &r.row_vecs()).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn rank_nullity(m in matrix(5, 6)) {
        let k = m.kernel_basis();
        prop_assert_eq!(m.rank() + k.dim(), m.cols());
        for v in k.basis() {
            prop_assert!(vec::is_zero(&m.mul_vec(v).unwrap()));
        }
    }

    #[test]
    fn kron_is_associative(a in square(2), b in square(2), c in square(3)) {
        prop_assert_eq!(a.kron(&b.kron(&c)), a.kron(&b).kron(&c));
    }

    #[test]
    fn kron_is_bilinear(a in square(2), a2 in square(2), b in square(3), s in rational()) {
        let lhs = a.scale(&s).add(&a2).unwrap().kron(&b);
        let rhs = a.kron(&b).scale(&s).add(&a2.kron(&b)).unwrap();
        prop_assert_eq!(lhs, rhs);
        let lhs = b.kron(&a.add(&a2).unwrap());
        let rhs = b.kron(&a).add(&b.kron(&a2)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn kron_mixed_product(a in square(2), b in square(3), c in square(2), d in square(3)) {
        let lhs = a.kron(&b).mul(&c.kron(&d)).unwrap();
        let rhs = a.mul(&c).unwrap().kron(&b.mul(&d).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn membership_coordinates_reconstruct(gens in prop::collection::vec(prop::collection::vec(rational(), 4), 1..4),
                                          coeffs in prop::collection::vec(rational(), 4)) {
        let s = Subspace::span(4, &gens).unwrap();
        let mut target = vec::zeros(4);
        for (c, g) in coeffs.iter().zip(&gens) {
            vec::axpy(&mut target, c, g);
        }
        let coords = s.solve_membership(&target).unwrap().expect("combination of generators is a member");
        prop_assert_eq!(s.combine(&coords), target);
    }

    #[test]
    fn rational_field_laws(a in rational(), b in rational(), c in rational()) {
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        if !b.is_zero() {
            prop_assert_eq!(&(&a / &b) * &b, a.clone());
        }
        let s = a.to_string();
        prop_assert_eq!(s.parse::<Rational>().unwrap(), a);
    }
}

#[test]
fn rational_serde_roundtrip() {
    let r = Rational::new(-7, 3);
    let s = serde_json::to_string(&r).unwrap();
    assert_eq!(s, "\"-7/3\"");
    let back: Rational = serde_json::from_str(&s).unwrap();
    assert_eq!(back, r);
    let from_int: Rational = serde_json::from_str("5").unwrap();
    assert_eq!(from_int, Rational::from_int(5));
}
