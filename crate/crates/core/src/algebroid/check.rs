// SPDX-License-Identifier: Apache-2.0

use exactlin::{vec, Matrix, Rational, Subspace};

use super::build::HopfAlgebroidData;
use super::tensor::{apply2, contract2, expand_leg, images, tensor_mul, BalancedTensor};
use crate::report::{Check, CheckConfig, Report};

type V = Vec<Rational>;

fn contained(id: &str, sub: &Subspace, vs: impl Iterator<Item = V>, what: &str) -> Check {
    let mut cases = 0;
    for v in vs {
        cases += 1;
        if !sub.contains(&v).expect("carrier dimension") {
            return Check::fail(id, format!("case {}: {what}", cases - 1));
        }
    }
    Check::pass(id, cases)
}

/// Checks the Hopf algebroid axioms for `H_par^w`: the structure maps, both
/// corings and their Takeuchi and counit conditions, and the antipode
/// axioms, each evaluated on basis tuples of the carrier and base algebras.
pub fn check_hopf_algebroid(data: &HopfAlgebroidData, cfg: &CheckConfig) -> Report {
    let c = data.hpar().carrier();
    let n = c.dim();
    let mul = |x: &[Rational], y: &[Rational]| c.mul(x, y);
    let e = |i: usize| c.basis(i);
    let one = c.unit().to_vec();
    let ab: &[V] = data.base().basis();
    let bt: &[V] = data.base_tilde().basis();
    let (na, nb) = (ab.len(), bt.len());
    let on = |m: &Matrix, x: &[Rational]| m.mul_vec(x).expect("carrier dimension");
    let sv = |x: &[Rational]| data.apply_antipode(x);
    let t = |x: &[Rational]| data.t(x);
    let el = |x: &[Rational]| on(data.eps_l(), x);
    let er = |x: &[Rational]| on(data.eps_r(), x);
    let (lt, rt) = (data.left_tensor(), data.right_tensor());
    let dl = |x: &[Rational]| on(data.delta_l(), x);
    let dr = |x: &[Rational]| on(data.delta_r(), x);
    let dl_lift = |x: &[Rational]| data.delta_l_lift(x);
    let dr_lift = |x: &[Rational]| data.delta_r_lift(x);
    let dl_basis: Vec<V> = (0..n).map(|i| dl_lift(&e(i))).collect();
    let dr_basis: Vec<V> = (0..n).map(|i| dr_lift(&e(i))).collect();
    let id_images = images(&Matrix::identity(n));
    let lm = |x: &[Rational]| images(&c.left_mult(x));
    let rm = |x: &[Rational]| images(&c.right_mult(x));
    let mut r = Report::new();

    // Structure maps.
    for (name, basis, sub) in [("source", ab, data.base()), ("source-tilde", bt, data.base_tilde())] {
        let k = basis.len();
        let products = (0..k * k).map(|p| mul(&basis[p / k], &basis[p % k])).chain(std::iter::once(one.clone()));
        r.push(contained(&format!("{name}.morphism"), sub, products, "base not closed under products"));
    }
    for (name, basis) in [("target", ab), ("target-tilde", bt)] {
        let k = basis.len();
        r.push(Check::equalities(format!("{name}.anti-morphism"), &cfg.cases(&[k, k]), |x| {
            (t(&mul(&basis[x[0]], &basis[x[1]])), mul(&t(&basis[x[1]]), &t(&basis[x[0]])))
        }));
        r.push(Check::from_bool(format!("{name}.unital"), t(&one) == one, "image of the unit"));
        r.push(Check::equalities(format!("{name}.commutes-with-source"), &cfg.cases(&[k, k]), |x| {
            let (a, b) = (&basis[x[0]], t(&basis[x[1]]));
            (mul(a, &b), mul(&b, a))
        }));
    }
    let id = Matrix::identity(n);
    r.push(Check::from_bool(
        "antipode.invertible",
        data.antipode().mul(data.antipode_inverse()).ok() == Some(id.clone())
            && data.antipode_inverse().mul(data.antipode()).ok() == Some(id),
        "𝒮∘𝒮′ and 𝒮′∘𝒮 on the carrier basis",
    ));
    r.push(Check::equalities("antipode.anti-morphism", &cfg.cases(&[n, n]), |x| {
        (sv(&mul(&e(x[0]), &e(x[1]))), mul(&sv(&e(x[1])), &sv(&e(x[0]))))
    }));

    // Left bialgebroid over A: a ▷ x ◁ b = s(a)t(b)x.
    let ll = BalancedTensor::new(n, &[data.left_balancing(), data.left_balancing()]);
    r.push(contained("left.counit-into-base", data.base(), (0..n).map(|i| el(&e(i))), "ε_l leaves A"));
    r.push(Check::equalities("left.counit-on-source", &cfg.cases(&[na]), |x| (el(&ab[x[0]]), ab[x[0]].clone())));
    r.push(Check::equalities("left.counit-bimodule", &cfg.cases(&[na, na, n]), |x| {
        let (a, b) = (&ab[x[0]], &ab[x[1]]);
        (el(&mul(&mul(a, &t(b)), &e(x[2]))), mul(&mul(a, &el(&e(x[2]))), b))
    }));
    r.push(Check::equalities("left.coproduct-bimodule", &cfg.cases(&[na, na, n]), |x| {
        let (a, b) = (&ab[x[0]], &ab[x[1]]);
        (dl(&mul(&mul(a, &t(b)), &e(x[2]))), lt.project(&apply2(&lm(a), &lm(&t(b)), &dl_basis[x[2]])))
    }));
    r.push(Check::equalities("left.coassociative", &cfg.cases(&[n]), |x| {
        let v = &dl_basis[x[0]];
        (ll.project(&expand_leg(n, 2, v, 0, &dl_basis)), ll.project(&expand_leg(n, 2, v, 1, &dl_basis)))
    }));
    r.push(Check::equalities("left.counit-first", &cfg.cases(&[n]), |x| {
        (contract2(n, &dl_basis[x[0]], n, |i, j| mul(&el(&e(i)), &e(j))), e(x[0]))
    }));
    r.push(Check::equalities("left.counit-second", &cfg.cases(&[n]), |x| {
        (contract2(n, &dl_basis[x[0]], n, |i, j| mul(&t(&el(&e(j))), &e(i))), e(x[0]))
    }));
    r.push(Check::equalities("left.takeuchi", &cfg.cases(&[n, na]), |x| {
        let (v, a) = (&dl_basis[x[0]], &ab[x[1]]);
        let d = vec::sub(&apply2(&rm(&t(a)), &id_images, v), &apply2(&id_images, &rm(a), v));
        (lt.project(&d), vec::zeros(lt.dim()))
    }));
    r.push(Check::equalities("left.multiplicative", &cfg.cases(&[n, n]), |x| {
        (dl(&mul(&e(x[0]), &e(x[1]))), lt.project(&tensor_mul(c, &dl_basis[x[0]], &dl_basis[x[1]])))
    }));
    r.push(Check::from_bool("left.unital", dl(&one) == lt.project(&vec::tensor(&one, &one)), "Δ_l(1) = 1 ⊗ 1"));
    r.push(Check::equalities("left.counit-product-source", &cfg.cases(&[n, n]), |x| {
        let (a, b) = (e(x[0]), e(x[1]));
        (el(&mul(&a, &b)), el(&mul(&a, &el(&b))))
    }));
    r.push(Check::equalities("left.counit-product-target", &cfg.cases(&[n, n]), |x| {
        let (a, b) = (e(x[0]), e(x[1]));
        (el(&mul(&a, &b)), el(&mul(&a, &t(&el(&b)))))
    }));

    // Right bialgebroid over Ã: a ▷ x ◁ b = x s̃(b) t̃(a).
    let rr = BalancedTensor::new(n, &[data.right_balancing(), data.right_balancing()]);
    r.push(contained("right.counit-into-base", data.base_tilde(), (0..n).map(|i| er(&e(i))), "ε_r leaves Ã"));
    r.push(Check::equalities("right.counit-on-source", &cfg.cases(&[nb]), |x| (er(&bt[x[0]]), bt[x[0]].clone())));
    r.push(Check::equalities("right.counit-bimodule", &cfg.cases(&[nb, nb, n]), |x| {
        let (a, b) = (&bt[x[0]], &bt[x[1]]);
        (er(&mul(&mul(&e(x[2]), b), &t(a))), mul(&mul(a, &er(&e(x[2]))), b))
    }));
    r.push(Check::equalities("right.coproduct-bimodule", &cfg.cases(&[nb, nb, n]), |x| {
        let (a, b) = (&bt[x[0]], &bt[x[1]]);
        (dr(&mul(&mul(&e(x[2]), b), &t(a))), rt.project(&apply2(&rm(&t(a)), &rm(b), &dr_basis[x[2]])))
    }));
    r.push(Check::equalities("right.coassociative", &cfg.cases(&[n]), |x| {
        let v = &dr_basis[x[0]];
        (rr.project(&expand_leg(n, 2, v, 0, &dr_basis)), rr.project(&expand_leg(n, 2, v, 1, &dr_basis)))
    }));
    r.push(Check::equalities("right.counit-first", &cfg.cases(&[n]), |x| {
        (contract2(n, &dr_basis[x[0]], n, |i, j| mul(&e(j), &t(&er(&e(i))))), e(x[0]))
    }));
    r.push(Check::equalities("right.counit-second", &cfg.cases(&[n]), |x| {
        (contract2(n, &dr_basis[x[0]], n, |i, j| mul(&e(i), &er(&e(j)))), e(x[0]))
    }));
    r.push(Check::equalities("right.takeuchi", &cfg.cases(&[n, nb]), |x| {
        let (v, b) = (&dr_basis[x[0]], &bt[x[1]]);
        let d = vec::sub(&apply2(&lm(b), &id_images, v), &apply2(&id_images, &lm(&t(b)), v));
        (rt.project(&d), vec::zeros(rt.dim()))
    }));
    r.push(Check::equalities("right.multiplicative", &cfg.cases(&[n, n]), |x| {
        (dr(&mul(&e(x[0]), &e(x[1]))), rt.project(&tensor_mul(c, &dr_basis[x[0]], &dr_basis[x[1]])))
    }));
    r.push(Check::from_bool("right.unital", dr(&one) == rt.project(&vec::tensor(&one, &one)), "Δ_r(1) = 1 ⊗ 1"));
    r.push(Check::equalities("right.counit-product-source", &cfg.cases(&[n, n]), |x| {
        let (a, b) = (e(x[0]), e(x[1]));
        (er(&mul(&a, &b)), er(&mul(&er(&a), &b)))
    }));
    r.push(Check::equalities("right.counit-product-target", &cfg.cases(&[n, n]), |x| {
        let (a, b) = (e(x[0]), e(x[1]));
        (er(&mul(&a, &b)), er(&mul(&t(&er(&a)), &b)))
    }));

    // The antipode.
    r.push(Check::equalities("antipode.counit-l-on-target-tilde", &cfg.cases(&[nb]), |x| {
        let tb = t(&bt[x[0]]);
        (el(&tb), tb)
    }));
    r.push(Check::equalities("antipode.counit-l-on-source-tilde", &cfg.cases(&[nb]), |x| {
        (t(&el(&bt[x[0]])), bt[x[0]].clone())
    }));
    r.push(Check::equalities("antipode.counit-r-on-target", &cfg.cases(&[na]), |x| {
        let ta = t(&ab[x[0]]);
        (er(&ta), ta)
    }));
    r.push(Check::equalities("antipode.counit-r-on-source", &cfg.cases(&[na]), |x| (t(&er(&ab[x[0]])), ab[x[0]].clone())));
    let lr = BalancedTensor::new(n, &[data.left_balancing(), data.right_balancing()]);
    r.push(Check::equalities("antipode.mixed-coassociative-lr", &cfg.cases(&[n]), |x| {
        let lhs = expand_leg(n, 2, &dr_basis[x[0]], 0, &dl_basis);
        let rhs = expand_leg(n, 2, &dl_basis[x[0]], 1, &dr_basis);
        (lr.project(&lhs), lr.project(&rhs))
    }));
    let rl = BalancedTensor::new(n, &[data.right_balancing(), data.left_balancing()]);
    r.push(Check::equalities("antipode.mixed-coassociative-rl", &cfg.cases(&[n]), |x| {
        let lhs = expand_leg(n, 2, &dl_basis[x[0]], 0, &dr_basis);
        let rhs = expand_leg(n, 2, &dr_basis[x[0]], 1, &dl_basis);
        (rl.project(&lhs), rl.project(&rhs))
    }));
    r.push(Check::equalities("antipode.twisted-bimodule", &cfg.cases(&[na, nb, n]), |x| {
        let (a, b) = (&ab[x[0]], &bt[x[1]]);
        (sv(&mul(&mul(&t(a), &e(x[2])), &t(b))), mul(&mul(b, &sv(&e(x[2]))), a))
    }));
    r.push(Check::equalities("antipode.left-convolution", &cfg.cases(&[n]), |x| {
        (contract2(n, &dl_basis[x[0]], n, |i, j| mul(&sv(&e(i)), &e(j))), er(&e(x[0])))
    }));
    r.push(Check::equalities("antipode.right-convolution", &cfg.cases(&[n]), |x| {
        (contract2(n, &dr_basis[x[0]], n, |i, j| mul(&e(i), &sv(&e(j)))), el(&e(x[0])))
    }));
    r
}
