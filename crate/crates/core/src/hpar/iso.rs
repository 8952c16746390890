// SPDX-License-Identifier: Apache-2.0

use exactlin::{Matrix, Rational};

use super::build::HparAlgebra;
use super::ecalc::{apar_action, e_calculus, EElements};
use super::factor::universal_factorization;
use crate::constructors::{birget_rhodes, groupoid_algebra, FiniteGroupoid};
use crate::partial::{covariant_factorization, pi0, smash_product, CovariantPair, PartialRep};
use crate::report::{Check, CheckConfig, Report};

/// `H_par^w ≅ A_par^w #̲ H`: builds both maps from the two universal
/// properties, `π̂` from `h ↦ 1 #̲ h` and `Φ` from the covariant pair
/// (inclusion of `A_par^w`, `[·]`), and checks that they are mutually
/// inverse on bases.
pub fn smash_iso_check(hp: &HparAlgebra, ee: &EElements, cfg: &CheckConfig) -> Report {
    let mut r = Report::new();
    if hp.base().antipode_inverse().is_none() {
        r.push(Check::skipped("isomorphism", "antipode inverse not supplied"));
        return r;
    }
    let fail = |r: &mut Report, id: &str, e: crate::Error| r.push(Check::fail(id, e.to_string()));
    let pa = match apar_action(hp, ee, cfg) {
        Ok(pa) => pa,
        Err(e) => {
            fail(&mut r, "apar-action", e);
            return r;
        }
    };
    let sp = match smash_product(&pa) {
        Ok(sp) => sp,
        Err(e) => {
            fail(&mut r, "smash-product", e);
            return r;
        }
    };
    let (dh, ds) = (hp.dim(), sp.algebra().dim());
    r.push(Check::from_bool("dimensions", dh == ds, format!("H_par^w has dimension {dh}, A_par^w #̲ H has {ds}")));

    let pihat = match universal_factorization(hp, &pi0(&sp), cfg) {
        Ok(f) => f,
        Err(e) => {
            fail(&mut r, "pihat", e);
            return r;
        }
    };
    let pair = CovariantPair::new(pa, ee.apar().inclusion(), hp.bracket_rep()).and_then(|cp| covariant_factorization(&cp, &sp, cfg));
    let phi = match pair {
        Ok(f) => f,
        Err(e) => {
            fail(&mut r, "Phi", e);
            return r;
        }
    };
    r.merge("pihat", pihat.report.clone());
    r.merge("Phi", phi.report.clone());
    let compose = |a: &Matrix, b: &Matrix| a.mul(b).ok();
    r.push(Check::from_bool(
        "Phi-after-pihat",
        compose(&phi.matrix, &pihat.matrix) == Some(Matrix::identity(dh)),
        "Φ∘π̂ on the carrier basis",
    ));
    r.push(Check::from_bool(
        "pihat-after-Phi",
        compose(&pihat.matrix, &phi.matrix) == Some(Matrix::identity(ds)),
        "π̂∘Φ on the partial smash basis",
    ));
    r
}

/// Compares `H_par^w(kG)` with the groupoid algebra of the Birget–Rhodes
/// expansion.
///
/// Checks the dimension; that `A_par^w` has one dimension per unit of
/// `𝒢^BR`; and that `g ↦ Σ_{(A, g)} (A, g)` is a partial representation
/// whose factorization `H_par^w → k𝒢^BR` is bijective.
pub fn birget_rhodes_oracle(g: &FiniteGroupoid, hp: &HparAlgebra, cfg: &CheckConfig) -> Report {
    let mut r = Report::new();
    let h = groupoid_algebra(g);
    if &h != hp.base() {
        r.push(Check::fail("base", "H_par^w was not built from this groupoid's algebra"));
        return r;
    }
    let br = birget_rhodes(g);
    r.push(Check::from_bool(
        "dimension",
        br.len() == hp.dim(),
        format!("dim H_par^w = {}, |G^BR| = {}", hp.dim(), br.len()),
    ));
    let units = br.elements().iter().filter(|(_, a)| g.identities().contains(a)).count();
    match e_calculus(hp) {
        Ok(ee) => r.push(Check::from_bool(
            "idempotents",
            ee.apar().dim() == units,
            format!("dim A_par^w = {}, units of G^BR = {units}", ee.apar().dim()),
        )),
        Err(e) => r.push(Check::fail("idempotents", e.to_string())),
    }

    let target = match br.as_groupoid() {
        Ok(bg) => groupoid_algebra(&bg),
        Err(e) => {
            r.push(Check::fail("isomorphism", e.to_string()));
            return r;
        }
    };
    let mut pi = Matrix::zeros(br.len(), g.num_arrows());
    for (k, (_, a)) in br.elements().iter().enumerate() {
        pi.set(k, *a, Rational::one());
    }
    let explicit = PartialRep::new(h, target.alg().clone(), pi)
        .and_then(|pr| universal_factorization(hp, &pr, cfg))
        .map(|f| f.matrix.is_square() && f.rank() == f.matrix.rows());
    r.push(match explicit {
        Ok(ok) => Check::from_bool("isomorphism", ok, "[g] ↦ Σ (A, g) extended to H_par^w"),
        Err(e) => Check::fail("isomorphism", e.to_string()),
    });
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hpar::build_hpar;

    #[test]
    fn z2_smash_iso_and_oracle() {
        let cfg = CheckConfig::default();
        let g = FiniteGroupoid::cyclic(2);
        let hp = build_hpar(&groupoid_algebra(&g), 6).unwrap();
        let ee = e_calculus(&hp).unwrap();
        let iso = smash_iso_check(&hp, &ee, &cfg);
        assert!(iso.passed(), "{:?}", iso.first_failure());
        let oracle = birget_rhodes_oracle(&g, &hp, &cfg);
        assert!(oracle.passed(), "{:?}", oracle.first_failure());
    }
}
