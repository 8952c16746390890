// SPDX-License-Identifier: Apache-2.0

//! Concrete weak Hopf algebras: groupoid algebras, the eight-dimensional
//! "Sweedler pair", and the Birget–Rhodes expansion of a finite groupoid.

use std::collections::HashMap;

use exactlin::{vec, Matrix, Rational};

use crate::algebra::{FinDimAlgebra, FinDimCoalgebra};
use crate::error::{input, Result};
use crate::wha::WeakHopfAlgebra;

/// A finite groupoid with explicit identity arrows.
///
/// `compose(g, h)` is `g∘h` ("first h, then g") and is defined exactly when
/// `source(g) = target(h)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroupoid {
    objects: Vec<String>,
    arrows: Vec<String>,
    source: Vec<usize>,
    target: Vec<usize>,
    identity: Vec<usize>,
    compose: Vec<Option<usize>>,
    inverse: Vec<usize>,
}

impl FiniteGroupoid {
    /// Validates and builds a groupoid. `compose` lists `(g, h, g∘h)` for
    /// every composable pair and nothing else.
    pub fn new(
        objects: Vec<String>,
        arrows: Vec<String>,
        source: Vec<usize>,
        target: Vec<usize>,
        identity: Vec<usize>,
        compose: &[(usize, usize, usize)],
    ) -> Result<Self> {
        let (k, n) = (objects.len(), arrows.len());
        if k == 0 || n == 0 {
            return Err(input("groupoid needs at least one object and one arrow"));
        }
        if n > 64 {
            return Err(input("at most 64 arrows are supported"));
        }
        if source.len() != n || target.len() != n {
            return Err(input("source/target must list one object per arrow"));
        }
        if identity.len() != k {
            return Err(input("identities must list one arrow per object"));
        }
        if source.iter().chain(&target).any(|&o| o >= k) || identity.iter().any(|&a| a >= n) {
            return Err(input("object or arrow index out of range"));
        }
        let mut table = vec![None; n * n];
        for &(g, h, gh) in compose {
            if g >= n || h >= n || gh >= n {
                return Err(input(format!("composition ({g},{h},{gh}) out of range")));
            }
            if source[g] != target[h] {
                return Err(input(format!(
                    "composition {}∘{} listed but source({}) ≠ target({})",
                    arrows[g], arrows[h], arrows[g], arrows[h]
                )));
            }
            if table[g * n + h].replace(gh).is_some_and(|old| old != gh) {
                return Err(input(format!("composition {}∘{} listed twice with different results", arrows[g], arrows[h])));
            }
        }
        for g in 0..n {
            for h in 0..n {
                let defined = table[g * n + h];
                if source[g] == target[h] {
                    let Some(gh) = defined else {
                        return Err(input(format!("missing composition {}∘{}", arrows[g], arrows[h])));
                    };
                    if source[gh] != source[h] || target[gh] != target[g] {
                        return Err(input(format!("{}∘{} has wrong endpoints", arrows[g], arrows[h])));
                    }
                }
            }
        }
        for (o, &e) in identity.iter().enumerate() {
            if source[e] != o || target[e] != o {
                return Err(input(format!("identity of object {} is not a loop at it", objects[o])));
            }
            for g in 0..n {
                if target[g] == o && table[e * n + g] != Some(g) {
                    return Err(input(format!("{} is not a left identity for {}", arrows[e], arrows[g])));
                }
                if source[g] == o && table[g * n + e] != Some(g) {
                    return Err(input(format!("{} is not a right identity for {}", arrows[e], arrows[g])));
                }
            }
        }
        for f in 0..n {
            for g in (0..n).filter(|&g| source[f] == target[g]) {
                for h in (0..n).filter(|&h| source[g] == target[h]) {
                    let fg = table[f * n + g].expect("checked");
                    let gh = table[g * n + h].expect("checked");
                    if table[fg * n + h] != table[f * n + gh] {
                        return Err(input(format!(
                            "composition is not associative at ({},{},{})",
                            arrows[f], arrows[g], arrows[h]
                        )));
                    }
                }
            }
        }
        let mut inverse = Vec::with_capacity(n);
        for g in 0..n {
            let inv = (0..n).find(|&h| {
                table[g * n + h] == Some(identity[target[g]]) && table[h * n + g] == Some(identity[source[g]])
            });
            match inv {
                Some(h) => inverse.push(h),
                None => return Err(input(format!("arrow {} has no inverse", arrows[g]))),
            }
        }
        Ok(FiniteGroupoid { objects, arrows, source, target, identity, compose: table, inverse })
    }

    /// A group as a one-object groupoid; `mul(a, b)` is the product `ab`
    /// and element 0 must be the neutral element.
    pub fn from_group(labels: Vec<String>, mul: impl Fn(usize, usize) -> usize) -> Result<Self> {
        let n = labels.len();
        let compose: Vec<(usize, usize, usize)> =
            (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).map(|(a, b)| (a, b, mul(a, b))).collect();
        Self::new(vec!["*".into()], labels, vec![0; n], vec![0; n], vec![0], &compose)
    }

    pub fn trivial() -> Self {
        Self::cyclic(1)
    }

    pub fn cyclic(n: usize) -> Self {
        let labels = (0..n).map(|k| if k == 0 { "e".to_string() } else { format!("a{k}") }).collect();
        Self::from_group(labels, |a, b| (a + b) % n).expect("cyclic group is a groupoid")
    }

    /// ℤ₂ × ℤ₂ with elements e, a, b, ab encoded as bit pairs.
    pub fn klein_four() -> Self {
        let labels = ["e", "a", "b", "ab"].map(String::from).to_vec();
        Self::from_group(labels, |a, b| a ^ b).expect("Klein four-group is a groupoid")
    }

    /// `k` objects with only identity arrows.
    pub fn discrete(k: usize) -> Self {
        let objects: Vec<String> = (0..k).map(|i| format!("x{i}")).collect();
        let arrows: Vec<String> = (0..k).map(|i| format!("id{i}")).collect();
        let compose: Vec<(usize, usize, usize)> = (0..k).map(|i| (i, i, i)).collect();
        let ids: Vec<usize> = (0..k).collect();
        Self::new(objects, arrows, ids.clone(), ids.clone(), ids, &compose).expect("discrete groupoid")
    }

    /// The pair groupoid on `k` objects: one arrow `(i←j)` for every pair,
    /// stored at index `i·k + j`.
    pub fn pair(k: usize) -> Self {
        let objects: Vec<String> = (0..k).map(|i| format!("x{i}")).collect();
        let mut arrows = Vec::new();
        let (mut source, mut target) = (Vec::new(), Vec::new());
        for i in 0..k {
            for j in 0..k {
                arrows.push(format!("({i}<-{j})"));
                source.push(j);
                target.push(i);
            }
        }
        let mut compose = Vec::new();
        for i in 0..k {
            for j in 0..k {
                for l in 0..k {
                    compose.push((i * k + j, j * k + l, i * k + l));
                }
            }
        }
        let identity = (0..k).map(|i| i * k + i).collect();
        Self::new(objects, arrows, source, target, identity, &compose).expect("pair groupoid")
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn arrows(&self) -> &[String] {
        &self.arrows
    }

    pub fn num_arrows(&self) -> usize {
        self.arrows.len()
    }

    pub fn source(&self, g: usize) -> usize {
        self.source[g]
    }

    pub fn target(&self, g: usize) -> usize {
        self.target[g]
    }

    pub fn identity(&self, object: usize) -> usize {
        self.identity[object]
    }

    pub fn identities(&self) -> &[usize] {
        &self.identity
    }

    pub fn inverse(&self, g: usize) -> usize {
        self.inverse[g]
    }

    pub fn compose(&self, g: usize, h: usize) -> Option<usize> {
        self.compose[g * self.arrows.len() + h]
    }

    /// All `(g, h, g∘h)` triples.
    pub fn composition_triples(&self) -> Vec<(usize, usize, usize)> {
        let n = self.arrows.len();
        (0..n)
            .flat_map(|g| (0..n).map(move |h| (g, h)))
            .filter_map(|(g, h)| self.compose(g, h).map(|gh| (g, h, gh)))
            .collect()
    }

    pub fn is_group(&self) -> bool {
        self.objects.len() == 1
    }
}

/// `𝕜𝒢`: basis the arrows, `g·h = g∘h` or 0, unit the sum of identities,
/// `Δg = g⊗g`, `ε(g) = 1`, `S(g) = g⁻¹`.
pub fn groupoid_algebra(g: &FiniteGroupoid) -> WeakHopfAlgebra {
    let n = g.num_arrows();
    let one = Rational::one();
    let mut unit = vec::zeros(n);
    for &e in g.identities() {
        unit[e] = one.clone();
    }
    let terms: Vec<_> = g.composition_triples().into_iter().map(|(a, b, c)| (a, b, c, one.clone())).collect();
    let alg = FinDimAlgebra::new(n, g.arrows().to_vec(), unit, terms).expect("groupoid table is in range");
    let coalg = FinDimCoalgebra::new(n, vec![one.clone(); n], (0..n).map(|i| (i, i, i, one.clone())))
        .expect("diagonal coproduct");
    let mut s = Matrix::zeros(n, n);
    for a in 0..n {
        s.set(g.inverse(a), a, one.clone());
    }
    let s_inv = s.clone(); // S is an involution on arrows
    WeakHopfAlgebra::new(alg, coalg, s, Some(s_inv)).expect("shapes agree")
}

// Sweedler's four-dimensional Hopf algebra on the basis 1, x, g, h = xg.
const H4_ONE: usize = 0;
const H4_X: usize = 1;
const H4_G: usize = 2;
const H4_H: usize = 3;

/// `(a, b) ↦ (sign, basis index)` of `ab` in H₄, or `None` when it is 0.
fn h4_product(a: usize, b: usize) -> Option<(i64, usize)> {
    match (a, b) {
        (H4_ONE, b) => Some((1, b)),
        (a, H4_ONE) => Some((1, a)),
        (H4_X, H4_X) | (H4_X, H4_H) | (H4_H, H4_X) | (H4_H, H4_H) => None,
        (H4_X, H4_G) => Some((1, H4_H)),
        (H4_G, H4_X) => Some((-1, H4_H)),
        (H4_G, H4_G) => Some((1, H4_ONE)),
        (H4_G, H4_H) => Some((-1, H4_X)),
        (H4_H, H4_G) => Some((1, H4_X)),
        _ => unreachable!("basis index out of range"),
    }
}

/// Coproduct terms `(left, right)` in H₄; all coefficients are 1.
fn h4_coproduct(a: usize) -> &'static [(usize, usize)] {
    match a {
        H4_ONE => &[(H4_ONE, H4_ONE)],
        H4_X => &[(H4_X, H4_ONE), (H4_G, H4_X)],
        H4_G => &[(H4_G, H4_G)],
        H4_H => &[(H4_H, H4_G), (H4_ONE, H4_H)],
        _ => unreachable!("basis index out of range"),
    }
}

/// `S(a)` in H₄ as `(sign, index)`: S1 = 1, Sx = h, Sg = g, Sh = −x.
fn h4_antipode(a: usize) -> (i64, usize) {
    match a {
        H4_ONE => (1, H4_ONE),
        H4_X => (1, H4_H),
        H4_G => (1, H4_G),
        H4_H => (-1, H4_X),
        _ => unreachable!("basis index out of range"),
    }
}

/// The eight-dimensional weak Hopf algebra on `e_a, f_a` (`a ∈ {1,x,g,h}`):
/// two orthogonal copies of H₄, so `1 = e_1 + f_1` and `Δ(1) = e_1⊗e_1 + f_1⊗f_1`.
/// Basis order: e1, ex, eg, eh, f1, fx, fg, fh.
pub fn sweedler_pair() -> WeakHopfAlgebra {
    let names = ["1", "x", "g", "h"];
    let labels: Vec<String> =
        ["e", "f"].iter().flat_map(|p| names.iter().map(move |a| format!("{p}{a}"))).collect();
    let mut mult = Vec::new();
    let mut comult = Vec::new();
    let mut s = Matrix::zeros(8, 8);
    let mut counit = vec::zeros(8);
    for block in [0usize, 4] {
        for a in 0..4 {
            for b in 0..4 {
                if let Some((sign, c)) = h4_product(a, b) {
                    mult.push((block + a, block + b, block + c, Rational::from_int(sign)));
                }
            }
            for &(l, r) in h4_coproduct(a) {
                comult.push((block + a, block + l, block + r, Rational::one()));
            }
            let (sign, sa) = h4_antipode(a);
            s.set(block + sa, block + a, Rational::from_int(sign));
            if a == H4_ONE || a == H4_G {
                counit[block + a] = Rational::one();
            }
        }
    }
    let mut unit = vec::zeros(8);
    unit[0] = Rational::one();
    unit[4] = Rational::one();
    let alg = FinDimAlgebra::new(8, labels, unit, mult).expect("table in range");
    let coalg = FinDimCoalgebra::new(8, counit, comult).expect("table in range");
    let s_inv = s.inverse().expect("the H4 antipode has order four");
    WeakHopfAlgebra::new(alg, coalg, s, Some(s_inv)).expect("shapes agree")
}

/// The Birget–Rhodes expansion: pairs `(A, g)` with `id_{d(g)}, g⁻¹ ∈ A ⊆ Y_g`,
/// `Y_g = {h : r(h) = d(g)}`. Subsets are bitmasks over the arrow order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BirgetRhodesGroupoid {
    base: FiniteGroupoid,
    elements: Vec<(u64, usize)>,
    index: HashMap<(u64, usize), usize>,
}

/// Enumerates `𝒢^BR` in a deterministic order (by arrow, then by mask).
pub fn birget_rhodes(g: &FiniteGroupoid) -> BirgetRhodesGroupoid {
    let n = g.num_arrows();
    let mut elements = Vec::new();
    for a in 0..n {
        let d = g.source(a);
        let y: Vec<usize> = (0..n).filter(|&h| g.target(h) == d).collect();
        let required = (1u64 << g.identity(d)) | (1u64 << g.inverse(a));
        let free: Vec<usize> = y.iter().copied().filter(|&h| required & (1 << h) == 0).collect();
        let mut masks: Vec<u64> = (0..(1u64 << free.len()))
            .map(|bits| {
                free.iter().enumerate().filter(|(k, _)| bits & (1 << k) != 0).fold(required, |m, (_, &h)| m | (1 << h))
            })
            .collect();
        masks.sort_unstable();
        elements.extend(masks.into_iter().map(|m| (m, a)));
    }
    let index = elements.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    BirgetRhodesGroupoid { base: g.clone(), elements, index }
}

impl BirgetRhodesGroupoid {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[(u64, usize)] {
        &self.elements
    }

    pub fn base(&self) -> &FiniteGroupoid {
        &self.base
    }

    /// `hB = {h∘b : b ∈ B}`.
    fn translate(&self, h: usize, mask: u64) -> u64 {
        let n = self.base.num_arrows();
        (0..n)
            .filter(|&b| mask & (1 << b) != 0)
            .map(|b| self.base.compose(h, b).expect("elements of B end at d(h)"))
            .fold(0, |m, c| m | (1 << c))
    }

    /// `(A, g)(B, h) = (B, gh)` when `(g, h)` is composable and `A = hB`.
    pub fn multiply(&self, x: usize, y: usize) -> Option<usize> {
        let (a, g) = self.elements[x];
        let (b, h) = self.elements[y];
        let gh = self.base.compose(g, h)?;
        (a == self.translate(h, b)).then(|| self.index[&(b, gh)])
    }

    fn label(&self, (mask, g): (u64, usize)) -> String {
        let n = self.base.num_arrows();
        let set: Vec<&str> =
            (0..n).filter(|&b| mask & (1 << b) != 0).map(|b| self.base.arrows()[b].as_str()).collect();
        format!("({{{}}},{})", set.join(","), self.base.arrows()[g])
    }

    /// `𝒢^BR` as a [`FiniteGroupoid`]: objects are the sets `A` carried by the
    /// units `(A, id_x)`, `(A, g)` goes from `A` to `gA`. Construction runs the
    /// full groupoid validation, so success certifies the groupoid axioms.
    pub fn as_groupoid(&self) -> Result<FiniteGroupoid> {
        let m = self.elements.len();
        let ids: Vec<usize> = (0..m)
            .filter(|&i| {
                let (_, g) = self.elements[i];
                self.base.identities().contains(&g)
            })
            .collect();
        let object_of: HashMap<u64, usize> = ids.iter().enumerate().map(|(o, &i)| (self.elements[i].0, o)).collect();
        let objects: Vec<String> = ids.iter().map(|&i| self.label(self.elements[i])).collect();
        let arrows: Vec<String> = self.elements.iter().map(|&e| self.label(e)).collect();
        let mut source = Vec::with_capacity(m);
        let mut target = Vec::with_capacity(m);
        for &(a, g) in &self.elements {
            let s = *object_of.get(&a).ok_or_else(|| input("source set is not an object"))?;
            let t = *object_of.get(&self.translate(g, a)).ok_or_else(|| input("target set is not an object"))?;
            source.push(s);
            target.push(t);
        }
        let compose: Vec<(usize, usize, usize)> = (0..m)
            .flat_map(|x| (0..m).map(move |y| (x, y)))
            .filter_map(|(x, y)| self.multiply(x, y).map(|z| (x, y, z)))
            .collect();
        FiniteGroupoid::new(objects, arrows, source, target, ids, &compose)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::CheckConfig;
    use crate::wha::{canonical_projections, check_weak_hopf, is_cocommutative, lemma21_suite};

    #[test]
    fn sweedler_pair_data() {
        let h = sweedler_pair();
        let e = |i: usize| h.basis(i);
        // ε(e_g) = 1, ε(e_x) = 0
        assert_eq!(h.eps(&e(2)), Rational::one());
        assert_eq!(h.eps(&e(1)), Rational::zero());
        // e_x f_x = 0, e_g e_g = e_1
        assert!(vec::is_zero(&h.mul(&e(1), &e(5))));
        assert_eq!(h.mul(&e(2), &e(2)), e(0));
        // S(1) = 1 and S⁴ = id
        assert_eq!(h.s(h.unit()), h.unit().to_vec());
        let s = h.antipode();
        assert_eq!(s.mul(s).unwrap().mul(&s.mul(s).unwrap()).unwrap(), Matrix::identity(8));
    }

    #[test]
    fn sweedler_pair_is_weak_hopf_not_cocommutative() {
        let h = sweedler_pair();
        let cfg = CheckConfig::default();
        let r = check_weak_hopf(&h, &cfg);
        assert!(r.passed(), "{:?}", r.first_failure());
        assert!(lemma21_suite(&h, &cfg).passed());
        assert!(!is_cocommutative(&h));
        let p = canonical_projections(&h).unwrap();
        assert_eq!(p.ht.dim(), 2);
        assert_eq!(p.hs.dim(), 2);
    }

    #[test]
    fn groupoid_algebras_are_weak_hopf() {
        let cfg = CheckConfig::default();
        for g in [
            FiniteGroupoid::trivial(),
            FiniteGroupoid::cyclic(2),
            FiniteGroupoid::cyclic(3),
            FiniteGroupoid::klein_four(),
            FiniteGroupoid::discrete(2),
            FiniteGroupoid::pair(2),
        ] {
            let h = groupoid_algebra(&g);
            assert!(check_weak_hopf(&h, &cfg).passed());
            assert!(is_cocommutative(&h));
            assert_eq!(h.antipode().mul(h.antipode()).unwrap(), Matrix::identity(h.dim()));
        }
    }

    #[test]
    fn discrete_groupoid_unit_is_not_grouplike() {
        let h = groupoid_algebra(&FiniteGroupoid::discrete(2));
        let one = h.unit().to_vec();
        assert_ne!(h.delta(&one), vec::tensor(&one, &one));
    }

    #[test]
    fn invalid_groupoids_are_rejected() {
        // Missing composition.
        let r = FiniteGroupoid::new(vec!["x".into()], vec!["e".into(), "a".into()], vec![0, 0], vec![0, 0], vec![0], &[(0, 0, 0)]);
        assert!(r.is_err());
        // Composition of non-composable arrows.
        let r = FiniteGroupoid::new(
            vec!["x".into(), "y".into()],
            vec!["ix".into(), "iy".into()],
            vec![0, 1],
            vec![0, 1],
            vec![0, 1],
            &[(0, 0, 0), (1, 1, 1), (0, 1, 0)],
        );
        assert!(r.is_err());
    }

    #[test]
    fn birget_rhodes_small_cases() {
        let z2 = birget_rhodes(&FiniteGroupoid::cyclic(2));
        assert_eq!(z2.len(), 3);
        // ({e},e), ({e,g},e), ({e,g},g)
        assert_eq!(z2.elements(), &[(0b01, 0), (0b11, 0), (0b11, 1)]);
        assert_eq!(birget_rhodes(&FiniteGroupoid::trivial()).len(), 1);
        assert_eq!(birget_rhodes(&FiniteGroupoid::cyclic(3)).len(), 8);
        assert_eq!(birget_rhodes(&FiniteGroupoid::discrete(2)).len(), 2);
        for g in [FiniteGroupoid::cyclic(3), FiniteGroupoid::klein_four(), FiniteGroupoid::pair(2)] {
            birget_rhodes(&g).as_groupoid().expect("expansion satisfies the groupoid axioms");
        }
    }
}
