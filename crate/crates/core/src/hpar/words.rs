// SPDX-License-Identifier: Apache-2.0

//! Words over the basis of `H`, indexed by (length, lexicographic order).

use std::collections::BTreeMap;

use exactlin::{Rational, SparseVec};

/// Index arithmetic for words over an alphabet of size `n`. The empty word is
/// index 0, then all words of length 1, and so on; the index of a word never
/// depends on how many lengths are in use.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct WordSpace {
    n: usize,
}

impl WordSpace {
    pub fn new(n: usize) -> Self {
        assert!(n > 0, "empty alphabet");
        WordSpace { n }
    }

    /// Number of words of length `< len`.
    pub fn offset(&self, len: usize) -> usize {
        (0..len).map(|k| self.n.pow(k as u32)).sum()
    }

    /// Number of words of length `≤ len`.
    pub fn count(&self, len: usize) -> usize {
        self.offset(len + 1)
    }

    pub fn index(&self, w: &[usize]) -> usize {
        self.offset(w.len()) + w.iter().fold(0, |acc, &x| acc * self.n + x)
    }

    pub fn len_of(&self, idx: usize) -> usize {
        let mut len = 0;
        while self.offset(len + 1) <= idx {
            len += 1;
        }
        len
    }

    pub fn word(&self, idx: usize) -> Vec<usize> {
        let len = self.len_of(idx);
        let mut rest = idx - self.offset(len);
        let mut w = vec![0; len];
        for slot in w.iter_mut().rev() {
            *slot = rest % self.n;
            rest /= self.n;
        }
        w
    }

    /// All words of length exactly `len`, in index order.
    pub fn words_of_len(&self, len: usize) -> impl Iterator<Item = Vec<usize>> + '_ {
        let start = self.offset(len);
        (start..self.offset(len + 1)).map(move |i| self.word(i))
    }
}

/// A noncommutative polynomial: words with coefficients, like terms merged.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub(crate) struct Poly {
    terms: BTreeMap<Vec<usize>, Rational>,
}

impl Poly {
    pub fn add_term(&mut self, w: Vec<usize>, c: Rational) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(w).or_default();
        *e += c;
    }

    /// Adds `c · x¹ ⊗ … ⊗ xᵏ` for dense letter vectors `xⁱ`.
    pub fn add_product(&mut self, c: &Rational, factors: &[Vec<Rational>]) {
        let mut partial: Vec<(Vec<usize>, Rational)> = vec![(Vec::new(), c.clone())];
        for f in factors {
            let mut next = Vec::new();
            for (w, x) in &partial {
                for (i, y) in f.iter().enumerate().filter(|(_, y)| !y.is_zero()) {
                    let mut w2 = w.clone();
                    w2.push(i);
                    next.push((w2, x * y));
                }
            }
            partial = next;
        }
        for (w, x) in partial {
            self.add_term(w, x);
        }
    }

    /// The degree-one polynomial `[x]` for a dense vector `x` over the letters.
    pub fn letter(x: &[Rational]) -> Self {
        let mut p = Poly::default();
        p.add_product(&Rational::one(), &[x.to_vec()]);
        p
    }

    pub fn one() -> Self {
        let mut p = Poly::default();
        p.add_term(Vec::new(), Rational::one());
        p
    }

    pub fn add_scaled(&mut self, c: &Rational, other: &Poly) {
        for (w, x) in other.terms() {
            self.add_term(w.clone(), c * x);
        }
    }

    /// Concatenation product.
    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = Poly::default();
        for (u, x) in self.terms() {
            for (v, y) in other.terms() {
                let mut w = u.clone();
                w.extend_from_slice(v);
                out.add_term(w, x * y);
            }
        }
        out
    }

    pub fn product(factors: &[&Poly]) -> Poly {
        factors.iter().fold(Poly::one(), |acc, f| acc.mul(f))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.values().all(Rational::is_zero)
    }

    pub fn degree(&self) -> usize {
        self.terms.iter().filter(|(_, c)| !c.is_zero()).map(|(w, _)| w.len()).max().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<usize>, &Rational)> {
        self.terms.iter().filter(|(_, c)| !c.is_zero())
    }

    /// `u · self · v` as a sparse vector over word indices.
    pub fn sandwich(&self, ws: &WordSpace, u: &[usize], v: &[usize]) -> SparseVec {
        self.terms()
            .map(|(w, c)| {
                let mut full = Vec::with_capacity(u.len() + w.len() + v.len());
                full.extend_from_slice(u);
                full.extend_from_slice(w);
                full.extend_from_slice(v);
                (ws.index(&full), c.clone())
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn indices_follow_length_then_lex() {
        let ws = WordSpace::new(3);
        assert_eq!(ws.index(&[]), 0);
        assert_eq!(ws.index(&[2]), 3);
        assert_eq!(ws.index(&[0, 0]), 4);
        assert_eq!(ws.index(&[2, 2]), 12);
        assert_eq!(ws.index(&[0, 0, 0]), 13);
        for i in 0..200 {
            assert_eq!(ws.index(&ws.word(i)), i);
        }
        assert_eq!(ws.count(2), 13);
    }

    #[test]
    fn single_letter_alphabet() {
        let ws = WordSpace::new(1);
        assert_eq!(ws.index(&[0, 0, 0]), 3);
        assert_eq!(ws.word(2), vec![0, 0]);
        assert_eq!(ws.words_of_len(4).count(), 1);
    }

    #[test]
    fn products_expand_and_cancel() {
        let one = Rational::one();
        let mut p = Poly::default();
        p.add_product(&one, &[vec![one.clone(), one.clone()], vec![Rational::zero(), one.clone()]]);
        p.add_term(vec![0, 1], -one.clone());
        assert_eq!(p.terms().count(), 1);
        assert_eq!(p.degree(), 2);
        let ws = WordSpace::new(2);
        let s = p.sandwich(&ws, &[1], &[]);
        assert_eq!(s.iter().map(|(i, _)| *i).collect::<Vec<_>>(), vec![ws.index(&[1, 1, 1])]);
    }

    #[test]
    fn concatenation_is_bilinear() {
        let one = Rational::one();
        let x = Poly::letter(&[one.clone(), one.clone()]);
        let y = Poly::letter(&[Rational::zero(), Rational::from_int(3)]);
        let xy = Poly::product(&[&x, &y, &Poly::one()]);
        assert_eq!(xy.terms().count(), 2);
        assert!(xy.terms().all(|(w, c)| w[1] == 1 && *c == Rational::from_int(3)));
        let mut z = xy.clone();
        z.add_scaled(&-one, &xy);
        assert!(z.is_zero());
    }
}
