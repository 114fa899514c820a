//! PBW universal enveloping algebra with Hopf structure, over any
//! structure-constant Lie algebra.
//!
//! Elements of `U(g)^{(x)k}` are stored as rational combinations of k-tuples
//! of sorted PBW monomials (multidegree vectors over the ordered basis).
//! Products rewrite through `X_j X_i = X_i X_j + [X_j, X_i]` until sorted;
//! the result is independent of the rewrite order (checked by a brute-force
//! rewriter in the tests).

pub mod series;
pub mod twist;

pub use series::HSeries;
pub use twist::TwistSeries;

use crate::liealg::LieAlgebra;
use crate::Rat;
use num_traits::{One, Zero};
use std::collections::BTreeMap;

/// Multidegree vector over the ordered basis: `[p, q]` is `X_0^p X_1^q`.
pub type PBWMono = Vec<u32>;

/// Key of a rank-k tensor term: one PBW monomial per leg.
pub type TensorKey = Vec<PBWMono>;

/// Exact-rational combination of PBW monomial tensors of fixed rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UEAElement {
    pub dim: usize,
    pub rank: usize,
    pub terms: BTreeMap<TensorKey, Rat>,
}

impl UEAElement {
    pub fn zero(dim: usize, rank: usize) -> Self {
        UEAElement {
            dim,
            rank,
            terms: BTreeMap::new(),
        }
    }

    pub fn unit(dim: usize, rank: usize) -> Self {
        let mut e = UEAElement::zero(dim, rank);
        e.terms.insert(vec![vec![0; dim]; rank], Rat::one());
        e
    }

    /// Generator `X_i` as a rank-1 element.
    pub fn gen(dim: usize, i: usize) -> Self {
        let mut mono = vec![0u32; dim];
        mono[i] = 1;
        let mut e = UEAElement::zero(dim, 1);
        e.terms.insert(vec![mono], Rat::one());
        e
    }

    pub fn monomial(dim: usize, legs: TensorKey, coeff: Rat) -> Self {
        let rank = legs.len();
        let mut e = UEAElement::zero(dim, rank);
        e.add_term(legs, coeff);
        e
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, key: TensorKey, c: Rat) {
        if c.is_zero() {
            return;
        }
        debug_assert_eq!(key.len(), self.rank);
        let e = self.terms.entry(key.clone()).or_insert_with(Rat::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.rank, other.rank);
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Rat::one()))
    }

    pub fn scale(&self, q: &Rat) -> Self {
        if q.is_zero() {
            return UEAElement::zero(self.dim, self.rank);
        }
        UEAElement {
            dim: self.dim,
            rank: self.rank,
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.clone(), c.clone() * q.clone()))
                .collect(),
        }
    }

    /// Legwise product with PBW renormalization.
    pub fn mul(&self, other: &Self, g: &LieAlgebra) -> Self {
        debug_assert_eq!(self.rank, other.rank);
        let mut out = UEAElement::zero(self.dim, self.rank);
        for (ka, ca) in &self.terms {
            for (kb, cb) in &other.terms {
                // partial products leg by leg
                let mut partial: Vec<(TensorKey, Rat)> =
                    vec![(Vec::with_capacity(self.rank), ca.clone() * cb.clone())];
                for leg in 0..self.rank {
                    let leg_elt = mono_mul(g, &ka[leg], &kb[leg]);
                    let mut next = Vec::new();
                    for (key, coeff) in &partial {
                        for (lk, lc) in &leg_elt.terms {
                            let mut key2 = key.clone();
                            key2.push(lk[0].clone());
                            next.push((key2, coeff.clone() * lc.clone()));
                        }
                    }
                    partial = next;
                }
                for (key, coeff) in partial {
                    out.add_term(key, coeff);
                }
            }
        }
        out
    }

    /// Tensor product: concatenate legs.
    pub fn tensor(&self, other: &Self) -> Self {
        let mut out = UEAElement::zero(self.dim, self.rank + other.rank);
        for (ka, ca) in &self.terms {
            for (kb, cb) in &other.terms {
                let mut key = ka.clone();
                key.extend(kb.iter().cloned());
                out.add_term(key, ca.clone() * cb.clone());
            }
        }
        out
    }

    /// Swap the two legs of a rank-2 element.
    pub fn flip(&self) -> Self {
        debug_assert_eq!(self.rank, 2);
        let mut out = UEAElement::zero(self.dim, 2);
        for (k, c) in &self.terms {
            out.add_term(vec![k[1].clone(), k[0].clone()], c.clone());
        }
        out
    }

    /// Place this element's legs at positions `at..at+rank` inside a larger
    /// tensor rank, unit legs elsewhere.
    pub fn embed(&self, rank: usize, at: usize) -> Self {
        debug_assert!(at + self.rank <= rank);
        let mut out = UEAElement::zero(self.dim, rank);
        for (k, c) in &self.terms {
            let mut key = vec![vec![0u32; self.dim]; rank];
            for (i, leg) in k.iter().enumerate() {
                key[at + i] = leg.clone();
            }
            out.add_term(key, c.clone());
        }
        out
    }

    /// Apply the coproduct to one leg (rank grows by one). Generators are
    /// primitive: `Delta(X) = X (x) 1 + 1 (x) X`, extended as an algebra map.
    pub fn coproduct_leg(&self, g: &LieAlgebra, leg: usize) -> Self {
        let mut out = UEAElement::zero(self.dim, self.rank + 1);
        for (k, c) in &self.terms {
            let split = coproduct_mono(g, &k[leg]);
            for (sk, sc) in &split.terms {
                let mut key = Vec::with_capacity(self.rank + 1);
                key.extend(k[..leg].iter().cloned());
                key.push(sk[0].clone());
                key.push(sk[1].clone());
                key.extend(k[leg + 1..].iter().cloned());
                out.add_term(key, c.clone() * sc.clone());
            }
        }
        out
    }

    /// Apply the counit to one leg (rank drops by one).
    pub fn counit_leg(&self, leg: usize) -> Self {
        let mut out = UEAElement::zero(self.dim, self.rank - 1);
        for (k, c) in &self.terms {
            if k[leg].iter().all(|&p| p == 0) {
                let mut key = k.clone();
                key.remove(leg);
                out.add_term(key, c.clone());
            }
        }
        out
    }

    /// Counit of a rank-1 element.
    pub fn counit(&self) -> Rat {
        debug_assert_eq!(self.rank, 1);
        self.terms
            .get(&vec![vec![0; self.dim]])
            .cloned()
            .unwrap_or_else(Rat::zero)
    }

    /// Antipode of a rank-1 element: anti-homomorphism with `S(X) = -X`.
    pub fn antipode(&self, g: &LieAlgebra) -> Self {
        debug_assert_eq!(self.rank, 1);
        let mut out = UEAElement::zero(self.dim, 1);
        for (k, c) in &self.terms {
            let mut word = mono_word(&k[0]);
            word.reverse();
            let sign = if word.len() % 2 == 0 {
                Rat::one()
            } else {
                -Rat::one()
            };
            let n = normalize_word(g, &word);
            for (nk, nc) in &n.terms {
                out.add_term(nk.clone(), c.clone() * sign.clone() * nc.clone());
            }
        }
        out
    }

    /// Multiply all legs together (rank-k -> rank-1).
    pub fn multiply_legs(&self, g: &LieAlgebra) -> Self {
        let mut out = UEAElement::zero(self.dim, 1);
        for (k, c) in &self.terms {
            let mut acc = UEAElement::unit(self.dim, 1);
            for leg in k {
                acc = acc.mul(
                    &UEAElement::monomial(self.dim, vec![leg.clone()], Rat::one()),
                    g,
                );
            }
            for (ak, ac) in &acc.terms {
                out.add_term(ak.clone(), c.clone() * ac.clone());
            }
        }
        out
    }

    /// Largest total degree over all legs and terms.
    pub fn max_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|k| k.iter().map(|m| m.iter().sum::<u32>()).max().unwrap_or(0))
            .max()
            .unwrap_or(0)
    }

    pub fn display_with(&self, basis: &[String]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let fmt_mono = |m: &PBWMono| -> String {
            let parts: Vec<String> = m
                .iter()
                .enumerate()
                .filter(|(_, &p)| p > 0)
                .map(|(i, &p)| {
                    if p == 1 {
                        basis[i].clone()
                    } else {
                        format!("{}^{}", basis[i], p)
                    }
                })
                .collect();
            if parts.is_empty() {
                "1".to_string()
            } else {
                parts.join("*")
            }
        };
        let mut out = Vec::new();
        for (k, c) in &self.terms {
            let legs: Vec<String> = k.iter().map(&fmt_mono).collect();
            out.push(format!(
                "{}*{}",
                crate::liealg::fmt_rat(c),
                legs.join("(x)")
            ));
        }
        out.join(" + ")
    }
}

/// Expand a multidegree into its sorted word of basis letters.
pub fn mono_word(m: &PBWMono) -> Vec<usize> {
    let mut w = Vec::new();
    for (i, &p) in m.iter().enumerate() {
        for _ in 0..p {
            w.push(i);
        }
    }
    w
}

/// PBW normalization of a free word of basis letters: repeatedly rewrite the
/// first descent through `X_a X_b = X_b X_a + [X_a, X_b]`.
pub fn normalize_word(g: &LieAlgebra, word: &[usize]) -> UEAElement {
    let dim = g.dim();
    let mut out = UEAElement::zero(dim, 1);
    let mut stack: Vec<(Vec<usize>, Rat)> = vec![(word.to_vec(), Rat::one())];
    while let Some((w, c)) = stack.pop() {
        match w.windows(2).position(|p| p[0] > p[1]) {
            None => {
                let mut mono = vec![0u32; dim];
                for &l in &w {
                    mono[l] += 1;
                }
                out.add_term(vec![mono], c);
            }
            Some(i) => {
                let (a, b) = (w[i], w[i + 1]);
                let mut swapped = w.clone();
                swapped.swap(i, i + 1);
                stack.push((swapped, c.clone()));
                for k in 0..dim {
                    let v = g.structure_constant(a, b, k);
                    if !v.is_zero() {
                        let mut contracted = Vec::with_capacity(w.len() - 1);
                        contracted.extend_from_slice(&w[..i]);
                        contracted.push(k);
                        contracted.extend_from_slice(&w[i + 2..]);
                        stack.push((contracted, c.clone() * v.clone()));
                    }
                }
            }
        }
    }
    out
}

/// Product of two PBW monomials as a normalized rank-1 element.
pub fn mono_mul(g: &LieAlgebra, a: &PBWMono, b: &PBWMono) -> UEAElement {
    // fast path: concatenation already sorted
    let last_a = a.iter().rposition(|&p| p > 0);
    let first_b = b.iter().position(|&p| p > 0);
    match (last_a, first_b) {
        (Some(la), Some(fb)) if la > fb => {
            let mut word = mono_word(a);
            word.extend(mono_word(b));
            normalize_word(g, &word)
        }
        _ => {
            let mono: PBWMono = a.iter().zip(b.iter()).map(|(x, y)| x + y).collect();
            UEAElement::monomial(g.dim(), vec![mono], Rat::one())
        }
    }
}

/// Coproduct of a PBW monomial as a rank-2 element:
/// product of binomial expansions of the primitive generators.
pub fn coproduct_mono(g: &LieAlgebra, m: &PBWMono) -> UEAElement {
    let dim = g.dim();
    let mut acc = UEAElement::unit(dim, 2);
    for (i, &p) in m.iter().enumerate() {
        if p == 0 {
            continue;
        }
        // Delta(X_i)^p = sum_j C(p, j) X_i^j (x) X_i^(p-j)
        let mut expansion = UEAElement::zero(dim, 2);
        for j in 0..=p {
            let mut l = vec![0u32; dim];
            let mut r = vec![0u32; dim];
            l[i] = j;
            r[i] = p - j;
            expansion.add_term(vec![l, r], binomial(p, j));
        }
        acc = acc.mul(&expansion, g);
    }
    acc
}

fn binomial(n: u32, k: u32) -> Rat {
    let mut num = Rat::one();
    for i in 0..k {
        num *= Rat::new((n - i).into(), (i + 1).into());
    }
    num
}

/// Coproduct of a rank-1 element.
pub fn coproduct(g: &LieAlgebra, u: &UEAElement) -> UEAElement {
    u.coproduct_leg(g, 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::axb;
    use crate::{int, rat};
    use std::collections::BTreeSet;

    fn h_pow_e_pow(p: u32, q: u32) -> TensorKey {
        vec![vec![p, q]]
    }

    #[test]
    fn pbw_rewrite_examples() {
        let g = axb();
        // EH -> HE - 2E
        let eh = normalize_word(&g, &[1, 0]);
        let mut expect = UEAElement::zero(2, 1);
        expect.add_term(h_pow_e_pow(1, 1), int(1));
        expect.add_term(h_pow_e_pow(0, 1), int(-2));
        assert_eq!(eh, expect);
        // HH -> H^2
        let hh = normalize_word(&g, &[0, 0]);
        assert_eq!(hh, UEAElement::monomial(2, h_pow_e_pow(2, 0), int(1)));
        // EEH -> HE^2 - 4E^2
        let eeh = normalize_word(&g, &[1, 1, 0]);
        let mut expect = UEAElement::zero(2, 1);
        expect.add_term(h_pow_e_pow(1, 2), int(1));
        expect.add_term(h_pow_e_pow(0, 2), int(-4));
        assert_eq!(eeh, expect);
    }

    /// Brute-force rewriter choosing every descent, for confluence checking.
    fn normalize_all_orders(g: &LieAlgebra, word: &[usize]) -> BTreeSet<Vec<(TensorKey, Rat)>> {
        fn expand(g: &LieAlgebra, word: &[usize], out: &mut UEAElement, coeff: &Rat, pick: usize) {
            let descents: Vec<usize> = word
                .windows(2)
                .enumerate()
                .filter(|(_, p)| p[0] > p[1])
                .map(|(i, _)| i)
                .collect();
            if descents.is_empty() {
                let mut mono = vec![0u32; g.dim()];
                for &l in word {
                    mono[l] += 1;
                }
                out.add_term(vec![mono], coeff.clone());
                return;
            }
            let i = descents[pick % descents.len()];
            let mut swapped = word.to_vec();
            swapped.swap(i, i + 1);
            expand(g, &swapped, out, coeff, pick / 2 + 1);
            for k in 0..g.dim() {
                let v = g.structure_constant(word[i], word[i + 1], k);
                if !v.is_zero() {
                    let mut contracted = Vec::new();
                    contracted.extend_from_slice(&word[..i]);
                    contracted.push(k);
                    contracted.extend_from_slice(&word[i + 2..]);
                    expand(g, &contracted, out, &(coeff.clone() * v.clone()), pick / 2);
                }
            }
        }
        let mut results = BTreeSet::new();
        for pick in 0..8 {
            let mut out = UEAElement::zero(g.dim(), 1);
            expand(g, word, &mut out, &Rat::one(), pick);
            results.insert(out.terms.into_iter().collect::<Vec<_>>());
        }
        results
    }

    #[test]
    fn pbw_confluence_on_random_words() {
        let g = axb();
        let d = crate::liealg::axb_double();
        let mut rng = crate::rng::SplitMix64::new(9);
        for _ in 0..40 {
            let len = rng.int_in(1, 5) as usize;
            let word2: Vec<usize> = (0..len).map(|_| rng.int_in(0, 1) as usize).collect();
            assert_eq!(normalize_all_orders(&g, &word2).len(), 1, "word {word2:?}");
            let word4: Vec<usize> = (0..len).map(|_| rng.int_in(0, 3) as usize).collect();
            assert_eq!(normalize_all_orders(&d, &word4).len(), 1, "word {word4:?}");
        }
    }

    #[test]
    fn coproduct_examples() {
        let g = axb();
        let h = UEAElement::gen(2, 0);
        // Delta(H) = H(x)1 + 1(x)H
        let dh = coproduct(&g, &h);
        let mut expect = UEAElement::zero(2, 2);
        expect.add_term(vec![vec![1, 0], vec![0, 0]], int(1));
        expect.add_term(vec![vec![0, 0], vec![1, 0]], int(1));
        assert_eq!(dh, expect);
        // Delta(1) = 1(x)1
        assert_eq!(
            coproduct(&g, &UEAElement::unit(2, 1)),
            UEAElement::unit(2, 2)
        );
        // Delta(HE) = HE(x)1 + H(x)E + E(x)H + 1(x)HE
        let he = UEAElement::monomial(2, h_pow_e_pow(1, 1), int(1));
        let dhe = coproduct(&g, &he);
        let mut expect = UEAElement::zero(2, 2);
        expect.add_term(vec![vec![1, 1], vec![0, 0]], int(1));
        expect.add_term(vec![vec![1, 0], vec![0, 1]], int(1));
        expect.add_term(vec![vec![0, 1], vec![1, 0]], int(1));
        expect.add_term(vec![vec![0, 0], vec![1, 1]], int(1));
        assert_eq!(dhe, expect);
    }

    #[test]
    fn coproduct_is_algebra_morphism_and_coassociative() {
        let g = axb();
        let mut rng = crate::rng::SplitMix64::new(3);
        for _ in 0..10 {
            let mut u = UEAElement::zero(2, 1);
            let mut v = UEAElement::zero(2, 1);
            for _ in 0..2 {
                u.add_term(
                    h_pow_e_pow(rng.int_in(0, 2) as u32, rng.int_in(0, 2) as u32),
                    rng.rat_any(),
                );
                v.add_term(
                    h_pow_e_pow(rng.int_in(0, 2) as u32, rng.int_in(0, 2) as u32),
                    rng.rat_any(),
                );
            }
            let lhs = coproduct(&g, &u.mul(&v, &g));
            let rhs = coproduct(&g, &u).mul(&coproduct(&g, &v), &g);
            assert_eq!(lhs, rhs, "morphism");
            let c1 = coproduct(&g, &u).coproduct_leg(&g, 0);
            let c2 = coproduct(&g, &u).coproduct_leg(&g, 1);
            assert_eq!(c1, c2, "coassociativity");
        }
    }

    #[test]
    fn antipode_examples() {
        let g = axb();
        let h = UEAElement::gen(2, 0);
        assert_eq!(h.antipode(&g), h.scale(&int(-1)));
        // S(HE) = S(E)S(H) = EH = HE - 2E
        let he = UEAElement::monomial(2, h_pow_e_pow(1, 1), int(1));
        let mut expect = UEAElement::zero(2, 1);
        expect.add_term(h_pow_e_pow(1, 1), int(1));
        expect.add_term(h_pow_e_pow(0, 1), int(-2));
        assert_eq!(he.antipode(&g), expect);
        // S(1) = 1
        let one = UEAElement::unit(2, 1);
        assert_eq!(one.antipode(&g), one);
    }

    #[test]
    fn hopf_axioms_on_low_degrees() {
        let g = axb();
        for p in 0..=3u32 {
            for q in 0..=(3 - p) {
                let u = UEAElement::monomial(2, h_pow_e_pow(p, q), rat(1, 1));
                let du = coproduct(&g, &u);
                // counit axioms
                assert_eq!(du.counit_leg(0), u, "eps on left leg");
                assert_eq!(du.counit_leg(1), u, "eps on right leg");
                // antipode axiom m(S (x) id) Delta(u) = eps(u) 1
                let mut lhs = UEAElement::zero(2, 1);
                for (k, c) in &du.terms {
                    let s = UEAElement::monomial(2, vec![k[0].clone()], c.clone()).antipode(&g);
                    let m = s.mul(&UEAElement::monomial(2, vec![k[1].clone()], int(1)), &g);
                    lhs = lhs.add(&m);
                }
                let rhs = UEAElement::unit(2, 1).scale(&u.counit());
                assert_eq!(lhs, rhs, "antipode axiom at H^{p} E^{q}");
            }
        }
    }
}
