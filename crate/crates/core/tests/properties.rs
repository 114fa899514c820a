//! Property suites for the algebraic kernel: scalar field axioms, calculus
//! rules, canonical-form/evaluation consistency, and PBW confluence.

use num_traits::Zero;
use proptest::prelude::*;
use std::collections::BTreeSet;
use twistlab_core::liealg::{axb, axb_double, LieAlgebra};
use twistlab_core::rng::SplitMix64;
use twistlab_core::scalar::{Assignment, Coordinate, LinearForm, Scalar};
use twistlab_core::uea::{normalize_word, UEAElement};
use twistlab_core::{int, rat, Rat};

fn cx() -> Coordinate {
    Coordinate::new("p", "x")
}
fn cy() -> Coordinate {
    Coordinate::new("p", "y")
}
fn ca() -> Coordinate {
    Coordinate::new("p", "a")
}

/// Random polynomial-exponential scalar built from up to `terms` monomials
/// `c * x^i y^j exp(k a)`.
fn scalar_strategy(terms: usize) -> impl Strategy<Value = Scalar> {
    prop::collection::vec((-6i64..=6, 0u32..3, 0u32..3, -2i64..=2), 1..=terms).prop_map(|monos| {
        let mut out = Scalar::zero();
        for (c, i, j, k) in monos {
            let mut term = Scalar::from_rat(Rat::from_integer(c.into()));
            for _ in 0..i {
                term = &term * &Scalar::coord(&cx());
            }
            for _ in 0..j {
                term = &term * &Scalar::coord(&cy());
            }
            if k != 0 {
                term = &term * &Scalar::exp_of(&LinearForm::single(ca(), int(k)));
            }
            out = &out + &term;
        }
        out
    })
}

fn sample_assignment(seed: u64) -> Assignment {
    let mut rng = SplitMix64::new(seed);
    Assignment::new()
        .coord(cx(), rng.rat_nonzero())
        .coord(cy(), rng.rat_nonzero())
        .coord(ca(), rng.rat_any())
        .atom(ca(), rng.rat_positive())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(f in scalar_strategy(4), g in scalar_strategy(4), h in scalar_strategy(3)) {
        prop_assert_eq!(&f + &g, &g + &f);
        prop_assert_eq!(&f * &g, &g * &f);
        prop_assert_eq!(&(&f + &g) + &h, &f + &(&g + &h));
        prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
        prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
        if !g.is_zero() {
            let q = f.div(&g).unwrap();
            prop_assert_eq!(&q * &g, f.clone());
        }
    }

    #[test]
    fn leibniz_rule(f in scalar_strategy(4), g in scalar_strategy(4)) {
        for c in [cx(), cy(), ca()] {
            let lhs = (&f * &g).differentiate(&c);
            let rhs = &(&f.differentiate(&c) * &g) + &(&f * &g.differentiate(&c));
            prop_assert_eq!(lhs, rhs, "Leibniz fails for {}", c.name);
        }
    }

    #[test]
    fn mixed_partials_commute(f in scalar_strategy(5)) {
        let coords = [cx(), cy(), ca()];
        for c1 in &coords {
            for c2 in &coords {
                let a = f.differentiate(c1).differentiate(c2);
                let b = f.differentiate(c2).differentiate(c1);
                prop_assert_eq!(a, b);
            }
        }
    }

    #[test]
    fn quotient_rule_against_product(f in scalar_strategy(3), g in scalar_strategy(2)) {
        prop_assume!(!g.is_zero());
        // d(f/g) * g^2 = df*g - f*dg
        let q = f.div(&g).unwrap();
        for c in [cx(), cy()] {
            let lhs = &q.differentiate(&c) * &(&g * &g);
            let rhs = &(&f.differentiate(&c) * &g) - &(&f * &g.differentiate(&c));
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn canonical_equality_from_different_routes(
        f in scalar_strategy(4),
        h in scalar_strategy(2),
    ) {
        prop_assume!(!h.is_zero());
        // (f*h)/h must canonicalize back to f exactly
        let g = (&f * &h).div(&h).unwrap();
        prop_assert_eq!(&g, &f);
        // equality is consistent with evaluation at 100 points
        let mut checked = 0;
        let mut seed = 1u64;
        while checked < 100 {
            let asn = sample_assignment(seed);
            seed += 1;
            match (f.eval(&asn), g.eval(&asn)) {
                (Ok(a), Ok(b)) => {
                    prop_assert_eq!(a, b);
                    checked += 1;
                }
                _ => continue,
            }
            if seed > 10_000 { break; }
        }
    }

    #[test]
    fn distinct_functions_distinguished_by_eval(f in scalar_strategy(3)) {
        // f and f + x never compare equal, and some sample separates them
        let g = &f + &Scalar::coord(&cx());
        prop_assert_ne!(&g, &f);
        let mut separated = false;
        for seed in 0..200u64 {
            let asn = sample_assignment(seed);
            if let (Ok(a), Ok(b)) = (f.eval(&asn), g.eval(&asn)) {
                if a != b {
                    separated = true;
                    break;
                }
            }
        }
        prop_assert!(separated);
    }

    #[test]
    fn d_squared_zero_and_d_leibniz(f in scalar_strategy(4), g in scalar_strategy(3)) {
        use twistlab_core::geom::{d_oneform, d_scalar, Chart};
        let chart = Chart::new("p", &["x", "y", "a"]);
        // d(df) = 0
        prop_assert!(d_oneform(&d_scalar(&chart, &f)).is_zero());
        // d(fg) = f dg + g df
        let lhs = d_scalar(&chart, &(&f * &g));
        let rhs = d_scalar(&chart, &g).scale_scalar(&f).add(&d_scalar(&chart, &f).scale_scalar(&g));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn print_parse_round_trip(f in scalar_strategy(4)) {
        let bind = twistlab_core::scalar::parse::binding(&[cx(), cy(), ca()]);
        let printed = f.to_string();
        let back = twistlab_core::scalar::parse::parse_scalar(&printed, &bind).unwrap();
        prop_assert_eq!(back, f);
    }
}

/// Brute-force rewriter that tries every descent position; used to check that
/// PBW normalization is independent of the rewrite order.
fn normalize_all_orders(g: &LieAlgebra, word: &[usize]) -> BTreeSet<Vec<(Vec<Vec<u32>>, Rat)>> {
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
    for pick in 0..6 {
        let mut out = UEAElement::zero(g.dim(), 1);
        expand(g, word, &mut out, &rat(1, 1), pick);
        results.insert(out.terms.into_iter().collect::<Vec<_>>());
    }
    results
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn pbw_confluence(word in prop::collection::vec(0usize..4, 1..=5)) {
        let d = axb_double();
        let all = normalize_all_orders(&d, &word);
        prop_assert_eq!(all.len(), 1, "rewrite order changed the result for {:?}", word);
        // and the production rewriter agrees with the brute-force one
        let fast = normalize_word(&d, &word);
        prop_assert!(all.contains(&fast.terms.into_iter().collect::<Vec<_>>()));
    }

    #[test]
    fn pbw_product_associativity(
        w1 in prop::collection::vec(0usize..2, 1..=3),
        w2 in prop::collection::vec(0usize..2, 1..=3),
        w3 in prop::collection::vec(0usize..2, 1..=3),
    ) {
        let g = axb();
        let a = normalize_word(&g, &w1);
        let b = normalize_word(&g, &w2);
        let c = normalize_word(&g, &w3);
        let lhs = a.mul(&b, &g).mul(&c, &g);
        let rhs = a.mul(&b.mul(&c, &g), &g);
        prop_assert_eq!(lhs, rhs);
    }
}
