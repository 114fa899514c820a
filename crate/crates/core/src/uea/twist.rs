//! Drinfel'd twists on the truncated enveloping algebra: axiom checking, the
//! Jordanian generator for `ax+b`, the deformed Hopf structure, and the
//! semiclassical r-matrix extraction.

use super::series::HSeries;
use super::UEAElement;
use crate::liealg::{LieAlgebra, RMatrix};
use crate::report::VerificationReport;
use crate::{Error, Rat, Result};
use num_traits::One;

/// An hbar-series of rank-2 enveloping-algebra tensors with unit leading
/// term, a candidate twist. All axiom verdicts come from [`twist_check`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistSeries {
    pub name: String,
    pub f: HSeries<UEAElement>,
}

impl TwistSeries {
    pub fn identity(dim: usize, order: usize) -> Self {
        TwistSeries {
            name: "identity".into(),
            f: HSeries::constant(UEAElement::unit(dim, 2), order),
        }
    }

    pub fn order(&self) -> usize {
        self.f.order()
    }

    pub fn dim(&self) -> usize {
        self.f.coeffs[0].dim
    }

    pub fn inverse(&self, g: &LieAlgebra) -> Result<HSeries<UEAElement>> {
        self.f.invert(g)
    }
}

/// Candidate Jordanian twist for `ax+b`: the truncated expansion of
/// `exp((1/2) H (x) log(1 + hbar E))`. Its only correctness contract is
/// passing [`twist_check`]; no expansion coefficients are asserted a priori.
pub fn jordanian_twist(g: &LieAlgebra, order: usize) -> TwistSeries {
    assert!(order >= 1);
    let dim = g.dim();
    let h = g.index_of("H").expect("basis label H");
    let e = g.index_of("E").expect("basis label E");
    // T = sum_{k>=1} hbar^k * (-1)^(k+1)/(2k) * H (x) E^k
    let mut t = HSeries::zero_like(&UEAElement::unit(dim, 2), order);
    for k in 1..=order {
        let mut ek = vec![0u32; dim];
        ek[e] = k as u32;
        let mut hm = vec![0u32; dim];
        hm[h] = 1;
        let sign = if k % 2 == 1 { 1 } else { -1 };
        let coeff = Rat::new(sign.into(), (2 * k as i64).into());
        t.coeffs[k] = UEAElement::monomial(dim, vec![hm, ek], coeff);
    }
    TwistSeries {
        name: "jordanian".into(),
        f: t.exp(g).expect("zero constant term"),
    }
}

/// Apply `Delta` to one leg of every series coefficient.
pub fn coproduct_leg_series(
    g: &LieAlgebra,
    s: &HSeries<UEAElement>,
    leg: usize,
) -> HSeries<UEAElement> {
    s.map(|c| c.coproduct_leg(g, leg))
}

/// Embed each coefficient at leg positions `at..at+2` of a larger rank.
pub fn embed_series(s: &HSeries<UEAElement>, rank: usize, at: usize) -> HSeries<UEAElement> {
    s.map(|c| c.embed(rank, at))
}

/// Twist axioms, per hbar-order: unit leading term, the cocycle identity
/// `(F (x) 1)(Delta (x) id)(F) = (1 (x) F)(id (x) Delta)(F)`, and both counit
/// conditions. The first failing order of each condition is reported.
pub fn twist_check(g: &LieAlgebra, f: &TwistSeries) -> VerificationReport {
    let mut rep = VerificationReport::new(format!("twist_check[{}]", f.name));
    let dim = f.dim();
    let n = f.order();

    let unit_ok = f.f.coeffs[0] == UEAElement::unit(dim, 2);
    rep.check(
        "leading term is 1(x)1",
        unit_ok,
        "order-0 coefficient differs",
    );
    if !unit_ok {
        return rep;
    }

    // counit conditions, orderwise
    let mut counit_fail = None;
    for k in 1..=n {
        let left = f.f.coeffs[k].counit_leg(0);
        let right = f.f.coeffs[k].counit_leg(1);
        if !left.is_zero() || !right.is_zero() {
            counit_fail = Some(k);
            break;
        }
    }
    rep.check(
        "counit conditions (eps(x)1)F = (1(x)eps)F = 1",
        counit_fail.is_none(),
        format!("first failure at hbar^{}", counit_fail.unwrap_or(0)),
    );

    // cocycle identity in rank 3
    let f12 = embed_series(&f.f, 3, 0);
    let f23 = embed_series(&f.f, 3, 1);
    let lhs = f12.mul(&coproduct_leg_series(g, &f.f, 0), g);
    let rhs = f23.mul(&coproduct_leg_series(g, &f.f, 1), g);
    match lhs.first_difference(&rhs) {
        None => rep.check("cocycle identity", true, ""),
        Some(k) => rep.check(
            "cocycle identity",
            false,
            format!("first failure at hbar^{k}"),
        ),
    }
    rep
}

/// Deformed coproduct `Delta_F(u) = F Delta(u) F^{-1}` of a rank-1 element,
/// as a rank-2 series at the twist's truncation order.
pub fn twisted_coproduct(
    g: &LieAlgebra,
    f: &TwistSeries,
    u: &UEAElement,
) -> Result<HSeries<UEAElement>> {
    let finv = f.inverse(g)?;
    let du = HSeries::constant(u.coproduct_leg(g, 0), f.order());
    Ok(f.f.mul(&du, g).mul(&finv, g))
}

/// Apply `Delta_F` to one leg of a rank-k series:
/// conjugate the legwise coproduct by the embedded twist.
pub fn twisted_coproduct_leg(
    g: &LieAlgebra,
    f: &TwistSeries,
    s: &HSeries<UEAElement>,
    leg: usize,
) -> Result<HSeries<UEAElement>> {
    let rank = s.coeffs[0].rank + 1;
    let femb = embed_series(&f.f, rank, leg);
    let finv_emb = embed_series(&f.inverse(g)?, rank, leg);
    Ok(femb
        .mul(&coproduct_leg_series(g, s, leg), g)
        .mul(&finv_emb, g))
}

/// First hbar-order at which `Delta_F` fails coassociativity on `u`,
/// `None` when exact through the truncation order.
pub fn coassoc_first_failure(
    g: &LieAlgebra,
    f: &TwistSeries,
    u: &UEAElement,
) -> Result<Option<usize>> {
    let du = twisted_coproduct(g, f, u)?;
    let left = twisted_coproduct_leg(g, f, &du, 0)?;
    let right = twisted_coproduct_leg(g, f, &du, 1)?;
    Ok(left.first_difference(&right))
}

/// Counit axioms for the deformed coproduct (undeformed counit).
pub fn twisted_counit_first_failure(
    g: &LieAlgebra,
    f: &TwistSeries,
    u: &UEAElement,
) -> Result<Option<usize>> {
    let du = twisted_coproduct(g, f, u)?;
    let us = HSeries::constant(u.clone(), f.order());
    let left = du.map(|c| c.counit_leg(0));
    let right = du.map(|c| c.counit_leg(1));
    Ok(left.first_difference(&us).or(right.first_difference(&us)))
}

/// Twisted antipode data: `u_F = F^alpha S(F_alpha)` and its inverse series.
pub struct TwistedAntipode {
    pub u_f: HSeries<UEAElement>,
    pub u_f_inv: HSeries<UEAElement>,
}

pub fn twisted_antipode_data(g: &LieAlgebra, f: &TwistSeries) -> Result<TwistedAntipode> {
    let u_f = f.f.map(|c| {
        let mut out = UEAElement::zero(c.dim, 1);
        for (k, coeff) in &c.terms {
            let a = UEAElement::monomial(c.dim, vec![k[0].clone()], coeff.clone());
            let sb = UEAElement::monomial(c.dim, vec![k[1].clone()], Rat::one()).antipode(g);
            out = out.add(&a.mul(&sb, g));
        }
        out
    });
    let u_f_inv = u_f.invert(g)?;
    Ok(TwistedAntipode { u_f, u_f_inv })
}

/// `S_F(x) = u_F S(x) u_F^{-1}` as a rank-1 series.
pub fn twisted_antipode_apply(
    g: &LieAlgebra,
    data: &TwistedAntipode,
    x: &UEAElement,
) -> HSeries<UEAElement> {
    let sx = HSeries::constant(x.antipode(g), data.u_f.order());
    data.u_f.mul(&sx, g).mul(&data.u_f_inv, g)
}

/// First order at which the Hopf antipode axiom
/// `m(S_F (x) id) Delta_F(x) = eps(x) 1` fails, `None` if exact.
pub fn antipode_axiom_first_failure(
    g: &LieAlgebra,
    f: &TwistSeries,
    x: &UEAElement,
) -> Result<Option<usize>> {
    let data = twisted_antipode_data(g, f)?;
    let dx = twisted_coproduct(g, f, x)?;
    let n = f.order();
    let dim = f.dim();
    let mut lhs = HSeries::zero_like(&UEAElement::unit(dim, 1), n);
    for (k, coeff) in dx.coeffs.iter().enumerate() {
        // order-k contribution: sum over tensor terms a (x) b of
        // hbar^k * u_F S(a) u_F^{-1} * b
        let mut order_sum = HSeries::zero_like(&UEAElement::unit(dim, 1), n);
        for (key, c) in &coeff.terms {
            let a = UEAElement::monomial(dim, vec![key[0].clone()], c.clone());
            let b = HSeries::constant(
                UEAElement::monomial(dim, vec![key[1].clone()], Rat::one()),
                n,
            );
            let sa = twisted_antipode_apply(g, &data, &a);
            order_sum = order_sum.add(&sa.mul(&b, g));
        }
        // shift by hbar^k
        for _ in 0..k {
            order_sum = order_sum.shift_up();
        }
        lhs = lhs.add(&order_sum);
    }
    let rhs = HSeries::constant(UEAElement::unit(dim, 1).scale(&x.counit()), n);
    Ok(lhs.first_difference(&rhs))
}

/// Antisymmetrized first-order term `F_1 - tau(F_1)` as an r-matrix on `g`.
/// Errors when the first order is not linear (not in `g (x) g`).
pub fn twist_semiclassical(_g: &LieAlgebra, f: &TwistSeries) -> Result<RMatrix> {
    assert!(f.order() >= 1, "need at least one hbar order");
    let f1 = &f.f.coeffs[1];
    let anti = f1.sub(&f1.flip());
    let dim = f.dim();
    let mut comps: Vec<(usize, usize, Rat)> = Vec::new();
    for (key, c) in &anti.terms {
        let deg0: u32 = key[0].iter().sum();
        let deg1: u32 = key[1].iter().sum();
        if deg0 != 1 || deg1 != 1 {
            return Err(Error::UnsupportedClass(format!(
                "antisymmetrized first order is not in g (x) g: term of degrees ({deg0},{deg1})"
            )));
        }
        let i = key[0].iter().position(|&p| p == 1).unwrap();
        let j = key[1].iter().position(|&p| p == 1).unwrap();
        if i < j {
            comps.push((i, j, c.clone()));
        }
    }
    Ok(RMatrix::from_wedge(dim, &comps))
}

// ---------------------------------------------------------------------------
// Twist fixture serialization: `t <order> <leg1> <leg2> <coeff>` lines in the
// same structured-text family as the structure-constant fixtures.
// ---------------------------------------------------------------------------

fn fmt_mono(m: &[u32], basis: &[String]) -> String {
    let parts: Vec<String> = m
        .iter()
        .enumerate()
        .filter(|(_, &p)| p > 0)
        .map(|(i, &p)| format!("{}^{}", basis[i], p))
        .collect();
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("*")
    }
}

fn parse_mono(s: &str, g: &LieAlgebra) -> Result<Vec<u32>> {
    let mut mono = vec![0u32; g.dim()];
    if s == "1" {
        return Ok(mono);
    }
    for factor in s.split('*') {
        let (label, pow) = match factor.split_once('^') {
            Some((l, p)) => (
                l,
                p.parse::<u32>()
                    .map_err(|_| Error::Parse(format!("bad power in `{factor}`")))?,
            ),
            None => (factor, 1),
        };
        let i = g
            .index_of(label)
            .ok_or_else(|| Error::Parse(format!("unknown basis label `{label}`")))?;
        mono[i] += pow;
    }
    Ok(mono)
}

pub fn serialize_twist(g: &LieAlgebra, f: &TwistSeries) -> String {
    let mut out = format!("name {}\nalgebra {}\norder {}\n", f.name, g.name, f.order());
    for (k, coeff) in f.f.coeffs.iter().enumerate() {
        if k == 0 {
            continue; // leading 1(x)1 is implied
        }
        for (key, c) in &coeff.terms {
            out.push_str(&format!(
                "t {} {} {} {}\n",
                k,
                fmt_mono(&key[0], &g.basis),
                fmt_mono(&key[1], &g.basis),
                crate::liealg::fmt_rat(c)
            ));
        }
    }
    out
}

pub fn parse_twist(src: &str, g: &LieAlgebra) -> Result<TwistSeries> {
    let mut name = String::from("unnamed");
    let mut order: Option<usize> = None;
    let mut terms: Vec<(usize, Vec<u32>, Vec<u32>, Rat)> = Vec::new();
    for (lineno, line) in src.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut parts = line.split_whitespace();
        match parts.next() {
            Some("name") => name = parts.next().unwrap_or("unnamed").to_string(),
            Some("algebra") => {
                let a = parts.next().unwrap_or("");
                if a != g.name {
                    return Err(Error::Parse(format!(
                        "twist fixture is over `{a}`, expected `{}`",
                        g.name
                    )));
                }
            }
            Some("order") => {
                order = Some(
                    parts
                        .next()
                        .and_then(|s| s.parse().ok())
                        .ok_or_else(|| Error::Parse("bad order".into()))?,
                );
            }
            Some("t") => {
                let k: usize = parts
                    .next()
                    .and_then(|s| s.parse().ok())
                    .ok_or_else(|| Error::Parse(format!("line {}: bad order", lineno + 1)))?;
                let l1 = parse_mono(
                    parts
                        .next()
                        .ok_or_else(|| Error::Parse("missing leg".into()))?,
                    g,
                )?;
                let l2 = parse_mono(
                    parts
                        .next()
                        .ok_or_else(|| Error::Parse("missing leg".into()))?,
                    g,
                )?;
                let c = crate::liealg::parse_rat(
                    parts
                        .next()
                        .ok_or_else(|| Error::Parse("missing coefficient".into()))?,
                )?;
                terms.push((k, l1, l2, c));
            }
            Some(other) => {
                return Err(Error::Parse(format!(
                    "line {}: unknown directive `{other}`",
                    lineno + 1
                )))
            }
            None => {}
        }
    }
    let order = order.ok_or_else(|| Error::Parse("missing order".into()))?;
    let mut f = HSeries::constant(UEAElement::unit(g.dim(), 2), order);
    for (k, l1, l2, c) in terms {
        if k > order {
            continue;
        }
        f.coeffs[k].add_term(vec![l1, l2], c);
    }
    Ok(TwistSeries { name, f })
}
