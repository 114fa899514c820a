//! Multivariate polynomial gcd via the subresultant pseudo-remainder
//! sequence.
//!
//! Coefficients are cleared to integers, common monomial factors and contents
//! are split off, divisibility fast paths handle the frequent
//! cancellation shapes, and the univariate step runs the Collins subresultant
//! PRS in the top variable (exact divisions only, no per-step content gcds).
//! Output is integer-primitive with positive leading coefficient.

use super::poly::{MPoly, Monomial, Var};
use crate::Rat;
use num_traits::One;

/// Univariate view: coefficients of `v^0, v^1, ...` with `v` removed.
fn to_univar(p: &MPoly, v: &Var) -> Vec<MPoly> {
    let mut out: Vec<MPoly> = Vec::new();
    for (m, c) in &p.terms {
        let k = m.0.get(v).copied().unwrap_or(0) as usize;
        let mut rest = m.0.clone();
        rest.remove(v);
        if out.len() <= k {
            out.resize(k + 1, MPoly::zero());
        }
        out[k].insert_term(Monomial(rest), c.clone());
    }
    trim(&mut out);
    out
}

fn from_univar(coeffs: &[MPoly], v: &Var) -> MPoly {
    let mut out = MPoly::zero();
    for (k, c) in coeffs.iter().enumerate() {
        for (m, coeff) in &c.terms {
            let mut m2 = m.0.clone();
            if k > 0 {
                m2.insert(v.clone(), k as u32);
            }
            out.insert_term(Monomial(m2), coeff.clone());
        }
    }
    out
}

fn trim(c: &mut Vec<MPoly>) {
    while c.last().map(|p| p.is_zero()).unwrap_or(false) {
        c.pop();
    }
}

fn uni_is_zero(c: &[MPoly]) -> bool {
    c.is_empty()
}

fn uni_scale(c: &[MPoly], f: &MPoly) -> Vec<MPoly> {
    c.iter().map(|p| p.mul(f)).collect()
}

fn uni_sub(a: &[MPoly], b: &[MPoly]) -> Vec<MPoly> {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let pa = a.get(i).cloned().unwrap_or_else(MPoly::zero);
        let pb = b.get(i).cloned().unwrap_or_else(MPoly::zero);
        out.push(pa.sub(&pb));
    }
    trim(&mut out);
    out
}

fn uni_div_exact(c: &[MPoly], d: &MPoly) -> Vec<MPoly> {
    c.iter()
        .map(|p| p.exact_div(d).expect("exact coefficient division"))
        .collect()
}

/// Canonical pseudo-remainder `lc(b)^(deg a - deg b + 1) a mod b` in the top
/// variable (`b` nonzero, `deg a >= deg b`).
fn pseudo_rem(a: &[MPoly], b: &[MPoly]) -> Vec<MPoly> {
    let db = b.len() - 1;
    let da = a.len() - 1;
    let lcb = b.last().unwrap().clone();
    let mut rem: Vec<MPoly> = a.to_vec();
    let mut steps = 0usize;
    while !uni_is_zero(&rem) && rem.len() - 1 >= db {
        let dr = rem.len() - 1;
        let lcr = rem.last().unwrap().clone();
        // rem <- lcb*rem - lcr*v^(dr-db)*b
        let mut shifted: Vec<MPoly> = vec![MPoly::zero(); dr - db];
        shifted.extend(b.iter().map(|p| p.mul(&lcr)));
        rem = uni_sub(&uni_scale(&rem, &lcb), &shifted);
        steps += 1;
        if rem.len() > dr {
            rem.truncate(dr);
            trim(&mut rem);
        }
        if !uni_is_zero(&rem) && rem.len() - 1 == dr {
            rem.pop();
            trim(&mut rem);
        }
    }
    // degree drops can skip multiplications; restore the canonical power
    for _ in steps..(da - db + 1) {
        rem = uni_scale(&rem, &lcb);
    }
    rem
}

/// Gcd of a list of polynomials (used for contents).
fn gcd_list(ps: &[MPoly]) -> MPoly {
    let mut g = MPoly::zero();
    for p in ps {
        g = mpoly_gcd(&g, p);
        if g.is_one() {
            return g;
        }
    }
    g
}

/// Common monomial factor of all terms.
fn monomial_content(p: &MPoly) -> Monomial {
    let mut it = p.terms.keys();
    let mut acc = it.next().cloned().unwrap_or_default();
    for m in it {
        acc = acc.gcd(m);
        if acc.is_one() {
            break;
        }
    }
    acc
}

fn div_monomial(p: &MPoly, m: &Monomial) -> MPoly {
    if m.is_one() {
        return p.clone();
    }
    let mut out = MPoly::zero();
    for (mono, c) in &p.terms {
        out.insert_term(mono.try_div(m).expect("monomial divides"), c.clone());
    }
    out
}

/// Primitive gcd over the rationals: integer coefficients, content 1,
/// positive leading coefficient. `gcd(0, p)` is the primitive form of `p`.
pub fn mpoly_gcd(a: &MPoly, b: &MPoly) -> MPoly {
    if a.is_zero() {
        return if b.is_zero() {
            MPoly::zero()
        } else {
            b.primitive()
        };
    }
    if b.is_zero() {
        return a.primitive();
    }
    let mut pa = a.primitive();
    let mut pb = b.primitive();
    if pa.is_constant() || pb.is_constant() {
        // both integer-primitive, so the only common scalar divisor is 1
        return MPoly::one();
    }
    // common monomial factor
    let mono = monomial_content(&pa).gcd(&monomial_content(&pb));
    if !mono.is_one() {
        pa = div_monomial(&pa, &mono);
        pb = div_monomial(&pb, &mono);
    }
    let mono_factor = {
        let mut f = MPoly::zero();
        f.insert_term(mono, Rat::one());
        f
    };
    let core = gcd_core(&pa, &pb);
    core.mul(&mono_factor).primitive()
}

fn gcd_core(pa: &MPoly, pb: &MPoly) -> MPoly {
    if pa.is_constant() || pb.is_constant() {
        return MPoly::one();
    }
    if pa == pb || *pa == pb.neg() {
        return pa.primitive();
    }
    // divisibility fast paths (cancellation is the common call shape)
    if pb.exact_div(pa).is_some() {
        return pa.primitive();
    }
    if pa.exact_div(pb).is_some() {
        return pb.primitive();
    }
    // main variable: greatest variable occurring in either polynomial
    let mut vars = pa.vars();
    vars.extend(pb.vars());
    let v = vars.iter().next_back().unwrap().clone();

    let ua = to_univar(pa, &v);
    let ub = to_univar(pb, &v);
    let ca = gcd_list(&ua);
    let cb = gcd_list(&ub);
    let ppa = uni_div_exact(&ua, &ca);
    let ppb = uni_div_exact(&ub, &cb);
    let cont = mpoly_gcd(&ca, &cb);

    // Collins subresultant PRS: only exact divisions inside the loop.
    let (mut r0, mut r1) = if ppa.len() >= ppb.len() {
        (ppa, ppb)
    } else {
        (ppb, ppa)
    };
    let mut g = MPoly::one();
    let mut h = MPoly::one();
    loop {
        let delta = r0.len() - r1.len(); // deg(r0) - deg(r1) >= 0
        let rem = pseudo_rem(&r0, &r1);
        if uni_is_zero(&rem) {
            break;
        }
        if rem.len() == 1 {
            // nontrivial constant remainder: coprime in v
            r1 = rem;
            break;
        }
        // divide by g * h^delta
        let mut divisor = g.clone();
        for _ in 0..delta {
            divisor = divisor.mul(&h);
        }
        let rem = uni_div_exact(&rem, &divisor);
        r0 = r1;
        r1 = rem;
        g = r0.last().unwrap().clone();
        // h <- g^delta * h^(1 - delta): delta = 0 keeps h, delta = 1 sets h = g,
        // larger gaps divide exactly
        h = match delta {
            0 => h,
            1 => g.clone(),
            _ => {
                let mut num = MPoly::one();
                for _ in 0..delta {
                    num = num.mul(&g);
                }
                let mut den = MPoly::one();
                for _ in 0..(delta - 1) {
                    den = den.mul(&h);
                }
                num.exact_div(&den).expect("subresultant h division")
            }
        };
    }
    if r1.len() == 1 {
        // gcd is free of v: the content gcd carries everything
        return cont;
    }
    // primitive part of the final remainder, content restored
    let cand = from_univar(&r1, &v);
    let cand_cont = gcd_list(&to_univar(&cand, &v));
    cont.mul(&cand.exact_div(&cand_cont).expect("content divides"))
        .primitive()
}
