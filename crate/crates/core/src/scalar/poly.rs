//! Sparse multivariate polynomials over exact rationals.
//!
//! Variables are either chart coordinates or primitive exponential atoms
//! `exp(c/s)` attached to a single coordinate `c`. Keeping atoms
//! per-coordinate makes `exp(L1)*exp(L2) = exp(L1+L2)` plain exponent
//! addition, so canonical forms stay unique and equality stays decidable.

use crate::{Error, Rat, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

/// A named coordinate in a named chart.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Coordinate {
    pub chart: String,
    pub name: String,
}

impl Coordinate {
    pub fn new(chart: impl Into<String>, name: impl Into<String>) -> Self {
        Coordinate {
            chart: chart.into(),
            name: name.into(),
        }
    }
}

impl fmt::Display for Coordinate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name)
    }
}

/// Polynomial variable: a coordinate or a primitive exponential atom.
///
/// `Exp { coord, scale }` stands for `exp(coord / scale)`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Var {
    Coord(Coordinate),
    Exp { coord: Coordinate, scale: u32 },
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::Coord(c) => write!(f, "{}", c.name),
            Var::Exp { coord, scale } => {
                if *scale == 1 {
                    write!(f, "exp({})", coord.name)
                } else {
                    write!(f, "exp(1/{}*{})", scale, coord.name)
                }
            }
        }
    }
}

/// Exponent map with strictly positive entries.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Monomial(pub BTreeMap<Var, u32>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(BTreeMap::new())
    }

    pub fn var(v: Var, k: u32) -> Self {
        let mut m = BTreeMap::new();
        if k > 0 {
            m.insert(v, k);
        }
        Monomial(m)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u64 {
        self.0.values().map(|&k| u64::from(k)).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = self.0.clone();
        for (v, k) in &other.0 {
            *out.entry(v.clone()).or_insert(0) += k;
        }
        Monomial(out)
    }

    /// Componentwise quotient, `None` if not divisible.
    pub fn try_div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = self.0.clone();
        for (v, k) in &other.0 {
            match out.get_mut(v) {
                Some(e) if *e >= *k => {
                    *e -= *k;
                    if *e == 0 {
                        out.remove(v);
                    }
                }
                _ => return None,
            }
        }
        Some(Monomial(out))
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut out = BTreeMap::new();
        for (v, k) in &self.0 {
            if let Some(j) = other.0.get(v) {
                out.insert(v.clone(), (*k).min(*j));
            }
        }
        Monomial(out)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    /// Graded order, ties broken lexicographically on ascending variables
    /// (larger exponent on the earliest differing variable wins).
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        use std::cmp::Ordering;
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            o => return o,
        }
        let mut it_a = self.0.iter();
        let mut it_b = other.0.iter();
        let mut a = it_a.next();
        let mut b = it_b.next();
        loop {
            match (a, b) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some((va, ka)), Some((vb, kb))) => match va.cmp(vb) {
                    // earlier variable present only on one side: that side has
                    // a positive exponent where the other has zero
                    Ordering::Less => return Ordering::Greater,
                    Ordering::Greater => return Ordering::Less,
                    Ordering::Equal => match ka.cmp(kb) {
                        Ordering::Equal => {
                            a = it_a.next();
                            b = it_b.next();
                        }
                        o => return o,
                    },
                },
            }
        }
    }
}

/// Sparse multivariate polynomial with rational coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct MPoly {
    pub terms: BTreeMap<Monomial, Rat>,
}

impl MPoly {
    pub fn zero() -> Self {
        MPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        MPoly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(), c);
        }
        MPoly { terms }
    }

    pub fn var(v: Var) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Monomial::var(v, 1), Rat::one());
        MPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&Monomial::one())
                .map(|c| c.is_one())
                .unwrap_or(false)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty()
            || (self.terms.len() == 1 && self.terms.keys().next().unwrap().is_one())
    }

    pub fn constant_value(&self) -> Option<Rat> {
        if self.is_zero() {
            return Some(Rat::zero());
        }
        if self.is_constant() {
            return self.terms.values().next().cloned();
        }
        None
    }

    pub fn insert_term(&mut self, m: Monomial, c: Rat) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().clone() + c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, other: &MPoly) -> MPoly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert_term(m.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> MPoly {
        MPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn sub(&self, other: &MPoly) -> MPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &MPoly) -> MPoly {
        let mut out = MPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.insert_term(ma.mul(mb), ca.clone() * cb.clone());
            }
        }
        out
    }

    pub fn scale(&self, c: &Rat) -> MPoly {
        if c.is_zero() {
            return MPoly::zero();
        }
        MPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (m.clone(), k.clone() * c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> MPoly {
        let mut out = MPoly::one();
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    pub fn vars(&self) -> BTreeSet<Var> {
        let mut s = BTreeSet::new();
        for m in self.terms.keys() {
            for v in m.0.keys() {
                s.insert(v.clone());
            }
        }
        s
    }

    pub fn leading(&self) -> Option<(&Monomial, &Rat)> {
        self.terms.iter().next_back()
    }

    /// Rational content carrying the sign of the leading coefficient:
    /// `self / content` has integer coefficients with gcd 1 and a positive
    /// leading coefficient.
    pub fn content(&self) -> Rat {
        if self.is_zero() {
            return Rat::one();
        }
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for c in self.terms.values() {
            num_gcd = num_gcd.gcd(&c.numer().abs());
            den_lcm = den_lcm.lcm(c.denom());
        }
        let mut content = Rat::new(num_gcd, den_lcm);
        if self.leading().unwrap().1.is_negative() {
            content = -content;
        }
        content
    }

    /// Divide every coefficient by `c`.
    pub fn div_coeff(&self, c: &Rat) -> MPoly {
        assert!(!c.is_zero());
        MPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (m.clone(), k.clone() / c.clone()))
                .collect(),
        }
    }

    /// Integer-primitive form with positive leading coefficient.
    pub fn primitive(&self) -> MPoly {
        if self.is_zero() {
            return MPoly::zero();
        }
        self.div_coeff(&self.content())
    }

    /// Exact multivariate division; `None` when not exactly divisible.
    pub fn exact_div(&self, d: &MPoly) -> Option<MPoly> {
        assert!(!d.is_zero(), "division by zero polynomial");
        let (dm, dc) = {
            let (m, c) = d.leading().unwrap();
            (m.clone(), c.clone())
        };
        let mut rem = self.clone();
        let mut quot = MPoly::zero();
        while !rem.is_zero() {
            let (rm, rc) = {
                let (m, c) = rem.leading().unwrap();
                (m.clone(), c.clone())
            };
            let qm = rm.try_div(&dm)?;
            let qc = rc / dc.clone();
            let t = MPoly {
                terms: [(qm, qc)].into_iter().collect(),
            };
            quot = quot.add(&t);
            rem = rem.sub(&t.mul(d));
        }
        Some(quot)
    }

    /// Partial derivative. Coordinates follow the power rule; the atom
    /// `exp(c/s)` contributes `1/s` times itself.
    pub fn derivative(&self, c: &Coordinate) -> MPoly {
        let mut out = MPoly::zero();
        for (m, coeff) in &self.terms {
            for (v, k) in &m.0 {
                match v {
                    Var::Coord(vc) if vc == c => {
                        let mut m2 = m.0.clone();
                        if *k == 1 {
                            m2.remove(v);
                        } else {
                            m2.insert(v.clone(), k - 1);
                        }
                        out.insert_term(Monomial(m2), coeff.clone() * Rat::from(BigInt::from(*k)));
                    }
                    Var::Exp { coord, scale } if coord == c => {
                        let factor = Rat::new(BigInt::from(*k), BigInt::from(*scale));
                        out.insert_term(m.clone(), coeff.clone() * factor);
                    }
                    _ => {}
                }
            }
        }
        out
    }

    /// Exact evaluation. `coords` assigns coordinates; `atoms` assigns the
    /// value of each scale-1 primitive atom `exp(c)`, and finer scales take
    /// exact rational roots (error if none exists).
    pub fn eval(
        &self,
        coords: &BTreeMap<Coordinate, Rat>,
        atoms: &BTreeMap<Coordinate, Rat>,
    ) -> Result<Rat> {
        let mut total = Rat::zero();
        for (m, coeff) in &self.terms {
            let mut term = coeff.clone();
            for (v, k) in &m.0 {
                match v {
                    Var::Coord(c) => {
                        let val = coords
                            .get(c)
                            .ok_or_else(|| Error::MissingAssignment(c.name.clone()))?;
                        term *= rat_pow(val, i64::from(*k));
                    }
                    Var::Exp { coord, scale } => {
                        let base = atoms.get(coord).ok_or_else(|| {
                            Error::MissingAssignment(format!("exp({})", coord.name))
                        })?;
                        let rooted = rat_nth_root(base, *scale)?;
                        term *= rat_pow(&rooted, i64::from(*k));
                    }
                }
            }
            total += term;
        }
        Ok(total)
    }
}

pub fn rat_pow(base: &Rat, k: i64) -> Rat {
    if k == 0 {
        return Rat::one();
    }
    let mut out = Rat::one();
    for _ in 0..k.unsigned_abs() {
        out *= base.clone();
    }
    if k < 0 {
        out = Rat::one() / out;
    }
    out
}

/// Exact rational n-th root, if one exists.
pub fn rat_nth_root(v: &Rat, n: u32) -> Result<Rat> {
    if n == 1 {
        return Ok(v.clone());
    }
    if v.is_negative() {
        return Err(Error::NonRationalRoot(v.to_string(), n));
    }
    let rn = v.numer().nth_root(n);
    let rd = v.denom().nth_root(n);
    let candidate = Rat::new(rn, rd);
    if rat_pow(&candidate, i64::from(n)) == *v {
        Ok(candidate)
    } else {
        Err(Error::NonRationalRoot(v.to_string(), n))
    }
}
