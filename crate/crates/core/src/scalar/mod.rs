//! Exact symbolic scalars: canonical fractions of multivariate polynomials in
//! chart coordinates and exponential atoms with rational-linear exponents.
//!
//! Canonical form: `gcd(num, den) = 1`, denominator integer-primitive with
//! positive leading coefficient, and for every coordinate a single primitive
//! atom scale (the lcm of the exponent denominators actually present). With
//! that, equality is plain structural comparison and stays decidable because
//! distinct primitive atoms are algebraically independent over the rational
//! functions.

mod gcd;
pub mod parse;
mod poly;

pub use gcd::mpoly_gcd;
pub use poly::{rat_nth_root, rat_pow, Coordinate, MPoly, Monomial, Var};

use crate::{Error, Rat, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Exact rational linear form over coordinates, the exponent class of atoms.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct LinearForm {
    pub terms: BTreeMap<Coordinate, Rat>,
}

impl LinearForm {
    pub fn new() -> Self {
        LinearForm::default()
    }

    pub fn of(pairs: impl IntoIterator<Item = (Coordinate, Rat)>) -> Self {
        let mut f = LinearForm::new();
        for (c, q) in pairs {
            f.add_term(c, q);
        }
        f
    }

    pub fn single(c: Coordinate, q: Rat) -> Self {
        LinearForm::of([(c, q)])
    }

    pub fn add_term(&mut self, c: Coordinate, q: Rat) {
        if q.is_zero() {
            return;
        }
        let e = self.terms.entry(c.clone()).or_insert_with(Rat::zero);
        *e += q;
        if e.is_zero() {
            self.terms.remove(&c);
        }
    }

    pub fn scaled(&self, q: &Rat) -> LinearForm {
        if q.is_zero() {
            return LinearForm::new();
        }
        LinearForm {
            terms: self
                .terms
                .iter()
                .map(|(c, v)| (c.clone(), v.clone() * q.clone()))
                .collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

/// Point assignment for exact evaluation: coordinate values plus independent
/// values for each scale-1 primitive atom `exp(c)`.
#[derive(Clone, Debug, Default)]
pub struct Assignment {
    pub coords: BTreeMap<Coordinate, Rat>,
    pub atoms: BTreeMap<Coordinate, Rat>,
}

impl Assignment {
    pub fn new() -> Self {
        Assignment::default()
    }

    pub fn coord(mut self, c: Coordinate, v: Rat) -> Self {
        self.coords.insert(c, v);
        self
    }

    pub fn atom(mut self, c: Coordinate, v: Rat) -> Self {
        self.atoms.insert(c, v);
        self
    }
}

/// Canonical fraction of multivariate polynomials; the coefficient field for
/// every geometric object in the crate.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Scalar {
    num: MPoly,
    den: MPoly,
}

impl Scalar {
    fn normalized(mut num: MPoly, mut den: MPoly) -> Scalar {
        assert!(!den.is_zero(), "denominator is the zero polynomial");
        (num, den) = canonicalize_atom_scales(num, den);
        if num.is_zero() {
            return Scalar {
                num: MPoly::zero(),
                den: MPoly::one(),
            };
        }
        let g = mpoly_gcd(&num, &den);
        if !g.is_one() && !g.is_zero() {
            num = num.exact_div(&g).expect("gcd divides numerator");
            den = den.exact_div(&g).expect("gcd divides denominator");
        }
        (num, den) = canonicalize_atom_scales(num, den);
        let c = den.content();
        if !c.is_one() {
            num = num.div_coeff(&c);
            den = den.div_coeff(&c);
        }
        Scalar { num, den }
    }

    pub fn new(num: MPoly, den: MPoly) -> Result<Scalar> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Scalar::normalized(num, den))
    }

    pub fn zero() -> Scalar {
        Scalar {
            num: MPoly::zero(),
            den: MPoly::one(),
        }
    }

    pub fn one() -> Scalar {
        Scalar {
            num: MPoly::one(),
            den: MPoly::one(),
        }
    }

    pub fn from_rat(q: Rat) -> Scalar {
        Scalar {
            num: MPoly::constant(q),
            den: MPoly::one(),
        }
    }

    pub fn from_int(n: i64) -> Scalar {
        Scalar::from_rat(crate::int(n))
    }

    pub fn coord(c: &Coordinate) -> Scalar {
        Scalar {
            num: MPoly::var(Var::Coord(c.clone())),
            den: MPoly::one(),
        }
    }

    /// `exp(form)` for an exact-rational linear form, canonicalized into
    /// per-coordinate primitive atoms.
    pub fn exp_of(form: &LinearForm) -> Scalar {
        let mut num = MPoly::one();
        let mut den = MPoly::one();
        for (c, q) in &form.terms {
            let p = q.numer().clone();
            let r = q
                .denom()
                .to_u32()
                .expect("atom exponent denominator too large");
            let k = p.abs().to_u32().expect("atom exponent too large");
            let v = Var::Exp {
                coord: c.clone(),
                scale: r,
            };
            let m = MPoly::var(v).pow(k);
            if p.is_negative() {
                den = den.mul(&m);
            } else {
                num = num.mul(&m);
            }
        }
        Scalar::normalized(num, den)
    }

    pub fn num(&self) -> &MPoly {
        &self.num
    }

    pub fn den(&self) -> &MPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn add_ref(&self, other: &Scalar) -> Scalar {
        Scalar::normalized(
            self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }

    pub fn sub_ref(&self, other: &Scalar) -> Scalar {
        Scalar::normalized(
            self.num.mul(&other.den).sub(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }

    pub fn mul_ref(&self, other: &Scalar) -> Scalar {
        Scalar::normalized(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    pub fn neg_ref(&self) -> Scalar {
        Scalar {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn div(&self, other: &Scalar) -> Result<Scalar> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Scalar::normalized(
            self.num.mul(&other.den),
            self.den.mul(&other.num),
        ))
    }

    pub fn inv(&self) -> Result<Scalar> {
        Scalar::one().div(self)
    }

    pub fn pow(&self, k: i64) -> Result<Scalar> {
        if k < 0 {
            return self.inv()?.pow(-k);
        }
        let mut out = Scalar::one();
        for _ in 0..k {
            out = out.mul_ref(self);
        }
        Ok(out)
    }

    pub fn scale(&self, q: &Rat) -> Scalar {
        Scalar::normalized(self.num.scale(q), self.den.clone())
    }

    /// Partial derivative by the quotient rule. Total on the scalar ring:
    /// coordinates absent from the expression differentiate to zero. The
    /// chart-checked entry point lives on [`crate::geom::Chart`].
    pub fn differentiate(&self, c: &Coordinate) -> Scalar {
        let num = self
            .num
            .derivative(c)
            .mul(&self.den)
            .sub(&self.num.mul(&self.den.derivative(c)));
        let den = self.den.mul(&self.den);
        Scalar::normalized(num, den)
    }

    pub fn eval(&self, asn: &Assignment) -> Result<Rat> {
        let d = self.den.eval(&asn.coords, &asn.atoms)?;
        if d.is_zero() {
            return Err(Error::PoleAtPoint(self.to_string()));
        }
        let n = self.num.eval(&asn.coords, &asn.atoms)?;
        Ok(n / d)
    }

    /// Coordinates occurring anywhere (polynomially or inside atoms).
    pub fn coords(&self) -> BTreeSet<Coordinate> {
        let mut out = BTreeSet::new();
        for p in [&self.num, &self.den] {
            for v in p.vars() {
                match v {
                    Var::Coord(c) => {
                        out.insert(c);
                    }
                    Var::Exp { coord, .. } => {
                        out.insert(coord);
                    }
                }
            }
        }
        out
    }

    /// Coordinates occurring inside exponential atoms.
    pub fn atom_coords(&self) -> BTreeSet<Coordinate> {
        let mut out = BTreeSet::new();
        for p in [&self.num, &self.den] {
            for v in p.vars() {
                if let Var::Exp { coord, .. } = v {
                    out.insert(coord);
                }
            }
        }
        out
    }

    /// Interpret as a linear form with zero constant term.
    pub fn as_linear_form(&self) -> Option<LinearForm> {
        if !self.den.is_one() {
            return None;
        }
        let mut form = LinearForm::new();
        for (m, c) in &self.num.terms {
            if m.degree() != 1 {
                return None;
            }
            let (v, _) = m.0.iter().next().unwrap();
            match v {
                Var::Coord(coord) => form.add_term(coord.clone(), c.clone()),
                Var::Exp { .. } => return None,
            }
        }
        Some(form)
    }

    /// Rational value of a constant scalar.
    pub fn constant_value(&self) -> Option<Rat> {
        Some(self.num.constant_value()? / self.den.constant_value()?)
    }

    /// Recognize `exp(q*c)`: a single atom power with coefficient 1.
    pub fn as_pure_atom_power(&self) -> Option<(Coordinate, Rat)> {
        let side = |p: &MPoly, sign: i64| -> Option<(Coordinate, Rat)> {
            if p.terms.len() != 1 {
                return None;
            }
            let (m, c) = p.terms.iter().next().unwrap();
            if !c.is_one() || m.0.len() != 1 {
                return None;
            }
            let (v, k) = m.0.iter().next().unwrap();
            match v {
                Var::Exp { coord, scale } => Some((
                    coord.clone(),
                    Rat::new(BigInt::from(sign) * BigInt::from(*k), BigInt::from(*scale)),
                )),
                _ => None,
            }
        };
        if self.den.is_one() {
            side(&self.num, 1)
        } else if self.num.is_one() {
            side(&self.den, -1)
        } else {
            None
        }
    }

    /// Substitute `c = 0`, sending every atom `exp(q*c)` to 1.
    pub fn set_coord_zero(&self, c: &Coordinate) -> Result<Scalar> {
        let map_poly = |p: &MPoly| -> MPoly {
            let mut out = MPoly::zero();
            'terms: for (m, coeff) in &p.terms {
                let mut m2: BTreeMap<Var, u32> = BTreeMap::new();
                for (v, k) in &m.0 {
                    match v {
                        Var::Coord(vc) if vc == c => continue 'terms,
                        Var::Exp { coord, .. } if coord == c => {}
                        _ => {
                            m2.insert(v.clone(), *k);
                        }
                    }
                }
                out.insert_term(Monomial(m2), coeff.clone());
            }
            out
        };
        let num = map_poly(&self.num);
        let den = map_poly(&self.den);
        if den.is_zero() {
            return Err(Error::PoleAtPoint(format!("{self} at {} = 0", c.name)));
        }
        Ok(Scalar::normalized(num, den))
    }

    /// Composition: replace coordinates by scalar expressions. Coordinates
    /// appearing inside atoms must map to linear forms.
    pub fn substitute(&self, map: &BTreeMap<Coordinate, Scalar>) -> Result<Scalar> {
        let sub_poly = |p: &MPoly| -> Result<Scalar> {
            let mut total = Scalar::zero();
            for (m, coeff) in &p.terms {
                let mut term = Scalar::from_rat(coeff.clone());
                for (v, k) in &m.0 {
                    match v {
                        Var::Coord(c) => match map.get(c) {
                            Some(e) => term = term.mul_ref(&e.pow(i64::from(*k))?),
                            None => {
                                term = term.mul_ref(
                                    &Scalar::coord(c).pow(i64::from(*k)).expect("positive power"),
                                )
                            }
                        },
                        Var::Exp { coord, scale } => match map.get(coord) {
                            Some(e) => {
                                let form = e
                                    .as_linear_form()
                                    .ok_or_else(|| Error::NonLinearExponent(e.to_string()))?;
                                let q = Rat::new(BigInt::from(*k), BigInt::from(*scale));
                                term = term.mul_ref(&Scalar::exp_of(&form.scaled(&q)));
                            }
                            None => {
                                term = term.mul_ref(&Scalar {
                                    num: MPoly::var(v.clone()).pow(*k),
                                    den: MPoly::one(),
                                });
                            }
                        },
                    }
                }
                total = total.add_ref(&term);
            }
            Ok(total)
        };
        let n = sub_poly(&self.num)?;
        let d = sub_poly(&self.den)?;
        if d.is_zero() {
            return Err(Error::PoleAtPoint(format!(
                "denominator vanishes identically under substitution: {self}"
            )));
        }
        n.div(&d)
    }
}

/// Rewrite every atom of each coordinate to the minimal common scale across
/// numerator and denominator.
fn canonicalize_atom_scales(num: MPoly, den: MPoly) -> (MPoly, MPoly) {
    let mut target: BTreeMap<Coordinate, u32> = BTreeMap::new();
    let mut needs_rewrite = false;
    for p in [&num, &den] {
        for m in p.terms.keys() {
            for (v, k) in &m.0 {
                if let Var::Exp { coord, scale } = v {
                    let g = k.gcd(scale);
                    let d = scale / g;
                    let e = target.entry(coord.clone()).or_insert(1);
                    *e = e.lcm(&d);
                    if d != *scale {
                        needs_rewrite = true;
                    }
                }
            }
        }
    }
    if target.is_empty() {
        return (num, den);
    }
    if !needs_rewrite {
        // scales already minimal and unique per coordinate?
        let mut uniform = true;
        for p in [&num, &den] {
            for m in p.terms.keys() {
                for v in m.0.keys() {
                    if let Var::Exp { coord, scale } = v {
                        if target.get(coord) != Some(scale) {
                            uniform = false;
                        }
                    }
                }
            }
        }
        if uniform {
            return (num, den);
        }
    }
    let rewrite = |p: &MPoly| -> MPoly {
        let mut out = MPoly::zero();
        for (m, c) in &p.terms {
            let mut m2: BTreeMap<Var, u32> = BTreeMap::new();
            for (v, k) in &m.0 {
                match v {
                    Var::Exp { coord, scale } => {
                        let d = target[coord];
                        let k2 = (u64::from(*k) * u64::from(d) / u64::from(*scale)) as u32;
                        let nv = Var::Exp {
                            coord: coord.clone(),
                            scale: d,
                        };
                        *m2.entry(nv).or_insert(0) += k2;
                    }
                    _ => {
                        *m2.entry(v.clone()).or_insert(0) += k;
                    }
                }
            }
            m2.retain(|_, k| *k > 0);
            out.insert_term(Monomial(m2), c.clone());
        }
        out
    };
    (rewrite(&num), rewrite(&den))
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        self.add_ref(rhs)
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self.sub_ref(rhs)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        self.mul_ref(rhs)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        self.add_ref(&rhs)
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        self.sub_ref(&rhs)
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        self.mul_ref(&rhs)
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

fn fmt_rat(q: &Rat) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

fn fmt_poly(p: &MPoly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (m, c)) in p.terms.iter().rev().enumerate() {
        let neg = c.is_negative();
        let mag = c.abs();
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mut factors: Vec<String> = Vec::new();
        if !mag.is_one() || m.is_one() {
            factors.push(fmt_rat(&mag));
        }
        for (v, k) in &m.0 {
            if *k == 1 {
                factors.push(v.to_string());
            } else {
                factors.push(format!("{v}^{k}"));
            }
        }
        out.push_str(&factors.join("*"));
    }
    out
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", fmt_poly(&self.num))
        } else {
            write!(f, "({})/({})", fmt_poly(&self.num), fmt_poly(&self.den))
        }
    }
}
