//! Degree-truncated formal power series in the deformation parameter.
//!
//! `HSeries<T>` stores coefficients `0..=N`; arithmetic discards everything
//! above the truncation order, and binary operations truncate to the minimum
//! of the operand orders. Coefficient rings multiply through a context (the
//! Lie algebra for enveloping-algebra coefficients, nothing for scalars).

use crate::liealg::LieAlgebra;
use crate::scalar::Scalar;
use crate::uea::UEAElement;
use crate::{Error, Rat, Result};

/// Coefficient ring with a multiplication context `C`.
pub trait SeriesRing<C: ?Sized>: Clone + PartialEq {
    /// Zero of the same shape (dimension/rank) as `self`.
    fn shape_zero(&self) -> Self;
    /// One of the same shape as `self`.
    fn shape_one(&self) -> Self;
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self, ctx: &C) -> Self;
    fn scale(&self, q: &Rat) -> Self;
    fn is_zero(&self) -> bool;
}

impl SeriesRing<LieAlgebra> for UEAElement {
    fn shape_zero(&self) -> Self {
        UEAElement::zero(self.dim, self.rank)
    }
    fn shape_one(&self) -> Self {
        UEAElement::unit(self.dim, self.rank)
    }
    fn add(&self, other: &Self) -> Self {
        UEAElement::add(self, other)
    }
    fn mul(&self, other: &Self, g: &LieAlgebra) -> Self {
        UEAElement::mul(self, other, g)
    }
    fn scale(&self, q: &Rat) -> Self {
        UEAElement::scale(self, q)
    }
    fn is_zero(&self) -> bool {
        UEAElement::is_zero(self)
    }
}

impl SeriesRing<()> for Scalar {
    fn shape_zero(&self) -> Self {
        Scalar::zero()
    }
    fn shape_one(&self) -> Self {
        Scalar::one()
    }
    fn add(&self, other: &Self) -> Self {
        self.add_ref(other)
    }
    fn mul(&self, other: &Self, _: &()) -> Self {
        self.mul_ref(other)
    }
    fn scale(&self, q: &Rat) -> Self {
        Scalar::scale(self, q)
    }
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
}

/// Truncated series: `coeffs[k]` is the coefficient of `hbar^k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HSeries<T> {
    pub coeffs: Vec<T>,
}

impl<T> HSeries<T> {
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &T {
        &self.coeffs[k]
    }
}

impl<T: Clone> HSeries<T> {
    pub fn new(coeffs: Vec<T>) -> Self {
        assert!(!coeffs.is_empty());
        HSeries { coeffs }
    }

    /// Constant series `t + 0*hbar + ...` up to `order`.
    pub fn constant_with(t: T, order: usize, zero: impl Fn() -> T) -> Self {
        let mut coeffs = vec![t];
        for _ in 0..order {
            coeffs.push(zero());
        }
        HSeries { coeffs }
    }

    pub fn map<U>(&self, f: impl Fn(&T) -> U) -> HSeries<U> {
        HSeries {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    pub fn truncated(&self, order: usize) -> Self {
        HSeries {
            coeffs: self.coeffs[..=order.min(self.order())].to_vec(),
        }
    }
}

impl<T> HSeries<T> {
    pub fn constant<C: ?Sized>(t: T, order: usize) -> Self
    where
        T: SeriesRing<C>,
    {
        let zero = t.shape_zero();
        let mut coeffs = vec![t];
        for _ in 0..order {
            coeffs.push(zero.clone());
        }
        HSeries { coeffs }
    }

    pub fn one_like<C: ?Sized>(shape: &T, order: usize) -> Self
    where
        T: SeriesRing<C>,
    {
        HSeries::constant(shape.shape_one(), order)
    }

    pub fn zero_like<C: ?Sized>(shape: &T, order: usize) -> Self
    where
        T: SeriesRing<C>,
    {
        HSeries::constant(shape.shape_zero(), order)
    }

    pub fn add<C: ?Sized>(&self, other: &Self) -> Self
    where
        T: SeriesRing<C>,
    {
        let n = self.order().min(other.order());
        HSeries {
            coeffs: (0..=n)
                .map(|k| self.coeffs[k].add(&other.coeffs[k]))
                .collect(),
        }
    }

    pub fn sub<C: ?Sized>(&self, other: &Self) -> Self
    where
        T: SeriesRing<C>,
    {
        self.add(&other.scale(&-Rat::from_integer(1.into())))
    }

    pub fn scale<C: ?Sized>(&self, q: &Rat) -> Self
    where
        T: SeriesRing<C>,
    {
        HSeries {
            coeffs: self.coeffs.iter().map(|c| c.scale(q)).collect(),
        }
    }

    /// Shift by one power of hbar, dropping the top coefficient.
    pub fn shift_up<C: ?Sized>(&self) -> Self
    where
        T: SeriesRing<C>,
    {
        let mut coeffs = vec![self.coeffs[0].shape_zero()];
        coeffs.extend(self.coeffs[..self.order()].iter().cloned());
        HSeries { coeffs }
    }

    /// Cauchy product truncated to the minimum order.
    pub fn mul<C: ?Sized>(&self, other: &Self, ctx: &C) -> Self
    where
        T: SeriesRing<C>,
    {
        let n = self.order().min(other.order());
        let zero = self.coeffs[0].shape_zero();
        let mut coeffs = vec![zero; n + 1];
        for i in 0..=n {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=(n - i) {
                if other.coeffs[j].is_zero() {
                    continue;
                }
                let prod = self.coeffs[i].mul(&other.coeffs[j], ctx);
                coeffs[i + j] = coeffs[i + j].add(&prod);
            }
        }
        HSeries { coeffs }
    }

    pub fn is_zero<C: ?Sized>(&self) -> bool
    where
        T: SeriesRing<C>,
    {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// First order at which two series differ, within the common truncation.
    pub fn first_difference<C: ?Sized>(&self, other: &Self) -> Option<usize>
    where
        T: SeriesRing<C>,
    {
        let n = self.order().min(other.order());
        (0..=n).find(|&k| self.coeffs[k] != other.coeffs[k])
    }

    /// Geometric-series inverse; requires the order-0 coefficient to be the
    /// unit. `F * F^{-1} = 1 + O(hbar^{N+1})` exactly at the stored order.
    pub fn invert<C: ?Sized>(&self, ctx: &C) -> Result<Self>
    where
        T: SeriesRing<C>,
    {
        let one = self.coeffs[0].shape_one();
        if self.coeffs[0] != one {
            return Err(Error::NonUnitLeadingTerm);
        }
        let n = self.order();
        // x = 1 - F has zero order-0 term
        let x = HSeries::one_like(&self.coeffs[0], n).sub(self);
        let mut acc = HSeries::one_like(&self.coeffs[0], n);
        let mut pw = HSeries::one_like(&self.coeffs[0], n);
        for _ in 1..=n {
            pw = pw.mul(&x, ctx);
            acc = acc.add(&pw);
        }
        Ok(acc)
    }

    /// Exponential of a series with zero order-0 coefficient.
    pub fn exp<C: ?Sized>(&self, ctx: &C) -> Result<Self>
    where
        T: SeriesRing<C>,
    {
        if !self.coeffs[0].is_zero() {
            return Err(Error::NonUnitLeadingTerm);
        }
        let n = self.order();
        let mut acc = HSeries::one_like(&self.coeffs[0], n);
        let mut pw = HSeries::one_like(&self.coeffs[0], n);
        let mut fact = Rat::from_integer(1.into());
        for m in 1..=n {
            pw = pw.mul(self, ctx);
            fact *= Rat::from_integer(m.into());
            acc = acc.add(&pw.scale(&(Rat::from_integer(1.into()) / fact.clone())));
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::axb;
    use crate::{int, rat};

    #[test]
    fn invert_identity() {
        let g = axb();
        let one = HSeries::one_like(&UEAElement::unit(2, 2), 3);
        assert_eq!(one.invert(&g).unwrap(), one);
    }

    #[test]
    fn invert_first_order_is_geometric() {
        let g = axb();
        // F = 1(x)1 + hbar * F1 with F1 = H (x) E
        let f1 = UEAElement::gen(2, 0).tensor(&UEAElement::gen(2, 1));
        let mut f = HSeries::one_like(&UEAElement::unit(2, 2), 2);
        f.coeffs[1] = f1.clone();
        let inv = f.invert(&g).unwrap();
        // 1 - hbar F1 + hbar^2 F1^2
        assert_eq!(inv.coeffs[1], f1.scale(&int(-1)));
        assert_eq!(inv.coeffs[2], f1.mul(&f1, &g));
        // multiply back
        let prod = f.mul(&inv, &g);
        assert_eq!(prod, HSeries::one_like(&UEAElement::unit(2, 2), 2));
    }

    #[test]
    fn non_unit_leading_term_rejected() {
        let g = axb();
        let f = HSeries::constant(UEAElement::gen(2, 0).tensor(&UEAElement::gen(2, 1)), 2);
        assert!(matches!(f.invert(&g), Err(Error::NonUnitLeadingTerm)));
    }

    #[test]
    fn scalar_series_arithmetic() {
        let a = HSeries::new(vec![Scalar::one(), Scalar::from_int(2)]);
        let b = HSeries::new(vec![Scalar::one(), Scalar::from_rat(rat(1, 2))]);
        let p = a.mul(&b, &());
        assert_eq!(p.coeffs[0], Scalar::one());
        assert_eq!(p.coeffs[1], Scalar::from_rat(rat(5, 2)));
    }
}
