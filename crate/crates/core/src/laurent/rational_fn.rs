use std::fmt;

use num_traits::Zero;

use super::poly::LaurentPoly;
use super::primitive::{gcd, normalize_primitive, PrimitivePoly};
use crate::error::{Error, Result};

/// Element of the fraction field `Q(t)` in lowest terms.
///
/// The denominator is a canonical primitive polynomial and every unit is
/// pushed into the numerator, so two equal functions have equal fields.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: LaurentPoly,
    den: PrimitivePoly,
}

impl RationalFunction {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = gcd(&num, &den)?.to_laurent();
        let num = num.divide_exact(&g)?;
        let den = den.divide_exact(&g)?;
        let (den, unit) = normalize_primitive(&den)?;
        let num = num.scale(&unit.scale.recip()).shift(-unit.shift);
        Ok(Self { num, den })
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        Self { num: p, den: PrimitivePoly::one() }
    }

    pub fn zero() -> Self {
        Self::from_poly(LaurentPoly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(LaurentPoly::one())
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denominator(&self) -> &PrimitivePoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn add(&self, o: &Self) -> Self {
        let (d1, d2) = (self.den.to_laurent(), o.den.to_laurent());
        let num = &(&self.num * &d2) + &(&o.num * &d1);
        Self::new(num, &d1 * &d2).expect("nonzero denominators")
    }

    pub fn neg(&self) -> Self {
        Self { num: -&self.num, den: self.den.clone() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        let num = &self.num * &o.num;
        Self::new(num, &self.den.to_laurent() * &o.den.to_laurent()).expect("nonzero denominators")
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Self::new(self.den.to_laurent(), self.num.clone())
    }

    pub fn div(&self, o: &Self) -> Result<Self> {
        Ok(self.mul(&o.inv()?))
    }

    /// Apply `t -> t^-1`.
    pub fn conjugate(&self) -> Self {
        Self::new(self.num.reciprocal(), self.den.to_laurent().reciprocal()).expect("nonzero denominators")
    }

    pub fn scale_poly(&self, p: &LaurentPoly) -> Self {
        self.mul(&Self::from_poly(p.clone()))
    }
}

impl Default for RationalFunction {
    fn default() -> Self {
        Self::zero()
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} / {:?}", self.num, self.den)
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl Zero for RationalFunction {
    fn zero() -> Self {
        RationalFunction::zero()
    }
    fn is_zero(&self) -> bool {
        RationalFunction::is_zero(self)
    }
}

impl std::ops::Add for RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: Self) -> Self {
        RationalFunction::add(&self, &rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(lo: i64, c: &[i64]) -> LaurentPoly {
        LaurentPoly::from_ints(lo, c)
    }

    #[test]
    fn reduces_to_lowest_terms() {
        let f = RationalFunction::new(lp(0, &[-1, 0, 1]), lp(3, &[-2, 2])).unwrap();
        assert!(f.is_polynomial());
        let half = num_rational::BigRational::new(1.into(), 2.into());
        assert_eq!(f.numerator(), &lp(-3, &[1, 1]).scale(&half));
    }

    #[test]
    fn structural_equality_across_shifts() {
        let a = RationalFunction::new(lp(0, &[1]), lp(0, &[-1, 1])).unwrap();
        let b = RationalFunction::new(lp(2, &[2]), lp(2, &[-2, 2])).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn field_arithmetic() {
        let a = RationalFunction::new(lp(0, &[1]), lp(0, &[-1, 1])).unwrap();
        let b = RationalFunction::new(lp(0, &[1]), lp(0, &[1, 1])).unwrap();
        // 1/(t-1) - 1/(t+1) = 2/(t^2-1)
        let d = a.sub(&b);
        assert_eq!(d, RationalFunction::new(lp(0, &[2]), lp(0, &[-1, 0, 1])).unwrap());
        assert_eq!(a.mul(&a.inv().unwrap()), RationalFunction::one());
        assert!(a.sub(&a).is_zero());
    }

    #[test]
    fn conjugation() {
        // 1/(t-1) conjugates to 1/(t^-1 - 1) = -t/(t-1)
        let a = RationalFunction::new(lp(0, &[1]), lp(0, &[-1, 1])).unwrap();
        assert_eq!(a.conjugate(), RationalFunction::new(lp(1, &[-1]), lp(0, &[-1, 1])).unwrap());
        assert_eq!(a.conjugate().conjugate(), a);
    }
}
