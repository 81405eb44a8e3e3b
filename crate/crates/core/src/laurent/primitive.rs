use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::dense;
use super::poly::{rat, LaurentPoly};
use crate::error::{Error, Result};

/// Ring in which similarity is taken.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Ring {
    /// `Q[t, t^-1]`: units are nonzero rational multiples of `t^k`.
    Gamma,
    /// `Z[t, t^-1]`: units are `±t^k`.
    Lambda,
}

/// Canonical representative of a similarity class in `Γ`: an integer
/// polynomial with lowest exponent 0, content 1 and positive leading
/// coefficient. Coefficients are ascending.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PrimitivePoly {
    coeffs: Vec<BigInt>,
}

/// `p = scale * t^shift * primitive(p)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Unit {
    pub scale: BigRational,
    pub shift: i64,
}

impl PrimitivePoly {
    pub fn one() -> Self {
        Self { coeffs: vec![BigInt::one()] }
    }

    pub fn t_minus_one() -> Self {
        Self::from_ints(&[-1, 1]).unwrap()
    }

    /// Normalizes the given ascending integer coefficients.
    pub fn from_ints(c: &[i64]) -> Result<Self> {
        Ok(normalize_primitive(&LaurentPoly::from_ints(0, c))?.0)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1
    }

    pub fn leading(&self) -> &BigInt {
        self.coeffs.last().unwrap()
    }

    pub fn to_laurent(&self) -> LaurentPoly {
        LaurentPoly::from_coeffs(0, self.coeffs.iter().map(|c| BigRational::from_integer(c.clone())))
    }

    pub fn evaluate_int(&self, x: i64) -> BigInt {
        let x = BigInt::from(x);
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * &x + c)
    }

    /// Canonical form of the conjugate.
    pub fn conjugate(&self) -> Self {
        normalize_primitive(&self.to_laurent().reciprocal()).unwrap().0
    }

    pub fn is_self_reciprocal(&self) -> bool {
        self.conjugate() == *self
    }

    pub fn mul(&self, other: &Self) -> Self {
        normalize_primitive(&(&self.to_laurent() * &other.to_laurent())).unwrap().0
    }

    pub fn pow(&self, k: u32) -> Self {
        normalize_primitive(&self.to_laurent().pow(k)).unwrap().0
    }
}

impl Ord for PrimitivePoly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }
}

impl PartialOrd for PrimitivePoly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for PrimitivePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_laurent().to_literal())
    }
}

impl fmt::Display for PrimitivePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_laurent())
    }
}

fn lcm_of_denominators(p: &LaurentPoly) -> BigInt {
    p.terms().fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()))
}

pub fn normalize_primitive(p: &LaurentPoly) -> Result<(PrimitivePoly, Unit)> {
    let (lo, dense) = p.to_dense();
    if dense.is_empty() {
        return Err(Error::ZeroPolynomial);
    }
    let l = lcm_of_denominators(p);
    let ints: Vec<BigInt> = dense.iter().map(|c| (c * BigRational::from_integer(l.clone())).to_integer()).collect();
    let mut g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if ints.last().unwrap().is_negative() {
        g = -g;
    }
    let coeffs = ints.iter().map(|c| c / &g).collect();
    Ok((
        PrimitivePoly { coeffs },
        Unit {
            scale: BigRational::new(g, l),
            shift: lo,
        },
    ))
}

pub fn primitive(p: &LaurentPoly) -> Result<PrimitivePoly> {
    Ok(normalize_primitive(p)?.0)
}

pub fn similar(a: &LaurentPoly, b: &LaurentPoly, ring: Ring) -> bool {
    match (a.is_zero(), b.is_zero()) {
        (true, true) => return true,
        (true, false) | (false, true) => return false,
        _ => {}
    }
    let (pa, ua) = normalize_primitive(a).unwrap();
    let (pb, ub) = normalize_primitive(b).unwrap();
    if pa != pb {
        return false;
    }
    match ring {
        Ring::Gamma => true,
        Ring::Lambda => ua.scale.abs() == ub.scale.abs(),
    }
}

/// Primitive gcd in `Γ`.
pub fn gcd(a: &LaurentPoly, b: &LaurentPoly) -> Result<PrimitivePoly> {
    match (a.is_zero(), b.is_zero()) {
        (true, true) => Err(Error::GcdOfZeros),
        (true, false) => primitive(b),
        (false, true) => primitive(a),
        _ => {
            let g = dense::gcd(&a.to_dense().1, &b.to_dense().1);
            primitive(&LaurentPoly::from_coeffs(0, g))
        }
    }
}

/// Primitive lcm in `Γ`.
pub fn lcm(a: &LaurentPoly, b: &LaurentPoly) -> Result<PrimitivePoly> {
    let g = gcd(a, b)?;
    let prod = a * b;
    if prod.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    primitive(&prod.divide_exact(&g.to_laurent())?)
}

/// Symmetric representative `c(t) = c(t^-1)` with `c(1) = 1` of a class
/// whose members are self-reciprocal and take value ±1 at `t = 1`.
pub fn normalize_symmetric(c: &PrimitivePoly) -> Result<LaurentPoly> {
    let at_one = c.evaluate_int(1);
    if at_one.abs() != BigInt::one() {
        return Err(Error::NotUnitAtOne(at_one.to_string()));
    }
    if !c.is_self_reciprocal() {
        return Err(Error::NotSelfReciprocal(c.to_string()));
    }
    let d = c.degree();
    if d % 2 == 1 {
        return Err(Error::OddWidthSelfReciprocal);
    }
    let sign = if at_one.is_negative() { rat(-1) } else { rat(1) };
    Ok(c.to_laurent().shift(-(d as i64) / 2).scale(&sign))
}
