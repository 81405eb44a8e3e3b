//! Factorization over Q of integer polynomials of small degree.
//!
//! Squarefree decomposition, then rational roots, then Kronecker's
//! interpolation search on what remains. Kronecker is exponential in the
//! degree, so inputs are capped by a degree bound.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::dense;
use super::poly::LaurentPoly;
use super::primitive::{normalize_primitive, similar, PrimitivePoly, Ring};
use crate::error::{Error, Result};

pub const DEFAULT_FACTOR_BOUND: usize = 10;

/// Largest evaluation value we are willing to factor by trial division.
const MAX_POINT_VALUE: u64 = 1_000_000_000_000;

fn to_rat(p: &[BigInt]) -> Vec<BigRational> {
    p.iter().map(|c| BigRational::from_integer(c.clone())).collect()
}

fn prim_from_rat(p: &[BigRational]) -> PrimitivePoly {
    normalize_primitive(&LaurentPoly::from_coeffs(0, p.iter().cloned())).unwrap().0
}

fn eval(p: &[BigInt], x: &BigInt) -> BigInt {
    p.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
}

/// Squarefree parts `f_i` with `p ~ prod f_i^i` (Yun).
fn squarefree(p: &PrimitivePoly) -> Vec<(PrimitivePoly, usize)> {
    let f = to_rat(p.coeffs());
    let df = dense::derivative(&f);
    if df.is_empty() {
        return Vec::new();
    }
    let b = dense::gcd(&f, &df);
    let mut c = dense::div_rem(&f, &b).0;
    let mut d = {
        let q = dense::div_rem(&df, &b).0;
        sub(&q, &dense::derivative(&c))
    };
    let mut out = Vec::new();
    let mut i = 1;
    while c.len() != 1 {
        let a = dense::gcd(&c, &d);
        if a.len() > 1 {
            out.push((prim_from_rat(&a), i));
        }
        c = dense::div_rem(&c, &a).0;
        let q = dense::div_rem(&d, &a).0;
        d = sub(&q, &dense::derivative(&c));
        i += 1;
    }
    out
}

fn sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let n = a.len().max(b.len());
    let mut out: Vec<BigRational> = (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(BigRational::zero);
            let y = b.get(i).cloned().unwrap_or_else(BigRational::zero);
            x - y
        })
        .collect();
    dense::trim(&mut out);
    out
}

fn positive_divisors(n: &BigInt) -> Result<Vec<u64>> {
    let n = n
        .abs()
        .to_u64()
        .filter(|&v| v <= MAX_POINT_VALUE)
        .ok_or_else(|| Error::Invalid("coefficient too large to factor".into()))?;
    Ok(divisors_u64(n))
}

fn divisors_u64(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut i = 1u64;
    while i * i <= n {
        if n.is_multiple_of(i) {
            small.push(i);
            if i * i != n {
                large.push(n / i);
            }
        }
        i += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Divides out every rational root. Returns the linear factors and the
/// residual.
fn strip_rational_roots(f: &PrimitivePoly) -> Result<(Vec<PrimitivePoly>, PrimitivePoly)> {
    let mut rest = f.clone();
    let mut found = Vec::new();
    if rest.degree() == 0 {
        return Ok((found, rest));
    }
    let lead = positive_divisors(f.leading())?;
    let cons = positive_divisors(&f.coeffs()[0])?;
    for &e in &lead {
        for &d in &cons {
            if d.gcd(&e) != 1 {
                continue;
            }
            for sign in [1i64, -1] {
                if rest.degree() == 0 {
                    return Ok((found, rest));
                }
                // root d/e  <=>  e t - d divides
                let lin = PrimitivePoly::from_ints(&[-sign * d as i64, e as i64])?;
                let (q, r) = dense::div_rem(&to_rat(rest.coeffs()), &to_rat(lin.coeffs()));
                if r.is_empty() {
                    rest = prim_from_rat(&q);
                    found.push(lin);
                }
            }
        }
    }
    Ok((found, rest))
}

/// Newton interpolation through `(x_i, y_i)`.
fn interpolate(xs: &[BigInt], ys: &[BigInt]) -> Vec<BigRational> {
    let n = xs.len();
    let mut dd: Vec<BigRational> = ys.iter().map(|y| BigRational::from_integer(y.clone())).collect();
    for j in 1..n {
        for i in (j..n).rev() {
            let den = BigRational::from_integer(&xs[i] - &xs[i - j]);
            dd[i] = (&dd[i] - &dd[i - 1]) / den;
        }
    }
    let mut poly = vec![dd[n - 1].clone()];
    for i in (0..n - 1).rev() {
        // poly = poly * (t - x_i) + dd[i]
        let mut next = vec![BigRational::zero(); poly.len() + 1];
        let xi = BigRational::from_integer(xs[i].clone());
        for (k, c) in poly.iter().enumerate() {
            next[k + 1] += c;
            next[k] -= c * &xi;
        }
        next[0] += &dd[i];
        poly = next;
    }
    dense::trim(&mut poly);
    poly
}

/// Search for a factor of degree exactly `s` of `g` (no rational roots).
fn kronecker_factor(g: &PrimitivePoly, s: usize) -> Result<Option<PrimitivePoly>> {
    let gc = g.coeffs();
    let mut pool: Vec<(usize, BigInt, Vec<u64>)> = Vec::new();
    for x in 0..=24i64 {
        let x = if x % 2 == 0 { x / 2 } else { -(x + 1) / 2 };
        let xb = BigInt::from(x);
        let v = eval(gc, &xb);
        if let Some(vu) = v.abs().to_u64().filter(|&u| u <= MAX_POINT_VALUE) {
            let divs = divisors_u64(vu);
            pool.push((divs.len(), xb, divs));
        }
    }
    if pool.len() < s + 1 {
        return Err(Error::Invalid("not enough evaluation points for factorization".into()));
    }
    pool.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| a.1.abs().cmp(&b.1.abs())));
    pool.truncate(s + 1);
    let xs: Vec<BigInt> = pool.iter().map(|p| p.1.clone()).collect();
    // candidate values per point; the first point only takes positive
    // divisors since h and -h are the same factor
    let cands: Vec<Vec<BigInt>> = pool
        .iter()
        .enumerate()
        .map(|(i, (_, _, divs))| {
            let mut c: Vec<BigInt> = divs.iter().map(|&d| BigInt::from(d)).collect();
            if i > 0 {
                c.extend(divs.iter().map(|&d| -BigInt::from(d)));
            }
            c
        })
        .collect();
    let lead = g.leading().clone();
    let cons = gc[0].clone();
    let grat = to_rat(gc);
    let mut idx = vec![0usize; cands.len()];
    loop {
        let ys: Vec<BigInt> = idx.iter().zip(&cands).map(|(&i, c)| c[i].clone()).collect();
        let h = interpolate(&xs, &ys);
        if h.len() == s + 1 && h.iter().all(|c| c.is_integer()) {
            let hl = h[s].to_integer();
            let h0 = h[0].to_integer();
            if !h0.is_zero() && (&lead % &hl).is_zero() && (&cons % &h0).is_zero() {
                let (_, r) = dense::div_rem(&grat, &h);
                if r.is_empty() {
                    return Ok(Some(prim_from_rat(&h)));
                }
            }
        }
        // odometer
        let mut k = 0;
        loop {
            if k == idx.len() {
                return Ok(None);
            }
            idx[k] += 1;
            if idx[k] < cands[k].len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}

fn factor_no_roots(g: PrimitivePoly, min_s: usize, out: &mut Vec<PrimitivePoly>) -> Result<()> {
    let d = g.degree();
    for s in min_s..=d / 2 {
        if let Some(h) = kronecker_factor(&g, s)? {
            let q = dense::div_rem(&to_rat(g.coeffs()), &to_rat(h.coeffs())).0;
            out.push(h);
            return factor_no_roots(prim_from_rat(&q), s, out);
        }
    }
    if d > 0 {
        out.push(g);
    }
    Ok(())
}

/// Irreducible primitive factors over Q, with multiplicity, sorted.
pub fn factor_rational(p: &PrimitivePoly, bound: usize) -> Result<Vec<PrimitivePoly>> {
    if p.degree() > bound {
        return Err(Error::DegreeBound { degree: p.degree(), bound });
    }
    let mut out = Vec::new();
    for (f, mult) in squarefree(p) {
        let (lins, rest) = strip_rational_roots(&f)?;
        let mut irr = lins;
        factor_no_roots(rest, 2, &mut irr)?;
        for h in irr {
            out.extend(std::iter::repeat_n(h, mult));
        }
    }
    out.sort();
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReciprocalSquare {
    pub holds: bool,
    pub witness: Option<PrimitivePoly>,
}

fn pair_key(p: &PrimitivePoly) -> (BigInt, PrimitivePoly) {
    (p.leading().abs(), p.clone())
}

/// Decides whether `nu ~ p(t) p(t^-1)` in `Λ` for some `p`.
pub fn is_reciprocal_square(
    nu: &PrimitivePoly,
    witness: Option<&PrimitivePoly>,
    bound: usize,
) -> Result<ReciprocalSquare> {
    let at_one = nu.evaluate_int(1);
    if !at_one.abs().is_one() {
        return Err(Error::NotUnitAtOne(at_one.to_string()));
    }
    if let Some(p) = witness {
        let pp = &p.to_laurent() * &p.to_laurent().reciprocal();
        let holds = similar(&nu.to_laurent(), &pp, Ring::Lambda);
        return Ok(ReciprocalSquare {
            holds,
            witness: holds.then(|| p.clone()),
        });
    }
    let mut mult: BTreeMap<PrimitivePoly, usize> = BTreeMap::new();
    for f in factor_rational(nu, bound)? {
        *mult.entry(f).or_default() += 1;
    }
    let mut w = PrimitivePoly::one();
    for (f, &m) in &mult {
        let fb = f.conjugate();
        if fb == *f {
            if m % 2 == 1 {
                return Ok(ReciprocalSquare { holds: false, witness: None });
            }
            w = w.mul(&f.pow((m / 2) as u32));
        } else {
            if mult.get(&fb).copied().unwrap_or(0) != m {
                return Ok(ReciprocalSquare { holds: false, witness: None });
            }
            if pair_key(f) < pair_key(&fb) {
                w = w.mul(&f.pow(m as u32));
            }
        }
    }
    // content: nu is primitive, and so is w * conj(w), so similarity is exact
    debug_assert!(similar(&nu.to_laurent(), &(&w.to_laurent() * &w.to_laurent().reciprocal()), Ring::Lambda));
    Ok(ReciprocalSquare { holds: true, witness: Some(w) })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pp(c: &[i64]) -> PrimitivePoly {
        PrimitivePoly::from_ints(c).unwrap()
    }

    #[test]
    fn splits_rational_roots() {
        let f = factor_rational(&pp(&[2, -5, 2]), DEFAULT_FACTOR_BOUND).unwrap();
        assert_eq!(f, vec![pp(&[-2, 1]), pp(&[-1, 2])]);
    }

    #[test]
    fn irreducible_quadratic() {
        let f = factor_rational(&pp(&[1, -1, 1]), DEFAULT_FACTOR_BOUND).unwrap();
        assert_eq!(f, vec![pp(&[1, -1, 1])]);
    }

    #[test]
    fn sixth_cyclotomic_split() {
        let mut f = factor_rational(&pp(&[-1, 0, 0, 0, 0, 0, 1]), DEFAULT_FACTOR_BOUND).unwrap();
        f.sort();
        let mut want = vec![pp(&[-1, 1]), pp(&[1, 1]), pp(&[1, 1, 1]), pp(&[1, -1, 1])];
        want.sort();
        assert_eq!(f, want);
    }

    #[test]
    fn kronecker_finds_quadratic_pair() {
        // (t^2 + t + 2)(t^2 - 3t + 5): no rational roots
        let a = pp(&[2, 1, 1]);
        let b = pp(&[5, -3, 1]);
        let f = factor_rational(&a.mul(&b), DEFAULT_FACTOR_BOUND).unwrap();
        let mut want = vec![a, b];
        want.sort();
        assert_eq!(f, want);
    }

    #[test]
    fn repeated_factors() {
        let a = pp(&[1, -1, 1]);
        let b = pp(&[-2, 1]);
        let p = a.pow(2).mul(&b.pow(3));
        let f = factor_rational(&p, DEFAULT_FACTOR_BOUND).unwrap();
        assert_eq!(f, vec![b.clone(), b.clone(), b, a.clone(), a]);
    }

    #[test]
    fn degree_bound() {
        let p = pp(&[1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1]);
        assert_eq!(
            factor_rational(&p, DEFAULT_FACTOR_BOUND),
            Err(Error::DegreeBound { degree: 11, bound: 10 })
        );
    }

    #[test]
    fn reciprocal_square_examples() {
        let r = is_reciprocal_square(&pp(&[2, -5, 2]), None, DEFAULT_FACTOR_BOUND).unwrap();
        assert!(r.holds);
        assert_eq!(r.witness, Some(pp(&[-2, 1])));
        let r = is_reciprocal_square(&PrimitivePoly::one(), None, DEFAULT_FACTOR_BOUND).unwrap();
        assert_eq!(r.witness, Some(PrimitivePoly::one()));
        let r = is_reciprocal_square(&pp(&[1, -1, 1]), None, DEFAULT_FACTOR_BOUND).unwrap();
        assert!(!r.holds);
        let sq = pp(&[1, -1, 1]).pow(2);
        assert!(is_reciprocal_square(&sq, None, DEFAULT_FACTOR_BOUND).unwrap().holds);
    }

    #[test]
    fn reciprocal_square_with_witness() {
        let nu = pp(&[2, -5, 2]);
        assert!(is_reciprocal_square(&nu, Some(&pp(&[-1, 2])), DEFAULT_FACTOR_BOUND).unwrap().holds);
        assert!(!is_reciprocal_square(&nu, Some(&pp(&[-3, 1])), DEFAULT_FACTOR_BOUND).unwrap().holds);
    }
}
