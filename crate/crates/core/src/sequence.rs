//! Exact sequences of polynomials.
//!
//! A sequence `Δ_1, ..., Δ_n` (padded by 1's on both sides) is exact when
//! it factors as `Δ_i ~ δ_i δ_(i+1)` with `δ` trivial at both ends. The `δ`
//! are found by dividing in from one end.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::laurent::{primitive, LaurentPoly, PrimitivePoly};

#[derive(Clone, PartialEq, Eq)]
pub struct PolySequence {
    terms: Vec<PrimitivePoly>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Left,
    Right,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Exactness {
    pub holds: bool,
    pub deltas: Option<Vec<PrimitivePoly>>,
}

impl PolySequence {
    pub fn new(terms: Vec<PrimitivePoly>) -> Self {
        Self { terms }
    }

    pub fn from_laurent(terms: &[LaurentPoly]) -> Result<Self> {
        Ok(Self::new(terms.iter().map(primitive).collect::<Result<_>>()?))
    }

    /// Builds `Δ_i = δ_i δ_(i+1)` from `δ_1, ..., δ_(n+1)`.
    pub fn from_deltas(deltas: &[PrimitivePoly]) -> Self {
        Self::new(deltas.windows(2).map(|w| w[0].mul(&w[1])).collect())
    }

    pub fn terms(&self) -> &[PrimitivePoly] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// `Δ_i` for 1-based `i`, padded with 1 outside `1..=n`.
    pub fn get(&self, i: usize) -> PrimitivePoly {
        if i == 0 || i > self.terms.len() {
            PrimitivePoly::one()
        } else {
            self.terms[i - 1].clone()
        }
    }

    pub fn to_literal(&self) -> String {
        let t: Vec<String> = self.terms.iter().map(|p| p.to_laurent().to_literal()).collect();
        format!("[{}]", t.join(", "))
    }
}

impl fmt::Debug for PolySequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_literal())
    }
}

fn divide(num: &PrimitivePoly, den: &PrimitivePoly, index: usize) -> Result<PrimitivePoly> {
    match num.to_laurent().divide_exact(&den.to_laurent()) {
        Ok(q) => primitive(&q),
        Err(Error::NotDivisible { remainder }) => Err(Error::Subpolynomial { index, remainder }),
        Err(e) => Err(e),
    }
}

/// `δ_1, ..., δ_(n+1)`, starting from a trivial `δ` at the chosen end.
///
/// The far end is not checked; `verify_exact` does that.
pub fn subpolynomials(seq: &PolySequence, dir: Direction) -> Result<Vec<PrimitivePoly>> {
    let n = seq.len();
    let mut d = vec![PrimitivePoly::one(); n + 1];
    match dir {
        Direction::Left => {
            for i in 1..=n {
                d[i] = divide(&seq.get(i), &d[i - 1], i)?;
            }
        }
        Direction::Right => {
            for i in (1..=n).rev() {
                d[i - 1] = divide(&seq.get(i), &d[i], i)?;
            }
        }
    }
    Ok(d)
}

pub fn verify_exact(seq: &PolySequence) -> Exactness {
    let fail = Exactness { holds: false, deltas: None };
    let Ok(deltas) = subpolynomials(seq, Direction::Left) else {
        return fail;
    };
    let (mut odd, mut even) = (PrimitivePoly::one(), PrimitivePoly::one());
    for (i, p) in seq.terms.iter().enumerate() {
        if i % 2 == 0 {
            odd = odd.mul(p);
        } else {
            even = even.mul(p);
        }
    }
    // both sides are primitive, so Λ-similarity is equality
    if odd != even {
        return fail;
    }
    Exactness { holds: true, deltas: Some(deltas) }
}

/// Fills the gaps of a sequence known at two of every three consecutive
/// places.
///
/// A missing `Δ_m` is `(Δ_(m-1) / δ_(m-1)) * (Δ_(m+1) / δ_(m+2))`, with the
/// shared factors `δ` supplied by the caller (`δ_1` and `δ_(n+1)` default
/// to 1).
pub fn recover_missing_third(
    known: &BTreeMap<usize, PrimitivePoly>,
    shared: &BTreeMap<usize, PrimitivePoly>,
    n: usize,
) -> Result<PolySequence> {
    let delta = |i: usize| -> Result<PrimitivePoly> {
        match shared.get(&i) {
            Some(p) => Ok(p.clone()),
            None if i <= 1 || i > n => Ok(PrimitivePoly::one()),
            None => Err(Error::Inconsistent(format!("shared factor at index {i} is required"))),
        }
    };
    let delta_at = |i: usize| -> Result<PrimitivePoly> {
        if i == 0 || i > n {
            Ok(PrimitivePoly::one())
        } else {
            known
                .get(&i)
                .cloned()
                .ok_or_else(|| Error::Inconsistent(format!("neighbor {i} of a missing term is also missing")))
        }
    };
    let mut terms = Vec::with_capacity(n);
    for m in 1..=n {
        if let Some(p) = known.get(&m) {
            terms.push(p.clone());
            continue;
        }
        let left = if m == 1 {
            PrimitivePoly::one()
        } else {
            divide(&delta_at(m - 1)?, &delta(m - 1)?, m - 1)?
        };
        let right = if m == n {
            PrimitivePoly::one()
        } else {
            divide(&delta_at(m + 1)?, &delta(m + 2)?, m + 1)?
        };
        terms.push(left.mul(&right));
    }
    let seq = PolySequence::new(terms);
    if !verify_exact(&seq).holds {
        return Err(Error::Inconsistent("recovered sequence is not exact".into()));
    }
    Ok(seq)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pp(c: &[i64]) -> PrimitivePoly {
        PrimitivePoly::from_ints(c).unwrap()
    }

    #[test]
    fn divide_in_from_the_left() {
        let (p, q) = (pp(&[-2, 1]), pp(&[1, -1, 1]));
        let seq = PolySequence::new(vec![p.clone(), p.mul(&q), q.clone()]);
        let one = PrimitivePoly::one();
        assert_eq!(subpolynomials(&seq, Direction::Left).unwrap(), vec![one.clone(), p.clone(), q.clone(), one.clone()]);
        assert_eq!(subpolynomials(&seq, Direction::Right).unwrap(), vec![one.clone(), p, q, one]);
    }

    #[test]
    fn trivial_sequence() {
        let seq = PolySequence::new(vec![PrimitivePoly::one()]);
        assert_eq!(subpolynomials(&seq, Direction::Left).unwrap(), vec![PrimitivePoly::one(); 2]);
    }

    #[test]
    fn coprime_pair_fails_at_second_term() {
        let seq = PolySequence::new(vec![pp(&[-2, 1]), pp(&[-3, 1])]);
        match subpolynomials(&seq, Direction::Left) {
            Err(Error::Subpolynomial { index: 2, remainder }) => assert!(!remainder.is_zero()),
            other => panic!("unexpected {other:?}"),
        }
        assert!(!verify_exact(&seq).holds);
    }

    #[test]
    fn exactness() {
        let p = pp(&[-2, 1]);
        let r = verify_exact(&PolySequence::new(vec![p.clone(), p.clone()]));
        assert!(r.holds);
        assert_eq!(r.deltas.unwrap(), vec![PrimitivePoly::one(), p.clone(), PrimitivePoly::one()]);
        let q = pp(&[-3, 1]);
        assert!(verify_exact(&PolySequence::new(vec![p.clone(), p.mul(&q), q])).holds);
        // divisions succeed but the far end is left with p
        assert!(!verify_exact(&PolySequence::new(vec![p])).holds);
    }

    #[test]
    fn recover_middle_term() {
        let (p, q) = (pp(&[-2, 1]), pp(&[1, -3, 1]));
        let known = BTreeMap::from([(1, p.clone()), (3, q.clone())]);
        let seq = recover_missing_third(&known, &BTreeMap::new(), 3).unwrap();
        assert_eq!(seq.get(2), p.mul(&q));
    }

    #[test]
    fn recover_all_ones() {
        let one = PrimitivePoly::one();
        let known = BTreeMap::from([(1, one.clone()), (2, one.clone()), (4, one.clone()), (5, one.clone())]);
        let shared = BTreeMap::from([(2, one.clone()), (5, one.clone())]);
        let seq = recover_missing_third(&known, &shared, 6).unwrap();
        assert!(seq.terms().iter().all(|p| p.is_one()));
    }

    #[test]
    fn recover_rejects_bad_shared_factor() {
        let (p, q) = (pp(&[-2, 1]), pp(&[-3, 1]));
        let known = BTreeMap::from([(1, p.mul(&q)), (2, q.clone()), (4, p.clone())]);
        let shared = BTreeMap::from([(2, pp(&[-5, 1])), (5, PrimitivePoly::one())]);
        assert!(recover_missing_third(&known, &shared, 4).is_err());
    }
}
