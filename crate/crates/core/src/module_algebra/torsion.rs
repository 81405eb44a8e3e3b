use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::laurent::{factor_rational, gcd, lcm, primitive, LaurentPoly, PrimitivePoly};

use super::matrix::GammaMatrix;
use super::snf::smith_normal_form;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InvariantForm {
    /// `inv[i]` divides `inv[i + 1]`.
    Chain,
    /// Every invariant is a power of an irreducible.
    Primary,
}

/// Finitely generated `Γ`-module `Γ^free ⊕ (⊕ Γ/(p_i))`.
#[derive(Clone, PartialEq, Eq)]
pub struct TorsionModule {
    free_rank: usize,
    invariants: Vec<PrimitivePoly>,
    form: InvariantForm,
}

/// Rewrites a multiset of orders as an ascending divisibility chain with
/// the same direct sum, dropping units.
fn rechain(mut v: Vec<PrimitivePoly>) -> Vec<PrimitivePoly> {
    v.retain(|p| !p.is_one());
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            let (a, b) = (v[i].to_laurent(), v[j].to_laurent());
            let g = gcd(&a, &b).unwrap();
            let l = lcm(&a, &b).unwrap();
            v[i] = g;
            v[j] = l;
        }
    }
    v.retain(|p| !p.is_one());
    v
}

impl TorsionModule {
    pub fn trivial() -> Self {
        Self::new(0, Vec::new())
    }

    pub fn free(rank: usize) -> Self {
        Self::new(rank, Vec::new())
    }

    pub fn cyclic(p: PrimitivePoly) -> Self {
        Self::new(0, vec![p])
    }

    /// Any multiset of orders; stored in chain form.
    pub fn new(free_rank: usize, orders: Vec<PrimitivePoly>) -> Self {
        Self {
            free_rank,
            invariants: rechain(orders),
            form: InvariantForm::Chain,
        }
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn invariants(&self) -> &[PrimitivePoly] {
        &self.invariants
    }

    pub fn form(&self) -> InvariantForm {
        self.form
    }

    pub fn is_torsion(&self) -> bool {
        self.free_rank == 0
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.invariants.is_empty()
    }

    pub fn torsion_part(&self) -> Self {
        Self { free_rank: 0, ..self.clone() }
    }

    pub fn to_chain(&self) -> Self {
        Self::new(self.free_rank, self.invariants.clone())
    }

    /// Prime power invariants (elementary divisors), sorted.
    pub fn to_primary(&self, bound: usize) -> Result<Self> {
        let mut out = Vec::new();
        for p in &self.invariants {
            let mut mult: BTreeMap<PrimitivePoly, u32> = BTreeMap::new();
            for f in factor_rational(p, bound)? {
                *mult.entry(f).or_default() += 1;
            }
            out.extend(mult.into_iter().map(|(f, k)| f.pow(k)));
        }
        out.sort();
        Ok(Self {
            free_rank: self.free_rank,
            invariants: out,
            form: InvariantForm::Primary,
        })
    }

    pub fn to_literal(&self) -> String {
        let inv: Vec<String> = self.invariants.iter().map(|p| p.to_laurent().to_literal()).collect();
        format!("{{free: {}, inv: [{}]}}", self.free_rank, inv.join(", "))
    }
}

impl fmt::Debug for TorsionModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_literal())
    }
}

impl fmt::Display for TorsionModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.free_rank > 0 {
            parts.push(format!("Γ^{}", self.free_rank));
        }
        for p in &self.invariants {
            parts.push(format!("Γ/({p})"));
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" ⊕ "))
        }
    }
}

/// Module presented by `A`, rows read as relations on `cols` generators.
pub fn module_from_presentation(a: &GammaMatrix) -> TorsionModule {
    let s = smith_normal_form(a);
    let diag = s.diagonal();
    let rank = diag.iter().filter(|p| !p.is_zero()).count();
    let orders = diag.iter().filter(|p| !p.is_zero()).map(|p| primitive(p).unwrap()).collect();
    TorsionModule::new(a.cols() - rank, orders)
}

pub fn associated_polynomial(m: &TorsionModule) -> Result<PrimitivePoly> {
    if !m.is_torsion() {
        return Err(Error::NotTorsion(m.free_rank));
    }
    Ok(m.invariants.iter().fold(PrimitivePoly::one(), |acc, p| acc.mul(p)))
}

pub fn primary_decomposition(m: &TorsionModule, bound: usize) -> Result<BTreeMap<PrimitivePoly, TorsionModule>> {
    if !m.is_torsion() {
        return Err(Error::NotTorsion(m.free_rank));
    }
    let mut parts: BTreeMap<PrimitivePoly, Vec<PrimitivePoly>> = BTreeMap::new();
    for p in &m.invariants {
        let mut mult: BTreeMap<PrimitivePoly, u32> = BTreeMap::new();
        for f in factor_rational(p, bound)? {
            *mult.entry(f).or_default() += 1;
        }
        for (f, k) in mult {
            parts.entry(f.clone()).or_default().push(f.pow(k));
        }
    }
    Ok(parts
        .into_iter()
        .map(|(f, mut v)| {
            v.sort();
            (
                f,
                TorsionModule {
                    free_rank: 0,
                    invariants: v,
                    form: InvariantForm::Primary,
                },
            )
        })
        .collect())
}

fn pairwise_gcds(a: &[PrimitivePoly], b: &[PrimitivePoly]) -> Vec<PrimitivePoly> {
    let mut out = Vec::new();
    for p in a {
        for q in b {
            out.push(gcd(&p.to_laurent(), &q.to_laurent()).unwrap());
        }
    }
    out
}

fn repeat(v: &[PrimitivePoly], k: usize) -> impl Iterator<Item = PrimitivePoly> + '_ {
    (0..k).flat_map(move |_| v.iter().cloned())
}

/// `A ⊗ B`. The free part is `Γ^(B_A * B_B)`, which is what `Γ ⊗ X ≅ X`
/// forces.
pub fn tensor_product(a: &TorsionModule, b: &TorsionModule) -> TorsionModule {
    let mut orders = pairwise_gcds(&a.invariants, &b.invariants);
    orders.extend(repeat(&a.invariants, b.free_rank));
    orders.extend(repeat(&b.invariants, a.free_rank));
    TorsionModule::new(a.free_rank * b.free_rank, orders)
}

/// `A * B`, the torsion product `Tor(A, B)`.
pub fn torsion_product(a: &TorsionModule, b: &TorsionModule) -> TorsionModule {
    TorsionModule::new(0, pairwise_gcds(&a.invariants, &b.invariants))
}

pub fn direct_sum(a: &TorsionModule, b: &TorsionModule) -> TorsionModule {
    let mut orders = a.invariants.clone();
    orders.extend(b.invariants.iter().cloned());
    TorsionModule::new(a.free_rank + b.free_rank, orders)
}

pub fn q_dimension(m: &TorsionModule) -> Result<usize> {
    if !m.is_torsion() {
        return Err(Error::InfiniteDimensional(m.free_rank));
    }
    Ok(m.invariants.iter().map(|p| p.degree()).sum())
}

/// Finitely generated with `t - 1` acting invertibly.
pub fn is_type_k(m: &TorsionModule) -> bool {
    m.is_torsion() && m.invariants.iter().all(|p| !p.evaluate_int(1).is_zero())
}

/// `Γ/(p)` for a nonzero Laurent polynomial.
pub fn cyclic_of(p: &LaurentPoly) -> Result<TorsionModule> {
    Ok(TorsionModule::cyclic(primitive(p)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::DEFAULT_FACTOR_BOUND;

    fn pp(c: &[i64]) -> PrimitivePoly {
        PrimitivePoly::from_ints(c).unwrap()
    }

    fn lp(lo: i64, c: &[i64]) -> LaurentPoly {
        LaurentPoly::from_ints(lo, c)
    }

    #[test]
    fn presentations() {
        assert!(module_from_presentation(&GammaMatrix::identity(3)).is_trivial());
        let m = module_from_presentation(&GammaMatrix::diagonal(&[lp(0, &[1, -3, 1])]));
        assert_eq!(m.invariants(), &[pp(&[1, -3, 1])]);
        let m = module_from_presentation(&GammaMatrix::diagonal(&[lp(0, &[-2, 1]), lp(0, &[-2, 1]).pow(2)]));
        assert_eq!(m.invariants(), &[pp(&[-2, 1]), pp(&[-2, 1]).pow(2)]);
        // one relation on two generators
        let a = GammaMatrix::new(vec![vec![lp(0, &[-2, 1]), LaurentPoly::zero()]]).unwrap();
        let m = module_from_presentation(&a);
        assert_eq!(m.free_rank(), 1);
        assert_eq!(m.invariants(), &[pp(&[-2, 1])]);
    }

    #[test]
    fn associated_polynomials() {
        assert!(associated_polynomial(&TorsionModule::trivial()).unwrap().is_one());
        let m = TorsionModule::new(0, vec![pp(&[-2, 1]), pp(&[-3, 1])]);
        assert_eq!(associated_polynomial(&m).unwrap(), pp(&[6, -5, 1]));
        let m = TorsionModule::new(0, vec![pp(&[-1, 1]), pp(&[-1, 1])]);
        assert_eq!(associated_polynomial(&m).unwrap(), pp(&[1, -2, 1]));
        assert_eq!(associated_polynomial(&TorsionModule::free(2)), Err(Error::NotTorsion(2)));
    }

    #[test]
    fn primary_parts() {
        let m = TorsionModule::cyclic(pp(&[2, -3, 1]));
        let d = primary_decomposition(&m, DEFAULT_FACTOR_BOUND).unwrap();
        assert_eq!(d.len(), 2);
        assert_eq!(d[&pp(&[-1, 1])].invariants(), &[pp(&[-1, 1])]);
        assert_eq!(d[&pp(&[-2, 1])].invariants(), &[pp(&[-2, 1])]);
        let sq = pp(&[1, -1, 1]).pow(2);
        let d = primary_decomposition(&TorsionModule::cyclic(sq.clone()), DEFAULT_FACTOR_BOUND).unwrap();
        assert_eq!(d[&pp(&[1, -1, 1])].invariants(), &[sq]);
        assert!(primary_decomposition(&TorsionModule::trivial(), DEFAULT_FACTOR_BOUND).unwrap().is_empty());
    }

    #[test]
    fn tensor_and_tor() {
        let a = TorsionModule::cyclic(pp(&[-2, 1]));
        let b = TorsionModule::cyclic(pp(&[-3, 1]));
        assert!(tensor_product(&a, &b).is_trivial());
        let a2 = TorsionModule::cyclic(pp(&[-2, 1]).pow(2));
        assert_eq!(tensor_product(&a2, &a), a);
        assert_eq!(tensor_product(&TorsionModule::free(1), &a), a);
        assert_eq!(tensor_product(&TorsionModule::free(1), &TorsionModule::free(1)), TorsionModule::free(1));
        assert_eq!(torsion_product(&a, &a), a);
        assert!(torsion_product(&TorsionModule::free(1), &a).is_trivial());
        assert!(torsion_product(&a, &b).is_trivial());
    }

    #[test]
    fn sums_and_dimensions() {
        let a = TorsionModule::cyclic(pp(&[-2, 1]));
        assert_eq!(direct_sum(&a, &TorsionModule::trivial()), a);
        assert_eq!(direct_sum(&a, &a).invariants(), &[pp(&[-2, 1]), pp(&[-2, 1])]);
        let b = TorsionModule::cyclic(pp(&[-3, 1]));
        assert_eq!(direct_sum(&a, &b).invariants(), &[pp(&[6, -5, 1])]);
        assert_eq!(q_dimension(&TorsionModule::trivial()).unwrap(), 0);
        assert_eq!(q_dimension(&TorsionModule::cyclic(pp(&[1, -3, 1]))).unwrap(), 2);
        let m = TorsionModule::new(0, vec![pp(&[-1, 1]).pow(2), pp(&[-1, 1])]);
        assert_eq!(q_dimension(&m).unwrap(), 3);
        assert_eq!(q_dimension(&TorsionModule::free(1)), Err(Error::InfiniteDimensional(1)));
    }

    #[test]
    fn type_k() {
        assert!(is_type_k(&TorsionModule::cyclic(pp(&[1, -3, 1]))));
        assert!(!is_type_k(&TorsionModule::cyclic(pp(&[-1, 1]))));
        assert!(!is_type_k(&TorsionModule::cyclic(pp(&[-1, 0, 0, 0, 0, 0, 1]))));
    }
}
