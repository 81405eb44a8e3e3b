//! Invariant data of knots built from other knots: sums, frame spins,
//! frame twist spins, suspensions and trivial slicings.

mod spin;
mod twist;

use num_traits::Zero;

use crate::datum::{
    derive_subpolynomials, levine_validate, validate_disk_knot, validate_singular_sphere, InvariantModules, KnotDatum,
    KnotKind, SphereKnotPolys, Subpolynomials,
};
use crate::error::{Error, Result};
use crate::laurent::PrimitivePoly;
use crate::module_algebra::{direct_sum, TorsionModule};

pub use spin::frame_spin;
pub use twist::{frame_twist_spin, zeeman_twist_spin, InvariantPolicy, TwistSpun};

/// Ordinary Betti numbers `B_0, ..., B_k` of a closed manifold `M^k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiProfile {
    values: Vec<usize>,
}

impl BettiProfile {
    pub fn new(values: Vec<usize>) -> Result<Self> {
        if values.first().is_none_or(|b| *b == 0) {
            return Err(Error::Invalid("B_0 must be at least 1".into()));
        }
        Ok(Self { values })
    }

    pub fn point() -> Self {
        Self { values: vec![1] }
    }

    pub fn sphere(k: usize) -> Self {
        if k == 0 {
            return Self { values: vec![2] };
        }
        let mut values = vec![0; k + 1];
        values[0] = 1;
        values[k] = 1;
        Self { values }
    }

    /// `(S^1)^k`: binomial coefficients.
    pub fn torus(k: usize) -> Self {
        let mut values = vec![1usize];
        for _ in 0..k {
            let mut next = vec![1; values.len() + 1];
            for i in 1..values.len() {
                next[i] = values[i - 1] + values[i];
            }
            values = next;
        }
        Self { values }
    }

    pub fn product(&self, other: &Self) -> Self {
        Self { values: convolve(&self.values, &other.values) }
    }

    pub fn k(&self) -> usize {
        self.values.len() - 1
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn get(&self, i: i64) -> usize {
        if i < 0 {
            0
        } else {
            self.values.get(i as usize).copied().unwrap_or(0)
        }
    }

    pub fn reduced(&self, i: i64) -> usize {
        let b = self.get(i);
        if i == 0 {
            b - 1
        } else {
            b
        }
    }

    pub fn is_point(&self) -> bool {
        self.values == [1]
    }
}

fn convolve(a: &[usize], b: &[usize]) -> Vec<usize> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Reduced Betti numbers of `M × Σ` from the unreduced Betti numbers of
/// `Σ`.
pub fn product_betti(m: &BettiProfile, sigma_betti: &[usize]) -> Vec<usize> {
    let mut out = convolve(m.values(), sigma_betti);
    if let Some(b0) = out.first_mut() {
        *b0 = b0.saturating_sub(1);
    }
    out
}

/// `H_r(M; Γ) ≅ Γ^(𝔅_r) ⊕ ⊕_i Γ/(ζ_ri)` for the local system pulled back
/// along `M → S^1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoefficientHomology {
    ranks: Vec<usize>,
    zetas: Vec<Vec<PrimitivePoly>>,
}

impl CoefficientHomology {
    pub fn new(ranks: Vec<usize>, zetas: Vec<Vec<PrimitivePoly>>) -> Result<Self> {
        if let Some(z) = zetas.iter().flatten().find(|z| z.is_one()) {
            return Err(Error::Invalid(format!("torsion invariant {} is a unit", z.to_laurent())));
        }
        Ok(Self { ranks, zetas })
    }

    pub fn rank(&self, r: i64) -> usize {
        if r < 0 {
            0
        } else {
            self.ranks.get(r as usize).copied().unwrap_or(0)
        }
    }

    pub fn zetas(&self, r: i64) -> &[PrimitivePoly] {
        if r < 0 {
            return &[];
        }
        self.zetas.get(r as usize).map_or(&[], |v| v.as_slice())
    }

    /// Highest degree with nonzero data, if any.
    pub fn top_degree(&self) -> Option<usize> {
        let r = self.ranks.iter().rposition(|x| !x.is_zero());
        let z = self.zetas.iter().rposition(|v| !v.is_empty());
        r.max(z)
    }
}

/// Trivial map to the circle: free of rank `B_r` in each degree.
pub fn trivial_coefficient_module(m: &BettiProfile) -> CoefficientHomology {
    CoefficientHomology { ranks: m.values().to_vec(), zetas: Vec::new() }
}

/// Unreduced Betti numbers of the singular set of a seed.
pub(crate) fn sigma_betti(d: &KnotDatum) -> Vec<usize> {
    if d.kind.is_disk_like() {
        return vec![1];
    }
    let mut b = d.sigma_reduced_betti.clone();
    if b.is_empty() {
        b.push(0);
    }
    b[0] += 1;
    b
}

pub(crate) fn trim_betti(mut b: Vec<usize>) -> Vec<usize> {
    while b.last() == Some(&0) {
        b.pop();
    }
    b
}

/// Subpolynomials of a seed that passes its validator.
pub(crate) fn seed_subpolynomials(d: &KnotDatum) -> Result<Subpolynomials> {
    let rep = if d.kind.is_disk_like() { validate_disk_knot(d, None)? } else { validate_singular_sphere(d)? };
    if let Some(c) = rep.failures().next() {
        return Err(Error::InvalidSeed(format!("{}: {}", c.id, c.detail)));
    }
    Ok(derive_subpolynomials(d)?.subs.expect("derived"))
}

pub(crate) fn product_of(it: impl IntoIterator<Item = PrimitivePoly>) -> PrimitivePoly {
    it.into_iter().fold(PrimitivePoly::one(), |acc, p| acc.mul(&p))
}

/// Connected sum along locally flat points.
///
/// Singular sets become disjoint, so each extra component raises `B̃_0`
/// and `μ_1` picks up one factor of `t - 1` per extra component.
pub fn knot_sum(d1: &KnotDatum, d2: &KnotDatum) -> Result<KnotDatum> {
    d1.check_shape()?;
    d2.check_shape()?;
    if d1.n != d2.n {
        return Err(Error::DimensionMismatch(format!("knot sum of n = {} and n = {}", d1.n, d2.n)));
    }
    let components = |d: &KnotDatum| match d.kind {
        KnotKind::LocallyFlatDisk => 0,
        KnotKind::PointSingularSphere => 1,
        KnotKind::GeneralSingularSphere => d.betti(0) + 1,
    };
    let total = components(d1) + components(d2);
    let mul = |a: &[PrimitivePoly], b: &[PrimitivePoly]| a.iter().zip(b).map(|(x, y)| x.mul(y)).collect::<Vec<_>>();
    let lambda = mul(&d1.lambda, &d2.lambda);
    let mut mu = mul(&d1.mu, &d2.mu);
    let nu = mul(&d1.nu, &d2.nu);
    let mut betti = Vec::new();
    let mut extra = 0;
    let both_disk_like = d1.kind.is_disk_like() && d2.kind.is_disk_like();
    let kind = if both_disk_like && total <= 1 {
        if total == 0 {
            KnotKind::LocallyFlatDisk
        } else {
            KnotKind::PointSingularSphere
        }
    } else {
        let len = d1.sigma_reduced_betti.len().max(d2.sigma_reduced_betti.len()).max(1);
        betti = (0..len as i64).map(|i| d1.betti(i) + d2.betti(i)).collect();
        betti[0] = total.saturating_sub(1);
        extra = betti[0] - d1.betti(0) - d2.betti(0);
        mu[0] = mu[0].mul(&PrimitivePoly::t_minus_one().pow(extra as u32));
        KnotKind::GeneralSingularSphere
    };
    let mut out = KnotDatum::new(d1.n, kind, trim_betti(betti), nu, lambda, mu)?;
    if let (Some(a), Some(b)) = (&d1.invariants, &d2.invariants) {
        let sum = |x: &[TorsionModule], y: &[TorsionModule]| x.iter().zip(y).map(|(p, q)| direct_sum(p, q)).collect::<Vec<_>>();
        let mut mu = sum(&a.mu, &b.mu);
        for _ in 0..extra {
            mu[0] = direct_sum(&mu[0], &TorsionModule::cyclic(PrimitivePoly::t_minus_one()));
        }
        out.invariants = Some(InvariantModules { lambda: sum(&a.lambda, &b.lambda), mu, nu: sum(&a.nu, &b.nu) });
    }
    Ok(out)
}

/// Suspension: `λ_i` unchanged, `μ_i ← μ_(i-1)`, `ν_i ← a_(i-1) b_i c_i^2`.
///
/// The new subpolynomials are `a' = μ`, `b' = λ`, `c' = 1`. The singular
/// set is suspended, shifting its reduced Betti numbers up one degree.
pub fn suspension(d: &KnotDatum) -> Result<KnotDatum> {
    d.check_shape()?;
    let s = derive_subpolynomials(d)?.subs.expect("derived");
    let n = d.n as i64;
    let lambda: Vec<_> = (1..=n - 1).map(|i| d.lambda(i)).collect();
    let mu: Vec<_> = (1..=n - 1).map(|i| d.mu(i - 1)).collect();
    let nu: Vec<_> = (1..=n - 2).map(|i| s.a(i - 1).mul(&s.b(i)).mul(&s.c(i).pow(2))).collect();
    let mut betti = vec![0];
    betti.extend(d.sigma_reduced_betti.iter().copied());
    let mut out = KnotDatum::new(d.n + 1, KnotKind::GeneralSingularSphere, trim_betti(betti), nu, lambda.clone(), mu)?;
    out.subs = Some(Subpolynomials {
        a: (0..=n - 2).map(|i| d.mu(i)).collect(),
        b: lambda,
        c: vec![PrimitivePoly::one(); d.n - 1],
    });
    Ok(out)
}

/// Disk knot obtained by removing a ball around a point of a locally flat
/// sphere knot: `λ = μ = p`, `ν = 1`.
pub fn trivial_slice(s: &SphereKnotPolys) -> Result<KnotDatum> {
    let rep = levine_validate(s);
    if let Some(c) = rep.failures().next() {
        return Err(Error::InvalidSeed(format!("{}: {}", c.id, c.detail)));
    }
    let n = s.n;
    let mut d = KnotDatum::new(
        n,
        KnotKind::LocallyFlatDisk,
        Vec::new(),
        vec![PrimitivePoly::one(); n - 3],
        s.p.clone(),
        s.p.clone(),
    )?;
    d.subs = Some(Subpolynomials {
        a: vec![PrimitivePoly::one(); n - 2],
        b: vec![PrimitivePoly::one(); n - 2],
        c: s.p.clone(),
    });
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pp(c: &[i64]) -> PrimitivePoly {
        PrimitivePoly::from_ints(c).unwrap()
    }

    #[test]
    fn betti_profiles() {
        assert_eq!(BettiProfile::torus(2).values(), &[1, 2, 1]);
        assert_eq!(BettiProfile::sphere(2).values(), &[1, 0, 1]);
        assert_eq!(product_betti(&BettiProfile::sphere(1), &[2]), vec![1, 2]);
        assert_eq!(product_betti(&BettiProfile::point(), &[1, 0, 3]), vec![0, 0, 3]);
        assert_eq!(product_betti(&BettiProfile::torus(2), &[1]), vec![0, 2, 1]);
        assert!(BettiProfile::new(vec![0, 1]).is_err());
    }

    #[test]
    fn trivial_module() {
        let h = trivial_coefficient_module(&BettiProfile::torus(2));
        assert_eq!((h.rank(0), h.rank(1), h.rank(2), h.rank(3)), (1, 2, 1, 0));
        assert!(h.zetas(0).is_empty());
        assert!(CoefficientHomology::new(vec![], vec![vec![PrimitivePoly::one()]]).is_err());
    }

    #[test]
    fn sum_with_trivial() {
        let s = SphereKnotPolys::new(4, vec![pp(&[-2, 1]), pp(&[-1, 2])]).unwrap();
        let d = trivial_slice(&s).unwrap();
        let sum = knot_sum(&d, &KnotDatum::trivial(4, KnotKind::LocallyFlatDisk).unwrap()).unwrap();
        assert_eq!(sum.lambda, d.lambda);
        assert_eq!(sum.mu, d.mu);
        assert_eq!(sum.kind, KnotKind::LocallyFlatDisk);
        let twice = knot_sum(&d, &d).unwrap();
        assert_eq!(twice.lambda[0], pp(&[4, -4, 1]));
        assert!(validate_disk_knot(&twice, None).unwrap().passed());
        assert!(knot_sum(&d, &KnotDatum::trivial(5, KnotKind::LocallyFlatDisk).unwrap()).is_err());
    }

    #[test]
    fn sum_of_point_singular_knots_has_two_singular_points() {
        let d = KnotDatum::trivial(5, KnotKind::PointSingularSphere).unwrap();
        let s = knot_sum(&d, &d).unwrap();
        assert_eq!(s.kind, KnotKind::GeneralSingularSphere);
        assert_eq!(s.sigma_reduced_betti, vec![1]);
        assert_eq!(s.mu[0], PrimitivePoly::t_minus_one());
        assert!(validate_singular_sphere(&s).unwrap().passed());
    }

    #[test]
    fn slice_examples() {
        let s = SphereKnotPolys::new(4, vec![pp(&[-2, 1]), pp(&[-1, 2])]).unwrap();
        let d = trivial_slice(&s).unwrap();
        assert_eq!(d.lambda, d.mu);
        assert_eq!(d.nu, vec![PrimitivePoly::one()]);
        assert!(validate_disk_knot(&d, None).unwrap().passed());
        let bad = SphereKnotPolys::new(4, vec![pp(&[-2, 1]), pp(&[-2, 1])]).unwrap();
        assert!(matches!(trivial_slice(&bad), Err(Error::InvalidSeed(_))));
    }

    #[test]
    fn suspension_examples() {
        let d = KnotDatum::trivial(5, KnotKind::LocallyFlatDisk).unwrap();
        let s = suspension(&d).unwrap();
        assert_eq!(s.n, 6);
        assert!(s.lambda.iter().chain(&s.mu).chain(&s.nu).all(|p| p.is_one()));
        // a = b = 1, c_1 = c self-dual for n = 3
        let c = pp(&[1, -3, 1]);
        let d = KnotDatum::new(3, KnotKind::LocallyFlatDisk, vec![], vec![], vec![c.clone()], vec![c.clone()]).unwrap();
        let s = suspension(&d).unwrap();
        assert_eq!(s.nu, vec![c.pow(2)]);
        assert!(validate_singular_sphere(&s).unwrap().passed());
    }
}
