use crate::datum::{derive_subpolynomials, KnotDatum, KnotKind};
use crate::error::{Error, Result};
use crate::laurent::{gcd, primitive, LaurentPoly, PrimitivePoly};

use super::{product_betti, product_of, seed_subpolynomials, sigma_betti, trim_betti, BettiProfile, CoefficientHomology};

/// What to do when a seed carries only product polynomials.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum InvariantPolicy {
    /// Refuse: the gcds need the individual invariants.
    #[default]
    Strict,
    /// Treat each polynomial as a single cyclic invariant.
    CoarsenToCyclic,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwistSpun {
    pub datum: KnotDatum,
    /// Set when the seed's polynomials stood in for missing invariants.
    pub coarsened: bool,
}

fn tm1(k: usize) -> PrimitivePoly {
    PrimitivePoly::t_minus_one().pow(k as u32)
}

/// Removes every factor of `t - 1`.
fn strip_t_minus_one(p: &PrimitivePoly) -> PrimitivePoly {
    let mut p = p.clone();
    let t1 = LaurentPoly::t_minus_one();
    while p.evaluate_int(1) == 0.into() {
        let q = p.to_laurent().divide_exact(&t1).expect("root at 1");
        p = primitive(&q).expect("nonzero");
    }
    p
}

/// Per-degree invariants `λ_sl`, `μ_sl`, `ν_sl` with `t - 1` removed from
/// `μ` and `ν`. Index 0 of each list is degree 0.
struct SeedInvariants {
    lambda: Vec<Vec<PrimitivePoly>>,
    mu: Vec<Vec<PrimitivePoly>>,
    nu: Vec<Vec<PrimitivePoly>>,
}

impl SeedInvariants {
    fn from_datum(d: &KnotDatum, policy: InvariantPolicy) -> Result<(Self, bool)> {
        let nontrivial = |v: Vec<PrimitivePoly>| v.into_iter().filter(|p| !p.is_one()).collect::<Vec<_>>();
        let stripped = |v: &[PrimitivePoly]| nontrivial(v.iter().map(strip_t_minus_one).collect());
        let mut lambda = vec![Vec::new()];
        let mut mu = vec![Vec::new()];
        let mut nu = vec![Vec::new()];
        match (&d.invariants, policy) {
            (Some(inv), _) => {
                for (k, m) in inv.lambda.iter().enumerate() {
                    check_product(m.invariants(), &d.lambda[k], &format!("lambda_{}", k + 1))?;
                    lambda.push(nontrivial(m.invariants().to_vec()));
                }
                for (k, m) in inv.mu.iter().enumerate() {
                    check_product(m.invariants(), &d.mu[k], &format!("mu_{}", k + 1))?;
                    mu.push(stripped(m.invariants()));
                }
                for (k, m) in inv.nu.iter().enumerate() {
                    check_product(m.invariants(), &d.nu[k], &format!("nu_{}", k + 1))?;
                    nu.push(stripped(m.invariants()));
                }
                Ok((Self { lambda, mu, nu }, false))
            }
            (None, InvariantPolicy::Strict) => Err(Error::MissingInvariants(
                "the seed has no per-degree invariant modules".into(),
            )),
            (None, InvariantPolicy::CoarsenToCyclic) => {
                lambda.extend(d.lambda.iter().map(|p| nontrivial(vec![p.clone()])));
                mu.extend(d.mu.iter().map(|p| stripped(std::slice::from_ref(p))));
                nu.extend(d.nu.iter().map(|p| stripped(std::slice::from_ref(p))));
                Ok((Self { lambda, mu, nu }, true))
            }
        }
    }
}

fn check_product(inv: &[PrimitivePoly], p: &PrimitivePoly, name: &str) -> Result<()> {
    let prod = product_of(inv.iter().cloned());
    if prod != *p {
        return Err(Error::InvalidSeed(format!(
            "invariants of {name} multiply to {}, not {}",
            prod.to_laurent(),
            p.to_laurent()
        )));
    }
    Ok(())
}

fn get(v: &[Vec<PrimitivePoly>], s: i64) -> &[PrimitivePoly] {
    if s < 0 {
        &[]
    } else {
        v.get(s as usize).map_or(&[], |x| x.as_slice())
    }
}

fn d(a: &PrimitivePoly, b: &PrimitivePoly) -> PrimitivePoly {
    gcd(&a.to_laurent(), &b.to_laurent()).expect("nonzero")
}

/// `Π_l x_l^(𝔅_r) · Π_(i,l) d(ζ_ri, x_l)`
fn full_term(h: &CoefficientHomology, r: i64, xs: &[PrimitivePoly], conj: bool) -> PrimitivePoly {
    if r < 0 {
        return PrimitivePoly::one();
    }
    let free = product_of(xs.iter().map(|x| x.pow(h.rank(r) as u32)));
    free.mul(&tor_term(h, r, xs, conj))
}

/// `Π_(i,l) d(ζ_ri, x_l)`
fn tor_term(h: &CoefficientHomology, r: i64, xs: &[PrimitivePoly], conj: bool) -> PrimitivePoly {
    product_of(h.zetas(r).iter().flat_map(|z| {
        let z = if conj { z.conjugate() } else { z.clone() };
        xs.iter().map(move |x| d(&z, x))
    }))
}

/// Frame twist spin of a knot `S^(m-2) ⊂ S^m` about `M^k` with the
/// local system described by `h`.
///
/// `m_betti` gives the ordinary Betti numbers of `M`, which fix the `t - 1`
/// factors; `h` fixes everything else.
pub fn frame_twist_spin(
    seed: &KnotDatum,
    h: &CoefficientHomology,
    m_betti: &BettiProfile,
    policy: InvariantPolicy,
) -> Result<TwistSpun> {
    seed_subpolynomials(seed)?;
    let k = m_betti.k();
    if h.top_degree().is_some_and(|r| r > k) {
        return Err(Error::DimensionMismatch(format!(
            "coefficient homology in degree {} exceeds dim M = {k}",
            h.top_degree().unwrap_or(0)
        )));
    }
    let (inv, coarsened) = SeedInvariants::from_datum(seed, policy)?;
    let m = seed.n as i64;
    let n = m + k as i64;
    let beta = product_betti(m_betti, &sigma_betti(seed));
    let beta_at = |i: i64| if i < 0 { 0 } else { beta.get(i as usize).copied().unwrap_or(0) };

    let lambda: Vec<_> = (1..=n - 2)
        .map(|j| {
            product_of((1..=m - 2).map(|s| {
                let xs = get(&inv.lambda, s);
                full_term(h, j - s, xs, false).mul(&tor_term(h, j - 1 - s, xs, false))
            }))
        })
        .collect();
    let mu: Vec<_> = (1..=n - 2)
        .map(|j| {
            let body = product_of((1..=m - 2).map(|s| {
                let xs = get(&inv.mu, m - s - 1);
                full_term(h, n - j - 1 - s, xs, true).mul(&tor_term(h, n - j - 2 - s, xs, true))
            }));
            tm1(beta_at(j - 1)).mul(&body)
        })
        .collect();
    let nu: Vec<_> = (1..=n - 3)
        .map(|j| {
            let body = product_of((0..=m - 3).map(|s| {
                let xs = get(&inv.nu, s);
                full_term(h, j - s, xs, false).mul(&tor_term(h, j - 1 - s, xs, false))
            }));
            tm1(beta_at(j)).mul(&body)
        })
        .collect();

    let out = KnotDatum::new(n as usize, KnotKind::GeneralSingularSphere, trim_betti(beta), nu, lambda, mu)?;
    let datum = derive_subpolynomials(&out)?;
    Ok(TwistSpun { datum, coarsened })
}

/// Zeeman's `k`-twist spin: the frame twist spin about `S^1` whose map to
/// the circle has degree `k`.
pub fn zeeman_twist_spin(seed: &KnotDatum, twist_k: i64, policy: InvariantPolicy) -> Result<TwistSpun> {
    if twist_k < 0 {
        return Err(Error::NegativeTwist(twist_k));
    }
    let circle = BettiProfile::sphere(1);
    let h = if twist_k == 0 {
        CoefficientHomology::new(vec![1, 1], Vec::new())?
    } else {
        let mut z = vec![0i64; twist_k as usize + 1];
        z[0] = -1;
        z[twist_k as usize] = 1;
        CoefficientHomology::new(vec![0, 0], vec![vec![PrimitivePoly::from_ints(&z)?]])?
    };
    frame_twist_spin(seed, &h, &circle, policy)
}
