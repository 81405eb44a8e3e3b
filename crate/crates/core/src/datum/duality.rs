use crate::error::{Error, Result};
use crate::laurent::{primitive, PrimitivePoly};

use super::{t_minus_one_pow, KnotDatum, KnotKind};

/// A datum with some polynomials missing, each recoverable from its dual
/// partner.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialDatum {
    pub n: usize,
    pub kind: KnotKind,
    pub sigma_reduced_betti: Vec<usize>,
    /// `ν_1 ..= ν_(n-3)`
    pub nu: Vec<Option<PrimitivePoly>>,
    /// `λ_1 ..= λ_(n-2)`
    pub lambda: Vec<Option<PrimitivePoly>>,
    /// `μ_1 ..= μ_(n-2)`
    pub mu: Vec<Option<PrimitivePoly>>,
}

impl PartialDatum {
    /// Only the `λ` and the lower half of the `ν` given.
    pub fn from_lower(n: usize, kind: KnotKind, betti: Vec<usize>, lambda: Vec<PrimitivePoly>, nu_lower: Vec<PrimitivePoly>) -> Self {
        let mut nu = vec![None; n.saturating_sub(3)];
        for (slot, p) in nu.iter_mut().zip(nu_lower) {
            *slot = Some(p);
        }
        Self {
            n,
            kind,
            sigma_reduced_betti: betti,
            nu,
            mu: vec![None; lambda.len()],
            lambda: lambda.into_iter().map(Some).collect(),
        }
    }
}

fn strip(p: &PrimitivePoly, k: usize, what: &str) -> Result<PrimitivePoly> {
    let q = p
        .to_laurent()
        .divide_exact(&t_minus_one_pow(k).to_laurent())
        .map_err(|_| Error::Inconsistent(format!("{what} = {} is not divisible by (t-1)^{k}", p.to_laurent())))?;
    primitive(&q)
}

/// Fills each missing polynomial from its dual partner:
/// `μ_q ~ conj(λ_p) (t-1)^B̃_(q-1)` for `p + q = n - 1`, and
/// `ν_i = r_i (t-1)^B̃_i` with `r_P ~ conj(r_Q)` for `P + Q = n - 2`.
pub fn complete_by_duality(p: &PartialDatum) -> Result<KnotDatum> {
    let n = p.n;
    if n < 3 || p.lambda.len() != n - 2 || p.mu.len() != n - 2 || p.nu.len() != n - 3 {
        return Err(Error::MalformedDatum(format!("partial datum lists do not match n = {n}")));
    }
    let betti = |i: usize| p.sigma_reduced_betti.get(i).copied().unwrap_or(0);
    let mut lambda = Vec::with_capacity(n - 2);
    let mut mu = Vec::with_capacity(n - 2);
    for i in 1..=n - 2 {
        // λ_i pairs with μ_(n-1-i); μ_i pairs with λ_(n-1-i)
        let lam = match (&p.lambda[i - 1], &p.mu[n - 2 - i]) {
            (Some(l), _) => l.clone(),
            (None, Some(m)) => strip(m, betti(n - 2 - i), &format!("mu_{}", n - 1 - i))?.conjugate(),
            (None, None) => {
                return Err(Error::Inconsistent(format!("neither lambda_{i} nor mu_{} is given", n - 1 - i)))
            }
        };
        lambda.push(lam);
    }
    for q in 1..=n - 2 {
        let want = lambda[n - 2 - q].conjugate().mul(&t_minus_one_pow(betti(q - 1)));
        match &p.mu[q - 1] {
            Some(m) if *m != want => {
                return Err(Error::Inconsistent(format!(
                    "mu_{q} = {} conflicts with its dual {}",
                    m.to_laurent(),
                    want.to_laurent()
                )))
            }
            _ => mu.push(want),
        }
    }
    let mut nu = Vec::with_capacity(n.saturating_sub(3));
    for i in 1..=n - 3 {
        let j = n - 2 - i;
        let dual = match &p.nu[j - 1] {
            Some(v) => Some(strip(v, betti(j), &format!("nu_{j}"))?.conjugate().mul(&t_minus_one_pow(betti(i)))),
            None => None,
        };
        let v = match (&p.nu[i - 1], dual) {
            (Some(v), Some(d)) if *v != d => {
                return Err(Error::Inconsistent(format!(
                    "nu_{i} = {} conflicts with its dual {}",
                    v.to_laurent(),
                    d.to_laurent()
                )))
            }
            (Some(v), _) => v.clone(),
            (None, Some(d)) => d,
            (None, None) => return Err(Error::Inconsistent(format!("neither nu_{i} nor nu_{j} is given"))),
        };
        nu.push(v);
    }
    KnotDatum::new(n, p.kind, p.sigma_reduced_betti.clone(), nu, lambda, mu)
}
