use crate::datum::{KnotDatum, KnotKind, Subpolynomials};
use crate::error::{Error, Result};
use crate::laurent::{primitive, PrimitivePoly};

use super::{product_betti, product_of, seed_subpolynomials, sigma_betti, trim_betti, BettiProfile};

fn tm1(k: usize) -> PrimitivePoly {
    PrimitivePoly::t_minus_one().pow(k as u32)
}

/// Frame spin of a knot `S^(m-2) ⊂ S^m` about a framed `M^k`, giving a
/// knot in `S^(m+k)`.
///
/// Every family is a convolution of the seed polynomials with the Betti
/// numbers of `M`; `t - 1` factors come from the Betti numbers of `M × Σ`.
pub fn frame_spin(d: &KnotDatum, m: &BettiProfile) -> Result<KnotDatum> {
    let s = seed_subpolynomials(d)?;
    if m.is_point() {
        let mut out = d.clone();
        out.subs = Some(s);
        return Ok(out);
    }
    let mm = d.n as i64;
    let n = mm + m.k() as i64;
    let sigma = sigma_betti(d);
    let beta = product_betti(m, &sigma);
    let beta_at = |i: i64| beta.get(i as usize).copied().unwrap_or(0);

    // Π_{l=lo}^{hi} f(l)^(B_(i-l))
    let conv = |f: &dyn Fn(i64) -> PrimitivePoly, lo: i64, hi: i64, i: i64| {
        product_of((lo..=hi).map(|l| f(l).pow(m.get(i - l) as u32)))
    };

    let lambda: Vec<_> = (1..=n - 2).map(|i| conv(&|l| d.lambda(l), 1, mm - 2, i)).collect();
    let mu: Vec<_> = (1..=n - 2)
        .map(|i| tm1(m.reduced(i - 1)).mul(&conv(&|l| d.mu(l), 1, mm - 2, i)))
        .collect();
    let nu0 = tm1(sigma[0]);
    let nu_seed = |l: i64| if l == 0 { nu0.clone() } else { d.nu(l) };
    let nu: Vec<_> = (1..=n - 3).map(|i| conv(&nu_seed, 0, mm - 3, i)).collect();

    let b: Vec<_> = (1..=n - 2).map(|i| conv(&|l| s.b(l), 1, mm - 2, i)).collect();
    let c: Vec<_> = (1..=n - 2).map(|i| conv(&|l| s.c(l), 1, mm - 2, i)).collect();
    // a_l with its own (t-1)^(𝔟̃_l) removed; a_(m-2) is 1
    let mut a_bare = Vec::new();
    for l in 1..=mm - 2 {
        let q = s
            .a(l)
            .to_laurent()
            .divide_exact(&tm1(d.betti(l)).to_laurent())
            .map_err(|_| Error::InvalidSeed(format!("a_{l} is not divisible by (t-1)^{}", d.betti(l))))?;
        a_bare.push(primitive(&q)?);
    }
    let a: Vec<_> = (0..=n - 3)
        .map(|i| tm1(beta_at(i)).mul(&conv(&|l| a_bare[(l - 1) as usize].clone(), 1, mm - 2, i)))
        .collect();

    let mut out = KnotDatum::new(
        n as usize,
        KnotKind::GeneralSingularSphere,
        trim_betti(beta),
        nu,
        lambda,
        mu,
    )?;
    out.subs = Some(Subpolynomials { a, b, c });
    Ok(out)
}
