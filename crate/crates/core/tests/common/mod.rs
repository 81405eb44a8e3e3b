#![allow(dead_code, clippy::needless_range_loop)]

use knotpoly::datum::{KnotDatum, KnotKind, Subpolynomials};
use knotpoly::laurent::{LaurentPoly, PrimitivePoly};
use knotpoly::middim::PairingPresentation;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand::SeedableRng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn pp(c: &[i64]) -> PrimitivePoly {
    PrimitivePoly::from_ints(c).unwrap()
}

/// Polynomials taking the value ±1 at t = 1.
pub fn pool() -> Vec<PrimitivePoly> {
    vec![
        pp(&[-2, 1]),
        pp(&[-1, 2]),
        pp(&[1, -1, 1]),
        pp(&[1, -3, 1]),
        pp(&[2, -3, 2]),
        pp(&[-2, 3]),
        pp(&[-1, 1, 1]),
        pp(&[1, -1, 0, 1]),
    ]
}

/// Self-reciprocal members, usable as a middle `c_q`.
pub fn symmetric_pool() -> Vec<PrimitivePoly> {
    vec![PrimitivePoly::one(), pp(&[1, -1, 1]), pp(&[1, -3, 1]), pp(&[2, -5, 2]), pp(&[2, -3, 2])]
}

/// Random pool member, or 1 with probability about one half.
pub fn maybe_poly(r: &mut ChaCha8Rng) -> PrimitivePoly {
    if r.gen_bool(0.5) {
        PrimitivePoly::one()
    } else {
        pool().choose(r).unwrap().clone()
    }
}

/// `ν_i = a_i b_i`, `λ_i = b_i c_i`, `μ_i = c_i a_(i-1)`.
pub fn assemble(n: usize, kind: KnotKind, s: &Subpolynomials) -> KnotDatum {
    let n = n as i64;
    let nu = (1..=n - 3).map(|i| s.a(i).mul(&s.b(i))).collect();
    let lambda = (1..=n - 2).map(|i| s.b(i).mul(&s.c(i))).collect();
    let mu = (1..=n - 2).map(|i| s.c(i).mul(&s.a(i - 1))).collect();
    KnotDatum::new(n as usize, kind, Vec::new(), nu, lambda, mu).unwrap()
}

/// Unconstrained subpolynomials with `a_0 = b_(n-2) = 1`.
pub fn random_subpolys(r: &mut ChaCha8Rng, n: usize) -> Subpolynomials {
    let mut a: Vec<_> = (0..n - 2).map(|_| maybe_poly(r)).collect();
    let mut b: Vec<_> = (0..n - 2).map(|_| maybe_poly(r)).collect();
    let c = (0..n - 2).map(|_| maybe_poly(r)).collect();
    a[0] = PrimitivePoly::one();
    b[n - 3] = PrimitivePoly::one();
    Subpolynomials { a, b, c }
}

/// Subpolynomials satisfying the disk knot dualities.
pub fn random_dual_subpolys(r: &mut ChaCha8Rng, n: usize) -> Subpolynomials {
    let m = n - 2;
    let one = PrimitivePoly::one();
    let mut c = vec![one.clone(); m];
    for i in 1..=m {
        let j = n - 1 - i;
        if i < j {
            c[i - 1] = maybe_poly(r);
            c[j - 1] = c[i - 1].conjugate();
        } else if i == j {
            c[i - 1] = symmetric_pool().choose(r).unwrap().clone();
        }
    }
    let mut b = vec![one.clone(); m];
    for bi in b.iter_mut().take(m - 1) {
        *bi = maybe_poly(r);
    }
    // a_i = conj(b_(n-2-i))
    let a = (0..m).map(|i| b[n - 3 - i].conjugate()).collect();
    Subpolynomials { a, b, c }
}

/// A valid locally flat disk datum with `3 <= n <= max_n`, together with
/// the subpolynomials it was built from.
pub fn random_disk_seed(r: &mut ChaCha8Rng, max_n: usize) -> (KnotDatum, Subpolynomials) {
    let n = r.gen_range(3..=max_n);
    let s = random_dual_subpolys(r, n);
    (assemble(n, KnotKind::LocallyFlatDisk, &s), s)
}

/// Integer matrix of determinant ±1 from random elementary operations.
pub fn random_unimodular(r: &mut ChaCha8Rng, size: usize) -> Vec<Vec<i64>> {
    let mut m: Vec<Vec<i64>> = (0..size).map(|i| (0..size).map(|j| i64::from(i == j)).collect()).collect();
    for _ in 0..size * 3 {
        if size < 2 {
            break;
        }
        let i = r.gen_range(0..size);
        let mut j = r.gen_range(0..size);
        while j == i {
            j = r.gen_range(0..size);
        }
        let k = r.gen_range(-2..=2);
        for col in 0..size {
            m[i][col] += k * m[j][col];
        }
    }
    if r.gen_bool(0.5) {
        for x in m[0].iter_mut() {
            *x = -*x;
        }
    }
    m
}

/// Valid presentation with nonzero `det M`, sizes `1..=4`.
pub fn random_presentation(r: &mut ChaCha8Rng) -> PairingPresentation {
    loop {
        let size = r.gen_range(1..=4);
        let q = if r.gen_bool(0.5) { 2 } else { 3 };
        let tau: Vec<Vec<i64>> = (0..size).map(|_| (0..size).map(|_| r.gen_range(-2..=2)).collect()).collect();
        let rm = random_unimodular(r, size);
        let Ok(p) = PairingPresentation::new(tau, rm, q) else { continue };
        if knotpoly::middim::c_polynomial(&p).is_ok() {
            return p;
        }
    }
}

// ---- exact rational matrices, used as an independent oracle ----

pub type Q = BigRational;

pub fn q(v: i64) -> Q {
    BigRational::from_integer(BigInt::from(v))
}

pub fn qmat(m: &[Vec<i64>]) -> Vec<Vec<Q>> {
    m.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect()
}

pub fn qmul(a: &[Vec<Q>], b: &[Vec<Q>]) -> Vec<Vec<Q>> {
    let n = a.len();
    let m = b[0].len();
    (0..n)
        .map(|i| (0..m).map(|j| (0..b.len()).fold(Q::zero(), |acc, k| acc + &a[i][k] * &b[k][j])).collect())
        .collect()
}

pub fn qtranspose(a: &[Vec<Q>]) -> Vec<Vec<Q>> {
    (0..a[0].len()).map(|j| a.iter().map(|r| r[j].clone()).collect()).collect()
}

/// Gauss-Jordan inverse; `None` when singular.
pub fn qinverse(a: &[Vec<Q>]) -> Option<Vec<Vec<Q>>> {
    let n = a.len();
    let mut m: Vec<Vec<Q>> = a
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = r.clone();
            row.extend((0..n).map(|j| if i == j { Q::one() } else { Q::zero() }));
            row
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, piv);
        let inv = m[col][col].recip();
        for x in m[col].iter_mut() {
            *x = &*x * &inv;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                let pivot_row = m[col].clone();
                for (x, p) in m[r].iter_mut().zip(pivot_row) {
                    *x = &*x - &f * p;
                }
            }
        }
    }
    Some(m.into_iter().map(|r| r[n..].to_vec()).collect())
}

pub fn qdet(a: &[Vec<Q>]) -> Q {
    let n = a.len();
    let mut m = a.to_vec();
    let mut det = Q::one();
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return Q::zero();
        };
        if piv != col {
            m.swap(col, piv);
            det = -det;
        }
        det = &det * &m[col][col];
        for r in col + 1..n {
            let f = &m[r][col] / &m[col][col];
            for c in col..n {
                let v = &f * &m[col][c];
                m[r][c] = &m[r][c] - v;
            }
        }
    }
    det
}

pub fn qscale(a: &[Vec<Q>], s: &Q) -> Vec<Vec<Q>> {
    a.iter().map(|r| r.iter().map(|x| x * s).collect()).collect()
}

pub fn qsub(a: &[Vec<Q>], b: &[Vec<Q>]) -> Vec<Vec<Q>> {
    a.iter().zip(b).map(|(x, y)| x.iter().zip(y).map(|(p, q)| p - q).collect()).collect()
}

/// `N(x) = (x - 1) D(x)^-1` with `D(x) = (R^-1)' τ - ε x τ' R^-1`,
/// evaluated at a rational point.
pub fn pairing_at(p: &PairingPresentation, x: &Q) -> Option<Vec<Vec<Q>>> {
    let tau = qmat(p.tau());
    let rinv = qinverse(&qmat(p.r()))?;
    let eps = q(p.epsilon());
    let left = qmul(&qtranspose(&rinv), &tau);
    let right = qscale(&qmul(&qtranspose(&tau), &rinv), &(&eps * x));
    let d = qsub(&left, &right);
    Some(qscale(&qinverse(&d)?, &(x - q(1))))
}

/// `det M(x)` with `M = ε (R^-1)' τ R x - τ'`, straight from the matrices.
pub fn det_m_at(p: &PairingPresentation, x: &Q) -> Q {
    let tau = qmat(p.tau());
    let r = qmat(p.r());
    let rinv = qinverse(&r).unwrap();
    let a = qmul(&qmul(&qtranspose(&rinv), &tau), &r);
    let m = qsub(&qscale(&a, &(q(p.epsilon()) * x)), &qtranspose(&tau));
    qdet(&m)
}

pub fn eval(p: &LaurentPoly, x: &Q) -> Q {
    p.evaluate(x).unwrap()
}
