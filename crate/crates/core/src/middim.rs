//! Middle-dimension data for `n = 2q + 1`: the matrix
//! `M(t) = ε (R^-1)' τ R t - τ'` with `ε = (-1)^(q+1)`, its determinant
//! `c(t)`, and the pairing matrix `N(t) = (t - 1) D(t)^-1` where
//! `D(t) = (R^-1)' τ - ε t τ' R^-1`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::laurent::{normalize_primitive, rat, similar, LaurentPoly, PrimitivePoly, RationalFunction, Ring};
use crate::module_algebra::{is_type_k, module_from_presentation, GammaMatrix};
use crate::report::Report;

type QMatrix = Vec<Vec<BigRational>>;

fn q_of(m: &[Vec<i64>]) -> QMatrix {
    m.iter().map(|r| r.iter().map(|&v| rat(v)).collect()).collect()
}

fn q_mul(a: &QMatrix, b: &QMatrix) -> QMatrix {
    let n = b.first().map_or(0, |r| r.len());
    a.iter()
        .map(|row| {
            (0..n)
                .map(|j| row.iter().zip(b).fold(BigRational::zero(), |acc, (x, br)| acc + x * &br[j]))
                .collect()
        })
        .collect()
}

fn q_transpose(a: &QMatrix) -> QMatrix {
    let n = a.first().map_or(0, |r| r.len());
    (0..n).map(|j| a.iter().map(|r| r[j].clone()).collect()).collect()
}

/// Gauss-Jordan inverse; `None` when singular.
fn q_inverse(a: &QMatrix) -> Option<QMatrix> {
    let n = a.len();
    let mut m: Vec<Vec<BigRational>> = a
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = r.clone();
            row.extend((0..n).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }));
            row
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&i| !m[i][c].is_zero())?;
        m.swap(p, c);
        let inv = m[c][c].recip();
        for x in &mut m[c] {
            *x *= &inv;
        }
        for i in 0..n {
            if i != c && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                let pivot_row = m[c].clone();
                for (x, y) in m[i].iter_mut().zip(&pivot_row) {
                    *x -= &f * y;
                }
            }
        }
    }
    Some(m.into_iter().map(|r| r[n..].to_vec()).collect())
}

fn q_det(a: &QMatrix) -> BigRational {
    let n = a.len();
    let mut m = a.clone();
    let mut det = BigRational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !m[i][c].is_zero()) else {
            return BigRational::zero();
        };
        if p != c {
            m.swap(p, c);
            det = -det;
        }
        det *= &m[c][c];
        for i in c + 1..n {
            let f = &m[i][c] / &m[c][c];
            let pivot_row = m[c].clone();
            for (x, y) in m[i].iter_mut().zip(&pivot_row) {
                *x -= &f * y;
            }
        }
    }
    det
}

/// Integer matrices `τ`, `R` and the parity `q` of a middle-dimension
/// presentation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairingPresentation {
    tau: Vec<Vec<i64>>,
    r: Vec<Vec<i64>>,
    q: u32,
}

impl PairingPresentation {
    pub fn new(tau: Vec<Vec<i64>>, r: Vec<Vec<i64>>, q: u32) -> Result<Self> {
        let w = tau.len();
        if tau.iter().any(|row| row.len() != w) {
            return Err(Error::DimensionMismatch("tau is not square".into()));
        }
        if r.len() != w || r.iter().any(|row| row.len() != w) {
            return Err(Error::DimensionMismatch(format!("R must be {w}x{w} like tau")));
        }
        if q == 0 {
            return Err(Error::Invalid("q must be positive".into()));
        }
        let p = Self { tau, r, q };
        if q_det(&q_of(&p.r)).is_zero() {
            return Err(Error::SingularR);
        }
        if !p.a_matrix().iter().flatten().all(|x| x.is_integer()) {
            return Err(Error::NonIntegral);
        }
        Ok(p)
    }

    pub fn tau(&self) -> &[Vec<i64>] {
        &self.tau
    }

    pub fn r(&self) -> &[Vec<i64>] {
        &self.r
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn size(&self) -> usize {
        self.tau.len()
    }

    /// `ε = (-1)^(q+1)`.
    pub fn epsilon(&self) -> i64 {
        if self.q.is_multiple_of(2) {
            -1
        } else {
            1
        }
    }

    pub fn det_r(&self) -> BigInt {
        q_det(&q_of(&self.r)).to_integer()
    }

    fn r_inv(&self) -> QMatrix {
        q_inverse(&q_of(&self.r)).expect("R is nonsingular")
    }

    /// `(R^-1)' τ R`.
    fn a_matrix(&self) -> QMatrix {
        let ri = q_inverse(&q_of(&self.r)).expect("R is nonsingular");
        q_mul(&q_mul(&q_transpose(&ri), &q_of(&self.tau)), &q_of(&self.r))
    }
}

/// `τ = [[a, 0], [1, 1]]`, `R = diag(4a ± 1, 1)`, `q = 2`.
pub fn quadratic_family(a: i64, sign: i64) -> Result<PairingPresentation> {
    if a == 0 {
        return Err(Error::Invalid("a must be nonzero".into()));
    }
    if sign != 1 && sign != -1 {
        return Err(Error::Invalid("sign must be +1 or -1".into()));
    }
    PairingPresentation::new(vec![vec![a, 0], vec![1, 1]], vec![vec![4 * a + sign, 0], vec![0, 1]], 2)
}

fn linear_matrix(c1: &QMatrix, c0: &QMatrix) -> GammaMatrix {
    let entries = c1
        .iter()
        .zip(c0)
        .map(|(r1, r0)| {
            r1.iter()
                .zip(r0)
                .map(|(x1, x0)| LaurentPoly::from_coeffs(0, vec![x0.clone(), x1.clone()]))
                .collect()
        })
        .collect();
    GammaMatrix::new(entries).unwrap()
}

fn scaled(m: &QMatrix, s: i64) -> QMatrix {
    let s = rat(s);
    m.iter().map(|r| r.iter().map(|x| x * &s).collect()).collect()
}

pub fn build_m(p: &PairingPresentation) -> GammaMatrix {
    let a = scaled(&p.a_matrix(), p.epsilon());
    let tt = scaled(&q_transpose(&q_of(&p.tau)), -1);
    linear_matrix(&a, &tt)
}

/// `det[(R^-1)' τ R t - ε τ']`, the other sign convention for `M`.
pub fn alternate_convention_det(p: &PairingPresentation) -> Result<LaurentPoly> {
    let tt = scaled(&q_transpose(&q_of(&p.tau)), -p.epsilon());
    linear_matrix(&p.a_matrix(), &tt).det()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CPolynomial {
    /// `det M(t)` before normalization.
    pub det_m: LaurentPoly,
    pub c: PrimitivePoly,
    /// `det M(1) = ±1`.
    pub knot_valid: bool,
    pub self_reciprocal: bool,
}

pub fn c_polynomial(p: &PairingPresentation) -> Result<CPolynomial> {
    let det_m = build_m(p).det()?;
    if det_m.is_zero() {
        return Err(Error::SingularPresentation);
    }
    let c = normalize_primitive(&det_m)?.0;
    let knot_valid = det_m.evaluate_int(1)?.abs().is_one();
    let self_reciprocal = similar(&det_m, &det_m.reciprocal(), Ring::Lambda);
    Ok(CPolynomial { det_m, c, knot_valid, self_reciprocal })
}

/// Square matrix over `Q(t)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalFunctionMatrix {
    entries: Vec<Vec<RationalFunction>>,
}

impl RationalFunctionMatrix {
    pub fn new(entries: Vec<Vec<RationalFunction>>) -> Self {
        Self { entries }
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, i: usize, j: usize) -> &RationalFunction {
        &self.entries[i][j]
    }

    /// `t -> t^-1` entrywise, then transpose.
    pub fn conjugate_transpose(&self) -> Self {
        let n = self.size();
        Self::new((0..n).map(|i| (0..n).map(|j| self.entries[j][i].conjugate()).collect()).collect())
    }

    pub fn scale(&self, f: &RationalFunction) -> Self {
        Self::new(self.entries.iter().map(|r| r.iter().map(|x| x.mul(f)).collect()).collect())
    }

    pub fn inverse(&self) -> Option<Self> {
        let n = self.size();
        let mut m: Vec<Vec<RationalFunction>> = self
            .entries
            .iter()
            .enumerate()
            .map(|(i, r)| {
                let mut row = r.clone();
                row.extend((0..n).map(|j| if i == j { RationalFunction::one() } else { RationalFunction::zero() }));
                row
            })
            .collect();
        for c in 0..n {
            let p = (c..n).find(|&i| !m[i][c].is_zero())?;
            m.swap(p, c);
            let inv = m[c][c].inv().ok()?;
            for x in &mut m[c] {
                *x = x.mul(&inv);
            }
            for i in 0..n {
                if i != c && !m[i][c].is_zero() {
                    let f = m[i][c].clone();
                    let pivot_row = m[c].clone();
                    for (x, y) in m[i].iter_mut().zip(&pivot_row) {
                        *x = x.sub(&f.mul(y));
                    }
                }
            }
        }
        Some(Self::new(m.into_iter().map(|r| r[n..].to_vec()).collect()))
    }

    pub fn det(&self) -> RationalFunction {
        let n = self.size();
        let mut m = self.entries.clone();
        let mut det = RationalFunction::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m[i][c].is_zero()) else {
                return RationalFunction::zero();
            };
            if p != c {
                m.swap(p, c);
                det = det.neg();
            }
            det = det.mul(&m[c][c]);
            let inv = m[c][c].inv().unwrap();
            for i in c + 1..n {
                let f = m[i][c].mul(&inv);
                let pivot_row = m[c].clone();
                for (x, y) in m[i].iter_mut().zip(&pivot_row) {
                    *x = x.sub(&f.mul(y));
                }
            }
        }
        det
    }
}

/// `D(t) = (R^-1)' τ - ε t τ' R^-1`.
fn d_matrix(p: &PairingPresentation) -> RationalFunctionMatrix {
    let ri = p.r_inv();
    let c0 = q_mul(&q_transpose(&ri), &q_of(&p.tau));
    let c1 = scaled(&q_mul(&q_transpose(&q_of(&p.tau)), &ri), -p.epsilon());
    let g = linear_matrix(&c1, &c0);
    let n = p.size();
    RationalFunctionMatrix::new(
        (0..n)
            .map(|i| (0..n).map(|j| RationalFunction::from_poly(g.get(i, j).clone())).collect())
            .collect(),
    )
}

pub fn pairing_matrix(p: &PairingPresentation) -> Result<RationalFunctionMatrix> {
    let d = d_matrix(p);
    let inv = d
        .inverse()
        .ok_or_else(|| Error::Inconsistent("D(t) is singular".into()))?;
    Ok(inv.scale(&RationalFunction::from_poly(LaurentPoly::t_minus_one())))
}

/// `N = ε N̄'` entrywise.
pub fn is_hermitian(p: &PairingPresentation, n: &RationalFunctionMatrix) -> bool {
    let eps = RationalFunction::from_poly(LaurentPoly::constant(rat(p.epsilon())));
    *n == n.conjugate_transpose().scale(&eps)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Discriminant {
    /// `det N(t)`, computed from `N` directly.
    pub det_n: RationalFunction,
    /// `(t - 1)^|τ| det R / det M(t)`.
    pub predicted: RationalFunction,
    /// The two agree up to `±t^k`.
    pub identity_holds: bool,
}

pub fn discriminant(p: &PairingPresentation) -> Result<Discriminant> {
    let n = pairing_matrix(p)?;
    let det_n = n.det();
    let cp = c_polynomial(p)?;
    let num = LaurentPoly::t_minus_one().pow(p.size() as u32).scale(&BigRational::from_integer(p.det_r()));
    let predicted = RationalFunction::new(num, cp.det_m)?;
    let ratio = det_n.div(&predicted)?;
    let identity_holds = ratio.is_polynomial() && ratio.numerator().is_lambda_unit();
    Ok(Discriminant { det_n, predicted, identity_holds })
}

/// Checks that `(τ, R)` witnesses `c` as a middle-dimension polynomial.
pub fn verify_middim_witness(c: &PrimitivePoly, p: &PairingPresentation) -> Report {
    let mut rep = Report::new("middle-dimension witness");
    if p.size() == 0 {
        rep.check("witness.similar", c.is_one(), "empty presentation has c = 1");
        return rep;
    }
    let cp = match c_polynomial(p) {
        Ok(cp) => cp,
        Err(e) => {
            rep.check("witness.presentation", false, e.to_string());
            return rep;
        }
    };
    rep.check(
        "witness.similar",
        similar(&c.to_laurent(), &cp.det_m, Ring::Lambda),
        format!("det M(t) = {}", cp.det_m),
    );
    let at_one = cp.det_m.evaluate_int(1).unwrap();
    rep.check("witness.unit-at-one", cp.knot_valid, format!("det M(1) = {at_one}"));
    rep.check("witness.type-k", is_type_k(&module_from_presentation(&build_m(p))), "");
    match discriminant(p) {
        Ok(d) => {
            rep.check("witness.discriminant", d.identity_holds, format!("det N = {}", d.det_n));
        }
        Err(e) => {
            rep.check("witness.discriminant", false, e.to_string());
        }
    }
    rep
}
