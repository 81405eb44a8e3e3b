//! Alexander polynomial data of a knotted `S^(n-2) ⊂ S^n` (or a disk knot)
//! and the condition systems they must satisfy.

mod duality;
mod subpoly;
mod validate;

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::laurent::PrimitivePoly;
use crate::module_algebra::TorsionModule;

pub use duality::{complete_by_duality, PartialDatum};
pub use subpoly::{derive_subpolynomials, interleaved_sequence, sequence_term_name};
pub use validate::{
    check_division_corollary, levine_validate, top_divides_dual, validate_disk_knot, validate_singular_sphere,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum KnotKind {
    LocallyFlatDisk,
    PointSingularSphere,
    GeneralSingularSphere,
}

impl KnotKind {
    pub fn as_str(self) -> &'static str {
        match self {
            KnotKind::LocallyFlatDisk => "locally_flat_disk",
            KnotKind::PointSingularSphere => "point_singular_sphere",
            KnotKind::GeneralSingularSphere => "general_singular_sphere",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "locally_flat_disk" => Some(KnotKind::LocallyFlatDisk),
            "point_singular_sphere" => Some(KnotKind::PointSingularSphere),
            "general_singular_sphere" => Some(KnotKind::GeneralSingularSphere),
            _ => None,
        }
    }

    /// Disk knots and sphere knots with a point singularity carry the same
    /// data.
    pub fn is_disk_like(self) -> bool {
        !matches!(self, KnotKind::GeneralSingularSphere)
    }
}

impl fmt::Display for KnotKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Subpolynomials with `ν_i ~ a_i b_i`, `λ_i ~ b_i c_i`, `μ_i ~ c_i a_(i-1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subpolynomials {
    /// `a_0 ..= a_(n-3)`
    pub a: Vec<PrimitivePoly>,
    /// `b_1 ..= b_(n-2)`
    pub b: Vec<PrimitivePoly>,
    /// `c_1 ..= c_(n-2)`
    pub c: Vec<PrimitivePoly>,
}

fn at(v: &[PrimitivePoly], i: i64, first: i64) -> PrimitivePoly {
    let k = i - first;
    if k < 0 || k as usize >= v.len() {
        PrimitivePoly::one()
    } else {
        v[k as usize].clone()
    }
}

impl Subpolynomials {
    pub fn a(&self, i: i64) -> PrimitivePoly {
        at(&self.a, i, 0)
    }

    pub fn b(&self, i: i64) -> PrimitivePoly {
        at(&self.b, i, 1)
    }

    pub fn c(&self, i: i64) -> PrimitivePoly {
        at(&self.c, i, 1)
    }
}

/// Per-degree invariant modules behind the polynomials, when known.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantModules {
    pub lambda: Vec<TorsionModule>,
    pub mu: Vec<TorsionModule>,
    pub nu: Vec<TorsionModule>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KnotDatum {
    pub n: usize,
    pub kind: KnotKind,
    /// Reduced Betti numbers `B̃_0, B̃_1, ...` of the singular set.
    pub sigma_reduced_betti: Vec<usize>,
    /// `ν_1 ..= ν_(n-3)`
    pub nu: Vec<PrimitivePoly>,
    /// `λ_1 ..= λ_(n-2)`
    pub lambda: Vec<PrimitivePoly>,
    /// `μ_1 ..= μ_(n-2)`
    pub mu: Vec<PrimitivePoly>,
    pub subs: Option<Subpolynomials>,
    pub invariants: Option<InvariantModules>,
}

impl KnotDatum {
    pub fn new(
        n: usize,
        kind: KnotKind,
        sigma_reduced_betti: Vec<usize>,
        nu: Vec<PrimitivePoly>,
        lambda: Vec<PrimitivePoly>,
        mu: Vec<PrimitivePoly>,
    ) -> Result<Self> {
        let d = Self {
            n,
            kind,
            sigma_reduced_betti,
            nu,
            lambda,
            mu,
            subs: None,
            invariants: None,
        };
        d.check_shape()?;
        Ok(d)
    }

    /// All polynomials 1.
    pub fn trivial(n: usize, kind: KnotKind) -> Result<Self> {
        let one = PrimitivePoly::one();
        let m = n.saturating_sub(2);
        Self::new(n, kind, Vec::new(), vec![one.clone(); n.saturating_sub(3)], vec![one.clone(); m], vec![one; m])
    }

    pub fn check_shape(&self) -> Result<()> {
        let n = self.n;
        if n < 3 {
            return Err(Error::MalformedDatum(format!("n = {n}, need n >= 3")));
        }
        let want = |name: &str, got: usize, want: usize| {
            if got == want {
                Ok(())
            } else {
                Err(Error::MalformedDatum(format!("{name} has {got} entries, expected {want}")))
            }
        };
        want("nu", self.nu.len(), n - 3)?;
        want("lambda", self.lambda.len(), n - 2)?;
        want("mu", self.mu.len(), n - 2)?;
        if self.kind.is_disk_like() && self.sigma_reduced_betti.iter().any(|&b| b != 0) {
            return Err(Error::MalformedDatum(format!(
                "{} requires a point singular set (all reduced Betti numbers 0)",
                self.kind
            )));
        }
        if let Some(s) = &self.subs {
            want("sub_a", s.a.len(), n - 2)?;
            want("sub_b", s.b.len(), n - 2)?;
            want("sub_c", s.c.len(), n - 2)?;
        }
        if let Some(inv) = &self.invariants {
            want("lambda_inv", inv.lambda.len(), n - 2)?;
            want("mu_inv", inv.mu.len(), n - 2)?;
            want("nu_inv", inv.nu.len(), n - 3)?;
        }
        Ok(())
    }

    /// `B̃_i`, zero past the stored list and for negative `i`.
    pub fn betti(&self, i: i64) -> usize {
        if i < 0 {
            return 0;
        }
        self.sigma_reduced_betti.get(i as usize).copied().unwrap_or(0)
    }

    pub fn lambda(&self, i: i64) -> PrimitivePoly {
        at(&self.lambda, i, 1)
    }

    pub fn mu(&self, i: i64) -> PrimitivePoly {
        at(&self.mu, i, 1)
    }

    pub fn nu(&self, j: i64) -> PrimitivePoly {
        at(&self.nu, j, 1)
    }

    pub fn with_kind(mut self, kind: KnotKind) -> Self {
        self.kind = kind;
        self
    }
}

/// Levine's data for a locally flat `S^(n-2) ⊂ S^n`: `p_1 ..= p_(n-2)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SphereKnotPolys {
    pub n: usize,
    pub p: Vec<PrimitivePoly>,
}

impl SphereKnotPolys {
    pub fn new(n: usize, p: Vec<PrimitivePoly>) -> Result<Self> {
        if n < 3 || p.len() != n - 2 {
            return Err(Error::MalformedDatum(format!(
                "sphere knot data for n = {n} needs {} polynomials, got {}",
                n.saturating_sub(2),
                p.len()
            )));
        }
        Ok(Self { n, p })
    }

    pub fn p(&self, i: i64) -> PrimitivePoly {
        at(&self.p, i, 1)
    }
}

pub(crate) fn unit_at_one(p: &PrimitivePoly) -> bool {
    p.evaluate_int(1).abs().is_one()
}

pub(crate) fn t_minus_one_pow(k: usize) -> PrimitivePoly {
    PrimitivePoly::t_minus_one().pow(k as u32)
}

pub(crate) fn is_odd_square(v: &BigInt) -> bool {
    let v = v.abs();
    let r = v.sqrt();
    &r * &r == v && (&v % 2u32) == BigInt::one()
}
