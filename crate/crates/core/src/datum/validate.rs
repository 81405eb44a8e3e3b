use crate::error::{Error, Result};
use crate::laurent::{normalize_symmetric, rat, PrimitivePoly};
use crate::middim::{verify_middim_witness, PairingPresentation};
use crate::report::Report;

use super::{derive_subpolynomials, is_odd_square, t_minus_one_pow, unit_at_one, KnotDatum, SphereKnotPolys};

fn lit(p: &PrimitivePoly) -> String {
    p.to_laurent().to_string()
}

/// First index in `range` where `f` fails, as a report detail.
fn first_failure(range: impl Iterator<Item = i64>, mut f: impl FnMut(i64) -> Option<String>) -> (bool, String) {
    for i in range {
        if let Some(msg) = f(i) {
            return (false, msg);
        }
    }
    (true, String::new())
}

fn odd_square_detail(c: &PrimitivePoly) -> (Option<bool>, String) {
    match normalize_symmetric(c) {
        Ok(sym) => {
            let v = sym.evaluate(&rat(-1)).expect("-1 is nonzero");
            let v = v.to_integer();
            let ok = is_odd_square(&v);
            (Some(ok), format!("|c(-1)| = {}", num_traits::Signed::abs(&v)))
        }
        Err(e) => (None, e.to_string()),
    }
}

/// Checks the disk knot conditions on a locally flat disk or point-singular
/// sphere datum.
///
/// `disk.odd-square` is informational only: it is sufficient for
/// realization but not known to be necessary.
pub fn validate_disk_knot(d: &KnotDatum, witness: Option<&PairingPresentation>) -> Result<Report> {
    d.check_shape()?;
    if !d.kind.is_disk_like() {
        return Err(Error::Invalid(format!(
            "{} datum: use the singular sphere conditions instead",
            d.kind
        )));
    }
    let n = d.n as i64;
    let mut rep = Report::new(format!("{} knot, n = {n}", d.kind));

    let derived = match derive_subpolynomials(d) {
        Ok(x) => x,
        Err(e) => {
            rep.check("disk.factorization", false, e.to_string());
            return Ok(rep);
        }
    };
    let s = derived.subs.expect("derived");
    rep.check("disk.factorization", true, format!("a_0 = {}", lit(&s.a(0))));
    if let Some(given) = &d.subs {
        rep.check(
            "disk.given-subpolynomials",
            *given == s,
            "supplied subpolynomials against the derived ones",
        );
    }

    let (ok, msg) = first_failure(1..=n - 2, |i| {
        let (ci, dual) = (s.c(i), s.c(n - 1 - i).conjugate());
        (ci != dual).then(|| format!("c_{i} = {} but conj(c_{}) = {}", lit(&ci), n - 1 - i, lit(&dual)))
    });
    rep.check("disk.dual-c", ok, msg);

    let (ok, msg) = first_failure(0..=n - 3, |i| {
        let (ai, dual) = (s.a(i), s.b(n - 2 - i).conjugate());
        (ai != dual).then(|| format!("a_{i} = {} but conj(b_{}) = {}", lit(&ai), n - 2 - i, lit(&dual)))
    });
    rep.check("disk.dual-ab", ok, msg);

    let named = (0..=n - 3)
        .map(|i| (format!("a_{i}"), s.a(i)))
        .chain((1..=n - 2).map(|i| (format!("b_{i}"), s.b(i))))
        .chain((1..=n - 2).map(|i| (format!("c_{i}"), s.c(i))));
    let bad = named.into_iter().find(|(_, p)| !unit_at_one(p));
    match bad {
        None => rep.check("disk.unit-at-one", true, ""),
        Some((name, p)) => rep.check("disk.unit-at-one", false, format!("{name}(1) = {}", p.evaluate_int(1))),
    };

    rep.check(
        "disk.top-divides-dual",
        top_divides_dual(d),
        format!("lambda_{} divides conj(lambda_1)", n - 2),
    );

    if n % 2 == 1 {
        let q = (n - 1) / 2;
        let cq = s.c(q);
        if q % 2 == 0 {
            match witness {
                Some(w) => {
                    let sub = verify_middim_witness(&cq, w);
                    rep.check("disk.middle-dimension", sub.passed(), format!("witness for c_{q} = {}", lit(&cq)));
                    rep.extend(sub);
                }
                None => rep.info("disk.middle-dimension", format!("no witness supplied for c_{q} = {}", lit(&cq))),
            }
            let (holds, detail) = odd_square_detail(&cq);
            let verdict = match holds {
                Some(true) => "odd square",
                Some(false) => "not an odd square",
                None => "undetermined",
            };
            rep.info("disk.odd-square", format!("{detail}, {verdict} (sufficient condition only)"));
        } else if witness.is_some() {
            rep.info("disk.middle-dimension", "witness ignored: condition applies only for even q");
        }
    } else if witness.is_some() {
        rep.info("disk.middle-dimension", "witness ignored: n is even");
    }
    Ok(rep)
}

/// Checks the conditions on a sphere knot with singular set of reduced
/// Betti numbers `B̃_i`.
pub fn validate_singular_sphere(d: &KnotDatum) -> Result<Report> {
    d.check_shape()?;
    if d.kind.is_disk_like() {
        return Err(Error::Invalid(format!(
            "{} datum: recast as general_singular_sphere or use the disk conditions",
            d.kind
        )));
    }
    let n = d.n as i64;
    let tp = |i: i64| t_minus_one_pow(d.betti(i));
    let mut rep = Report::new(format!("singular sphere knot, n = {n}, B = {:?}", d.sigma_reduced_betti));

    // Conditions on the polynomials alone first.
    let (ok, msg) = first_failure(1..=n - 2, |q| {
        let p = n - 1 - q;
        let want = d.lambda(p).conjugate().mul(&tp(q - 1));
        (d.mu(q) != want).then(|| format!("mu_{q} = {} but conj(lambda_{p}) (t-1)^{} = {}", lit(&d.mu(q)), d.betti(q - 1), lit(&want)))
    });
    rep.check("sphere.duality", ok, msg);

    let (ok, msg) = first_failure(1..=n - 2, |i| {
        (!unit_at_one(&d.lambda(i))).then(|| format!("lambda_{i}(1) = {}", d.lambda(i).evaluate_int(1)))
    });
    rep.check("sphere.lambda-unit-at-one", ok, msg);

    let mut r = Vec::new();
    let mut boundary = (true, String::new());
    for i in 1..=n - 3 {
        match d.nu(i).to_laurent().divide_exact(&tp(i).to_laurent()) {
            Ok(q) => {
                let q = crate::laurent::primitive(&q)?;
                if boundary.0 && !unit_at_one(&q) {
                    boundary = (false, format!("nu_{i} / (t-1)^{} = {} is not ±1 at t = 1", d.betti(i), lit(&q)));
                }
                r.push(q);
            }
            Err(_) => {
                if boundary.0 {
                    boundary = (false, format!("(t-1)^{} does not divide nu_{i}", d.betti(i)));
                }
                r.push(PrimitivePoly::one());
            }
        }
    }
    if boundary.0 {
        for p in 1..=n - 3 {
            let q = n - 2 - p;
            let (rp, rq) = (&r[(p - 1) as usize], &r[(q - 1) as usize]);
            if *rp != rq.conjugate() {
                boundary = (false, format!("r_{p} = {} but conj(r_{q}) = {}", lit(rp), lit(&rq.conjugate())));
                break;
            }
        }
    }
    rep.check("sphere.boundary", boundary.0, boundary.1);

    let derived = match derive_subpolynomials(d) {
        Ok(x) => x,
        Err(e) => {
            rep.check("sphere.factorization", false, e.to_string());
            return Ok(rep);
        }
    };
    let s = derived.subs.expect("derived");
    rep.check("sphere.factorization", true, format!("a_0 = {}", lit(&s.a(0))));
    if let Some(given) = &d.subs {
        rep.check(
            "sphere.given-subpolynomials",
            *given == s,
            "supplied subpolynomials against the derived ones",
        );
    }

    let (ok, msg) = first_failure(0..=n - 3, |i| {
        let want = s.b(n - 2 - i).conjugate().mul(&tp(i));
        (s.a(i) != want).then(|| format!("a_{i} = {} but conj(b_{}) (t-1)^{} = {}", lit(&s.a(i)), n - 2 - i, d.betti(i), lit(&want)))
    });
    rep.check("sphere.dual-ab", ok, msg);

    let (ok, msg) = first_failure(1..=n - 2, |i| {
        let (ci, dual) = (s.c(i), s.c(n - 1 - i).conjugate());
        (ci != dual).then(|| format!("c_{i} = {} but conj(c_{}) = {}", lit(&ci), n - 1 - i, lit(&dual)))
    });
    rep.check("sphere.dual-c", ok, msg);

    let named = (1..=n - 2)
        .map(|i| (format!("b_{i}"), s.b(i)))
        .chain((1..=n - 2).map(|i| (format!("c_{i}"), s.c(i))));
    let bad = named.into_iter().find(|(_, p)| !unit_at_one(p));
    match bad {
        None => rep.check("sphere.unit-at-one", true, ""),
        Some((name, p)) => rep.check("sphere.unit-at-one", false, format!("{name}(1) = {}", p.evaluate_int(1))),
    };
    Ok(rep)
}

/// Levine's conditions on the polynomials of a locally flat sphere knot.
pub fn levine_validate(s: &SphereKnotPolys) -> Report {
    let n = s.n as i64;
    let mut rep = Report::new(format!("sphere knot polynomials, n = {n}"));
    let (ok, msg) = first_failure(1..=n - 2, |i| {
        let dual = s.p(n - 1 - i).conjugate();
        (s.p(i) != dual).then(|| format!("p_{i} = {} but conj(p_{}) = {}", lit(&s.p(i)), n - 1 - i, lit(&dual)))
    });
    rep.check("levine.duality", ok, msg);
    let (ok, msg) = first_failure(1..=n - 2, |i| {
        (!unit_at_one(&s.p(i))).then(|| format!("p_{i}(1) = {}", s.p(i).evaluate_int(1)))
    });
    rep.check("levine.unit-at-one", ok, msg);
    if n % 2 == 1 && ((n - 1) / 2) % 2 == 0 {
        let q = (n - 1) / 2;
        let (holds, detail) = odd_square_detail(&s.p(q));
        rep.check("levine.odd-square", holds == Some(true), format!("p_{q}: {detail}"));
    }
    rep
}

/// `λ_(n-2)` divides `λ_1(t^-1)`.
pub fn top_divides_dual(d: &KnotDatum) -> bool {
    let n = d.n as i64;
    d.lambda(n - 2).to_laurent().divides(&d.lambda(1).conjugate().to_laurent())
}

/// `Π μ_(2i-1) ν_(2i-1) λ_(2i)` and `Π μ_(2i) ν_(2i) λ_(2i-1)` agree up to
/// a unit.
pub fn check_division_corollary(d: &KnotDatum) -> bool {
    let n = d.n as i64;
    let (mut odd, mut even) = (PrimitivePoly::one(), PrimitivePoly::one());
    for i in 1..=n - 2 {
        let (same, other) = if i % 2 == 1 { (&mut odd, &mut even) } else { (&mut even, &mut odd) };
        *same = same.mul(&d.mu(i)).mul(&d.nu(i));
        *other = other.mul(&d.lambda(i));
    }
    odd == even
}
