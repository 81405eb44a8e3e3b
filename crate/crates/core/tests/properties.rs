mod common;

use common::*;
use knotpoly::constructions::{frame_spin, knot_sum, suspension, zeeman_twist_spin, BettiProfile, InvariantPolicy};
use knotpoly::datum::{
    check_division_corollary, complete_by_duality, derive_subpolynomials, validate_disk_knot,
    validate_singular_sphere, KnotDatum, PartialDatum,
};
use knotpoly::io::{parse_datum, serialize_datum};
use knotpoly::laurent::{factor_rational, gcd, is_reciprocal_square, primitive, similar, LaurentPoly, Ring};
use knotpoly::module_algebra::{
    associated_polynomial, direct_sum, module_from_presentation, primary_decomposition, q_dimension, smith_normal_form,
    tensor_product, torsion_product, GammaMatrix, TorsionModule,
};
use knotpoly::report::Report;
use proptest::prelude::*;

fn poly() -> impl Strategy<Value = LaurentPoly> {
    (-3i64..=3, prop::collection::vec(-5i64..=5, 0..5)).prop_map(|(lo, c)| LaurentPoly::from_ints(lo, &c))
}

fn nonzero_poly() -> impl Strategy<Value = LaurentPoly> {
    poly().prop_filter("nonzero", |p| !p.is_zero())
}

fn validate_any(d: &KnotDatum) -> Report {
    if d.kind.is_disk_like() {
        validate_disk_knot(d, None).unwrap()
    } else {
        validate_singular_sphere(d).unwrap()
    }
}

fn profile(k: u8) -> BettiProfile {
    match k % 5 {
        0 => BettiProfile::sphere(1),
        1 => BettiProfile::sphere(2),
        2 => BettiProfile::torus(2),
        3 => BettiProfile::sphere(1).product(&BettiProfile::sphere(2)),
        _ => BettiProfile::sphere(3),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_laws(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn division_algorithm(a in poly(), d in nonzero_poly()) {
        let (q, r) = a.div_rem(&d).unwrap();
        prop_assert_eq!(&(&q * &d) + &r, a);
        if !r.is_zero() {
            prop_assert!(r.width().unwrap() < d.width().unwrap());
        }
    }

    #[test]
    fn gcd_divides_both(a in nonzero_poly(), b in nonzero_poly(), c in nonzero_poly()) {
        let g = gcd(&a, &b).unwrap().to_laurent();
        prop_assert!(g.divides(&a) && g.divides(&b));
        let gc = gcd(&(&a * &c), &(&b * &c)).unwrap().to_laurent();
        prop_assert!(c.divides(&gc));
    }

    #[test]
    fn primitive_is_canonical(p in nonzero_poly(), k in -4i64..=4, s in prop::sample::select(vec![-3i64, -1, 2, 5])) {
        let moved = p.shift(k).scale(&knotpoly::laurent::rat(s));
        prop_assert_eq!(primitive(&moved).unwrap(), primitive(&p).unwrap());
        prop_assert!(similar(&p, &moved, Ring::Gamma));
    }

    #[test]
    fn conjugation(a in poly(), b in poly()) {
        prop_assert_eq!(a.reciprocal().reciprocal(), a.clone());
        prop_assert_eq!((&a * &b).reciprocal(), &a.reciprocal() * &b.reciprocal());
    }

    #[test]
    fn factors_multiply_back(seed in any::<u64>()) {
        let mut r = rng(seed);
        let p = (0..3).fold(pp(&[1]), |acc, _| acc.mul(&maybe_poly(&mut r)));
        let f = factor_rational(&p, 1 << 16).unwrap();
        let prod = f.iter().fold(pp(&[1]), |acc, x| acc.mul(x));
        prop_assert_eq!(prod, p);
    }

    #[test]
    fn norm_is_reciprocal_square(seed in any::<u64>()) {
        let mut r = rng(seed);
        let p = maybe_poly(&mut r).mul(&maybe_poly(&mut r));
        let rs = is_reciprocal_square(&p.mul(&p.conjugate()), None, 1 << 16).unwrap();
        prop_assert!(rs.holds);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn smith_form(entries in prop::collection::vec(poly(), 9)) {
        let rows: Vec<Vec<LaurentPoly>> = entries.chunks(3).map(|c| c.to_vec()).collect();
        let a = GammaMatrix::new(rows).unwrap();
        let s = smith_normal_form(&a);
        prop_assert_eq!(s.u.mul(&a).unwrap().mul(&s.v).unwrap(), s.d.clone());
        prop_assert!(s.u.det().unwrap().is_gamma_unit());
        prop_assert!(s.v.det().unwrap().is_gamma_unit());
    }

    #[test]
    fn subpolynomials_round_trip(seed in any::<u64>(), n in 3usize..=8) {
        let mut r = rng(seed);
        let s = random_subpolys(&mut r, n);
        let d = assemble(n, knotpoly::datum::KnotKind::LocallyFlatDisk, &s);
        prop_assert!(check_division_corollary(&d));
        let got = derive_subpolynomials(&d).unwrap().subs.unwrap();
        prop_assert_eq!(got, s);
    }

    #[test]
    fn dual_completion_recovers_seed(seed in any::<u64>()) {
        let mut r = rng(seed);
        let (d, _) = random_disk_seed(&mut r, 8);
        let half = (d.n - 2) / 2;
        let part = PartialDatum::from_lower(d.n, d.kind, vec![], d.lambda.clone(), d.nu[..half.min(d.nu.len())].to_vec());
        let done = complete_by_duality(&part).unwrap();
        prop_assert_eq!(done.mu, d.mu);
        prop_assert_eq!(done.nu, d.nu);
    }

    #[test]
    fn random_seeds_validate(seed in any::<u64>()) {
        let mut r = rng(seed);
        let (d, _) = random_disk_seed(&mut r, 8);
        let rep = validate_disk_knot(&d, None).unwrap();
        prop_assert!(rep.passed(), "{}", rep);
    }

    #[test]
    fn point_spin_is_identity(seed in any::<u64>()) {
        let mut r = rng(seed);
        let (d, _) = random_disk_seed(&mut r, 7);
        let out = frame_spin(&d, &BettiProfile::point()).unwrap();
        prop_assert_eq!(out.lambda, d.lambda);
        prop_assert_eq!(out.mu, d.mu);
        prop_assert_eq!(out.nu, d.nu);
    }

    #[test]
    fn constructions_are_closed(seed in any::<u64>(), k in any::<u8>()) {
        let mut r = rng(seed);
        let (d, _) = random_disk_seed(&mut r, 6);
        let spun = frame_spin(&d, &profile(k)).unwrap();
        let rep = validate_singular_sphere(&spun).unwrap();
        prop_assert!(rep.passed(), "spin: {}", rep);

        let susp = suspension(&d).unwrap();
        let rep = validate_singular_sphere(&susp).unwrap();
        prop_assert!(rep.passed(), "suspension: {}", rep);

        // spinning a singular knot again
        let twice = frame_spin(&susp, &profile(k / 5)).unwrap();
        let rep = validate_singular_sphere(&twice).unwrap();
        prop_assert!(rep.passed(), "spin of suspension: {}", rep);

        let z = zeeman_twist_spin(&d, i64::from(k % 7), InvariantPolicy::CoarsenToCyclic).unwrap();
        let rep = validate_singular_sphere(&z.datum).unwrap();
        prop_assert!(rep.passed(), "zeeman: {}", rep);
    }

    #[test]
    fn knot_sums_are_closed(seed in any::<u64>()) {
        let mut r = rng(seed);
        let (d1, _) = random_disk_seed(&mut r, 6);
        let n = d1.n;
        let d2 = random_dual_subpolys(&mut r, n);
        let d2 = assemble(n, knotpoly::datum::KnotKind::LocallyFlatDisk, &d2);
        let disk = knot_sum(&d1, &d2).unwrap();
        prop_assert!(disk.kind.is_disk_like());
        let rep = validate_any(&disk);
        prop_assert!(rep.passed(), "disk sum: {}", rep);

        // a singular summand of the same dimension
        if n >= 4 {
            let (small, _) = loop {
                let s = random_disk_seed(&mut r, n - 1);
                if s.0.n == n - 1 { break s; }
            };
            let sing = suspension(&small).unwrap();
            let mixed = knot_sum(&d1, &sing).unwrap();
            let rep = validate_any(&mixed);
            prop_assert!(rep.passed(), "mixed sum: {}", rep);
            let both = knot_sum(&sing, &sing).unwrap();
            let rep = validate_any(&both);
            prop_assert!(rep.passed(), "singular sum: {}", rep);
        }
    }

    #[test]
    fn serialization_round_trip(seed in any::<u64>(), k in any::<u8>()) {
        let mut r = rng(seed);
        let (d, _) = random_disk_seed(&mut r, 6);
        for datum in [d.clone(), frame_spin(&d, &profile(k)).unwrap()] {
            let text = serialize_datum(&datum);
            let back = parse_datum(&text).unwrap();
            prop_assert!(back.warnings.is_empty());
            prop_assert_eq!(back.value.lambda, datum.lambda);
            prop_assert_eq!(back.value.mu, datum.mu);
            prop_assert_eq!(back.value.nu, datum.nu);
            prop_assert_eq!(back.value.kind, datum.kind);
            prop_assert_eq!(back.value.sigma_reduced_betti, datum.sigma_reduced_betti);
        }
    }
}

fn elementary(size: usize, i: usize, j: usize, p: LaurentPoly) -> GammaMatrix {
    let mut e = GammaMatrix::identity(size);
    e.set(i, j, p);
    e
}

fn torsion_module() -> impl Strategy<Value = TorsionModule> {
    (0usize..=1, prop::collection::vec(0usize..8, 0..3))
        .prop_map(|(free, idx)| TorsionModule::new(free, idx.into_iter().map(|i| pool()[i].clone()).collect()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn gauss_lemma(a in nonzero_poly(), b in nonzero_poly()) {
        let pa = primitive(&a).unwrap();
        let pb = primitive(&b).unwrap();
        prop_assert_eq!(primitive(&(&a * &b)).unwrap(), pa.mul(&pb));
    }

    #[test]
    fn width_is_additive(a in nonzero_poly(), b in nonzero_poly()) {
        prop_assert_eq!((&a * &b).width().unwrap(), a.width().unwrap() + b.width().unwrap());
        prop_assert_eq!(a.width().unwrap() == 0, a.is_gamma_unit());
    }

    #[test]
    fn presentation_invariant_under_unimodular(
        entries in prop::collection::vec(poly(), 4),
        p in poly(),
        q in poly(),
        swap in any::<bool>(),
    ) {
        let a = GammaMatrix::new(entries.chunks(2).map(|c| c.to_vec()).collect()).unwrap();
        let (i, j) = if swap { (0, 1) } else { (1, 0) };
        let left = elementary(2, i, j, p);
        let right = elementary(2, j, i, q);
        let b = left.mul(&a).unwrap().mul(&right).unwrap();
        prop_assert_eq!(module_from_presentation(&a), module_from_presentation(&b));
    }

    #[test]
    fn module_bookkeeping(a in torsion_module(), b in torsion_module()) {
        let ta = a.torsion_part();
        let tb = b.torsion_part();
        let s = direct_sum(&ta, &tb);
        prop_assert_eq!(q_dimension(&s).unwrap(), q_dimension(&ta).unwrap() + q_dimension(&tb).unwrap());
        prop_assert_eq!(
            associated_polynomial(&s).unwrap(),
            associated_polynomial(&ta).unwrap().mul(&associated_polynomial(&tb).unwrap())
        );
        let parts = primary_decomposition(&ta, 1 << 16).unwrap();
        let total: usize = parts.values().map(|m| q_dimension(m).unwrap()).sum();
        prop_assert_eq!(total, q_dimension(&ta).unwrap());
        prop_assert_eq!(tensor_product(&a, &b), tensor_product(&b, &a));
        prop_assert_eq!(torsion_product(&a, &b), torsion_product(&b, &a));
    }
}
