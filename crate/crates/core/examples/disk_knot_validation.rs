//! Checking disk knot data, including a middle-dimension witness.
use knotpoly::constructions::trivial_slice;
use knotpoly::datum::{levine_validate, validate_disk_knot, KnotDatum, KnotKind, SphereKnotPolys};
use knotpoly::laurent::PrimitivePoly;
use knotpoly::middim::{c_polynomial, quadratic_family};

fn main() -> knotpoly::Result<()> {
    let pp = |c: &[i64]| PrimitivePoly::from_ints(c).unwrap();

    // a locally flat sphere knot, then the disk knot cut from it
    let sphere = SphereKnotPolys::new(5, vec![pp(&[-2, 1]), pp(&[2, -5, 2]), pp(&[-1, 2])])?;
    println!("{}", levine_validate(&sphere));
    let disk = trivial_slice(&sphere)?;
    println!("{}", validate_disk_knot(&disk, None)?);

    // n = 9: the middle polynomial t^2 - t + 1 has c(-1) = 3, not a square
    let witness = quadratic_family(1, -1)?;
    let c = c_polynomial(&witness)?.c;
    let one = PrimitivePoly::one();
    let mut lambda = vec![one.clone(); 7];
    lambda[3] = c.clone();
    let mu = lambda.clone();
    let d = KnotDatum::new(9, KnotKind::LocallyFlatDisk, vec![], vec![one.clone(); 6], lambda, mu)?;
    println!("{}", validate_disk_knot(&d, Some(&witness))?);

    // a broken duality is reported by name
    let bad = KnotDatum::new(4, KnotKind::LocallyFlatDisk, vec![], vec![pp(&[2, -5, 2])], vec![pp(&[-2, 1]), one.clone()], vec![one, pp(&[-2, 1])])?;
    let rep = validate_disk_knot(&bad, None)?;
    for f in rep.failures() {
        println!("failed {}: {}", f.id, f.detail);
    }
    Ok(())
}
