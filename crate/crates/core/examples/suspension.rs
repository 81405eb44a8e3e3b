//! Suspension and knot sums.
use knotpoly::constructions::{knot_sum, suspension};
use knotpoly::datum::{validate_disk_knot, validate_singular_sphere, KnotDatum, KnotKind};
use knotpoly::io::serialize_datum;
use knotpoly::laurent::PrimitivePoly;

fn main() -> knotpoly::Result<()> {
    let r = PrimitivePoly::from_ints(&[-2, 1])?;
    let rb = r.conjugate();
    let one = PrimitivePoly::one();
    let d = KnotDatum::new(4, KnotKind::LocallyFlatDisk, vec![], vec![r.mul(&rb)], vec![r, one.clone()], vec![one, rb])?;

    let s = suspension(&d)?;
    print!("suspension:\n{}", serialize_datum(&s));
    println!("valid: {}\n", validate_singular_sphere(&s)?.passed());

    let twice = suspension(&s)?;
    println!("suspended twice, Betti of the singular set: {:?}", twice.sigma_reduced_betti);

    let sum = knot_sum(&d, &d)?;
    println!("disk + disk is {}, valid {}", sum.kind, validate_disk_knot(&sum, None)?.passed());
    let mixed = knot_sum(&s, &s)?;
    println!("singular + singular: Betti {:?}, μ_1 = {}", mixed.sigma_reduced_betti, mixed.mu(1));
    Ok(())
}
