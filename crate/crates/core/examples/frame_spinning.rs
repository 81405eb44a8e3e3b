//! Frame spinning a disk knot about spheres and a torus.
use knotpoly::constructions::{frame_spin, BettiProfile};
use knotpoly::datum::{complete_by_duality, validate_singular_sphere, KnotKind, PartialDatum};
use knotpoly::io::serialize_datum;
use knotpoly::laurent::PrimitivePoly;

fn main() -> knotpoly::Result<()> {
    let r = PrimitivePoly::from_ints(&[-2, 1])?;
    let one = PrimitivePoly::one();
    // give λ and the lower ν; duality supplies the rest
    let partial = PartialDatum::from_lower(4, KnotKind::LocallyFlatDisk, vec![], vec![r.clone(), one], vec![r.mul(&r.conjugate())]);
    let seed = complete_by_duality(&partial)?;
    print!("seed:\n{}", serialize_datum(&seed));

    for (name, m) in [("S^2", BettiProfile::sphere(2)), ("T^2", BettiProfile::torus(2))] {
        let spun = frame_spin(&seed, &m)?;
        println!("\nspun about {name}:");
        print!("{}", serialize_datum(&spun));
        println!("valid: {}", validate_singular_sphere(&spun)?.passed());
    }
    Ok(())
}
