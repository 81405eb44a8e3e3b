//! Twist spinning: Zeeman twists and explicit coefficient homology.
use knotpoly::constructions::{
    frame_twist_spin, zeeman_twist_spin, BettiProfile, CoefficientHomology, InvariantPolicy,
};
use knotpoly::datum::{validate_singular_sphere, KnotDatum, KnotKind};
use knotpoly::laurent::PrimitivePoly;

fn main() -> knotpoly::Result<()> {
    let c = PrimitivePoly::from_ints(&[1, -1, 1])?;
    let seed = KnotDatum::new(3, KnotKind::LocallyFlatDisk, vec![], vec![], vec![c.clone()], vec![c])?;

    // the library refuses bare polynomials unless told to coarsen
    match zeeman_twist_spin(&seed, 6, InvariantPolicy::Strict) {
        Ok(_) => println!("strict: accepted"),
        Err(e) => println!("strict: {e}"),
    }
    for k in [0, 1, 2, 6] {
        let out = zeeman_twist_spin(&seed, k, InvariantPolicy::CoarsenToCyclic)?;
        let lam: Vec<_> = out.datum.lambda.iter().map(|p| p.to_string()).collect();
        println!("k = {k}: λ = {lam:?}, valid {}", validate_singular_sphere(&out.datum)?.passed());
    }

    // S^1 whose Γ-homology in degree 0 is Γ/(t^6 - 1)
    let m = BettiProfile::sphere(1);
    let h = CoefficientHomology::new(vec![0, 0], vec![vec![PrimitivePoly::from_ints(&[-1, 0, 0, 0, 0, 0, 1])?], vec![]])?;
    let out = frame_twist_spin(&seed, &h, &m, InvariantPolicy::CoarsenToCyclic)?;
    let lam: Vec<_> = out.datum.lambda.iter().map(|p| p.to_string()).collect();
    println!("explicit module: λ = {lam:?}");
    Ok(())
}
