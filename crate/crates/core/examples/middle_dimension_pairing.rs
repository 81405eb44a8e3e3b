//! The middle-dimension polynomial of a presentation (τ, R) and its pairing.
use knotpoly::middim::{c_polynomial, discriminant, is_hermitian, pairing_matrix, quadratic_family};

fn main() -> knotpoly::Result<()> {
    for a in [-2, -1, 1, 2] {
        for sign in [1, -1] {
            let p = quadratic_family(a, sign)?;
            let cp = c_polynomial(&p)?;
            println!(
                "a = {a:>2}, sign = {sign:>2}: det M = {}, c(1) = {}, c(-1) = {}",
                cp.det_m,
                cp.det_m.evaluate_int(1)?,
                cp.det_m.evaluate_int(-1)?
            );
        }
    }

    let p = quadratic_family(1, -1)?;
    let n = pairing_matrix(&p)?;
    println!("\nN(t) for a = 1:");
    for i in 0..n.size() {
        let row: Vec<_> = (0..n.size()).map(|j| n.get(i, j).to_string()).collect();
        println!("  {}", row.join("   "));
    }
    println!("ε-hermitian: {}", is_hermitian(&p, &n));
    let d = discriminant(&p)?;
    println!("det N = {}, identity holds: {}", d.det_n, d.identity_holds);
    Ok(())
}
