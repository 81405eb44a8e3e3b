//! Arithmetic in Q[t, 1/t]: products, normal forms, similarity, gcds.
use knotpoly::laurent::{gcd, normalize_primitive, normalize_symmetric, parse_poly, primitive, similar, Ring};

fn main() -> knotpoly::Result<()> {
    let a = parse_poly("[-1; 1, -2]")?; // t^-1 - 2
    let b = parse_poly("[0; -2, 1]")?; // t - 2
    let prod = &a * &b;
    println!("({a}) * ({b}) = {prod}");

    let (p, unit) = normalize_primitive(&prod)?;
    println!("primitive form {p}, unit {unit:?}");

    let c = primitive(&parse_poly("[0; 1, -3, 1]")?)?;
    println!("symmetric form of {c}: {}", normalize_symmetric(&c)?);

    let x = parse_poly("[0; -1, 1]")?;
    let y = parse_poly("[2; -5, 5]")?;
    println!("{x} ~ {y} over Γ: {}", similar(&x, &y, Ring::Gamma));
    println!("{x} ~ {y} over Λ: {}", similar(&x, &y, Ring::Lambda));

    let t6 = parse_poly("[0; -1, 0, 0, 0, 0, 0, 1]")?;
    let cyc = parse_poly("[0; 1, -1, 1]")?;
    println!("gcd({t6}, {cyc}) = {}", gcd(&t6, &cyc)?);
    Ok(())
}
