//! Smith normal form over Γ and the torsion module it presents.
use knotpoly::laurent::parse_poly;
use knotpoly::module_algebra::{
    associated_polynomial, module_from_presentation, primary_decomposition, q_dimension, smith_normal_form,
    GammaMatrix,
};

fn main() -> knotpoly::Result<()> {
    let p = |s: &str| parse_poly(s).unwrap();
    // [[t-1, 1], [0, t-1]]
    let a = GammaMatrix::new(vec![vec![p("[0; -1, 1]"), p("[0; 1]")], vec![p("[0; 0]"), p("[0; -1, 1]")]])?;
    let s = smith_normal_form(&a);
    println!("A =\n{a}\nD =\n{}", s.d);
    assert_eq!(s.u.mul(&a)?.mul(&s.v)?, s.d);
    println!("U A V = D checked");

    let m = module_from_presentation(&a);
    println!("module {m}, Q-dimension {}, polynomial {}", q_dimension(&m)?, associated_polynomial(&m)?);

    let b = GammaMatrix::diagonal(&[p("[0; 2, -3, 1]"), p("[0; -2, 1]")]);
    let mb = module_from_presentation(&b);
    for (prime, part) in primary_decomposition(&mb, 1 << 16)? {
        println!("  {prime}-primary part: {part}");
    }
    Ok(())
}
