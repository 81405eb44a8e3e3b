//! Factoring over Q and recognising polynomials of the form p(t) p(1/t).
use knotpoly::laurent::{factor_rational, is_reciprocal_square, PrimitivePoly, DEFAULT_FACTOR_BOUND};

fn main() -> knotpoly::Result<()> {
    let cases: [&[i64]; 4] = [&[2, -5, 2], &[1, -1, 1], &[-1, 0, 0, 0, 0, 0, 1], &[1, -3, 1]];
    for c in cases {
        let p = PrimitivePoly::from_ints(c)?;
        let f: Vec<_> = factor_rational(&p, DEFAULT_FACTOR_BOUND)?.iter().map(|q| q.to_string()).collect();
        print!("{p}: factors {f:?}");
        match is_reciprocal_square(&p, None, DEFAULT_FACTOR_BOUND) {
            Ok(rs) if rs.holds => println!(", p p̄ with p = {}", rs.witness.unwrap()),
            Ok(_) => println!(", not of the form p p̄"),
            Err(e) => println!(", {e}"),
        }
    }
    Ok(())
}
