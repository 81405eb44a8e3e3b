//! Exact polynomial sequences: subpolynomials, exactness, a missing third.
use knotpoly::datum::{derive_subpolynomials, interleaved_sequence, KnotDatum, KnotKind};
use knotpoly::laurent::PrimitivePoly;
use knotpoly::sequence::{subpolynomials, verify_exact, Direction, PolySequence};

fn pp(c: &[i64]) -> PrimitivePoly {
    PrimitivePoly::from_ints(c).unwrap()
}

fn main() -> knotpoly::Result<()> {
    // deltas 1, t-2, 2t-1, 1: consecutive terms share one factor
    let seq = PolySequence::from_deltas(&[pp(&[1]), pp(&[-2, 1]), pp(&[-1, 2]), pp(&[1])]);
    println!("sequence {}", seq.to_literal());
    println!("subpolynomials {:?}", subpolynomials(&seq, Direction::Left)?.iter().map(|p| p.to_string()).collect::<Vec<_>>());
    println!("exactness {:?}", verify_exact(&seq));

    // an n = 4 disk datum and the long exact sequence it sits in
    let r = pp(&[-2, 1]);
    let rb = r.conjugate();
    let d = KnotDatum::new(4, KnotKind::LocallyFlatDisk, vec![], vec![r.mul(&rb)], vec![r, pp(&[1])], vec![pp(&[1]), rb])?;
    println!("interleaved: {}", interleaved_sequence(&d).to_literal());
    let s = derive_subpolynomials(&d)?.subs.unwrap();
    for i in 0..2 {
        println!("a_{i} = {}", s.a(i));
    }
    for i in 1..=2 {
        println!("b_{i} = {}, c_{i} = {}", s.b(i), s.c(i));
    }
    Ok(())
}
