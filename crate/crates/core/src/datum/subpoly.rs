use crate::error::{Error, Result};
use crate::laurent::PrimitivePoly;
use crate::sequence::{subpolynomials, Direction, PolySequence};

use super::{t_minus_one_pow, KnotDatum, Subpolynomials};

/// `λ_(n-2), μ_(n-2), ν_(n-3), λ_(n-3), μ_(n-3), ..., ν_1, λ_1, μ_1`.
pub fn interleaved_sequence(d: &KnotDatum) -> PolySequence {
    let n = d.n as i64;
    let mut terms = vec![d.lambda(n - 2), d.mu(n - 2)];
    for i in (1..=n - 3).rev() {
        terms.push(d.nu(i));
        terms.push(d.lambda(i));
        terms.push(d.mu(i));
    }
    PolySequence::new(terms)
}

/// Name of the 1-based position `p` of the interleaved sequence.
pub fn sequence_term_name(n: usize, p: usize) -> String {
    let n = n as i64;
    match p {
        0 => "start".into(),
        1 => format!("lambda_{}", n - 2),
        2 => format!("mu_{}", n - 2),
        _ => {
            let k = (p as i64 - 3) / 3;
            let i = n - 3 - k;
            match (p - 3) % 3 {
                0 => format!("nu_{i}"),
                1 => format!("lambda_{i}"),
                _ => format!("mu_{i}"),
            }
        }
    }
}

/// Expected value of `a_0`: trivial unless the singular set is disconnected.
fn expected_a0(d: &KnotDatum) -> PrimitivePoly {
    if d.kind.is_disk_like() {
        PrimitivePoly::one()
    } else {
        t_minus_one_pow(d.betti(0))
    }
}

/// Fills in `a_i, b_i, c_i` by dividing along the interleaved sequence.
pub fn derive_subpolynomials(d: &KnotDatum) -> Result<KnotDatum> {
    d.check_shape()?;
    let n = d.n;
    let seq = interleaved_sequence(d);
    let deltas = subpolynomials(&seq, Direction::Left).map_err(|e| match e {
        Error::Subpolynomial { index, remainder } => Error::Inconsistent(format!(
            "{} is not divisible by the preceding subpolynomial (sequence index {index}, remainder {remainder})",
            sequence_term_name(n, index)
        )),
        e => e,
    })?;
    // deltas: b_(n-2), c_(n-2), then a_i, b_i, c_i for i = n-3 down to 1, then a_0
    let mut a = vec![PrimitivePoly::one(); n - 2];
    let mut b = vec![PrimitivePoly::one(); n - 2];
    let mut c = vec![PrimitivePoly::one(); n - 2];
    b[n - 3] = deltas[0].clone();
    c[n - 3] = deltas[1].clone();
    for (k, i) in (1..=n - 3).rev().enumerate() {
        a[i] = deltas[2 + 3 * k].clone();
        b[i - 1] = deltas[3 + 3 * k].clone();
        c[i - 1] = deltas[4 + 3 * k].clone();
    }
    a[0] = deltas[deltas.len() - 1].clone();
    let want = expected_a0(d);
    if a[0] != want {
        return Err(Error::Inconsistent(format!(
            "last subpolynomial a_0 = {} but should be {}",
            a[0].to_laurent(),
            want.to_laurent()
        )));
    }
    let mut out = d.clone();
    out.subs = Some(Subpolynomials { a, b, c });
    Ok(out)
}
