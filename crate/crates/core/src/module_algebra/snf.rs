use crate::laurent::{normalize_primitive, LaurentPoly};

use super::matrix::GammaMatrix;

/// `U * A * V = D` with `D` diagonal, its nonzero entries canonical
/// primitive polynomials forming a divisibility chain.
#[derive(Debug, Clone)]
pub struct SmithForm {
    pub u: GammaMatrix,
    pub d: GammaMatrix,
    pub v: GammaMatrix,
}

impl SmithForm {
    pub fn diagonal(&self) -> Vec<LaurentPoly> {
        (0..self.d.rows().min(self.d.cols())).map(|i| self.d.get(i, i).clone()).collect()
    }

    pub fn rank(&self) -> usize {
        self.diagonal().iter().filter(|p| !p.is_zero()).count()
    }
}

fn find_pivot(a: &GammaMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, usize)> = None;
    for i in t..a.rows() {
        for j in t..a.cols() {
            let p = a.get(i, j);
            if p.is_zero() {
                continue;
            }
            let w = p.width().unwrap();
            if best.is_none_or(|(bw, _, _)| w < bw) {
                best = Some((w, i, j));
            }
        }
    }
    best.map(|(_, i, j)| (i, j))
}

pub fn smith_normal_form(a: &GammaMatrix) -> SmithForm {
    let (m, n) = (a.rows(), a.cols());
    let mut d = a.clone();
    let mut u = GammaMatrix::identity(m);
    let mut v = GammaMatrix::identity(n);
    for t in 0..m.min(n) {
        while let Some((pi, pj)) = find_pivot(&d, t) {
            if pi != t {
                d.swap_rows(pi, t);
                u.swap_rows(pi, t);
            }
            if pj != t {
                d.swap_cols(pj, t);
                v.swap_cols(pj, t);
            }
            let pivot = d.get(t, t).clone();
            let mut dirty = false;
            for i in t + 1..m {
                if d.get(i, t).is_zero() {
                    continue;
                }
                let (q, r) = d.get(i, t).div_rem(&pivot).unwrap();
                let f = -q;
                d.add_row_multiple(i, t, &f);
                u.add_row_multiple(i, t, &f);
                dirty |= !r.is_zero();
            }
            for j in t + 1..n {
                if d.get(t, j).is_zero() {
                    continue;
                }
                let (q, r) = d.get(t, j).div_rem(&pivot).unwrap();
                let f = -q;
                d.add_col_multiple(j, t, &f);
                v.add_col_multiple(j, t, &f);
                dirty |= !r.is_zero();
            }
            if dirty {
                continue;
            }
            // pivot must divide the remaining block for the chain to hold
            let bad = (t + 1..m).find(|&i| (t + 1..n).any(|j| !pivot.divides(d.get(i, j))));
            match bad {
                Some(i) => {
                    let one = LaurentPoly::one();
                    d.add_row_multiple(t, i, &one);
                    u.add_row_multiple(t, i, &one);
                }
                None => break,
            }
        }
        let p = d.get(t, t);
        if !p.is_zero() {
            let (_, unit) = normalize_primitive(p).unwrap();
            let f = LaurentPoly::monomial(unit.scale.recip(), -unit.shift);
            d.scale_row(t, &f);
            u.scale_row(t, &f);
        }
    }
    SmithForm { u, d, v }
}
