use std::fmt;

use crate::error::{Error, Result};
use crate::laurent::{rat, LaurentPoly};

/// Dense matrix over `Γ`.
#[derive(Clone, PartialEq, Eq)]
pub struct GammaMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<LaurentPoly>>,
}

impl GammaMatrix {
    pub fn new(entries: Vec<Vec<LaurentPoly>>) -> Result<Self> {
        let rows = entries.len();
        let cols = entries.first().map_or(0, |r| r.len());
        if let Some(bad) = entries.iter().position(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch(format!(
                "row {bad} has {} entries, expected {cols}",
                entries[bad].len()
            )));
        }
        Ok(Self { rows, cols, entries })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![vec![LaurentPoly::zero(); cols]; rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.entries[i][i] = LaurentPoly::one();
        }
        m
    }

    pub fn diagonal(d: &[LaurentPoly]) -> Self {
        let mut m = Self::zeros(d.len(), d.len());
        for (i, p) in d.iter().enumerate() {
            m.entries[i][i] = p.clone();
        }
        m
    }

    pub fn from_ints(rows: &[Vec<i64>]) -> Result<Self> {
        Self::new(
            rows.iter()
                .map(|r| r.iter().map(|&v| LaurentPoly::constant(rat(v))).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &LaurentPoly {
        &self.entries[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: LaurentPoly) {
        self.entries[i][j] = p;
    }

    pub fn row(&self, i: usize) -> &[LaurentPoly] {
        &self.entries[i]
    }

    pub fn mul(&self, o: &Self) -> Result<Self> {
        if self.cols != o.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, o.rows, o.cols
            )));
        }
        let mut out = Self::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for j in 0..o.cols {
                let mut acc = LaurentPoly::zero();
                for k in 0..self.cols {
                    if !self.entries[i][k].is_zero() && !o.entries[k][j].is_zero() {
                        acc = &acc + &(&self.entries[i][k] * &o.entries[k][j]);
                    }
                }
                out.entries[i][j] = acc;
            }
        }
        Ok(out)
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.entries[j][i] = self.entries[i][j].clone();
            }
        }
        out
    }

    /// Entrywise `t -> t^-1`.
    pub fn conjugate(&self) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .map(|r| r.iter().map(|p| p.reciprocal()).collect())
                .collect(),
        }
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self.entries[i][j].is_zero()))
    }

    /// Fraction-free (Bareiss) determinant; every division is exact in `Γ`.
    pub fn det(&self) -> Result<LaurentPoly> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch(format!(
                "determinant of a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(LaurentPoly::one());
        }
        let mut a = self.entries.clone();
        let mut sign = false;
        let mut prev = LaurentPoly::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    Some(i) => {
                        a.swap(i, k);
                        sign = !sign;
                    }
                    None => return Ok(LaurentPoly::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                    a[i][j] = v.divide_exact(&prev)?;
                }
            }
            prev = a[k][k].clone();
        }
        let d = a[n - 1][n - 1].clone();
        Ok(if sign { -d } else { d })
    }

    pub(crate) fn swap_rows(&mut self, i: usize, j: usize) {
        self.entries.swap(i, j);
    }

    pub(crate) fn swap_cols(&mut self, i: usize, j: usize) {
        for r in &mut self.entries {
            r.swap(i, j);
        }
    }

    /// row_i += f * row_j
    pub(crate) fn add_row_multiple(&mut self, i: usize, j: usize, f: &LaurentPoly) {
        for k in 0..self.cols {
            if !self.entries[j][k].is_zero() {
                let v = &self.entries[i][k] + &(f * &self.entries[j][k]);
                self.entries[i][k] = v;
            }
        }
    }

    /// col_i += f * col_j
    pub(crate) fn add_col_multiple(&mut self, i: usize, j: usize, f: &LaurentPoly) {
        for r in &mut self.entries {
            if !r[j].is_zero() {
                let v = &r[i] + &(f * &r[j]);
                r[i] = v;
            }
        }
    }

    pub(crate) fn scale_row(&mut self, i: usize, f: &LaurentPoly) {
        for p in &mut self.entries[i] {
            *p = &*p * f;
        }
    }
}

impl fmt::Debug for GammaMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "GammaMatrix {}x{}", self.rows, self.cols)?;
        for r in &self.entries {
            let cells: Vec<String> = r.iter().map(|p| p.to_literal()).collect();
            writeln!(f, "  {}", cells.join("  "))?;
        }
        Ok(())
    }
}

impl fmt::Display for GammaMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.entries {
            let cells: Vec<String> = r.iter().map(|p| p.to_string()).collect();
            writeln!(f, "[ {} ]", cells.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(lo: i64, c: &[i64]) -> LaurentPoly {
        LaurentPoly::from_ints(lo, c)
    }

    #[test]
    fn determinant_matches_cofactor() {
        let m = GammaMatrix::new(vec![
            vec![lp(0, &[-1, 1]), lp(0, &[1]), lp(0, &[0])],
            vec![lp(-1, &[2]), lp(0, &[1, 1]), lp(0, &[3])],
            vec![lp(0, &[0]), lp(0, &[1]), lp(0, &[-2, 1])],
        ])
        .unwrap();
        // expand along the first row
        let e = |i, j| m.get(i, j).clone();
        let minor = |a: LaurentPoly, b: LaurentPoly, c: LaurentPoly, d: LaurentPoly| &(&a * &d) - &(&b * &c);
        let want = &(&e(0, 0) * &minor(e(1, 1), e(1, 2), e(2, 1), e(2, 2)))
            - &(&e(0, 1) * &minor(e(1, 0), e(1, 2), e(2, 0), e(2, 2)));
        assert_eq!(m.det().unwrap(), want);
    }

    #[test]
    fn determinant_with_zero_pivot() {
        let m = GammaMatrix::from_ints(&[vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(m.det().unwrap(), lp(0, &[-1]));
        let m = GammaMatrix::from_ints(&[vec![0, 1], vec![0, 2]]).unwrap();
        assert!(m.det().unwrap().is_zero());
    }

    #[test]
    fn ragged_rows_rejected() {
        assert!(GammaMatrix::from_ints(&[vec![1, 2], vec![3]]).is_err());
    }
}
