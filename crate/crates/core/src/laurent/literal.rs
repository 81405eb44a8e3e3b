//! The `[lo; c0, c1, ...]` polynomial literal.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::poly::LaurentPoly;
use crate::error::{Error, Result};

/// Byte cursor over a single line of input, tracking the column for errors.
pub struct Cursor<'a> {
    src: &'a str,
    pos: usize,
    line: usize,
    col0: usize,
}

impl<'a> Cursor<'a> {
    pub fn new(src: &'a str) -> Self {
        Self::at(src, 1, 1)
    }

    /// Cursor whose first byte sits at `(line, col0)` of some larger file.
    pub fn at(src: &'a str, line: usize, col0: usize) -> Self {
        Self { src, pos: 0, line, col0 }
    }

    pub fn error(&self, message: impl Into<String>) -> Error {
        Error::Parse {
            line: self.line,
            column: self.col0 + self.src[..self.pos].chars().count(),
            message: message.into(),
        }
    }

    pub fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    pub fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    pub fn eat(&mut self, ch: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(ch) {
            self.pos += ch.len_utf8();
            true
        } else {
            false
        }
    }

    pub fn expect(&mut self, ch: char) -> Result<()> {
        if self.eat(ch) {
            Ok(())
        } else {
            Err(self.error(match self.peek() {
                Some(c) => format!("expected '{ch}', found '{c}'"),
                None => format!("expected '{ch}', found end of input"),
            }))
        }
    }

    pub fn expect_word(&mut self, word: &str) -> Result<()> {
        self.skip_ws();
        if self.src[self.pos..].starts_with(word) {
            self.pos += word.len();
            Ok(())
        } else {
            Err(self.error(format!("expected '{word}'")))
        }
    }

    pub fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.pos == self.src.len()
    }

    pub fn finish(&mut self) -> Result<()> {
        if self.at_end() {
            Ok(())
        } else {
            Err(self.error("unexpected trailing input"))
        }
    }

    pub fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        if matches!(self.peek(), Some('-') | Some('+')) {
            self.pos += 1;
        }
        let digits = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == digits {
            self.pos = start;
            return Err(self.error("expected an integer"));
        }
        Ok(self.src[start..self.pos].trim_start_matches('+').parse().unwrap())
    }

    pub fn small_integer(&mut self) -> Result<i64> {
        let save = self.pos;
        let v = self.integer()?;
        i64::try_from(v).map_err(|_| {
            self.pos = save;
            self.error("integer out of range")
        })
    }

    pub fn rational(&mut self) -> Result<BigRational> {
        let num = self.integer()?;
        if self.peek() == Some('/') {
            self.pos += 1;
            let save = self.pos;
            let den = self.integer()?;
            if den.is_zero() {
                self.pos = save;
                return Err(self.error("zero denominator"));
            }
            return Ok(BigRational::new(num, den));
        }
        Ok(BigRational::from_integer(num))
    }

    /// Comma separated items between `open` and `close`.
    pub fn list<T>(
        &mut self,
        open: char,
        close: char,
        mut item: impl FnMut(&mut Self) -> Result<T>,
    ) -> Result<Vec<T>> {
        self.expect(open)?;
        let mut out = Vec::new();
        if self.eat(close) {
            return Ok(out);
        }
        loop {
            out.push(item(self)?);
            if self.eat(close) {
                return Ok(out);
            }
            self.expect(',')?;
        }
    }

    pub fn poly(&mut self) -> Result<LaurentPoly> {
        self.expect('[')?;
        let lo = self.small_integer()?;
        self.expect(';')?;
        let mut coeffs = vec![self.rational()?];
        while self.eat(',') {
            coeffs.push(self.rational()?);
        }
        self.expect(']')?;
        Ok(LaurentPoly::from_coeffs(lo, coeffs))
    }
}

pub fn parse_poly(s: &str) -> Result<LaurentPoly> {
    let mut c = Cursor::new(s);
    let p = c.poly()?;
    c.finish()?;
    Ok(p)
}
