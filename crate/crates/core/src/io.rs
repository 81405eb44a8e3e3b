//! Plain-text datum files.
//!
//! One `key = value` entry per line, `#` starts a comment:
//!
//! ```text
//! n = 4
//! kind = locally_flat_disk
//! sigma_reduced_betti = []
//! nu = [[0; 2, -5, 2]]
//! lambda = [[0; -2, 1], [0; 1]]
//! mu = [[0; 1], [0; -1, 2]]
//! ```
//!
//! Optional trailing entries: `sub_a`, `sub_b`, `sub_c` (polynomial lists)
//! and `lambda_inv`, `mu_inv`, `nu_inv` (lists of `{free: r, inv: [...]}`).
//! Sphere knot files carry `n` and `p` only.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::datum::{InvariantModules, KnotDatum, KnotKind, SphereKnotPolys, Subpolynomials};
use crate::error::{Error, Result};
use crate::laurent::{normalize_primitive, Cursor, PrimitivePoly};
use crate::module_algebra::TorsionModule;

const DATUM_KEYS: [&str; 12] = [
    "n",
    "kind",
    "sigma_reduced_betti",
    "nu",
    "lambda",
    "mu",
    "sub_a",
    "sub_b",
    "sub_c",
    "lambda_inv",
    "mu_inv",
    "nu_inv",
];
const SPHERE_KEYS: [&str; 2] = ["n", "p"];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Parsed<T> {
    pub value: T,
    /// Non-fatal notes, e.g. polynomials rewritten into canonical form.
    pub warnings: Vec<String>,
}

/// Either kind of input file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum KnotFile {
    Datum(Box<KnotDatum>),
    Sphere(SphereKnotPolys),
}

struct Entry<'a> {
    line: usize,
    col: usize,
    value: &'a str,
}

struct Fields<'a> {
    entries: BTreeMap<&'static str, Entry<'a>>,
    last_line: usize,
}

fn split_fields<'a>(text: &'a str, keys: &[&'static str]) -> Result<Fields<'a>> {
    let mut entries = BTreeMap::new();
    let mut last_line = 0;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        last_line = line;
        let body = raw.split('#').next().unwrap_or("");
        if body.trim().is_empty() {
            continue;
        }
        let Some(eq) = body.find('=') else {
            return Err(Error::Parse { line, column: 1, message: "expected 'key = value'".into() });
        };
        let key = body[..eq].trim();
        let key_col = body[..eq].find(|c: char| !c.is_whitespace()).unwrap_or(0) + 1;
        let Some(&key) = keys.iter().find(|k| **k == key) else {
            return Err(Error::Parse { line, column: key_col, message: format!("unknown field '{key}'") });
        };
        if entries.contains_key(key) {
            return Err(Error::Parse { line, column: key_col, message: format!("duplicate field '{key}'") });
        }
        let value = &body[eq + 1..];
        let col = body[..eq + 1].chars().count() + 1;
        entries.insert(key, Entry { line, col, value });
    }
    Ok(Fields { entries, last_line })
}

impl<'a> Fields<'a> {
    fn missing(&self, key: &str) -> Error {
        Error::Parse { line: self.last_line + 1, column: 1, message: format!("missing field '{key}'") }
    }

    fn parse<T>(&self, key: &str, f: impl FnOnce(&mut Cursor<'a>) -> Result<T>) -> Result<Option<T>> {
        let Some(e) = self.entries.get(key) else {
            return Ok(None);
        };
        let mut c = Cursor::at(e.value, e.line, e.col);
        let v = f(&mut c)?;
        c.finish()?;
        Ok(Some(v))
    }

    fn required<T>(&self, key: &str, f: impl FnOnce(&mut Cursor<'a>) -> Result<T>) -> Result<T> {
        self.parse(key, f)?.ok_or_else(|| self.missing(key))
    }
}

fn usize_value(c: &mut Cursor) -> Result<usize> {
    let v = c.small_integer()?;
    usize::try_from(v).map_err(|_| c.error("expected a nonnegative integer"))
}

fn canonical_poly(c: &mut Cursor, warnings: &mut Vec<String>) -> Result<PrimitivePoly> {
    c.skip_ws();
    let at = c.error("");
    let p = c.poly()?;
    let (prim, _) = normalize_primitive(&p).map_err(|_| c.error("zero polynomial is not allowed here"))?;
    let canon = prim.to_laurent();
    if canon != p {
        if let Error::Parse { line, column, .. } = at {
            warnings.push(format!(
                "line {line}, column {column}: {} normalized to {}",
                p.to_literal(),
                canon.to_literal()
            ));
        }
    }
    Ok(prim)
}

fn poly_list(c: &mut Cursor, warnings: &mut Vec<String>) -> Result<Vec<PrimitivePoly>> {
    c.list('[', ']', |c| canonical_poly(c, warnings))
}

fn module(c: &mut Cursor, warnings: &mut Vec<String>) -> Result<TorsionModule> {
    c.expect('{')?;
    c.expect_word("free")?;
    c.expect(':')?;
    let free = usize_value(c)?;
    c.expect(',')?;
    c.expect_word("inv")?;
    c.expect(':')?;
    let inv = poly_list(c, warnings)?;
    c.expect('}')?;
    Ok(TorsionModule::new(free, inv))
}

fn module_list(c: &mut Cursor, warnings: &mut Vec<String>) -> Result<Vec<TorsionModule>> {
    c.list('[', ']', |c| module(c, warnings))
}

fn kind_value(c: &mut Cursor) -> Result<KnotKind> {
    c.skip_ws();
    for k in [KnotKind::LocallyFlatDisk, KnotKind::PointSingularSphere, KnotKind::GeneralSingularSphere] {
        if c.expect_word(k.as_str()).is_ok() {
            return Ok(k);
        }
    }
    Err(c.error("expected locally_flat_disk, point_singular_sphere or general_singular_sphere"))
}

pub fn parse_datum(text: &str) -> Result<Parsed<KnotDatum>> {
    let f = split_fields(text, &DATUM_KEYS)?;
    let mut w = Vec::new();
    let n = f.required("n", usize_value)?;
    let kind = f.required("kind", kind_value)?;
    let betti = f.required("sigma_reduced_betti", |c| c.list('[', ']', usize_value))?;
    let nu = f.required("nu", |c| poly_list(c, &mut w))?;
    let lambda = f.required("lambda", |c| poly_list(c, &mut w))?;
    let mu = f.required("mu", |c| poly_list(c, &mut w))?;
    let mut d = KnotDatum::new(n, kind, betti, nu, lambda, mu)?;

    let a = f.parse("sub_a", |c| poly_list(c, &mut w))?;
    let b = f.parse("sub_b", |c| poly_list(c, &mut w))?;
    let sc = f.parse("sub_c", |c| poly_list(c, &mut w))?;
    d.subs = match (a, b, sc) {
        (Some(a), Some(b), Some(c)) => Some(Subpolynomials { a, b, c }),
        (None, None, None) => None,
        _ => return Err(Error::MalformedDatum("sub_a, sub_b and sub_c must be given together".into())),
    };
    let li = f.parse("lambda_inv", |c| module_list(c, &mut w))?;
    let mi = f.parse("mu_inv", |c| module_list(c, &mut w))?;
    let ni = f.parse("nu_inv", |c| module_list(c, &mut w))?;
    d.invariants = match (li, mi, ni) {
        (Some(lambda), Some(mu), Some(nu)) => Some(InvariantModules { lambda, mu, nu }),
        (None, None, None) => None,
        _ => return Err(Error::MalformedDatum("lambda_inv, mu_inv and nu_inv must be given together".into())),
    };
    d.check_shape()?;
    Ok(Parsed { value: d, warnings: w })
}

pub fn parse_sphere_polys(text: &str) -> Result<Parsed<SphereKnotPolys>> {
    let f = split_fields(text, &SPHERE_KEYS)?;
    let mut w = Vec::new();
    let n = f.required("n", usize_value)?;
    let p = f.required("p", |c| poly_list(c, &mut w))?;
    Ok(Parsed { value: SphereKnotPolys::new(n, p)?, warnings: w })
}

/// Sphere knot files are recognized by their `p` field.
pub fn parse_knot_file(text: &str) -> Result<Parsed<KnotFile>> {
    let is_sphere = text.lines().any(|l| {
        let body = l.split('#').next().unwrap_or("");
        body.split('=').next().is_some_and(|k| k.trim() == "p") && body.contains('=')
    });
    if is_sphere {
        let p = parse_sphere_polys(text)?;
        Ok(Parsed { value: KnotFile::Sphere(p.value), warnings: p.warnings })
    } else {
        let p = parse_datum(text)?;
        Ok(Parsed { value: KnotFile::Datum(Box::new(p.value)), warnings: p.warnings })
    }
}

fn polys_literal(v: &[PrimitivePoly]) -> String {
    let items: Vec<String> = v.iter().map(|p| p.to_laurent().to_literal()).collect();
    format!("[{}]", items.join(", "))
}

fn modules_literal(v: &[TorsionModule]) -> String {
    let items: Vec<String> = v.iter().map(|m| m.to_literal()).collect();
    format!("[{}]", items.join(", "))
}

pub fn serialize_datum(d: &KnotDatum) -> String {
    let mut s = String::new();
    let betti: Vec<String> = d.sigma_reduced_betti.iter().map(|b| b.to_string()).collect();
    writeln!(s, "n = {}", d.n).unwrap();
    writeln!(s, "kind = {}", d.kind).unwrap();
    writeln!(s, "sigma_reduced_betti = [{}]", betti.join(", ")).unwrap();
    writeln!(s, "nu = {}", polys_literal(&d.nu)).unwrap();
    writeln!(s, "lambda = {}", polys_literal(&d.lambda)).unwrap();
    writeln!(s, "mu = {}", polys_literal(&d.mu)).unwrap();
    if let Some(sub) = &d.subs {
        writeln!(s, "sub_a = {}", polys_literal(&sub.a)).unwrap();
        writeln!(s, "sub_b = {}", polys_literal(&sub.b)).unwrap();
        writeln!(s, "sub_c = {}", polys_literal(&sub.c)).unwrap();
    }
    if let Some(inv) = &d.invariants {
        writeln!(s, "lambda_inv = {}", modules_literal(&inv.lambda)).unwrap();
        writeln!(s, "mu_inv = {}", modules_literal(&inv.mu)).unwrap();
        writeln!(s, "nu_inv = {}", modules_literal(&inv.nu)).unwrap();
    }
    s
}

pub fn serialize_sphere_polys(p: &SphereKnotPolys) -> String {
    format!("n = {}\np = {}\n", p.n, polys_literal(&p.p))
}

/// Integer matrix literal: rows separated by `;`, entries by `,`.
pub fn parse_int_matrix(s: &str) -> Result<Vec<Vec<i64>>> {
    let mut rows = Vec::new();
    let mut col0 = 1;
    for row in s.split(';') {
        let mut entries = Vec::new();
        let mut col = col0;
        for item in row.split(',') {
            let mut c = Cursor::at(item, 1, col);
            entries.push(c.small_integer()?);
            c.finish()?;
            col += item.chars().count() + 1;
        }
        rows.push(entries);
        col0 += row.chars().count() + 1;
    }
    if rows.iter().any(|r| r.len() != rows[0].len()) {
        return Err(Error::DimensionMismatch("matrix rows have different lengths".into()));
    }
    Ok(rows)
}

/// Comma separated nonnegative integers, e.g. Betti numbers `1,0,1`.
pub fn parse_usize_list(s: &str) -> Result<Vec<usize>> {
    let mut c = Cursor::new(s);
    let mut out = vec![usize_value(&mut c)?];
    while c.eat(',') {
        out.push(usize_value(&mut c)?);
    }
    c.finish()?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    const TRIVIAL: &str = "n = 4\nkind = locally_flat_disk\nsigma_reduced_betti = []\nnu = [[0; 1]]\nlambda = [[0; 1], [0; 1]]\nmu = [[0; 1], [0; 1]]\n";

    #[test]
    fn trivial_round_trip() {
        let p = parse_datum(TRIVIAL).unwrap();
        assert!(p.warnings.is_empty());
        assert_eq!(p.value, KnotDatum::trivial(4, KnotKind::LocallyFlatDisk).unwrap());
        assert_eq!(serialize_datum(&p.value), TRIVIAL);
    }

    #[test]
    fn comments_and_normalization() {
        let text = TRIVIAL.replace("lambda = [[0; 1], [0; 1]]", "# first\nlambda = [[2; 3/2, -3], [0; 1]]  # scaled");
        let p = parse_datum(&text).unwrap();
        assert_eq!(p.warnings.len(), 1);
        assert!(p.warnings[0].contains("[0; -1, 2]"), "{:?}", p.warnings);
        assert_eq!(p.value.lambda[0], PrimitivePoly::from_ints(&[-1, 2]).unwrap());
    }

    #[test]
    fn errors_carry_locations() {
        let truncated = &TRIVIAL[..TRIVIAL.find("mu =").unwrap()];
        match parse_datum(truncated) {
            Err(Error::Parse { line: 6, column: 1, message }) => assert!(message.contains("mu")),
            other => panic!("{other:?}"),
        }
        let bad = TRIVIAL.replace("nu = [[0; 1]]", "nu = [[0; 1]");
        match parse_datum(&bad) {
            Err(Error::Parse { line: 4, column, .. }) => assert_eq!(column, 13),
            other => panic!("{other:?}"),
        }
        let bad = TRIVIAL.replace("kind = locally_flat_disk", "kind = torus");
        assert!(matches!(parse_datum(&bad), Err(Error::Parse { line: 2, .. })));
    }

    #[test]
    fn optional_fields_round_trip() {
        let mut d = KnotDatum::trivial(4, KnotKind::GeneralSingularSphere).unwrap();
        d.sigma_reduced_betti = vec![1, 0, 2];
        d.mu[0] = PrimitivePoly::t_minus_one();
        d.subs = Some(Subpolynomials {
            a: vec![PrimitivePoly::t_minus_one(), PrimitivePoly::one()],
            b: vec![PrimitivePoly::one(); 2],
            c: vec![PrimitivePoly::one(); 2],
        });
        d.invariants = Some(InvariantModules {
            lambda: vec![TorsionModule::trivial(); 2],
            mu: vec![TorsionModule::cyclic(PrimitivePoly::t_minus_one()), TorsionModule::trivial()],
            nu: vec![TorsionModule::trivial()],
        });
        let text = serialize_datum(&d);
        let back = parse_datum(&text).unwrap();
        assert_eq!(back.value, d);
        assert_eq!(serialize_datum(&back.value), text);
    }

    #[test]
    fn sphere_files() {
        let text = "n = 4\np = [[0; -2, 1], [0; -1, 2]]\n";
        match parse_knot_file(text).unwrap().value {
            KnotFile::Sphere(s) => assert_eq!(serialize_sphere_polys(&s), text),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn matrices() {
        assert_eq!(parse_int_matrix("1,0;1,1").unwrap(), vec![vec![1, 0], vec![1, 1]]);
        assert!(parse_int_matrix("1,0;1").is_err());
        assert!(matches!(parse_int_matrix("1,x"), Err(Error::Parse { column: 3, .. })));
        assert_eq!(parse_usize_list("1, 0,1").unwrap(), vec![1, 0, 1]);
    }
}
