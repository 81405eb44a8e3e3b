//! Command-line front end. Exit status: 0 success, 1 a check failed,
//! 2 bad input.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use crate::constructions::{
    frame_spin, frame_twist_spin, knot_sum, suspension, trivial_slice, zeeman_twist_spin, BettiProfile,
    CoefficientHomology, InvariantPolicy, TwistSpun,
};
use crate::datum::{derive_subpolynomials, levine_validate, validate_disk_knot, validate_singular_sphere, KnotDatum};
use crate::error::{Error, Result};
use crate::io::{
    parse_datum, parse_int_matrix, parse_knot_file, parse_sphere_polys, parse_usize_list, serialize_datum,
    KnotFile,
};
use crate::laurent::{factor_rational, is_reciprocal_square, primitive, Cursor, DEFAULT_FACTOR_BOUND};
use crate::middim::{c_polynomial, discriminant, is_hermitian, pairing_matrix, verify_middim_witness, PairingPresentation};
use crate::module_algebra::{module_from_presentation, smith_normal_form, GammaMatrix};

#[derive(Debug, Parser)]
#[command(name = "knotpoly", version, about = "Alexander polynomial data of disk knots and singular sphere knots")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, clap::Args)]
pub struct Output {
    /// Write the resulting datum here instead of stdout (never one of the inputs).
    #[arg(short = 'o', long = "output")]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check a datum or sphere knot file against its conditions.
    Validate {
        file: PathBuf,
        /// Middle-dimension witness τ, e.g. "1,0;1,1".
        #[arg(long, requires_all = ["r", "q"])]
        tau: Option<String>,
        #[arg(long)]
        r: Option<String>,
        #[arg(long)]
        q: Option<u32>,
    },
    /// Fill in the subpolynomials a, b, c.
    DeriveSubpolys {
        file: PathBuf,
        #[command(flatten)]
        out: Output,
    },
    /// Knot sum of two data.
    Sum {
        first: PathBuf,
        second: PathBuf,
        #[command(flatten)]
        out: Output,
    },
    /// Frame spin about a manifold with the given Betti numbers.
    Spin {
        file: PathBuf,
        /// Betti numbers B_0,...,B_k of M, e.g. "1,0,1" for the 2-sphere.
        #[arg(long)]
        betti: String,
        #[command(flatten)]
        out: Output,
    },
    /// Frame twist spin with explicit coefficient homology.
    Twistspin {
        file: PathBuf,
        /// Betti numbers of M.
        #[arg(long)]
        betti: String,
        /// Free ranks of H_r(M; Γ); defaults to the Betti numbers.
        #[arg(long)]
        ranks: Option<String>,
        /// Torsion invariant of H_r(M; Γ) as "r:[lo; c0, ...]"; repeatable.
        #[arg(long = "zeta")]
        zetas: Vec<String>,
        /// Refuse seeds without per-degree invariant modules.
        #[arg(long)]
        strict: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Zeeman k-twist spin.
    Zeeman {
        file: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        k: i64,
        #[arg(long)]
        strict: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Suspension.
    Suspend {
        file: PathBuf,
        #[command(flatten)]
        out: Output,
    },
    /// Trivial slicing of a locally flat sphere knot.
    Slice {
        file: PathBuf,
        #[command(flatten)]
        out: Output,
    },
    /// Middle-dimension polynomial and pairing of (τ, R).
    Middim {
        #[arg(long)]
        tau: String,
        #[arg(long)]
        r: String,
        #[arg(long)]
        q: u32,
        /// Also check this polynomial against the presentation.
        #[arg(long)]
        c: Option<String>,
    },
    /// Smith normal form of a Laurent polynomial matrix.
    Snf {
        /// One row, e.g. "[0; -1, 1], [0; 0]"; repeat for each row.
        #[arg(long = "row", required = true)]
        rows: Vec<String>,
    },
    /// Irreducible factors over Q.
    Factor {
        poly: String,
        /// Also decide whether the polynomial is p(t)p(1/t).
        #[arg(long)]
        slice: bool,
        #[arg(long, default_value_t = DEFAULT_FACTOR_BOUND)]
        bound: usize,
    },
}

struct Io<'a> {
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

impl Io<'_> {
    fn warn(&mut self, msgs: &[String]) {
        for m in msgs {
            let _ = writeln!(self.err, "warning: {m}");
        }
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            return code;
        }
    };
    let mut io = Io { out, err };
    match execute(cli.command, &mut io) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(io.err, "error: {e}");
            2
        }
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Invalid(format!("{}: {e}", path.display())))
}

fn read_datum(path: &Path, io: &mut Io) -> Result<KnotDatum> {
    let p = parse_datum(&read(path)?)?;
    io.warn(&p.warnings);
    Ok(p.value)
}

fn same_file(a: &Path, b: &Path) -> bool {
    let canon = |p: &Path| {
        p.canonicalize().ok().or_else(|| {
            let parent = p.parent().filter(|x| !x.as_os_str().is_empty()).unwrap_or(Path::new("."));
            Some(parent.canonicalize().ok()?.join(p.file_name()?))
        })
    };
    match (canon(a), canon(b)) {
        (Some(x), Some(y)) => x == y,
        _ => a == b,
    }
}

fn emit(text: &str, out: &Output, inputs: &[&Path], io: &mut Io) -> Result<i32> {
    match &out.output {
        None => {
            let _ = write!(io.out, "{text}");
        }
        Some(path) => {
            if inputs.iter().any(|i| same_file(i, path)) {
                return Err(Error::Invalid(format!("refusing to overwrite input file {}", path.display())));
            }
            std::fs::write(path, text).map_err(|e| Error::Invalid(format!("{}: {e}", path.display())))?;
        }
    }
    Ok(0)
}

fn report_status(ok: bool) -> &'static str {
    if ok {
        "pass"
    } else {
        "FAIL"
    }
}

fn parse_poly_arg(s: &str) -> Result<crate::laurent::PrimitivePoly> {
    let mut c = Cursor::new(s);
    let p = c.poly()?;
    c.finish()?;
    primitive(&p)
}

fn twist_output(t: TwistSpun, io: &mut Io) -> String {
    let mut text = String::new();
    if t.coarsened {
        let note = "invariants coarsened: each seed polynomial was treated as a single cyclic invariant";
        let _ = writeln!(io.err, "note: {note}");
        text.push_str(&format!("# {note}\n"));
    }
    text.push_str(&serialize_datum(&t.datum));
    text
}

fn execute(cmd: Command, io: &mut Io) -> Result<i32> {
    match cmd {
        Command::Validate { file, tau, r, q } => {
            let parsed = parse_knot_file(&read(&file)?)?;
            io.warn(&parsed.warnings);
            let rep = match parsed.value {
                KnotFile::Sphere(s) => levine_validate(&s),
                KnotFile::Datum(d) if d.kind.is_disk_like() => {
                    let witness = match (tau, r, q) {
                        (Some(t), Some(r), Some(q)) => Some(PairingPresentation::new(
                            parse_int_matrix(&t)?,
                            parse_int_matrix(&r)?,
                            q,
                        )?),
                        _ => None,
                    };
                    validate_disk_knot(&d, witness.as_ref())?
                }
                KnotFile::Datum(d) => validate_singular_sphere(&d)?,
            };
            let _ = writeln!(io.out, "{rep}");
            Ok(if rep.passed() { 0 } else { 1 })
        }
        Command::DeriveSubpolys { file, out } => {
            let d = derive_subpolynomials(&read_datum(&file, io)?)?;
            emit(&serialize_datum(&d), &out, &[&file], io)
        }
        Command::Sum { first, second, out } => {
            let d = knot_sum(&read_datum(&first, io)?, &read_datum(&second, io)?)?;
            emit(&serialize_datum(&d), &out, &[&first, &second], io)
        }
        Command::Spin { file, betti, out } => {
            let m = BettiProfile::new(parse_usize_list(&betti)?)?;
            let d = frame_spin(&read_datum(&file, io)?, &m)?;
            emit(&serialize_datum(&d), &out, &[&file], io)
        }
        Command::Twistspin { file, betti, ranks, zetas, strict, out } => {
            let m = BettiProfile::new(parse_usize_list(&betti)?)?;
            let ranks = match ranks {
                Some(r) => parse_usize_list(&r)?,
                None => m.values().to_vec(),
            };
            let mut z: Vec<Vec<_>> = Vec::new();
            for spec in &zetas {
                let (deg, poly) = spec
                    .split_once(':')
                    .ok_or_else(|| Error::Invalid(format!("--zeta expects 'r:poly', got '{spec}'")))?;
                let deg: usize = deg.trim().parse().map_err(|_| Error::Invalid(format!("bad degree in '{spec}'")))?;
                if z.len() <= deg {
                    z.resize(deg + 1, Vec::new());
                }
                z[deg].push(parse_poly_arg(poly)?);
            }
            let h = CoefficientHomology::new(ranks, z)?;
            let policy = if strict { InvariantPolicy::Strict } else { InvariantPolicy::CoarsenToCyclic };
            let t = frame_twist_spin(&read_datum(&file, io)?, &h, &m, policy)?;
            let text = twist_output(t, io);
            emit(&text, &out, &[&file], io)
        }
        Command::Zeeman { file, k, strict, out } => {
            let policy = if strict { InvariantPolicy::Strict } else { InvariantPolicy::CoarsenToCyclic };
            let t = zeeman_twist_spin(&read_datum(&file, io)?, k, policy)?;
            let text = twist_output(t, io);
            emit(&text, &out, &[&file], io)
        }
        Command::Suspend { file, out } => {
            let d = suspension(&read_datum(&file, io)?)?;
            emit(&serialize_datum(&d), &out, &[&file], io)
        }
        Command::Slice { file, out } => {
            let p = parse_sphere_polys(&read(&file)?)?;
            io.warn(&p.warnings);
            let d = trivial_slice(&p.value)?;
            emit(&serialize_datum(&d), &out, &[&file], io)
        }
        Command::Middim { tau, r, q, c } => {
            let p = PairingPresentation::new(parse_int_matrix(&tau)?, parse_int_matrix(&r)?, q)?;
            let cp = c_polynomial(&p)?;
            let n = pairing_matrix(&p)?;
            let herm = is_hermitian(&p, &n);
            let disc = discriminant(&p)?;
            let o = &mut io.out;
            let _ = writeln!(o, "det M = {}", cp.det_m);
            let _ = writeln!(o, "c = {}", cp.c.to_laurent().to_literal());
            let _ = writeln!(o, "det M(1) = ±1: {}", report_status(cp.knot_valid));
            let _ = writeln!(o, "self-reciprocal: {}", report_status(cp.self_reciprocal));
            let _ = writeln!(o, "hermitian: {}", report_status(herm));
            let _ = writeln!(
                o,
                "discriminant identity: {} (det N = {})",
                report_status(disc.identity_holds),
                disc.det_n
            );
            let mut ok = cp.knot_valid && cp.self_reciprocal && herm && disc.identity_holds;
            if let Some(c) = c {
                let rep = verify_middim_witness(&parse_poly_arg(&c)?, &p);
                let _ = writeln!(io.out, "{rep}");
                ok &= rep.passed();
            }
            Ok(if ok { 0 } else { 1 })
        }
        Command::Snf { rows } => {
            let mut entries = Vec::new();
            for (i, row) in rows.iter().enumerate() {
                let mut c = Cursor::at(row, i + 1, 1);
                let mut items = vec![c.poly()?];
                while c.eat(',') {
                    items.push(c.poly()?);
                }
                c.finish()?;
                entries.push(items);
            }
            let a = GammaMatrix::new(entries)?;
            let s = smith_normal_form(&a);
            let diag: Vec<String> = s.diagonal().iter().map(|p| p.to_literal()).collect();
            let _ = writeln!(io.out, "diagonal = [{}]", diag.join(", "));
            let _ = writeln!(io.out, "module = {}", module_from_presentation(&a));
            Ok(0)
        }
        Command::Factor { poly, slice, bound } => {
            let p = parse_poly_arg(&poly)?;
            let f = factor_rational(&p, bound)?;
            let items: Vec<String> = f.iter().map(|q| q.to_laurent().to_literal()).collect();
            let _ = writeln!(io.out, "factors = [{}]", items.join(", "));
            if !slice {
                return Ok(0);
            }
            let r = is_reciprocal_square(&p, None, bound)?;
            match &r.witness {
                Some(w) => {
                    let _ = writeln!(io.out, "reciprocal square: pass (p = {})", w.to_laurent().to_literal());
                }
                None => {
                    let _ = writeln!(io.out, "reciprocal square: FAIL");
                }
            }
            Ok(if r.holds { 0 } else { 1 })
        }
    }
}
