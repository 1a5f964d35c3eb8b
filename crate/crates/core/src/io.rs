//! Plain-text code files.
//!
//! ```text
//! field p r
//! modulus c0 ... cr          (only when r > 1)
//! generator k n
//! <k rows of decimal reps>
//! ```
//!
//! Evaluation codes append their point set and polynomial span:
//!
//! ```text
//! points n m
//! <n rows of m reps>
//! polys s m
//! poly t                     (repeated s times)
//! <t lines `c e1 ... em`>
//! ```
//!
//! Locally recoverable codes append their blocks and good polynomial:
//!
//! ```text
//! blocks b s
//! <b rows of s point reps>
//! goodpoly c0 ... cd
//! ```
//!
//! Blank lines and lines starting with `#` are ignored when parsing.

use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::evalcode::EvaluationCode;
use crate::galois::FieldSpec;
use crate::lrc::{LocallyRecoverableCode, LrcParams};
use crate::matrix::{join_reps, parse_reps, parse_usizes, MatrixGF};
use crate::multipoly::{points_to_text, MultiPoly, PointSet};
use crate::upoly::UniPoly;

/// A code file's contents.
#[derive(Debug, Clone)]
pub enum CodeFile {
    Linear(LinearCode),
    Evaluation(EvaluationCode),
    Lrc(LocallyRecoverableCode),
}

impl CodeFile {
    /// The underlying linear code.
    pub fn code(&self) -> &LinearCode {
        match self {
            CodeFile::Linear(c) => c,
            CodeFile::Evaluation(e) => e.linear_code(),
            CodeFile::Lrc(l) => l.linear_code(),
        }
    }

    pub fn to_text(&self) -> String {
        let mut s = code_to_text(self.code());
        match self {
            CodeFile::Linear(_) => {}
            CodeFile::Evaluation(e) => {
                let pts = e.points();
                s.push_str(&points_to_text(pts));
                s.push_str(&format!("polys {} {}\n", e.polynomials().len(), pts.dim()));
                for p in e.polynomials() {
                    s.push_str(&format!("poly {}\n", p.num_terms()));
                    s.push_str(&p.to_text());
                }
            }
            CodeFile::Lrc(l) => {
                let blocks = l.blocks();
                s.push_str(&format!("blocks {} {}\n", blocks.len(), blocks[0].len()));
                for b in blocks {
                    s.push_str(&join_reps(b));
                    s.push('\n');
                }
                let g = l.good_polynomial().coeffs();
                s.push_str(&format!("goodpoly {}\n", join_reps(g)));
            }
        }
        s
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = Lines::new(text);
        let code = parse_code(&mut lines)?;
        let Some(next) = lines.peek() else {
            return Ok(CodeFile::Linear(code));
        };
        let section = next.split_whitespace().next().unwrap_or("");
        let file = match section {
            "points" => CodeFile::Evaluation(parse_evaluation(&mut lines, &code)?),
            "blocks" => CodeFile::Lrc(parse_lrc(&mut lines, &code)?),
            other => return Err(Error::Parse(format!("unknown section `{other}`"))),
        };
        if let Some(extra) = lines.next() {
            return Err(Error::Parse(format!("trailing data `{extra}`")));
        }
        if file.code().generator_matrix() != code.generator_matrix() {
            return Err(Error::Parse(
                "generator does not match the evaluation data that follows it".into(),
            ));
        }
        Ok(file)
    }
}

impl From<LinearCode> for CodeFile {
    fn from(c: LinearCode) -> Self {
        CodeFile::Linear(c)
    }
}

impl From<EvaluationCode> for CodeFile {
    fn from(c: EvaluationCode) -> Self {
        CodeFile::Evaluation(c)
    }
}

impl From<LocallyRecoverableCode> for CodeFile {
    fn from(c: LocallyRecoverableCode) -> Self {
        CodeFile::Lrc(c)
    }
}

/// Field header plus the generator matrix.
pub fn code_to_text(code: &LinearCode) -> String {
    let f = code.field();
    let mut s = format!("field {} {}\n", f.p(), f.r());
    if let Some(m) = f.modulus() {
        s.push_str(&format!("modulus {}\n", join_reps(m)));
    }
    s.push_str("generator ");
    s.push_str(&code.generator_matrix().to_text());
    s
}

/// Parses a file that must hold a plain linear code (extra sections are
/// accepted and only the code is returned).
pub fn parse_linear_code(text: &str) -> Result<LinearCode> {
    Ok(CodeFile::parse(text)?.code().clone())
}

struct Lines<'a> {
    inner: std::iter::Peekable<Box<dyn Iterator<Item = &'a str> + 'a>>,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        let it: Box<dyn Iterator<Item = &'a str> + 'a> = Box::new(
            text.lines()
                .map(str::trim)
                .filter(|l| !l.is_empty() && !l.starts_with('#')),
        );
        Lines {
            inner: it.peekable(),
        }
    }

    fn peek(&mut self) -> Option<&'a str> {
        self.inner.peek().copied()
    }

    fn next(&mut self) -> Option<&'a str> {
        self.inner.next()
    }

    fn expect(&mut self, what: &str) -> Result<&'a str> {
        self.next()
            .ok_or_else(|| Error::Parse(format!("unexpected end of file, expected {what}")))
    }

    /// A line `keyword a b ...`; returns the integer arguments.
    fn header(&mut self, keyword: &str, arity: usize) -> Result<Vec<usize>> {
        let line = self.expect(keyword)?;
        let rest = strip_keyword(line, keyword)?;
        let v = parse_usizes(rest)?;
        if v.len() != arity {
            return Err(Error::Parse(format!("bad `{keyword}` line `{line}`")));
        }
        Ok(v)
    }

    fn rows(&mut self, count: usize, width: usize, what: &str) -> Result<Vec<Vec<u32>>> {
        (0..count)
            .map(|_| {
                let line = self.expect(what)?;
                let row = parse_reps(line)?;
                if row.len() != width {
                    return Err(Error::Parse(format!(
                        "{what} row `{line}` should have {width} entries"
                    )));
                }
                Ok(row)
            })
            .collect()
    }
}

fn strip_keyword<'a>(line: &'a str, keyword: &str) -> Result<&'a str> {
    let mut parts = line.splitn(2, char::is_whitespace);
    if parts.next() != Some(keyword) {
        return Err(Error::Parse(format!(
            "expected `{keyword}`, found `{line}`"
        )));
    }
    Ok(parts.next().unwrap_or(""))
}

fn parse_code(lines: &mut Lines<'_>) -> Result<LinearCode> {
    let pr = lines.header("field", 2)?;
    let (p, r) = (pr[0] as u32, pr[1] as u32);
    let field = if r > 1 {
        let line = lines.expect("modulus")?;
        let m = parse_reps(strip_keyword(line, "modulus")?)?;
        if m.len() != r as usize + 1 {
            return Err(Error::Parse(format!("modulus of wrong degree: `{line}`")));
        }
        FieldSpec::with_modulus(p, &m)?
    } else {
        FieldSpec::new(p, r)?
    };
    let kn = lines.header("generator", 2)?;
    let (k, n) = (kn[0], kn[1]);
    let rows = lines.rows(k, n, "generator")?;
    let g = MatrixGF::from_rows(&field, n, &rows)?;
    if g.rank() != k {
        return Err(Error::Parse("generator rows are not independent".into()));
    }
    LinearCode::from_generator(g)
}

fn parse_evaluation(lines: &mut Lines<'_>, code: &LinearCode) -> Result<EvaluationCode> {
    let field = code.field();
    let nm = lines.header("points", 2)?;
    let (n, m) = (nm[0], nm[1]);
    let points = PointSet::new(field, m, lines.rows(n, m, "point")?)?;
    let sm = lines.header("polys", 2)?;
    if sm[1] != m {
        return Err(Error::Parse(format!(
            "polynomials in {} variables for points of dimension {m}",
            sm[1]
        )));
    }
    let mut polys = Vec::with_capacity(sm[0]);
    for _ in 0..sm[0] {
        let t = lines.header("poly", 1)?[0];
        let terms: Vec<&str> = (0..t)
            .map(|_| lines.expect("term"))
            .collect::<Result<_>>()?;
        polys.push(MultiPoly::from_text_lines(field, m, terms)?);
    }
    EvaluationCode::from_point_set(points, polys)
}

fn parse_lrc(lines: &mut Lines<'_>, code: &LinearCode) -> Result<LocallyRecoverableCode> {
    let field = code.field();
    let bs = lines.header("blocks", 2)?;
    let (b, s) = (bs[0], bs[1]);
    if s < 2 {
        return Err(Error::Parse("blocks need at least two points".into()));
    }
    let blocks = lines.rows(b, s, "block")?;
    let line = lines.expect("goodpoly")?;
    let g = UniPoly::new(field, parse_reps(strip_keyword(line, "goodpoly")?)?)?;
    let params = LrcParams {
        q: field.q() as u64,
        n: code.length(),
        k: code.dimension(),
        locality: s - 1,
    };
    if field.modulus().is_some() && *field != FieldSpec::from_order(params.q)? {
        return Err(Error::Parse(
            "LRC files must use the default field modulus".into(),
        ));
    }
    LocallyRecoverableCode::new(params, blocks, g)
}
