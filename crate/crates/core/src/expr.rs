//! Parser for human-written field elements and polynomials such as
//! `2a+1`, `a*x1^2*x3` or `x + y + z + z^2`.
//!
//! Integers denote elements of the prime subfield, `a` denotes the field
//! generator (extension fields only), and identifiers from the supplied
//! variable list denote ring variables.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::galois::FieldSpec;

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Num(u64),
    Ident(String),
    Caret,
    Star,
    Plus,
    Minus,
}

fn tokenize(s: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let mut chars = s.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            c if c.is_whitespace() => {
                chars.next();
            }
            '0'..='9' => {
                let mut v: u64 = 0;
                while let Some(&d) = chars.peek() {
                    let Some(digit) = d.to_digit(10) else { break };
                    v = v
                        .checked_mul(10)
                        .and_then(|v| v.checked_add(digit as u64))
                        .ok_or_else(|| Error::Parse(format!("number too large in `{s}`")))?;
                    chars.next();
                }
                out.push(Token::Num(v));
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let mut id = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_alphanumeric() || d == '_' {
                        id.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                out.push(Token::Ident(id));
            }
            '^' => {
                chars.next();
                out.push(Token::Caret);
            }
            '*' => {
                chars.next();
                out.push(Token::Star);
            }
            '+' => {
                chars.next();
                out.push(Token::Plus);
            }
            '-' => {
                chars.next();
                out.push(Token::Minus);
            }
            other => return Err(Error::Parse(format!("unexpected `{other}` in `{s}`"))),
        }
    }
    Ok(out)
}

struct Parser<'a> {
    field: &'a FieldSpec,
    vars: &'a [(&'a str, usize)],
    nvars: usize,
    tokens: Vec<Token>,
    pos: usize,
    source: &'a str,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn err(&self, what: &str) -> Error {
        Error::Parse(format!("{what} in `{}`", self.source))
    }

    fn expr(&mut self) -> Result<BTreeMap<Vec<u32>, u32>> {
        let f = self.field;
        let mut acc: BTreeMap<Vec<u32>, u32> = BTreeMap::new();
        let mut negate = false;
        match self.peek() {
            Some(Token::Plus) => {
                self.next();
            }
            Some(Token::Minus) => {
                self.next();
                negate = true;
            }
            _ => {}
        }
        loop {
            let (mut coef, exps) = self.term()?;
            if negate {
                coef = f.neg(coef);
            }
            let slot = acc.entry(exps).or_insert(0);
            *slot = f.add(*slot, coef);
            match self.next() {
                None => break,
                Some(Token::Plus) => negate = false,
                Some(Token::Minus) => negate = true,
                Some(_) => return Err(self.err("expected `+` or `-`")),
            }
        }
        acc.retain(|_, c| *c != 0);
        Ok(acc)
    }

    fn term(&mut self) -> Result<(u32, Vec<u32>)> {
        let (mut coef, mut exps) = self.factor()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.next();
                }
                Some(Token::Num(_)) | Some(Token::Ident(_)) => {}
                _ => break,
            }
            let (c, e) = self.factor()?;
            coef = self.field.mul(coef, c);
            for (a, b) in exps.iter_mut().zip(e) {
                *a += b;
            }
        }
        Ok((coef, exps))
    }

    fn factor(&mut self) -> Result<(u32, Vec<u32>)> {
        let f = self.field;
        let mut exps = vec![0u32; self.nvars];
        let coef = match self.next() {
            Some(Token::Num(n)) => (n % f.p() as u64) as u32,
            Some(Token::Ident(id)) => {
                if let Some(&(_, i)) = self.vars.iter().find(|(n, _)| *n == id) {
                    exps[i] = 1;
                    1
                } else if id == "a" && !f.is_prime_field() {
                    f.generator()
                } else {
                    return Err(self.err(&format!("unknown symbol `{id}`")));
                }
            }
            _ => return Err(self.err("expected a number or symbol")),
        };
        if self.peek() == Some(&Token::Caret) {
            self.next();
            let Some(Token::Num(k)) = self.next() else {
                return Err(self.err("expected an exponent after `^`"));
            };
            let k32 = u32::try_from(k).map_err(|_| self.err("exponent too large"))?;
            for e in exps.iter_mut() {
                *e *= k32;
            }
            return Ok((f.pow(coef, k as i64), exps));
        }
        Ok((coef, exps))
    }
}

/// Parses a polynomial into an exponent → coefficient map. `vars` maps each
/// accepted variable name to its index in `0..nvars`.
pub fn parse_poly(
    field: &FieldSpec,
    nvars: usize,
    vars: &[(&str, usize)],
    s: &str,
) -> Result<BTreeMap<Vec<u32>, u32>> {
    let tokens = tokenize(s)?;
    if tokens.is_empty() {
        return Err(Error::Parse("empty expression".into()));
    }
    let mut p = Parser {
        field,
        vars,
        nvars,
        tokens,
        pos: 0,
        source: s,
    };
    p.expr()
}

/// Parses a constant field element.
pub fn parse_constant(field: &FieldSpec, s: &str) -> Result<u32> {
    let terms = parse_poly(field, 0, &[], s)?;
    Ok(terms.get(&Vec::new()).copied().unwrap_or(0))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constants() {
        let f4 = FieldSpec::from_order(4).unwrap();
        assert_eq!(parse_constant(&f4, "a+1").unwrap(), 3);
        assert_eq!(parse_constant(&f4, "a^2").unwrap(), 3);
        assert_eq!(parse_constant(&f4, "a*a+a").unwrap(), 1);
        let f5 = FieldSpec::from_order(5).unwrap();
        assert_eq!(parse_constant(&f5, "-2").unwrap(), 3);
        assert_eq!(parse_constant(&f5, "7").unwrap(), 2);
        assert!(parse_constant(&f5, "a").is_err());
        assert!(parse_constant(&f5, "").is_err());
        assert!(parse_constant(&f5, "2 +").is_err());
    }

    #[test]
    fn polynomials() {
        let f4 = FieldSpec::from_order(4).unwrap();
        let p = parse_poly(&f4, 3, &[("x", 0), ("y", 1), ("z", 2)], "a+y*z^2").unwrap();
        assert_eq!(p.get(&vec![0, 0, 0]), Some(&2));
        assert_eq!(p.get(&vec![0, 1, 2]), Some(&1));
        assert_eq!(p.len(), 2);
        // x + x cancels in characteristic 2
        let q = parse_poly(&f4, 1, &[("x", 0)], "x + x + 1").unwrap();
        assert_eq!(q.len(), 1);
        // 2 = 0 in GF(4), so the whole term vanishes
        let r = parse_poly(&f4, 2, &[("x1", 0), ("x2", 1)], "2a x1^2 x2").unwrap();
        assert!(r.is_empty());
        let f9 = FieldSpec::from_order(9).unwrap();
        let s = parse_poly(&f9, 2, &[("x1", 0), ("x2", 1)], "2a x1^2 x2").unwrap();
        assert_eq!(s.get(&vec![2, 1]), Some(&6));
    }
}
