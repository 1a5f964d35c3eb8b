//! Dense univariate polynomials over a [`FieldSpec`].
//!
//! The free functions work on coefficient slices (constant term first) and
//! always return trimmed vectors; the zero polynomial is the empty vector.

use std::fmt;

use crate::error::{Error, Result};
use crate::galois::FieldSpec;
use crate::multipoly::MultiPoly;

pub fn trim(mut a: Vec<u32>) -> Vec<u32> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

/// Degree, or `None` for the zero polynomial.
pub fn degree(a: &[u32]) -> Option<usize> {
    a.iter().rposition(|&c| c != 0)
}

pub fn add(f: &FieldSpec, a: &[u32], b: &[u32]) -> Vec<u32> {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| f.add(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0)))
        .collect();
    trim(out)
}

pub fn sub(f: &FieldSpec, a: &[u32], b: &[u32]) -> Vec<u32> {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| f.sub(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0)))
        .collect();
    trim(out)
}

pub fn mul(f: &FieldSpec, a: &[u32], b: &[u32]) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u32; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = f.add(out[i + j], f.mul(x, y));
        }
    }
    trim(out)
}

/// Quotient and remainder. Panics if `b` is zero.
pub fn divrem(f: &FieldSpec, a: &[u32], b: &[u32]) -> (Vec<u32>, Vec<u32>) {
    let db = degree(b).expect("division by the zero polynomial");
    let lead_inv = f.inv(b[db]).expect("leading coefficient is nonzero");
    let mut rem = trim(a.to_vec());
    let mut quot = vec![0u32; rem.len().saturating_sub(db).max(1)];
    while let Some(dr) = degree(&rem) {
        if dr < db {
            break;
        }
        let c = f.mul(rem[dr], lead_inv);
        let shift = dr - db;
        quot[shift] = c;
        for (j, &bj) in b[..=db].iter().enumerate() {
            rem[shift + j] = f.sub(rem[shift + j], f.mul(c, bj));
        }
        rem = trim(rem);
    }
    (trim(quot), rem)
}

pub fn rem(f: &FieldSpec, a: &[u32], b: &[u32]) -> Vec<u32> {
    divrem(f, a, b).1
}

/// Monic greatest common divisor.
pub fn gcd(f: &FieldSpec, a: &[u32], b: &[u32]) -> Vec<u32> {
    let (mut x, mut y) = (trim(a.to_vec()), trim(b.to_vec()));
    while !y.is_empty() {
        let r = rem(f, &x, &y);
        x = y;
        y = r;
    }
    make_monic(f, &x)
}

pub fn make_monic(f: &FieldSpec, a: &[u32]) -> Vec<u32> {
    match degree(a) {
        None => Vec::new(),
        Some(d) => {
            let inv = f.inv(a[d]).expect("nonzero leading coefficient");
            trim(a.iter().map(|&c| f.mul(c, inv)).collect())
        }
    }
}

/// `base^e mod m`.
pub fn pow_mod(f: &FieldSpec, base: &[u32], mut e: u64, m: &[u32]) -> Vec<u32> {
    let mut acc = rem(f, &[1], m);
    let mut b = rem(f, base, m);
    while e > 0 {
        if e & 1 == 1 {
            acc = rem(f, &mul(f, &acc, &b), m);
        }
        b = rem(f, &mul(f, &b, &b), m);
        e >>= 1;
    }
    acc
}

pub fn eval(f: &FieldSpec, a: &[u32], x: u32) -> u32 {
    a.iter().rev().fold(0, |acc, &c| f.add(f.mul(acc, x), c))
}

/// Ben-Or test: a polynomial of degree `r` is irreducible iff it shares no
/// factor with `x^(q^i) - x` for `1 <= i <= r/2`.
pub fn is_irreducible(f: &FieldSpec, poly: &[u32]) -> bool {
    let Some(r) = degree(poly) else {
        return false;
    };
    if r == 0 {
        return false;
    }
    let x = [0u32, 1];
    let q = f.q() as u64;
    let mut xp = x.to_vec();
    for _ in 1..=r / 2 {
        xp = pow_mod(f, &xp, q, poly);
        let g = gcd(f, poly, &sub(f, &xp, &x));
        if degree(&g) != Some(0) {
            return false;
        }
    }
    true
}

/// Lagrange interpolation through `(xs[i], ys[i])`; `xs` must be distinct.
pub fn interpolate(f: &FieldSpec, xs: &[u32], ys: &[u32]) -> Result<Vec<u32>> {
    if xs.len() != ys.len() {
        return Err(Error::DimensionMismatch(
            "interpolation nodes and values differ in length".into(),
        ));
    }
    let mut out = Vec::new();
    for (i, (&xi, &yi)) in xs.iter().zip(ys).enumerate() {
        if yi == 0 {
            continue;
        }
        let mut basis = vec![1u32];
        let mut denom = 1u32;
        for (j, &xj) in xs.iter().enumerate() {
            if i == j {
                continue;
            }
            basis = mul(f, &basis, &[f.neg(xj), 1]);
            denom = f.mul(denom, f.sub(xi, xj));
        }
        let scale = f
            .div(yi, denom)
            .map_err(|_| Error::InvalidArgument("interpolation nodes must be distinct".into()))?;
        let term: Vec<u32> = basis.iter().map(|&c| f.mul(c, scale)).collect();
        out = add(f, &out, &term);
    }
    Ok(out)
}

/// A univariate polynomial tied to its field.
#[derive(Clone, PartialEq, Eq)]
pub struct UniPoly {
    field: FieldSpec,
    coeffs: Vec<u32>,
}

impl UniPoly {
    pub fn new(field: &FieldSpec, coeffs: Vec<u32>) -> Result<Self> {
        for &c in &coeffs {
            field.check(c)?;
        }
        Ok(UniPoly {
            field: field.clone(),
            coeffs: trim(coeffs),
        })
    }

    /// `x^d`.
    pub fn monomial(field: &FieldSpec, d: usize) -> Self {
        let mut coeffs = vec![0; d + 1];
        coeffs[d] = 1;
        UniPoly {
            field: field.clone(),
            coeffs,
        }
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        degree(&self.coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn eval(&self, x: u32) -> u32 {
        eval(&self.field, &self.coeffs, x)
    }
}

impl TryFrom<&MultiPoly> for UniPoly {
    type Error = Error;

    fn try_from(p: &MultiPoly) -> Result<Self> {
        if p.nvars() != 1 {
            return Err(Error::InvalidArgument(format!(
                "expected a univariate polynomial, got {} variables",
                p.nvars()
            )));
        }
        let deg = p.terms().map(|(m, _)| m.exponents()[0]).max().unwrap_or(0);
        let mut coeffs = vec![0u32; deg as usize + 1];
        for (m, c) in p.terms() {
            coeffs[m.exponents()[0] as usize] = c;
        }
        UniPoly::new(p.field(), coeffs)
    }
}

impl From<&UniPoly> for MultiPoly {
    fn from(p: &UniPoly) -> Self {
        MultiPoly::from_terms(
            p.field(),
            1,
            p.coeffs
                .iter()
                .enumerate()
                .map(|(i, &c)| (vec![i as u32], c)),
        )
        .expect("coefficients already validated")
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly({:?} over {})", self.coeffs, self.field)
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&MultiPoly::from(self).with_names(&["x"]), f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(q: u64) -> FieldSpec {
        FieldSpec::from_order(q).unwrap()
    }

    #[test]
    fn divrem_reconstructs() {
        let f = gf(5);
        let a = vec![4, 0, 0, 0, 0, 0, 1]; // x^6 - 1
        let b = vec![4, 1]; // x - 1
        let (q, r) = divrem(&f, &a, &b);
        assert!(r.is_empty());
        assert_eq!(add(&f, &mul(&f, &q, &b), &r), a);
    }

    #[test]
    fn irreducibility_small_cases() {
        let f2 = gf(2);
        assert!(is_irreducible(&f2, &[1, 1, 1]));
        assert!(!is_irreducible(&f2, &[1, 0, 1]));
        assert!(is_irreducible(&f2, &[1, 1, 0, 1]));
        // (x^2+x+1)^2 has no roots but is reducible.
        assert!(!is_irreducible(&f2, &[1, 0, 1, 0, 1]));
    }

    #[test]
    fn interpolation_recovers_polynomial() {
        let f = gf(13);
        let poly = vec![3, 0, 7];
        let xs = [1, 5, 8];
        let ys: Vec<u32> = xs.iter().map(|&x| eval(&f, &poly, x)).collect();
        assert_eq!(interpolate(&f, &xs, &ys).unwrap(), poly);
    }

    #[test]
    fn multipoly_conversion() {
        let f = gf(7);
        let g = UniPoly::new(&f, vec![1, 0, 3]).unwrap();
        let m = MultiPoly::from(&g);
        assert_eq!(UniPoly::try_from(&m).unwrap(), g);
        assert_eq!(g.to_string(), "3x^2+1");
    }
}
