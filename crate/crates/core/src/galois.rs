//! Exact arithmetic in GF(p) and GF(p^r).
//!
//! An element is stored as a single integer `rep` in `[0, q)`. Its base-p
//! digits, least significant first, are the coefficients of the element
//! written as a polynomial in the generator `a` (the class of `x` modulo the
//! field modulus). For prime fields `rep` is simply the residue.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::expr;
use crate::upoly;

/// Largest order for which log/exp tables are built.
const TABLE_LIMIT: u32 = 1 << 16;

struct Inner {
    p: u32,
    r: u32,
    q: u32,
    /// Monic modulus, `r + 1` coefficients ascending. `None` for prime fields.
    modulus: Option<Vec<u32>>,
    /// Prime subfield, used for polynomial arithmetic on digit vectors.
    base: Option<FieldSpec>,
    /// Smallest-rep primitive element.
    primitive: u32,
    exp: Vec<u32>,
    log: Vec<u32>,
}

/// A finite field GF(p^r) with a fixed modulus. Cheap to clone.
#[derive(Clone)]
pub struct FieldSpec {
    inner: Arc<Inner>,
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.p == other.inner.p
                && self.inner.r == other.inner.r
                && self.inner.modulus == other.inner.modulus)
    }
}

impl Eq for FieldSpec {}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.inner.modulus {
            None => write!(f, "GF({})", self.inner.q),
            Some(m) => write!(f, "GF({}, modulus {:?})", self.inner.q, m),
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.inner.q)
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Splits a prime power `q` into `(p, r)`.
pub fn prime_power(q: u64) -> Result<(u32, u32)> {
    let factors = prime_factors(q);
    if q < 2 || factors.len() != 1 {
        return Err(Error::NotPrimePower(q));
    }
    let p = factors[0];
    let mut r = 0u32;
    let mut m = q;
    while m > 1 {
        m /= p;
        r += 1;
    }
    Ok((p as u32, r))
}

impl FieldSpec {
    /// The canonical GF(p^r). For `r > 1` the modulus is the lexicographically
    /// smallest monic irreducible of degree `r`, comparing coefficients from the
    /// constant term upward.
    pub fn new(p: u32, r: u32) -> Result<Self> {
        if !is_prime(p as u64) {
            return Err(Error::NotPrime(p as u64));
        }
        if r == 0 {
            return Err(Error::ZeroDegree);
        }
        check_order(p, r)?;
        if r == 1 {
            return Ok(Self::prime(p));
        }
        let base = Self::prime(p);
        let modulus = smallest_irreducible(&base, r);
        Ok(Self::extension(base, r, modulus))
    }

    /// GF(q) for a prime power `q`.
    pub fn from_order(q: u64) -> Result<Self> {
        let (p, r) = prime_power(q)?;
        Self::new(p, r)
    }

    /// GF(p^r) with a caller-supplied monic modulus (ascending coefficients).
    pub fn with_modulus(p: u32, modulus: &[u32]) -> Result<Self> {
        if !is_prime(p as u64) {
            return Err(Error::NotPrime(p as u64));
        }
        if modulus.len() < 2 {
            return Err(Error::ZeroDegree);
        }
        let r = (modulus.len() - 1) as u32;
        check_order(p, r)?;
        if r == 1 {
            if modulus[1] != 1 || modulus[0] >= p {
                return Err(Error::ReducibleModulus(r));
            }
            return Ok(Self::prime(p));
        }
        let base = Self::prime(p);
        if modulus.iter().any(|&c| c >= p)
            || modulus[r as usize] != 1
            || !upoly::is_irreducible(&base, modulus)
        {
            return Err(Error::ReducibleModulus(r));
        }
        Ok(Self::extension(base, r, modulus.to_vec()))
    }

    fn prime(p: u32) -> Self {
        let make = |primitive| FieldSpec {
            inner: Arc::new(Inner {
                p,
                r: 1,
                q: p,
                modulus: None,
                base: None,
                primitive,
                exp: Vec::new(),
                log: Vec::new(),
            }),
        };
        let primitive = make(0).find_primitive();
        make(primitive)
    }

    fn extension(base: FieldSpec, r: u32, modulus: Vec<u32>) -> Self {
        let p = base.p();
        let q = p.pow(r);
        let slow = FieldSpec {
            inner: Arc::new(Inner {
                p,
                r,
                q,
                modulus: Some(modulus.clone()),
                base: Some(base.clone()),
                primitive: 0,
                exp: Vec::new(),
                log: Vec::new(),
            }),
        };
        let primitive = slow.find_primitive();
        let (mut exp, mut log) = (Vec::new(), Vec::new());
        if q <= TABLE_LIMIT {
            exp = Vec::with_capacity((q - 1) as usize);
            log = vec![0; q as usize];
            let mut x = 1u32;
            for i in 0..q - 1 {
                exp.push(x);
                log[x as usize] = i;
                x = slow.mul_poly(x, primitive);
            }
        }
        FieldSpec {
            inner: Arc::new(Inner {
                p,
                r,
                q,
                modulus: Some(modulus),
                base: Some(base),
                primitive,
                exp,
                log,
            }),
        }
    }

    fn find_primitive(&self) -> u32 {
        let q = self.q();
        if q == 2 {
            return 1;
        }
        let factors = prime_factors((q - 1) as u64);
        (2..q)
            .find(|&g| {
                factors
                    .iter()
                    .all(|&f| self.pow(g, ((q as u64 - 1) / f) as i64) != 1)
            })
            .expect("multiplicative group of a finite field is cyclic")
    }

    pub fn p(&self) -> u32 {
        self.inner.p
    }

    pub fn r(&self) -> u32 {
        self.inner.r
    }

    pub fn q(&self) -> u32 {
        self.inner.q
    }

    pub fn modulus(&self) -> Option<&[u32]> {
        self.inner.modulus.as_deref()
    }

    pub fn is_prime_field(&self) -> bool {
        self.inner.r == 1
    }

    /// The smallest-rep element generating the multiplicative group.
    pub fn primitive_element(&self) -> u32 {
        self.inner.primitive
    }

    /// Rep of the generator `a` (the class of `x`); for prime fields this is 1.
    pub fn generator(&self) -> u32 {
        if self.is_prime_field() {
            1
        } else {
            self.inner.p
        }
    }

    pub fn element(&self, rep: u32) -> Result<FieldElement> {
        self.check(rep)?;
        Ok(FieldElement {
            field: self.clone(),
            rep,
        })
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement {
            field: self.clone(),
            rep: 0,
        }
    }

    pub fn one(&self) -> FieldElement {
        FieldElement {
            field: self.clone(),
            rep: 1,
        }
    }

    pub fn check(&self, rep: u32) -> Result<()> {
        if rep < self.q() {
            Ok(())
        } else {
            Err(Error::InvalidElement {
                value: rep as u64,
                q: self.q(),
            })
        }
    }

    /// Maps an integer into the prime subfield.
    pub fn from_int(&self, n: i64) -> u32 {
        n.rem_euclid(self.p() as i64) as u32
    }

    fn digits(&self, mut rep: u32) -> Vec<u32> {
        let p = self.p();
        (0..self.r())
            .map(|_| {
                let d = rep % p;
                rep /= p;
                d
            })
            .collect()
    }

    fn digits_to_rep(&self, digits: &[u32]) -> u32 {
        digits.iter().rev().fold(0u32, |acc, &d| acc * self.p() + d)
    }

    pub fn add(&self, x: u32, y: u32) -> u32 {
        let p = self.p();
        if self.is_prime_field() {
            return ((x as u64 + y as u64) % p as u64) as u32;
        }
        if p == 2 {
            return x ^ y;
        }
        let (mut x, mut y) = (x, y);
        let (mut out, mut place) = (0u32, 1u32);
        while x > 0 || y > 0 {
            out += ((x % p + y % p) % p) * place;
            x /= p;
            y /= p;
            place = place.wrapping_mul(p);
        }
        out
    }

    pub fn neg(&self, x: u32) -> u32 {
        let p = self.p();
        if self.is_prime_field() {
            return if x == 0 { 0 } else { p - x };
        }
        if p == 2 {
            return x;
        }
        let (mut x, mut out, mut place) = (x, 0u32, 1u32);
        while x > 0 {
            out += ((p - x % p) % p) * place;
            x /= p;
            place = place.wrapping_mul(p);
        }
        out
    }

    pub fn sub(&self, x: u32, y: u32) -> u32 {
        self.add(x, self.neg(y))
    }

    pub fn mul(&self, x: u32, y: u32) -> u32 {
        if x == 0 || y == 0 {
            return 0;
        }
        if self.is_prime_field() {
            return ((x as u64 * y as u64) % self.p() as u64) as u32;
        }
        let inner = &*self.inner;
        if inner.exp.is_empty() {
            return self.mul_poly(x, y);
        }
        let order = inner.q as usize - 1;
        let s = inner.log[x as usize] as usize + inner.log[y as usize] as usize;
        inner.exp[s % order]
    }

    /// Polynomial product of the digit vectors reduced by the modulus. This is
    /// the reference path; the log tables must agree with it.
    pub(crate) fn mul_poly(&self, x: u32, y: u32) -> u32 {
        if self.is_prime_field() {
            return self.mul(x, y);
        }
        let base = self
            .inner
            .base
            .as_ref()
            .expect("extension has a base field");
        let modulus = self
            .inner
            .modulus
            .as_ref()
            .expect("extension has a modulus");
        let prod = upoly::mul(base, &self.digits(x), &self.digits(y));
        let mut rem = upoly::rem(base, &prod, modulus);
        rem.resize(self.r() as usize, 0);
        self.digits_to_rep(&rem)
    }

    pub fn inv(&self, x: u32) -> Result<u32> {
        if x == 0 {
            return Err(Error::DivisionByZero);
        }
        if !self.is_prime_field() && !self.inner.log.is_empty() {
            let order = self.q() - 1;
            let l = self.inner.log[x as usize];
            return Ok(self.inner.exp[((order - l) % order) as usize]);
        }
        Ok(self.pow_nonneg(x, self.q() as u64 - 2))
    }

    pub fn div(&self, x: u32, y: u32) -> Result<u32> {
        Ok(self.mul(x, self.inv(y)?))
    }

    fn pow_nonneg(&self, x: u32, mut e: u64) -> u32 {
        let mut base = x;
        let mut acc = 1u32;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// `x^e`; a negative exponent inverts first. `0^0 = 1`. A negative power
    /// of zero yields 0 here; use [`FieldSpec::try_pow`] to get an error.
    pub fn pow(&self, x: u32, e: i64) -> u32 {
        if e >= 0 {
            self.pow_nonneg(x, e as u64)
        } else {
            match self.inv(x) {
                Ok(ix) => self.pow_nonneg(ix, e.unsigned_abs()),
                Err(_) => 0,
            }
        }
    }

    /// Checked power: errors on a negative power of zero.
    pub fn try_pow(&self, x: u32, e: i64) -> Result<u32> {
        if e < 0 && x == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(self.pow(x, e))
    }

    /// All `q` elements in alphabet order.
    ///
    /// Prime fields list `0, 1, ..., p-1`. Extension fields list `0` followed
    /// by the successive powers `g, g^2, ..., g^(q-1) = 1` of the smallest-rep
    /// primitive element `g`, so GF(4) reads `0, a, a+1, 1`.
    pub fn element_reps(&self) -> Vec<u32> {
        if self.is_prime_field() {
            return (0..self.q()).collect();
        }
        let g = self.primitive_element();
        let mut out = Vec::with_capacity(self.q() as usize);
        out.push(0);
        let mut x = g;
        for _ in 0..self.q() - 1 {
            out.push(x);
            x = self.mul(x, g);
        }
        out
    }

    pub fn elements(&self) -> Vec<FieldElement> {
        self.element_reps()
            .into_iter()
            .map(|rep| FieldElement {
                field: self.clone(),
                rep,
            })
            .collect()
    }

    /// Renders an element: residues for prime fields, polynomials in `a`
    /// with descending powers otherwise (`a+1`, `2a+2`, `a^2+1`).
    pub fn render(&self, rep: u32) -> String {
        if self.is_prime_field() || rep == 0 {
            return rep.to_string();
        }
        let digits = self.digits(rep);
        let mut terms = Vec::new();
        for (k, &c) in digits.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let coef = if c == 1 && k > 0 {
                String::new()
            } else {
                c.to_string()
            };
            let power = match k {
                0 => String::new(),
                1 => "a".to_string(),
                _ => format!("a^{k}"),
            };
            terms.push(format!("{coef}{power}"));
        }
        terms.join("+")
    }

    /// Parses the human form produced by [`FieldSpec::render`]; also accepts
    /// signs, `*`, and integer powers such as `a^5`.
    pub fn parse_element(&self, s: &str) -> Result<u32> {
        expr::parse_constant(self, s)
    }

    /// Parses a decimal rep if the token is all digits, else the human form.
    pub fn parse_token(&self, s: &str) -> Result<u32> {
        let t = s.trim();
        if !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit()) {
            let v: u64 = t
                .parse()
                .map_err(|_| Error::Parse(format!("bad element `{t}`")))?;
            if v >= self.q() as u64 {
                return Err(Error::InvalidElement {
                    value: v,
                    q: self.q(),
                });
            }
            Ok(v as u32)
        } else {
            self.parse_element(t)
        }
    }
}

fn check_order(p: u32, r: u32) -> Result<()> {
    let q = (p as u64).checked_pow(r).unwrap_or(u64::MAX);
    if q > u32::MAX as u64 {
        return Err(Error::FieldTooLarge(q));
    }
    Ok(())
}

/// Lexicographically smallest monic irreducible of degree `r`, where the
/// coefficient tuple `(c0, c1, ..., c_{r-1})` is compared with `c0` first.
fn smallest_irreducible(base: &FieldSpec, r: u32) -> Vec<u32> {
    let p = base.p() as u64;
    let count = p.pow(r);
    for idx in 0..count {
        // c0 is the most significant digit of idx.
        let mut coeffs = vec![0u32; r as usize + 1];
        let mut m = idx;
        for i in (0..r as usize).rev() {
            coeffs[i] = (m % p) as u32;
            m /= p;
        }
        coeffs[r as usize] = 1;
        if coeffs[0] != 0 && upoly::is_irreducible(base, &coeffs) {
            return coeffs;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

/// An element of a specific field. Arithmetic between elements of different
/// fields is an error.
#[derive(Clone, PartialEq, Eq)]
pub struct FieldElement {
    field: FieldSpec,
    rep: u32,
}

impl FieldElement {
    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn rep(&self) -> u32 {
        self.rep
    }

    pub fn is_zero(&self) -> bool {
        self.rep == 0
    }

    fn same(&self, other: &Self) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    fn wrap(&self, rep: u32) -> Self {
        FieldElement {
            field: self.field.clone(),
            rep,
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same(other)?;
        Ok(self.wrap(self.field.add(self.rep, other.rep)))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same(other)?;
        Ok(self.wrap(self.field.sub(self.rep, other.rep)))
    }

    pub fn neg(&self) -> Self {
        self.wrap(self.field.neg(self.rep))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same(other)?;
        Ok(self.wrap(self.field.mul(self.rep, other.rep)))
    }

    pub fn inv(&self) -> Result<Self> {
        Ok(self.wrap(self.field.inv(self.rep)?))
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        self.same(other)?;
        Ok(self.wrap(self.field.div(self.rep, other.rep)?))
    }

    pub fn pow(&self, e: i64) -> Result<Self> {
        Ok(self.wrap(self.field.try_pow(self.rep, e)?))
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.field.render(self.rep))
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@{}", self.field.render(self.rep), self.field)
    }
}
