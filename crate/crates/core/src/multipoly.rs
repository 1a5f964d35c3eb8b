//! Sparse multivariate polynomials, monomial orders, point sets, and
//! vanishing ideals of finite point sets via Buchberger–Möller.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::expr;
use crate::galois::FieldSpec;
use crate::matrix::{join_reps, parse_reps};

/// Exponent vector of a monomial.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / other`; caller guarantees divisibility.
    fn quotient(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    fn times_var(&self, i: usize) -> Monomial {
        let mut e = self.0.clone();
        e[i] += 1;
        Monomial(e)
    }

    pub fn eval(&self, field: &FieldSpec, pt: &[u32]) -> u32 {
        self.0
            .iter()
            .zip(pt)
            .fold(1, |acc, (&e, &x)| field.mul(acc, field.pow(x, e as i64)))
    }
}

/// A monomial order. Lex treats the first variable as heaviest; grlex
/// compares total degree first and breaks ties with lex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum MonomialOrder {
    Lex,
    #[default]
    GrLex,
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Lex => a.0.cmp(&b.0),
            MonomialOrder::GrLex => a.degree().cmp(&b.degree()).then_with(|| a.0.cmp(&b.0)),
        }
    }
}

/// All monomials in `nvars` variables of total degree `<= max_degree`, each
/// exponent `<= caps[i]`, in increasing grlex order.
pub fn monomials_up_to(nvars: usize, max_degree: u32, caps: Option<&[u32]>) -> Vec<Monomial> {
    let mut out = Vec::new();
    for d in 0..=max_degree {
        out.extend(monomials_of_degree(nvars, d, caps));
    }
    out
}

/// All monomials of total degree exactly `d` (respecting `caps`), in
/// increasing lex order.
pub fn monomials_of_degree(nvars: usize, d: u32, caps: Option<&[u32]>) -> Vec<Monomial> {
    fn rec(i: usize, left: u32, cur: &mut Vec<u32>, caps: Option<&[u32]>, out: &mut Vec<Monomial>) {
        let n = cur.len();
        if i == n - 1 {
            if caps.is_none_or(|c| left <= c[i]) {
                cur[i] = left;
                out.push(Monomial(cur.clone()));
            }
            return;
        }
        let hi = caps.map_or(left, |c| left.min(c[i]));
        for e in 0..=hi {
            cur[i] = e;
            rec(i + 1, left - e, cur, caps, out);
        }
        cur[i] = 0;
    }
    if nvars == 0 {
        return if d == 0 {
            vec![Monomial(Vec::new())]
        } else {
            Vec::new()
        };
    }
    let mut out = Vec::new();
    rec(0, d, &mut vec![0; nvars], caps, &mut out);
    out
}

/// Sparse polynomial: a map from monomial to nonzero coefficient rep.
#[derive(Clone, PartialEq, Eq)]
pub struct MultiPoly {
    field: FieldSpec,
    nvars: usize,
    terms: BTreeMap<Monomial, u32>,
}

/// Variable names used for display and parsing: `x, y, z` for up to three
/// variables, `x1 .. xm` beyond that.
pub fn default_var_names(nvars: usize) -> Vec<String> {
    match nvars {
        1 => vec!["x".into()],
        2 => vec!["x".into(), "y".into()],
        3 => vec!["x".into(), "y".into(), "z".into()],
        _ => (1..=nvars).map(|i| format!("x{i}")).collect(),
    }
}

impl MultiPoly {
    pub fn zero(field: &FieldSpec, nvars: usize) -> Self {
        MultiPoly {
            field: field.clone(),
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(field: &FieldSpec, nvars: usize, c: u32) -> Result<Self> {
        Self::from_terms(field, nvars, [(vec![0; nvars], c)])
    }

    pub fn monomial(field: &FieldSpec, mono: Monomial) -> Self {
        let nvars = mono.nvars();
        let mut terms = BTreeMap::new();
        terms.insert(mono, 1);
        MultiPoly {
            field: field.clone(),
            nvars,
            terms,
        }
    }

    pub fn variable(field: &FieldSpec, nvars: usize, i: usize) -> Self {
        Self::monomial(field, Monomial::one(nvars).times_var(i))
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs; repeated
    /// monomials are summed and zero coefficients dropped.
    pub fn from_terms<I>(field: &FieldSpec, nvars: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<u32>, u32)>,
    {
        let mut out = Self::zero(field, nvars);
        for (exps, c) in terms {
            if exps.len() != nvars {
                return Err(Error::DimensionMismatch(format!(
                    "monomial with {} exponents in {nvars} variables",
                    exps.len()
                )));
            }
            field.check(c)?;
            out.add_term(Monomial(exps), c);
        }
        Ok(out)
    }

    fn add_term(&mut self, m: Monomial, c: u32) {
        if c == 0 {
            return;
        }
        let f = &self.field;
        let v = f.add(*self.terms.get(&m).unwrap_or(&0), c);
        if v == 0 {
            self.terms.remove(&m);
        } else {
            self.terms.insert(m, v);
        }
    }

    /// Parses human form such as `a+y*z^2`. Variables may be written with
    /// their default names or as `x1 .. xm`.
    pub fn parse(field: &FieldSpec, nvars: usize, s: &str) -> Result<Self> {
        let defaults = default_var_names(nvars);
        let indexed: Vec<String> = (1..=nvars).map(|i| format!("x{i}")).collect();
        let mut vars: Vec<(&str, usize)> = Vec::new();
        for (i, n) in defaults.iter().enumerate() {
            vars.push((n.as_str(), i));
        }
        for (i, n) in indexed.iter().enumerate() {
            vars.push((n.as_str(), i));
        }
        let map = expr::parse_poly(field, nvars, &vars, s)?;
        Self::from_terms(field, nvars, map)
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, u32)> {
        self.terms.iter().map(|(m, &c)| (m, c))
    }

    pub fn coefficient(&self, m: &Monomial) -> u32 {
        self.terms.get(m).copied().unwrap_or(0)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn leading_term(&self, order: MonomialOrder) -> Option<(&Monomial, u32)> {
        self.terms
            .iter()
            .max_by(|a, b| order.cmp(a.0, b.0))
            .map(|(m, &c)| (m, c))
    }

    fn compatible(&self, other: &Self) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if self.nvars != other.nvars {
            return Err(Error::DimensionMismatch(format!(
                "polynomials in {} and {} variables",
                self.nvars, other.nvars
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.compatible(other)?;
        let mut out = self.clone();
        for (m, c) in other.terms() {
            out.add_term(m.clone(), c);
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        let f = &self.field;
        MultiPoly {
            field: f.clone(),
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, &c)| (m.clone(), f.neg(c)))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: u32) -> Result<Self> {
        self.field.check(c)?;
        let f = &self.field;
        if c == 0 {
            return Ok(Self::zero(f, self.nvars));
        }
        Ok(MultiPoly {
            field: f.clone(),
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, &v)| (m.clone(), f.mul(c, v)))
                .collect(),
        })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.compatible(other)?;
        let f = &self.field;
        let mut out = Self::zero(f, self.nvars);
        for (m1, c1) in self.terms() {
            for (m2, c2) in other.terms() {
                out.add_term(m1.mul(m2), f.mul(c1, c2));
            }
        }
        Ok(out)
    }

    /// `c * mono * self`.
    fn mul_term(&self, mono: &Monomial, c: u32) -> Self {
        let f = &self.field;
        MultiPoly {
            field: f.clone(),
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, &v)| (m.mul(mono), f.mul(c, v)))
                .collect(),
        }
    }

    pub fn eval(&self, pt: &[u32]) -> Result<u32> {
        if pt.len() != self.nvars {
            return Err(Error::DimensionMismatch(format!(
                "point of arity {} for a polynomial in {} variables",
                pt.len(),
                self.nvars
            )));
        }
        for &x in pt {
            self.field.check(x)?;
        }
        let f = &self.field;
        Ok(self
            .terms
            .iter()
            .fold(0, |acc, (m, &c)| f.add(acc, f.mul(c, m.eval(f, pt)))))
    }

    /// One line per term: `c e1 ... em`, in ascending lex order of monomials.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for (m, c) in self.terms() {
            s.push_str(&c.to_string());
            for e in m.exponents() {
                s.push(' ');
                s.push_str(&e.to_string());
            }
            s.push('\n');
        }
        s
    }

    pub fn from_text_lines<'a, I>(field: &FieldSpec, nvars: usize, lines: I) -> Result<Self>
    where
        I: IntoIterator<Item = &'a str>,
    {
        let mut terms = Vec::new();
        for line in lines {
            let v = parse_reps(line)?;
            if v.len() != nvars + 1 {
                return Err(Error::Parse(format!("bad term line `{line}`")));
            }
            terms.push((v[1..].to_vec(), v[0]));
        }
        Self::from_terms(field, nvars, terms)
    }

    /// Display helper with explicit variable names.
    pub fn with_names<'a>(&'a self, names: &'a [&'a str]) -> Named<'a> {
        Named { poly: self, names }
    }

    fn write_named(&self, f: &mut fmt::Formatter<'_>, names: &[&str]) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let field = &self.field;
        let mut ordered: Vec<(&Monomial, u32)> = self.terms().collect();
        ordered.sort_by(|a, b| MonomialOrder::GrLex.cmp(b.0, a.0));
        let mut pieces = Vec::new();
        for (m, c) in ordered {
            let mono: Vec<String> = m
                .exponents()
                .iter()
                .zip(names)
                .filter(|(&e, _)| e > 0)
                .map(|(&e, n)| {
                    if e == 1 {
                        n.to_string()
                    } else {
                        format!("{n}^{e}")
                    }
                })
                .collect();
            let mono = mono.join("*");
            // Expand compound extension-field coefficients into single-digit
            // pieces so the output parses back without parentheses.
            for piece in coefficient_pieces(field, c) {
                pieces.push(match (piece.as_str(), mono.is_empty()) {
                    (_, true) => piece,
                    ("1", false) => mono.clone(),
                    (_, false) if piece.bytes().all(|b| b.is_ascii_digit()) => {
                        format!("{piece}{mono}")
                    }
                    _ => format!("{piece}*{mono}"),
                });
            }
        }
        f.write_str(&pieces.join("+"))
    }
}

fn coefficient_pieces(field: &FieldSpec, c: u32) -> Vec<String> {
    if field.is_prime_field() {
        return vec![c.to_string()];
    }
    field.render(c).split('+').map(str::to_string).collect()
}

pub struct Named<'a> {
    poly: &'a MultiPoly,
    names: &'a [&'a str],
}

impl fmt::Display for Named<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.poly.write_named(f, self.names)
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = default_var_names(self.nvars);
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        self.write_named(f, &refs)
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly({self} over {})", self.field)
    }
}

/// Ordered list of distinct points in `F^m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointSet {
    field: FieldSpec,
    dim: usize,
    points: Vec<Vec<u32>>,
}

impl PointSet {
    /// Rejects duplicate points.
    pub fn new(field: &FieldSpec, dim: usize, points: Vec<Vec<u32>>) -> Result<Self> {
        let mut seen = HashSet::new();
        for p in &points {
            if !seen.insert(p.clone()) {
                return Err(Error::InvalidArgument(format!("duplicate point {p:?}")));
            }
        }
        Self::dedup(field, dim, points)
    }

    /// Keeps the first occurrence of each point.
    pub fn dedup(field: &FieldSpec, dim: usize, points: Vec<Vec<u32>>) -> Result<Self> {
        let mut seen = HashSet::new();
        let mut out = Vec::with_capacity(points.len());
        for p in points {
            if p.len() != dim {
                return Err(Error::DimensionMismatch(format!(
                    "point {p:?} is not in dimension {dim}"
                )));
            }
            for &x in &p {
                field.check(x)?;
            }
            if seen.insert(p.clone()) {
                out.push(p);
            }
        }
        Ok(PointSet {
            field: field.clone(),
            dim,
            points: out,
        })
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Vec<u32>] {
        &self.points
    }
}

/// Reduced Gröbner basis of the vanishing ideal of a point set.
#[derive(Clone, Debug)]
pub struct VanishingIdeal {
    pub order: MonomialOrder,
    pub basis: Vec<MultiPoly>,
    pub standard_monomials: Vec<Monomial>,
}

impl VanishingIdeal {
    /// Normal form modulo the basis.
    pub fn reduce(&self, f: &MultiPoly) -> MultiPoly {
        reduce(f, &self.basis, self.order)
    }

    /// True iff `f` vanishes on the point set.
    pub fn contains(&self, f: &MultiPoly) -> bool {
        self.reduce(f).is_zero()
    }
}

/// Buchberger–Möller: walks monomials in increasing order, keeping the
/// evaluation vectors of standard monomials in echelon form. A monomial whose
/// evaluation vector is a combination of smaller standard ones yields a basis
/// element; otherwise it becomes standard and its multiples by each variable
/// become candidates.
pub fn bm_vanishing_ideal(points: &PointSet, order: MonomialOrder) -> Result<VanishingIdeal> {
    if points.is_empty() {
        return Err(Error::InvalidArgument("empty point set".into()));
    }
    let f = points.field();
    let m = points.dim();
    let n = points.len();

    // Echelon rows: normalized evaluation vector (pivot entry 1) plus the
    // coefficients expressing it over the standard monomials found so far.
    struct Row {
        pivot: usize,
        vec: Vec<u32>,
        comb: Vec<u32>,
    }
    let mut rows: Vec<Row> = Vec::new();
    let mut standard: Vec<Monomial> = Vec::new();
    let mut leads: Vec<Monomial> = Vec::new();
    let mut basis: Vec<MultiPoly> = Vec::new();
    let mut candidates: Vec<Monomial> = vec![Monomial::one(m)];
    let mut seen: HashSet<Monomial> = candidates.iter().cloned().collect();

    loop {
        candidates.retain(|t| !leads.iter().any(|l| l.divides(t)));
        let Some(idx) =
            (0..candidates.len()).min_by(|&a, &b| order.cmp(&candidates[a], &candidates[b]))
        else {
            break;
        };
        let t = candidates.swap_remove(idx);

        let mut v: Vec<u32> = points.points().iter().map(|p| t.eval(f, p)).collect();
        // Combination of standard monomials subtracted from t so far.
        let mut sub = vec![0u32; standard.len()];
        for row in &rows {
            let c = v[row.pivot];
            if c == 0 {
                continue;
            }
            for (x, &y) in v.iter_mut().zip(&row.vec) {
                *x = f.sub(*x, f.mul(c, y));
            }
            for (s, &y) in sub.iter_mut().zip(&row.comb) {
                *s = f.add(*s, f.mul(c, y));
            }
        }
        match v.iter().position(|&x| x != 0) {
            None => {
                // t - sum(sub_i * s_i) vanishes on every point.
                let mut g = MultiPoly::monomial(f, t.clone());
                for (s, &c) in standard.iter().zip(&sub) {
                    g.add_term(s.clone(), f.neg(c));
                }
                leads.push(t);
                basis.push(g);
            }
            Some(pivot) => {
                let inv = f.inv(v[pivot]).expect("pivot is nonzero");
                let vec = v.iter().map(|&x| f.mul(x, inv)).collect();
                let mut comb: Vec<u32> = sub.iter().map(|&c| f.mul(f.neg(c), inv)).collect();
                comb.push(inv);
                for row in rows.iter_mut() {
                    row.comb.push(0);
                }
                rows.push(Row { pivot, vec, comb });
                for i in 0..m {
                    let next = t.times_var(i);
                    if seen.insert(next.clone()) {
                        candidates.push(next);
                    }
                }
                standard.push(t);
            }
        }
        debug_assert!(standard.len() <= n);
    }
    Ok(VanishingIdeal {
        order,
        basis,
        standard_monomials: standard,
    })
}

/// Normal form of `f` modulo `basis`: repeatedly cancels the largest term
/// divisible by some leading term. Basis elements must be monic.
pub fn reduce(f: &MultiPoly, basis: &[MultiPoly], order: MonomialOrder) -> MultiPoly {
    let field = f.field().clone();
    let leads: Vec<(Monomial, MultiPoly)> = basis
        .iter()
        .filter_map(|g| g.leading_term(order).map(|(m, _)| (m.clone(), g.clone())))
        .collect();
    let mut rest = f.clone();
    let mut out = MultiPoly::zero(&field, f.nvars());
    while let Some((lm, lc)) = rest.leading_term(order).map(|(m, c)| (m.clone(), c)) {
        match leads.iter().find(|(l, _)| l.divides(&lm)) {
            Some((l, g)) => {
                let lead_coef = g.coefficient(l);
                let c = field
                    .div(lc, lead_coef)
                    .expect("leading coefficient is nonzero");
                let q = lm.quotient(l);
                let step = g.mul_term(&q, c);
                rest = rest.sub(&step).expect("same ring");
            }
            None => {
                rest.terms.remove(&lm);
                out.add_term(lm, lc);
            }
        }
    }
    out
}

/// `points n m` block body helper: one line of reps per point.
pub(crate) fn points_to_text(points: &PointSet) -> String {
    let mut s = format!("points {} {}\n", points.len(), points.dim());
    for p in points.points() {
        s.push_str(&join_reps(p));
        s.push('\n');
    }
    s
}
