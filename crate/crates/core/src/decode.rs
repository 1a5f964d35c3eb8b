//! Syndrome decoding with a coset-leader table.

use std::collections::HashMap;

use crate::code::{LinearCode, DEFAULT_ENUMERATION_BOUND};
use crate::error::{Error, Result};

/// Maps each reachable syndrome to a minimum-weight coset leader of weight at
/// most `t`. Among leaders of equal weight the lexicographically smallest
/// error vector wins.
#[derive(Debug, Clone)]
pub struct SyndromeTable {
    code: LinearCode,
    t: usize,
    table: HashMap<Vec<u32>, Vec<u32>>,
}

/// Number of vectors of length `n` and weight at most `t` over GF(q).
fn ball_size(q: u32, n: usize, t: usize) -> u128 {
    let mut total: u128 = 0;
    let mut binom: u128 = 1;
    let mut power: u128 = 1;
    for w in 0..=t.min(n) {
        if w > 0 {
            binom = binom * (n - w + 1) as u128 / w as u128;
            power = power.saturating_mul(q as u128 - 1);
        }
        total = total.saturating_add(binom.saturating_mul(power));
    }
    total
}

/// All weight-`w` vectors in increasing lexicographic order (first coordinate
/// most significant).
fn errors_of_weight(q: u32, n: usize, w: usize) -> Vec<Vec<u32>> {
    fn go(q: u32, n: usize, left: usize, pos: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        if n - pos < left {
            return;
        }
        // zero at this position sorts before any nonzero value
        go(q, n, left, pos + 1, cur, out);
        for v in 1..q {
            cur[pos] = v;
            go(q, n, left - 1, pos + 1, cur, out);
        }
        cur[pos] = 0;
    }
    let mut out = Vec::new();
    go(q, n, w, 0, &mut vec![0; n], &mut out);
    out
}

impl SyndromeTable {
    /// Builds the table for a code with known minimum distance `d`, using the
    /// default enumeration bound.
    pub fn new(code: &LinearCode, d: usize) -> Result<Self> {
        Self::with_bound(code, d, DEFAULT_ENUMERATION_BOUND)
    }

    pub fn with_bound(code: &LinearCode, d: usize, bound: u64) -> Result<Self> {
        if code.dimension() == 0 {
            return Err(Error::ZeroCode);
        }
        if d == 0 {
            return Err(Error::InvalidArgument(
                "minimum distance must be at least 1".into(),
            ));
        }
        let t = (d - 1) / 2;
        let n = code.length();
        let q = code.field().q();
        let needed = ball_size(q, n, t);
        if needed > bound as u128 {
            return Err(Error::EnumerationBound { needed, bound });
        }
        let mut table = HashMap::new();
        for w in 0..=t.min(n) {
            for e in errors_of_weight(q, n, w) {
                let s = code.syndrome(&e)?;
                table.entry(s).or_insert(e);
            }
        }
        log::debug!("syndrome table: t={t}, {} entries", table.len());
        Ok(SyndromeTable {
            code: code.clone(),
            t,
            table,
        })
    }

    pub fn code(&self) -> &LinearCode {
        &self.code
    }

    /// Number of correctable symbol errors.
    pub fn t(&self) -> usize {
        self.t
    }

    pub fn len(&self) -> usize {
        self.table.len()
    }

    pub fn is_empty(&self) -> bool {
        self.table.is_empty()
    }

    pub fn leader(&self, syndrome: &[u32]) -> Option<&[u32]> {
        self.table.get(syndrome).map(Vec::as_slice)
    }

    pub fn entries(&self) -> impl Iterator<Item = (&[u32], &[u32])> {
        self.table.iter().map(|(s, e)| (s.as_slice(), e.as_slice()))
    }

    /// Returns `v - leader(v * H)`, or [`Error::Uncorrectable`] when the
    /// syndrome is not in the table.
    pub fn decode(&self, v: &[u32]) -> Result<Vec<u32>> {
        let s = self.code.syndrome(v)?;
        let e = self.table.get(&s).ok_or(Error::Uncorrectable(self.t))?;
        let f = self.code.field();
        Ok(v.iter().zip(e).map(|(&a, &b)| f.sub(a, b)).collect())
    }
}

/// One-shot decode: builds the table for distance `d` and decodes `v`.
pub fn syndrome_decode(code: &LinearCode, v: &[u32], d: usize) -> Result<Vec<u32>> {
    SyndromeTable::new(code, d)?.decode(v)
}
