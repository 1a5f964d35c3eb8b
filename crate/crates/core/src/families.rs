//! Hamming, cyclic, quasi-cyclic and random LDPC codes.

use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::galois::FieldSpec;
use crate::matrix::MatrixGF;
use crate::upoly::{self, UniPoly};

const MAX_LDPC_DRAWS: usize = 1000;

/// The q-ary Hamming code with redundancy `r`.
///
/// The parity checks are `[I_r | A]`: the unit vectors first, then the
/// remaining projective points (first nonzero entry 1) in decreasing order of
/// their little-endian base-q value. The generator is the systematic
/// `[-A^T | I_k]`, which for `(2, 3)` is the familiar
///
/// ```text
/// | 1 1 1 1 0 0 0 |
/// | 0 1 1 0 1 0 0 |
/// | 1 0 1 0 0 1 0 |
/// | 1 1 0 0 0 0 1 |
/// ```
pub fn hamming_code(q: u64, r: usize) -> Result<LinearCode> {
    if r < 2 {
        return Err(Error::InvalidArgument("Hamming code needs r >= 2".into()));
    }
    let field = FieldSpec::from_order(q)?;
    let qq = field.q() as u64;
    let total = qq
        .checked_pow(r as u32)
        .filter(|&t| t <= 1 << 24)
        .ok_or_else(|| Error::InvalidArgument("Hamming code too large".into()))?;

    let mut others: Vec<(u64, Vec<u32>)> = Vec::new();
    for idx in 1..total {
        let v: Vec<u32> = (0..r)
            .map(|i| ((idx / qq.pow(i as u32)) % qq) as u32)
            .collect();
        let first = v.iter().position(|&x| x != 0).expect("idx > 0");
        let is_unit = v[first] == 1 && v.iter().filter(|&&x| x != 0).count() == 1;
        if v[first] == 1 && !is_unit {
            others.push((idx, v));
        }
    }
    others.sort_by_key(|o| std::cmp::Reverse(o.0));

    let k = others.len();
    let n = r + k;
    let mut h = MatrixGF::zeros(&field, r, n);
    let mut g = MatrixGF::zeros(&field, k, n);
    for i in 0..r {
        h.set(i, i, 1);
    }
    for (j, (_, col)) in others.iter().enumerate() {
        for (i, &x) in col.iter().enumerate() {
            h.set(i, r + j, x);
            g.set(j, i, field.neg(x));
        }
        g.set(j, r + j, 1);
    }
    Ok(LinearCode::from_parts(g.clone(), g, h.transpose()))
}

/// Cyclic code of length `n` generated by `g`. When `g` divides `x^n - 1` the
/// generator rows are the `n - deg g` successive shifts of `g`'s coefficient
/// vector; otherwise the code is spanned by all `n` cyclic shifts.
pub fn cyclic_code(field: &FieldSpec, g: &UniPoly, n: usize) -> Result<LinearCode> {
    if n == 0 {
        return Err(Error::InvalidArgument(
            "code length must be at least 1".into(),
        ));
    }
    if g.field() != field {
        return Err(Error::FieldMismatch);
    }
    if g.is_zero() {
        return Err(Error::InvalidArgument(
            "generator polynomial is zero".into(),
        ));
    }
    let mut xn1 = vec![0u32; n + 1];
    xn1[0] = field.neg(1);
    xn1[n] = 1;
    let reduced = upoly::rem(field, g.coeffs(), &xn1);
    if reduced.is_empty() {
        return LinearCode::zero_code(field, n);
    }
    let mut base = reduced.clone();
    base.resize(n, 0);
    let divides = upoly::rem(field, &xn1, &reduced).is_empty();
    let shifts = if divides {
        n - upoly::degree(&reduced).expect("nonzero")
    } else {
        n
    };
    let rows: Vec<Vec<u32>> = (0..shifts).map(|s| rotate(&base, s)).collect();
    LinearCode::from_span_with_length(field, n, &rows)
}

/// Quasi-cyclic code: every cyclic shift of every input vector. The full
/// list of shift rows is kept as the code's generators.
pub fn quasi_cyclic_code(field: &FieldSpec, vectors: &[Vec<u32>]) -> Result<LinearCode> {
    let n = vectors
        .first()
        .map(Vec::len)
        .ok_or_else(|| Error::InvalidArgument("no vectors given".into()))?;
    let mut rows = Vec::with_capacity(vectors.len() * n);
    for v in vectors {
        if v.len() != n {
            return Err(Error::DimensionMismatch("ragged vector list".into()));
        }
        rows.extend((0..n).map(|s| rotate(v, s)));
    }
    LinearCode::from_span_with_length(field, n, &rows)
}

/// Cyclic right shift by `s`.
fn rotate(v: &[u32], s: usize) -> Vec<u32> {
    let n = v.len();
    let mut out = vec![0u32; n];
    for (i, &x) in v.iter().enumerate() {
        out[(i + s) % n] = x;
    }
    out
}

/// Random binary LDPC code: `n - k` parity checks, each with exactly
/// `row_weight` ones at seeded random positions, redrawn until they are
/// independent.
pub fn rand_ldpc(n: usize, k: usize, row_weight: usize, seed: u64) -> Result<LinearCode> {
    if k == 0 || k >= n {
        return Err(Error::InvalidArgument(format!(
            "LDPC needs 0 < k < n, got k={k}, n={n}"
        )));
    }
    if row_weight == 0 || row_weight > n {
        return Err(Error::InvalidArgument(format!(
            "row weight {row_weight} outside 1..={n}"
        )));
    }
    let field = FieldSpec::new(2, 1)?;
    let m = n - k;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..MAX_LDPC_DRAWS {
        let rows: Vec<Vec<u32>> = (0..m)
            .map(|_| {
                let mut row = vec![0u32; n];
                for i in sample(&mut rng, n, row_weight) {
                    row[i] = 1;
                }
                row
            })
            .collect();
        if MatrixGF::from_rows(&field, n, &rows)?.rank() == m {
            return LinearCode::from_parity_check_span_with_length(&field, n, &rows);
        }
    }
    Err(Error::RankUnreachable {
        rank: m,
        attempts: MAX_LDPC_DRAWS,
    })
}
