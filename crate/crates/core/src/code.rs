//! Linear codes: constructors, parameters and transforms.
//!
//! Conventions: codewords are row vectors and encoding is `m * G`. The
//! parity-check matrix `H` is `n x (n - k)` and its *columns* span the dual
//! code, so `v` is a codeword iff `v * H = 0` and the syndrome of `v` is the
//! row vector `v * H`. This is the transpose of the usual textbook layout.

use std::fmt;

use num_rational::Ratio;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::galois::{FieldElement, FieldSpec};
use crate::matrix::MatrixGF;

/// Default cap on `q^k` for exhaustive codeword enumeration.
pub const DEFAULT_ENUMERATION_BOUND: u64 = 1 << 22;

const MAX_RANDOM_DRAWS: usize = 1000;

#[derive(Clone)]
pub struct LinearCode {
    field: FieldSpec,
    n: usize,
    /// Spanning rows as supplied by the constructor (may be dependent).
    generators: MatrixGF,
    /// `k x n`, rank `k`.
    generator: MatrixGF,
    /// `n x (n - k)`, columns a basis of the dual.
    parity_check: MatrixGF,
}

fn check_rows(field: &FieldSpec, n: usize, rows: &[Vec<u32>]) -> Result<MatrixGF> {
    if n == 0 {
        return Err(Error::InvalidArgument(
            "code length must be at least 1".into(),
        ));
    }
    MatrixGF::from_rows(field, n, rows)
}

fn infer_length(rows: &[Vec<u32>]) -> Result<usize> {
    rows.first()
        .map(Vec::len)
        .ok_or_else(|| Error::InvalidArgument("empty vector list and no length given".into()))
}

impl LinearCode {
    /// The code spanned by `rows`. Independent rows are kept verbatim as the
    /// generator matrix; dependent input is replaced by its nonzero RREF rows.
    pub fn from_span(field: &FieldSpec, rows: &[Vec<u32>]) -> Result<Self> {
        Self::from_span_with_length(field, infer_length(rows)?, rows)
    }

    pub fn from_span_with_length(field: &FieldSpec, n: usize, rows: &[Vec<u32>]) -> Result<Self> {
        Self::from_generator(check_rows(field, n, rows)?)
    }

    pub fn from_span_pr(p: u32, r: u32, n: usize, rows: &[Vec<u32>]) -> Result<Self> {
        Self::from_span_with_length(&FieldSpec::new(p, r)?, n, rows)
    }

    pub fn from_generator(gens: MatrixGF) -> Result<Self> {
        if gens.ncols() == 0 {
            return Err(Error::InvalidArgument(
                "code length must be at least 1".into(),
            ));
        }
        let rank = gens.rank();
        let generator = if rank == gens.nrows() {
            gens.clone()
        } else {
            gens.row_basis()
        };
        let parity_check = generator.nullspace_basis().transpose();
        Ok(LinearCode {
            field: gens.field().clone(),
            n: gens.ncols(),
            generators: gens,
            generator,
            parity_check,
        })
    }

    /// The code orthogonal to every row of `rows`. Independent parity rows
    /// are kept verbatim as the columns of `H`.
    pub fn from_parity_check_span(field: &FieldSpec, rows: &[Vec<u32>]) -> Result<Self> {
        Self::from_parity_check_span_with_length(field, infer_length(rows)?, rows)
    }

    pub fn from_parity_check_span_with_length(
        field: &FieldSpec,
        n: usize,
        rows: &[Vec<u32>],
    ) -> Result<Self> {
        Self::from_parity_rows(check_rows(field, n, rows)?)
    }

    pub fn from_parity_check_pr(p: u32, r: u32, n: usize, rows: &[Vec<u32>]) -> Result<Self> {
        Self::from_parity_check_span_with_length(&FieldSpec::new(p, r)?, n, rows)
    }

    /// From an `n x s` matrix whose columns span the dual code.
    pub fn from_parity_check_matrix(h: &MatrixGF) -> Result<Self> {
        if h.nrows() == 0 {
            return Err(Error::InvalidArgument(
                "code length must be at least 1".into(),
            ));
        }
        Self::from_parity_rows(h.transpose())
    }

    fn from_parity_rows(checks: MatrixGF) -> Result<Self> {
        let rank = checks.rank();
        let hrows = if rank == checks.nrows() {
            checks.clone()
        } else {
            checks.row_basis()
        };
        let generator = checks.nullspace_basis();
        Ok(LinearCode {
            field: checks.field().clone(),
            n: checks.ncols(),
            generators: generator.clone(),
            generator,
            parity_check: hrows.transpose(),
        })
    }

    /// Assembles a code from a known basis and parity-check matrix.
    pub(crate) fn from_parts(
        generators: MatrixGF,
        generator: MatrixGF,
        parity_check: MatrixGF,
    ) -> Self {
        debug_assert!(generator
            .mul(&parity_check)
            .map(|m| m.is_zero())
            .unwrap_or(false));
        LinearCode {
            field: generator.field().clone(),
            n: generator.ncols(),
            generators,
            generator,
            parity_check,
        }
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn length(&self) -> usize {
        self.n
    }

    pub fn dimension(&self) -> usize {
        self.generator.nrows()
    }

    pub fn rate(&self) -> Ratio<usize> {
        Ratio::new(self.dimension(), self.n)
    }

    /// `(n, k, k/n)`.
    pub fn parameters(&self) -> (usize, usize, Ratio<usize>) {
        (self.length(), self.dimension(), self.rate())
    }

    pub fn generator_matrix(&self) -> &MatrixGF {
        &self.generator
    }

    /// The spanning rows the code was built from.
    pub fn generators(&self) -> &MatrixGF {
        &self.generators
    }

    pub fn parity_check_matrix(&self) -> &MatrixGF {
        &self.parity_check
    }

    pub fn alphabet(&self) -> Vec<FieldElement> {
        self.field.elements()
    }

    pub fn encode(&self, message: &[u32]) -> Result<Vec<u32>> {
        self.generator.vecmat(message)
    }

    /// `v * H`.
    pub fn syndrome(&self, v: &[u32]) -> Result<Vec<u32>> {
        self.parity_check.vecmat(v)
    }

    pub fn contains(&self, v: &[u32]) -> Result<bool> {
        Ok(self.syndrome(v)?.iter().all(|&x| x == 0))
    }

    fn message_count(&self, bound: u64) -> Result<u64> {
        let q = self.field.q() as u128;
        let needed = q.checked_pow(self.dimension() as u32).unwrap_or(u128::MAX);
        if needed > bound as u128 {
            return Err(Error::EnumerationBound { needed, bound });
        }
        Ok(needed as u64)
    }

    /// Visits `m * G` for every message `m` in lexicographic rep order (first
    /// coordinate most significant).
    fn for_each_codeword(&self, bound: u64, mut visit: impl FnMut(&[u32])) -> Result<()> {
        let count = self.message_count(bound)?;
        let f = &self.field;
        let q = f.q();
        let k = self.dimension();
        let mut msg = vec![0u32; k];
        let mut word = vec![0u32; self.n];
        visit(&word);
        for _ in 1..count {
            // odometer step; each changed digit updates the word by delta * row
            let mut j = k;
            loop {
                j -= 1;
                let old = msg[j];
                let new = if old + 1 == q { 0 } else { old + 1 };
                msg[j] = new;
                let delta = f.sub(new, old);
                for (w, &g) in word.iter_mut().zip(self.generator.row(j)) {
                    *w = f.add(*w, f.mul(delta, g));
                }
                if new != 0 {
                    break;
                }
            }
            visit(&word);
        }
        Ok(())
    }

    pub fn codewords(&self) -> Result<Vec<Vec<u32>>> {
        self.codewords_bounded(DEFAULT_ENUMERATION_BOUND)
    }

    pub fn codewords_bounded(&self, bound: u64) -> Result<Vec<Vec<u32>>> {
        let mut out = Vec::new();
        self.for_each_codeword(bound, |w| out.push(w.to_vec()))?;
        Ok(out)
    }

    /// Exact minimum Hamming weight by exhaustive enumeration.
    pub fn minimum_weight(&self) -> Result<usize> {
        self.minimum_weight_bounded(DEFAULT_ENUMERATION_BOUND)
    }

    pub fn minimum_weight_bounded(&self, bound: u64) -> Result<usize> {
        if self.dimension() == 0 {
            return Err(Error::ZeroCode);
        }
        let mut best = usize::MAX;
        self.for_each_codeword(bound, |w| {
            let wt = w.iter().filter(|&&x| x != 0).count();
            if wt > 0 && wt < best {
                best = wt;
            }
        })?;
        Ok(best)
    }

    pub fn dual(&self) -> LinearCode {
        let generator = self.parity_check.transpose();
        LinearCode {
            field: self.field.clone(),
            n: self.n,
            generators: generator.clone(),
            generator,
            parity_check: self.generator.transpose(),
        }
    }

    /// Codewords vanishing on `positions`, with those coordinates deleted.
    pub fn shorten(&self, positions: &[usize]) -> Result<LinearCode> {
        let mut drop = positions.to_vec();
        drop.sort_unstable();
        drop.dedup();
        if let Some(&bad) = drop.iter().find(|&&i| i >= self.n) {
            return Err(Error::InvalidArgument(format!(
                "position {bad} out of range for length {}",
                self.n
            )));
        }
        if drop.len() == self.n {
            return Err(Error::InvalidArgument(
                "cannot shorten away every coordinate".into(),
            ));
        }
        let mut checks = self.parity_check.transpose().to_rows();
        for &i in &drop {
            let mut e = vec![0u32; self.n];
            e[i] = 1;
            checks.push(e);
        }
        let sub = Self::from_parity_check_span_with_length(&self.field, self.n, &checks)?;
        let keep: Vec<usize> = (0..self.n)
            .filter(|i| drop.binary_search(i).is_err())
            .collect();
        let rows = sub.generator.select_columns(&keep).to_rows();
        Self::from_span_with_length(&self.field, keep.len(), &rows)
    }

    pub fn zero_code(field: &FieldSpec, n: usize) -> Result<Self> {
        Self::from_span_with_length(field, n, &[])
    }

    pub fn universe_code(field: &FieldSpec, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument(
                "code length must be at least 1".into(),
            ));
        }
        Self::from_generator(MatrixGF::identity(field, n))
    }

    pub fn repetition_code(field: &FieldSpec, n: usize) -> Result<Self> {
        Self::from_span_with_length(field, n, &[vec![1; n]])
    }

    pub fn zero_sum_code(field: &FieldSpec, n: usize) -> Result<Self> {
        Self::from_parity_check_span_with_length(field, n, &[vec![1; n]])
    }

    /// A random `[n, k]` code; the same seed always gives the same code.
    pub fn random(field: &FieldSpec, n: usize, k: usize, seed: u64) -> Result<Self> {
        if k == 0 || k > n {
            return Err(Error::InvalidArgument(format!(
                "random code needs 0 < k <= n, got k={k}, n={n}"
            )));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..MAX_RANDOM_DRAWS {
            let data: Vec<u32> = (0..n * k).map(|_| rng.gen_range(0..field.q())).collect();
            let g = MatrixGF::new(field, k, n, data)?;
            if g.rank() == k {
                return Self::from_generator(g);
            }
        }
        Err(Error::RankUnreachable {
            rank: k,
            attempts: MAX_RANDOM_DRAWS,
        })
    }
}

impl PartialEq for LinearCode {
    /// Same field, same length, same row space. Mismatched fields or lengths
    /// compare unequal rather than erroring.
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field
            && self.n == other.n
            && self
                .generator
                .row_space_eq(&other.generator)
                .unwrap_or(false)
    }
}

impl fmt::Display for LinearCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        const HEAD: &str = "Code with Generator Matrix: ";
        if self.dimension() == 0 {
            return write!(f, "{HEAD}(zero code of length {})", self.n);
        }
        let pad = " ".repeat(HEAD.len());
        for (i, line) in self.generator.pretty().lines().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{}{line}", if i == 0 { HEAD } else { pad.as_str() })?;
        }
        Ok(())
    }
}

impl fmt::Debug for LinearCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "LinearCode[{}, {}] over {:?}\n{:?}",
            self.n,
            self.dimension(),
            self.field,
            self.generator
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(q: u64) -> FieldSpec {
        FieldSpec::from_order(q).unwrap()
    }

    fn hamming74(f2: &FieldSpec) -> LinearCode {
        LinearCode::from_parity_check_span(
            f2,
            &[
                vec![1, 0, 0, 1, 0, 1, 1],
                vec![0, 1, 0, 1, 1, 0, 1],
                vec![0, 0, 1, 1, 1, 1, 0],
            ],
        )
        .unwrap()
    }

    #[test]
    fn span_keeps_independent_rows() {
        let f4 = gf(4);
        let rows = vec![vec![1, 1, 0, 0], vec![0, 0, 1, 1]];
        let c = LinearCode::from_span(&f4, &rows).unwrap();
        assert_eq!(c.generator_matrix().to_rows(), rows);
        assert_eq!(
            c.to_string(),
            "Code with Generator Matrix: | 1 1 0 0 |\n                            | 0 0 1 1 |"
        );

        let f2 = gf(2);
        let c = LinearCode::from_span(&f2, &[vec![1, 1], vec![1, 1]]).unwrap();
        assert_eq!(c.dimension(), 1);
        assert_eq!(c.generator_matrix().to_rows(), vec![vec![1, 1]]);
        assert_eq!(c.generators().nrows(), 2);

        let z = LinearCode::from_span(&gf(5), &[vec![0, 0, 0]]).unwrap();
        assert_eq!(z.dimension(), 0);
    }

    #[test]
    fn span_errors() {
        let f2 = gf(2);
        assert!(LinearCode::from_span(&f2, &[]).is_err());
        assert!(LinearCode::from_span(&f2, &[vec![1, 0], vec![1]]).is_err());
        assert!(LinearCode::from_span(&f2, &[vec![2, 0]]).is_err());
        assert!(LinearCode::from_span_with_length(&f2, 0, &[]).is_err());
    }

    #[test]
    fn parity_check_constructors() {
        let f2 = gf(2);
        let even = LinearCode::from_parity_check_span(&f2, &[vec![1, 1, 1, 1]]).unwrap();
        assert_eq!(even.dimension(), 3);
        assert_eq!(even, LinearCode::zero_sum_code(&f2, 4).unwrap());

        let f9 = gf(9);
        let a = f9.generator();
        let a1 = f9.add(a, 1);
        let lh = vec![
            vec![1, 0, a, 0, 0],
            vec![0, a, a1, 1, 0],
            vec![1, 1, 1, a, 0],
        ];
        let c = LinearCode::from_parity_check_span(&f9, &lh).unwrap();
        assert_eq!(c.dimension(), 2);
        for g in c.generator_matrix().rows() {
            for h in &lh {
                let dot = g
                    .iter()
                    .zip(h)
                    .fold(0, |acc, (&x, &y)| f9.add(acc, f9.mul(x, y)));
                assert_eq!(dot, 0);
            }
        }

        let full = LinearCode::from_parity_check_span(&f2, &[vec![1, 0], vec![0, 1]]).unwrap();
        assert_eq!(full.dimension(), 0);

        let h = MatrixGF::from_rows(&f2, 1, &[vec![1], vec![1], vec![1]]).unwrap();
        let c = LinearCode::from_parity_check_matrix(&h).unwrap();
        assert_eq!(c, LinearCode::zero_sum_code(&f2, 3).unwrap());
    }

    #[test]
    fn generator_constructor() {
        let f4 = gf(4);
        let m = MatrixGF::from_rows(&f4, 4, &[vec![1, 0, 1, 0], vec![0, 1, 1, 1]]).unwrap();
        let c = LinearCode::from_generator(m).unwrap();
        assert_eq!((c.length(), c.dimension()), (4, 2));
        let u = LinearCode::from_generator(MatrixGF::identity(&f4, 3)).unwrap();
        assert_eq!(u, LinearCode::universe_code(&f4, 3).unwrap());
        let z = LinearCode::from_generator(MatrixGF::zeros(&f4, 1, 3)).unwrap();
        assert_eq!(z.dimension(), 0);
    }

    #[test]
    fn parameters_and_rate() {
        let c = LinearCode::from_span(&gf(4), &[vec![1, 1, 0, 0], vec![0, 0, 1, 1]]).unwrap();
        assert_eq!(c.parameters(), (4, 2, Ratio::new(1, 2)));
        let u = LinearCode::universe_code(&gf(2), 5).unwrap();
        assert_eq!(u.rate(), Ratio::from_integer(1));
        let r = LinearCode::repetition_code(&gf(3), 4).unwrap();
        assert_eq!(r.parameters(), (4, 1, Ratio::new(1, 4)));
    }

    #[test]
    fn codeword_enumeration() {
        let z = LinearCode::zero_code(&gf(2), 3).unwrap();
        assert_eq!(z.codewords().unwrap(), vec![vec![0, 0, 0]]);
        let r = LinearCode::repetition_code(&gf(2), 2).unwrap();
        assert_eq!(r.codewords().unwrap(), vec![vec![0, 0], vec![1, 1]]);

        let f4 = gf(4);
        let c = LinearCode::from_span(&f4, &[vec![1, 1, 0, 0], vec![0, 0, 1, 1]]).unwrap();
        let words = c.codewords().unwrap();
        assert_eq!(words.len(), 16);
        let set: std::collections::HashSet<_> = words.iter().cloned().collect();
        assert_eq!(set.len(), 16);
        for x in &words {
            for y in &words {
                let s: Vec<u32> = x.iter().zip(y).map(|(&a, &b)| f4.add(a, b)).collect();
                assert!(set.contains(&s));
            }
        }
        // order follows m * G with lexicographic messages
        let expect: Vec<Vec<u32>> = (0..16u32)
            .map(|i| c.encode(&[i / 4, i % 4]).unwrap())
            .collect();
        assert_eq!(words, expect);
    }

    #[test]
    fn enumeration_bound() {
        let c = LinearCode::universe_code(&gf(2), 10).unwrap();
        assert!(matches!(
            c.codewords_bounded(100),
            Err(Error::EnumerationBound {
                needed: 1024,
                bound: 100
            })
        ));
    }

    #[test]
    fn minimum_weights() {
        let c = LinearCode::from_span(&gf(4), &[vec![1, 1, 0, 0], vec![0, 0, 1, 1]]).unwrap();
        assert_eq!(c.minimum_weight().unwrap(), 2);
        let r = LinearCode::repetition_code(&gf(5), 6).unwrap();
        assert_eq!(r.minimum_weight().unwrap(), 6);
        assert_eq!(hamming74(&gf(2)).minimum_weight().unwrap(), 3);
        let z = LinearCode::zero_code(&gf(2), 4).unwrap();
        assert_eq!(z.minimum_weight(), Err(Error::ZeroCode));
        assert_eq!(
            LinearCode::zero_sum_code(&gf(3), 3)
                .unwrap()
                .minimum_weight()
                .unwrap(),
            2
        );
        assert_eq!(
            LinearCode::universe_code(&gf(2), 4)
                .unwrap()
                .minimum_weight()
                .unwrap(),
            1
        );
        let r = LinearCode::repetition_code(&gf(4), 5).unwrap();
        assert_eq!(
            (r.length(), r.dimension(), r.minimum_weight().unwrap()),
            (5, 1, 5)
        );
    }

    #[test]
    fn duals() {
        let f4 = gf(4);
        let c = LinearCode::from_span(&f4, &[vec![1, 1, 0, 0], vec![0, 0, 1, 1]]).unwrap();
        assert_eq!(c.dual(), c);
        let u = LinearCode::universe_code(&f4, 3).unwrap();
        assert_eq!(u.dual(), LinearCode::zero_code(&f4, 3).unwrap());
        let f2 = gf(2);
        for n in 1..6 {
            let rep = LinearCode::repetition_code(&f2, n).unwrap();
            let zs = LinearCode::zero_sum_code(&f2, n).unwrap();
            assert_eq!(rep.dual(), zs);
            assert_eq!(zs.dual(), rep);
            assert!(rep
                .generator_matrix()
                .mul(&zs.generator_matrix().transpose())
                .unwrap()
                .is_zero());
        }
    }

    #[test]
    fn shortening() {
        let f2 = gf(2);
        let u = LinearCode::universe_code(&f2, 3).unwrap();
        assert_eq!(
            u.shorten(&[0]).unwrap(),
            LinearCode::universe_code(&f2, 2).unwrap()
        );
        let f3 = gf(3);
        let r = LinearCode::repetition_code(&f3, 4).unwrap();
        let s = r.shorten(&[1]).unwrap();
        assert_eq!((s.length(), s.dimension()), (3, 0));
        let h = hamming74(&f2).shorten(&[0]).unwrap();
        assert_eq!((h.length(), h.dimension()), (6, 3));
        assert!(u.shorten(&[3]).is_err());
    }

    #[test]
    fn equality_rules() {
        let f2 = gf(2);
        let a = LinearCode::from_span(&f2, &[vec![1, 1, 0, 0], vec![0, 0, 1, 1]]).unwrap();
        let b = LinearCode::from_span(&f2, &[vec![1, 1, 1, 1], vec![0, 0, 1, 1]]).unwrap();
        let c = LinearCode::from_span(&f2, &[vec![1, 1, 0, 0]]).unwrap();
        let d = LinearCode::from_span(&f2, &[vec![0, 0, 1, 1]]).unwrap();
        assert_eq!(a, b);
        assert_ne!(c, d);
        let other_field =
            LinearCode::from_span(&gf(3), &[vec![1, 1, 0, 0], vec![0, 0, 1, 1]]).unwrap();
        assert_ne!(a, other_field);
        assert_ne!(a, LinearCode::universe_code(&f2, 3).unwrap());
    }

    #[test]
    fn random_codes() {
        let f2 = gf(2);
        let c = LinearCode::random(&f2, 4, 4, 7).unwrap();
        assert_eq!(c, LinearCode::universe_code(&f2, 4).unwrap());
        let f5 = gf(5);
        let a = LinearCode::random(&f5, 6, 3, 11).unwrap();
        let b = LinearCode::random(&f5, 6, 3, 11).unwrap();
        assert_eq!(a.generator_matrix(), b.generator_matrix());
        let c = LinearCode::random(&f5, 4, 2, 3).unwrap();
        assert_eq!(c.generator_matrix().rank(), 2);
        assert!(LinearCode::random(&f5, 3, 4, 0).is_err());
        assert!(LinearCode::random(&f5, 3, 0, 0).is_err());
    }
}
