//! Tamo–Barg locally recoverable codes.
//!
//! The evaluation points are grouped into blocks of size `locality + 1`, and
//! the good polynomial `g` is constant on every block. A message
//! `(c_ij)` encodes to the evaluations of `sum_ij c_ij x^i g(x)^j` with
//! `i < locality` and `j < k / locality`. Restricted to one block, `g` is a
//! constant, so the codeword there agrees with a polynomial of degree below
//! `locality`; any erased symbol is recovered by interpolating the other
//! `locality` symbols of its block.

use std::collections::HashSet;

use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::galois::FieldSpec;
use crate::matrix::MatrixGF;
use crate::upoly::{self, UniPoly};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LrcParams {
    pub q: u64,
    pub n: usize,
    pub k: usize,
    pub locality: usize,
}

/// True iff `g` has degree equal to the common block size and takes a single
/// value on each block.
pub fn is_good_polynomial(g: &UniPoly, blocks: &[Vec<u32>], field: &FieldSpec) -> bool {
    if g.field() != field || blocks.is_empty() {
        return false;
    }
    let size = blocks[0].len();
    if blocks.iter().any(|b| b.len() != size) || g.degree() != Some(size) {
        return false;
    }
    blocks.iter().all(|b| {
        if b.iter().any(|&x| field.check(x).is_err()) {
            return false;
        }
        let v = g.eval(b[0]);
        b.iter().all(|&x| g.eval(x) == v)
    })
}

#[derive(Debug, Clone)]
pub struct LocallyRecoverableCode {
    params: LrcParams,
    field: FieldSpec,
    blocks: Vec<Vec<u32>>,
    good: UniPoly,
    code: LinearCode,
    /// `(block index, offset within block)` for each coordinate.
    layout: Vec<(usize, usize)>,
}

impl LocallyRecoverableCode {
    /// Builds the code. Coordinates follow the blocks in the given order;
    /// generator rows are `x^i g(x)^j`, `j`-major.
    pub fn new(params: LrcParams, blocks: Vec<Vec<u32>>, g: UniPoly) -> Result<Self> {
        let LrcParams { q, n, k, locality } = params;
        let field = FieldSpec::from_order(q)?;
        if locality == 0 || k == 0 || k % locality != 0 {
            return Err(Error::LocalityNotDividing { locality, k });
        }
        validate_blocks(&field, n, locality, &blocks)?;
        if !is_good_polynomial(&g, &blocks, &field) {
            return Err(Error::NotGoodPolynomial);
        }
        let groups = k / locality;
        let max_degree = (groups - 1) * (locality + 1) + (locality - 1);
        if max_degree > n - 1 {
            return Err(Error::DegreeOverflow {
                max_degree,
                limit: n - 1,
            });
        }

        let points: Vec<u32> = blocks.iter().flatten().copied().collect();
        let layout = blocks
            .iter()
            .enumerate()
            .flat_map(|(b, blk)| (0..blk.len()).map(move |o| (b, o)))
            .collect();
        let gvals: Vec<u32> = points.iter().map(|&x| g.eval(x)).collect();
        let mut g_mat = MatrixGF::zeros(&field, k, n);
        for j in 0..groups {
            for i in 0..locality {
                let row = j * locality + i;
                for (c, (&x, &gx)) in points.iter().zip(&gvals).enumerate() {
                    let v = field.mul(field.pow(x, i as i64), field.pow(gx, j as i64));
                    g_mat.set(row, c, v);
                }
            }
        }
        let code = LinearCode::from_generator(g_mat)?;
        debug_assert_eq!(code.dimension(), k);
        Ok(LocallyRecoverableCode {
            params,
            field,
            blocks,
            good: g,
            code,
            layout,
        })
    }

    pub fn params(&self) -> LrcParams {
        self.params
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn blocks(&self) -> &[Vec<u32>] {
        &self.blocks
    }

    pub fn good_polynomial(&self) -> &UniPoly {
        &self.good
    }

    pub fn linear_code(&self) -> &LinearCode {
        &self.code
    }

    /// Block index and offset of coordinate `pos`.
    pub fn locate(&self, pos: usize) -> Result<(usize, usize)> {
        self.layout.get(pos).copied().ok_or_else(|| {
            Error::InvalidArgument(format!(
                "position {pos} out of range for length {}",
                self.params.n
            ))
        })
    }

    /// Coordinates belonging to block `b`.
    pub fn block_positions(&self, b: usize) -> Vec<usize> {
        let start: usize = self.blocks[..b].iter().map(Vec::len).sum();
        (start..start + self.blocks[b].len()).collect()
    }

    /// Recovers the symbol at `pos` from the other symbols of its block. The
    /// value currently stored at `pos` and everything outside the block are
    /// ignored.
    pub fn local_recover(&self, word: &[u32], pos: usize) -> Result<u32> {
        if word.len() != self.params.n {
            return Err(Error::DimensionMismatch(format!(
                "word of length {} for a code of length {}",
                word.len(),
                self.params.n
            )));
        }
        let (b, offset) = self.locate(pos)?;
        let positions = self.block_positions(b);
        let known: Vec<u32> = positions
            .iter()
            .enumerate()
            .filter(|&(o, _)| o != offset)
            .map(|(_, &p)| word[p])
            .collect();
        recover_in_block(&self.field, &self.blocks[b], offset, &known)
    }

    /// Checks that the symbols of block `b` lie on a polynomial of degree
    /// below the locality.
    pub fn check_block(&self, word: &[u32], b: usize) -> Result<()> {
        if b >= self.blocks.len() || word.len() != self.params.n {
            return Err(Error::InvalidArgument(format!(
                "no block {b} for this word"
            )));
        }
        let values: Vec<u32> = self.block_positions(b).iter().map(|&p| word[p]).collect();
        check_block_values(&self.field, &self.blocks[b], &values)
    }
}

/// Interpolates the `known` values (the block's symbols with position
/// `offset` removed) and evaluates at the erased point. Only block data is
/// passed in, so recovery cannot read other coordinates.
pub fn recover_in_block(
    field: &FieldSpec,
    block: &[u32],
    offset: usize,
    known: &[u32],
) -> Result<u32> {
    if offset >= block.len() || known.len() + 1 != block.len() {
        return Err(Error::DimensionMismatch(format!(
            "block of size {} needs {} known symbols",
            block.len(),
            block.len().saturating_sub(1)
        )));
    }
    let xs: Vec<u32> = block
        .iter()
        .enumerate()
        .filter(|&(o, _)| o != offset)
        .map(|(_, &x)| x)
        .collect();
    let poly = upoly::interpolate(field, &xs, known)?;
    Ok(upoly::eval(field, &poly, block[offset]))
}

/// Errors with [`Error::BlockInconsistent`] unless all block symbols fit a
/// polynomial of degree below `block.len() - 1`.
pub fn check_block_values(field: &FieldSpec, block: &[u32], values: &[u32]) -> Result<()> {
    let locality = block.len() - 1;
    let poly = upoly::interpolate(field, block, values)?;
    if upoly::degree(&poly).is_none_or(|d| d < locality) {
        Ok(())
    } else {
        Err(Error::BlockInconsistent(locality))
    }
}

fn validate_blocks(
    field: &FieldSpec,
    n: usize,
    locality: usize,
    blocks: &[Vec<u32>],
) -> Result<()> {
    if blocks.is_empty() {
        return Err(Error::BadPartition("no blocks".into()));
    }
    let mut seen = HashSet::new();
    for (i, b) in blocks.iter().enumerate() {
        if b.len() != locality + 1 {
            return Err(Error::BadPartition(format!(
                "block {i} has {} points, expected {}",
                b.len(),
                locality + 1
            )));
        }
        for &x in b {
            if field.check(x).is_err() {
                return Err(Error::BadPartition(format!(
                    "{x} is not an element of {field}"
                )));
            }
            if !seen.insert(x) {
                return Err(Error::BadPartition(format!("point {x} appears twice")));
            }
        }
    }
    if seen.len() != n {
        return Err(Error::BadPartition(format!(
            "blocks cover {} points, expected n = {n}",
            seen.len()
        )));
    }
    Ok(())
}
