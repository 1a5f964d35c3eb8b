//! Dense matrices over a finite field.

use std::fmt;

use crate::error::{Error, Result};
use crate::galois::FieldSpec;

/// Row-major dense matrix of element reps.
#[derive(Clone, PartialEq, Eq)]
pub struct MatrixGF {
    field: FieldSpec,
    nrows: usize,
    ncols: usize,
    data: Vec<u32>,
}

/// Result of row reduction.
#[derive(Debug, Clone)]
pub struct Rref {
    pub matrix: MatrixGF,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl MatrixGF {
    pub fn new(field: &FieldSpec, nrows: usize, ncols: usize, data: Vec<u32>) -> Result<Self> {
        if data.len() != nrows * ncols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {nrows}x{ncols} matrix",
                data.len()
            )));
        }
        for &x in &data {
            field.check(x)?;
        }
        Ok(MatrixGF {
            field: field.clone(),
            nrows,
            ncols,
            data,
        })
    }

    pub fn zeros(field: &FieldSpec, nrows: usize, ncols: usize) -> Self {
        MatrixGF {
            field: field.clone(),
            nrows,
            ncols,
            data: vec![0; nrows * ncols],
        }
    }

    pub fn identity(field: &FieldSpec, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    /// Builds a matrix from rows of equal length `ncols`.
    pub fn from_rows(field: &FieldSpec, ncols: usize, rows: &[Vec<u32>]) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * ncols);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != ncols {
                return Err(Error::DimensionMismatch(format!(
                    "row {i} has length {}, expected {ncols}",
                    row.len()
                )));
            }
            data.extend_from_slice(row);
        }
        Self::new(field, rows.len(), ncols, data)
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.ncols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: u32) {
        self.data[i * self.ncols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.data[i * self.ncols..(i + 1) * self.ncols]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[u32]> {
        (0..self.nrows).map(move |i| self.row(i))
    }

    pub fn to_rows(&self) -> Vec<Vec<u32>> {
        self.rows().map(<[u32]>::to_vec).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(&self.field, self.ncols, self.nrows);
        for i in 0..self.nrows {
            for j in 0..self.ncols {
                t.data[j * self.nrows + i] = self.get(i, j);
            }
        }
        t
    }

    fn same_field(&self, other: &Self) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        if self.ncols != other.nrows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.nrows, self.ncols, other.nrows, other.ncols
            )));
        }
        let f = &self.field;
        let mut out = Self::zeros(f, self.nrows, other.ncols);
        for i in 0..self.nrows {
            for l in 0..self.ncols {
                let a = self.get(i, l);
                if a == 0 {
                    continue;
                }
                for j in 0..other.ncols {
                    let idx = i * other.ncols + j;
                    out.data[idx] = f.add(out.data[idx], f.mul(a, other.get(l, j)));
                }
            }
        }
        Ok(out)
    }

    /// Row vector times matrix.
    pub fn vecmat(&self, v: &[u32]) -> Result<Vec<u32>> {
        if v.len() != self.nrows {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} times {}x{} matrix",
                v.len(),
                self.nrows,
                self.ncols
            )));
        }
        for &x in v {
            self.field.check(x)?;
        }
        let f = &self.field;
        let mut out = vec![0u32; self.ncols];
        for (i, &a) in v.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (o, &b) in out.iter_mut().zip(self.row(i)) {
                *o = f.add(*o, f.mul(a, b));
            }
        }
        Ok(out)
    }

    /// Reduced row echelon form. Pivots are chosen as the first nonzero entry
    /// scanning down each column, so the result is reproducible.
    pub fn rref(&self) -> Rref {
        let f = &self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.ncols {
            if r == m.nrows {
                break;
            }
            let Some(pr) = (r..m.nrows).find(|&i| m.get(i, c) != 0) else {
                continue;
            };
            m.swap_rows(r, pr);
            let inv = f.inv(m.get(r, c)).expect("pivot is nonzero");
            for j in c..m.ncols {
                let v = f.mul(m.get(r, j), inv);
                m.set(r, j, v);
            }
            for i in 0..m.nrows {
                if i == r {
                    continue;
                }
                let factor = m.get(i, c);
                if factor == 0 {
                    continue;
                }
                for j in c..m.ncols {
                    let v = f.sub(m.get(i, j), f.mul(factor, m.get(r, j)));
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        Rref {
            matrix: m,
            rank: r,
            pivots,
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.ncols {
            self.data.swap(a * self.ncols + j, b * self.ncols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// The nonzero rows of the RREF, as a `rank x ncols` matrix.
    pub fn row_basis(&self) -> Self {
        let Rref { matrix, rank, .. } = self.rref();
        matrix.select_rows(&(0..rank).collect::<Vec<_>>())
    }

    /// Rows form a basis of `{v : M v^T = 0}`, one per free column in
    /// ascending order.
    pub fn nullspace_basis(&self) -> Self {
        let f = &self.field;
        let Rref { matrix, pivots, .. } = self.rref();
        let free: Vec<usize> = (0..self.ncols).filter(|c| !pivots.contains(c)).collect();
        let mut out = Self::zeros(f, free.len(), self.ncols);
        for (k, &fc) in free.iter().enumerate() {
            out.set(k, fc, 1);
            for (i, &pc) in pivots.iter().enumerate() {
                out.set(k, pc, f.neg(matrix.get(i, fc)));
            }
        }
        out
    }

    /// True iff the two matrices have the same row space.
    pub fn row_space_eq(&self, other: &Self) -> Result<bool> {
        self.same_field(other)?;
        if self.ncols != other.ncols {
            return Err(Error::DimensionMismatch(format!(
                "row spaces in dimensions {} and {}",
                self.ncols, other.ncols
            )));
        }
        Ok(self.row_basis() == other.row_basis())
    }

    pub fn select_rows(&self, idx: &[usize]) -> Self {
        let mut data = Vec::with_capacity(idx.len() * self.ncols);
        for &i in idx {
            data.extend_from_slice(self.row(i));
        }
        MatrixGF {
            field: self.field.clone(),
            nrows: idx.len(),
            ncols: self.ncols,
            data,
        }
    }

    pub fn select_columns(&self, idx: &[usize]) -> Self {
        let mut data = Vec::with_capacity(idx.len() * self.nrows);
        for i in 0..self.nrows {
            data.extend(idx.iter().map(|&j| self.get(i, j)));
        }
        MatrixGF {
            field: self.field.clone(),
            nrows: self.nrows,
            ncols: idx.len(),
            data,
        }
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        if self.ncols != other.ncols {
            return Err(Error::DimensionMismatch("vstack width".into()));
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(MatrixGF {
            field: self.field.clone(),
            nrows: self.nrows + other.nrows,
            ncols: self.ncols,
            data,
        })
    }

    /// `nrows ncols` followed by one line of decimal reps per row.
    pub fn to_text(&self) -> String {
        let mut s = format!("{} {}\n", self.nrows, self.ncols);
        for row in self.rows() {
            s.push_str(&join_reps(row));
            s.push('\n');
        }
        s
    }

    pub fn from_text(field: &FieldSpec, text: &str) -> Result<Self> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("missing matrix header".into()))?;
        let dims = parse_usizes(header)?;
        let [nrows, ncols] = dims[..] else {
            return Err(Error::Parse(format!("bad matrix header `{header}`")));
        };
        let mut rows = Vec::with_capacity(nrows);
        for _ in 0..nrows {
            let line = lines
                .next()
                .ok_or_else(|| Error::Parse("missing matrix row".into()))?;
            rows.push(parse_reps(line)?);
        }
        if lines.next().is_some() {
            return Err(Error::Parse("trailing data after matrix".into()));
        }
        Self::from_rows(field, ncols, &rows)
    }

    /// Writes the matrix with rendered elements, in the `| a b |` style.
    pub fn pretty(&self) -> String {
        let cells: Vec<Vec<String>> = self
            .rows()
            .map(|r| r.iter().map(|&x| self.field.render(x)).collect())
            .collect();
        let widths: Vec<usize> = (0..self.ncols)
            .map(|j| cells.iter().map(|r| r[j].len()).max().unwrap_or(1))
            .collect();
        let mut s = String::new();
        for row in &cells {
            s.push('|');
            for (c, w) in row.iter().zip(&widths) {
                s.push_str(&format!(" {c:<w$}"));
            }
            s.push_str(" |\n");
        }
        s
    }
}

impl fmt::Debug for MatrixGF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "MatrixGF {}x{} over {}",
            self.nrows, self.ncols, self.field
        )?;
        f.write_str(&self.pretty())
    }
}

pub(crate) fn join_reps(v: &[u32]) -> String {
    v.iter().map(u32::to_string).collect::<Vec<_>>().join(" ")
}

pub(crate) fn parse_reps(line: &str) -> Result<Vec<u32>> {
    line.split_whitespace()
        .map(|t| {
            t.parse::<u32>()
                .map_err(|_| Error::Parse(format!("bad element rep `{t}`")))
        })
        .collect()
}

pub(crate) fn parse_usizes(line: &str) -> Result<Vec<usize>> {
    line.split_whitespace()
        .map(|t| {
            t.parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad integer `{t}`")))
        })
        .collect()
}
