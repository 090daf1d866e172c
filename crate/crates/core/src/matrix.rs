//! Dense matrices over `GF(q)` with Gaussian elimination.

use crate::error::{Error, Result};
use crate::field::{FieldCtx, FieldElem, ZERO};
use std::sync::Arc;

/// A row-major matrix over a fixed finite field.
#[derive(Clone)]
pub struct Matrix {
    ctx: Arc<FieldCtx>,
    rows: usize,
    cols: usize,
    data: Vec<FieldElem>,
}

impl std::fmt::Debug for Matrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "Matrix {}x{} over GF({})", self.rows, self.cols, self.ctx.q())?;
        for r in 0..self.rows {
            writeln!(
                f,
                "  [{}]",
                self.row(r).iter().map(|e| e.0.to_string()).collect::<Vec<_>>().join(" ")
            )?;
        }
        Ok(())
    }
}

impl PartialEq for Matrix {
    fn eq(&self, other: &Self) -> bool {
        self.ctx.q() == other.ctx.q()
            && self.rows == other.rows
            && self.cols == other.cols
            && self.data == other.data
    }
}
impl Eq for Matrix {}

impl Matrix {
    pub fn zero(ctx: Arc<FieldCtx>, rows: usize, cols: usize) -> Matrix {
        Matrix { ctx, rows, cols, data: vec![ZERO; rows * cols] }
    }

    pub fn identity(ctx: Arc<FieldCtx>, n: usize) -> Matrix {
        let mut m = Matrix::zero(ctx, n, n);
        for i in 0..n {
            m.set(i, i, FieldElem(1));
        }
        m
    }

    /// Build from raw integer encodings, row-major.
    pub fn from_rows(ctx: Arc<FieldCtx>, rows: &[Vec<u64>]) -> Result<Matrix> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err(Error::Dimension("ragged rows".into()));
            }
            for &v in row {
                data.push(ctx.elem(v)?);
            }
        }
        Ok(Matrix { ctx, rows: r, cols: c, data })
    }

    pub fn ctx(&self) -> &Arc<FieldCtx> {
        &self.ctx
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> FieldElem {
        self.data[r * self.cols + c]
    }
    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: FieldElem) {
        self.data[r * self.cols + c] = v;
    }
    #[inline]
    pub fn row(&self, r: usize) -> &[FieldElem] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<FieldElem> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn is_zero_column(&self, c: usize) -> bool {
        (0..self.rows).all(|r| self.get(r, c).is_zero())
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zero(self.ctx.clone(), self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "{}x{} * {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = &self.ctx;
        let mut out = Matrix::zero(self.ctx.clone(), self.rows, other.cols);
        for r in 0..self.rows {
            for i in 0..self.cols {
                let a = self.get(r, i);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let v = f.add(out.get(r, c), f.mul(a, other.get(i, c)));
                    out.set(r, c, v);
                }
            }
        }
        Ok(out)
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hstack(&self, other: &Matrix) -> Result<Matrix> {
        if self.rows != other.rows {
            return Err(Error::Dimension("row count mismatch in hstack".into()));
        }
        let mut out = Matrix::zero(self.ctx.clone(), self.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(r, c, self.get(r, c));
            }
            for c in 0..other.cols {
                out.set(r, self.cols + c, other.get(r, c));
            }
        }
        Ok(out)
    }

    /// Row `x` times `self`, as a vector of length `cols`.
    pub fn vec_mul(&self, x: &[FieldElem]) -> Vec<FieldElem> {
        debug_assert_eq!(x.len(), self.rows);
        let f = &self.ctx;
        let mut out = vec![ZERO; self.cols];
        for (i, &xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (c, o) in out.iter_mut().enumerate() {
                *o = f.add(*o, f.mul(xi, self.get(i, c)));
            }
        }
        out
    }

    /// Rank and reduced row-echelon form, by Gaussian elimination.
    pub fn rank_and_rref(&self) -> (usize, Matrix) {
        let f = self.ctx.clone();
        let mut m = self.clone();
        let mut pivot_row = 0usize;
        for col in 0..m.cols {
            if pivot_row == m.rows {
                break;
            }
            let Some(r) = (pivot_row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            for c in 0..m.cols {
                let tmp = m.get(pivot_row, c);
                m.set(pivot_row, c, m.get(r, c));
                m.set(r, c, tmp);
            }
            let inv = f.inv(m.get(pivot_row, col)).expect("pivot is nonzero");
            for c in 0..m.cols {
                m.set(pivot_row, c, f.mul(inv, m.get(pivot_row, c)));
            }
            for r2 in 0..m.rows {
                if r2 != pivot_row && !m.get(r2, col).is_zero() {
                    let factor = m.get(r2, col);
                    for c in 0..m.cols {
                        let v = f.sub(m.get(r2, c), f.mul(factor, m.get(pivot_row, c)));
                        m.set(r2, c, v);
                    }
                }
            }
            pivot_row += 1;
        }
        (pivot_row, m)
    }

    pub fn rank(&self) -> usize {
        self.rank_and_rref().0
    }

    /// A basis of `{ v : self * v^T = 0 }`, returned as the rows of an
    /// `(cols - rank) x cols` matrix. Computed from the reduced echelon form
    /// by solving for the free columns.
    pub fn kernel_basis(&self) -> Matrix {
        let f = &self.ctx;
        let (rank, rref) = self.rank_and_rref();
        let mut pivot_cols = Vec::with_capacity(rank);
        let mut col = 0usize;
        for r in 0..rank {
            while col < self.cols && rref.get(r, col).is_zero() {
                col += 1;
            }
            pivot_cols.push(col);
            col += 1;
        }
        let free_cols: Vec<usize> =
            (0..self.cols).filter(|c| !pivot_cols.contains(c)).collect();
        let mut out = Matrix::zero(self.ctx.clone(), free_cols.len(), self.cols);
        for (i, &fc) in free_cols.iter().enumerate() {
            out.set(i, fc, FieldElem(1));
            for (r, &pc) in pivot_cols.iter().enumerate() {
                out.set(i, pc, f.neg(rref.get(r, fc)));
            }
        }
        out
    }
}
