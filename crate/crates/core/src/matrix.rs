//! Dense matrices over a [`FieldCtx`] and Gaussian elimination.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{Elem, FieldCtx};

/// Row-major dense matrix over a finite field.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    ctx: FieldCtx,
    rows: usize,
    cols: usize,
    data: Vec<Elem>,
}

/// Result of [`Matrix::rref`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub matrix: Matrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

/// A consistent linear system's solution set: `particular + span(kernel)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution {
    pub particular: Vec<Elem>,
    pub kernel: Vec<Vec<Elem>>,
}

impl Matrix {
    pub fn zeros(ctx: FieldCtx, rows: usize, cols: usize) -> Self {
        Matrix {
            ctx,
            rows,
            cols,
            data: vec![Elem::ZERO; rows * cols],
        }
    }

    pub fn identity(ctx: FieldCtx, n: usize) -> Self {
        let mut m = Self::zeros(ctx, n, n);
        for i in 0..n {
            m.set(i, i, Elem::ONE);
        }
        m
    }

    pub fn from_fn(
        ctx: FieldCtx,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Elem,
    ) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix {
            ctx,
            rows,
            cols,
            data,
        }
    }

    /// Builds a `rows.len() x cols` matrix. `cols` is needed so that a matrix
    /// with zero rows still has a width.
    pub fn from_rows(ctx: FieldCtx, cols: usize, rows: &[Vec<Elem>]) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::DimensionMismatch(format!(
                    "row of length {} in a matrix with {cols} columns",
                    row.len()
                )));
            }
            for &e in row {
                data.push(ctx.check(e)?);
            }
        }
        Ok(Matrix {
            ctx,
            rows: rows.len(),
            cols,
            data,
        })
    }

    /// Convenience constructor from raw integer encodings.
    pub fn from_u64_rows(ctx: FieldCtx, rows: &[&[u64]]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows: Vec<Vec<Elem>> = rows
            .iter()
            .map(|r| r.iter().copied().map(Elem).collect())
            .collect();
        Self::from_rows(ctx, cols, &rows)
    }

    pub fn column_vector(ctx: FieldCtx, v: &[Elem]) -> Result<Self> {
        let rows: Vec<Vec<Elem>> = v.iter().map(|&e| vec![e]).collect();
        Self::from_rows(ctx, 1, &rows)
    }

    #[inline]
    pub fn ctx(&self) -> &FieldCtx {
        &self.ctx
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Elem {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Elem) {
        self.data[i * self.cols + j] = v;
    }

    #[inline]
    pub fn row(&self, i: usize) -> &[Elem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Elem> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn row_vecs(&self) -> Vec<Vec<Elem>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|e| e.is_zero())
    }

    /// Reinterprets a matrix over F_q as one over an extension with the same base prime.
    pub fn lift(&self, ext: FieldCtx) -> Result<Matrix> {
        if ext.q() != self.ctx.q() || !self.data.iter().all(|&e| ext.in_base_field(e)) {
            return Err(Error::FieldMismatch);
        }
        Ok(Matrix {
            ctx: ext,
            rows: self.rows,
            cols: self.cols,
            data: self.data.clone(),
        })
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.ctx, self.cols, self.rows, |i, j| self.get(j, i))
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.ctx != other.ctx {
            return Err(Error::FieldMismatch);
        }
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = &self.ctx;
        let mut out = Matrix::zeros(self.ctx, self.rows, other.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.get(i, l);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = f.add(out.get(i, j), f.mul(a, other.get(l, j)));
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    /// `M * x` for a column vector `x`.
    pub fn mul_vec(&self, x: &[Elem]) -> Result<Vec<Elem>> {
        if x.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} against {} columns",
                x.len(),
                self.cols
            )));
        }
        let f = &self.ctx;
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(x)
                    .fold(Elem::ZERO, |acc, (&a, &b)| f.add(acc, f.mul(a, b)))
            })
            .collect())
    }

    /// `u * M` for a row vector `u`.
    pub fn vec_mul(&self, u: &[Elem]) -> Result<Vec<Elem>> {
        if u.len() != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} against {} rows",
                u.len(),
                self.rows
            )));
        }
        let f = &self.ctx;
        let mut out = vec![Elem::ZERO; self.cols];
        for (i, &c) in u.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (o, &g) in out.iter_mut().zip(self.row(i)) {
                *o = f.add(*o, f.mul(c, g));
            }
        }
        Ok(out)
    }

    pub fn hstack(&self, other: &Matrix) -> Result<Matrix> {
        if self.ctx != other.ctx {
            return Err(Error::FieldMismatch);
        }
        if self.rows != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "hstack of {} and {} rows",
                self.rows, other.rows
            )));
        }
        Ok(Matrix::from_fn(
            self.ctx,
            self.rows,
            self.cols + other.cols,
            |i, j| {
                if j < self.cols {
                    self.get(i, j)
                } else {
                    other.get(i, j - self.cols)
                }
            },
        ))
    }

    pub fn vstack(&self, other: &Matrix) -> Result<Matrix> {
        if self.ctx != other.ctx {
            return Err(Error::FieldMismatch);
        }
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "vstack of {} and {} columns",
                self.cols, other.cols
            )));
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(Matrix {
            ctx: self.ctx,
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn delete_column(&self, j: usize) -> Result<Matrix> {
        if j >= self.cols {
            return Err(Error::IndexOutOfRange {
                index: j,
                len: self.cols,
            });
        }
        Ok(Matrix::from_fn(
            self.ctx,
            self.rows,
            self.cols - 1,
            |i, c| self.get(i, if c < j { c } else { c + 1 }),
        ))
    }

    pub fn select_columns(&self, cols: &[usize]) -> Result<Matrix> {
        if let Some(&bad) = cols.iter().find(|&&c| c >= self.cols) {
            return Err(Error::IndexOutOfRange {
                index: bad,
                len: self.cols,
            });
        }
        Ok(Matrix::from_fn(self.ctx, self.rows, cols.len(), |i, c| {
            self.get(i, cols[c])
        }))
    }

    pub fn select_rows(&self, rows: &[usize]) -> Result<Matrix> {
        if let Some(&bad) = rows.iter().find(|&&r| r >= self.rows) {
            return Err(Error::IndexOutOfRange {
                index: bad,
                len: self.rows,
            });
        }
        Ok(Matrix::from_fn(self.ctx, rows.len(), self.cols, |r, j| {
            self.get(rows[r], j)
        }))
    }

    /// Multiplies column j by `scales[j]`.
    pub fn scale_columns(&self, scales: &[Elem]) -> Result<Matrix> {
        if scales.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "{} scales for {} columns",
                scales.len(),
                self.cols
            )));
        }
        let f = &self.ctx;
        Ok(Matrix::from_fn(self.ctx, self.rows, self.cols, |i, j| {
            f.mul(self.get(i, j), scales[j])
        }))
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Reduced row-echelon form. The pivot in each column is the first
    /// nonzero entry at or below the current pivot row.
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let f = self.ctx;
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = f.inv(m.get(r, c)).expect("pivot is nonzero");
            if inv != Elem::ONE {
                for j in c..m.cols {
                    let v = f.mul(m.get(r, j), inv);
                    m.set(r, j, v);
                }
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let factor = m.get(i, c);
                if factor.is_zero() {
                    continue;
                }
                for j in c..m.cols {
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

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Basis of the right kernel `{x : M x = 0}`, one vector per free column,
    /// read off the RREF (free variable set to 1, other free variables 0).
    pub fn kernel(&self) -> Vec<Vec<Elem>> {
        let Rref { matrix, pivots, .. } = self.rref();
        kernel_from_rref(&matrix, &pivots)
    }

    /// Basis of the row space: the nonzero rows of the RREF.
    pub fn row_space_basis(&self) -> Matrix {
        let Rref { matrix, rank, .. } = self.rref();
        let rows: Vec<usize> = (0..rank).collect();
        matrix.select_rows(&rows).expect("rank rows exist")
    }

    /// Solves `M x = b`. Returns `Ok(None)` when the system is inconsistent.
    pub fn solve(&self, b: &[Elem]) -> Result<Option<Solution>> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "right-hand side of length {} for {} rows",
                b.len(),
                self.rows
            )));
        }
        let aug = self.hstack(&Matrix::column_vector(self.ctx, b)?)?;
        let Rref {
            matrix,
            rank,
            pivots,
        } = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut particular = vec![Elem::ZERO; self.cols];
        for (r, &c) in pivots.iter().enumerate().take(rank) {
            particular[c] = matrix.get(r, self.cols);
        }
        let coeffs = matrix.select_columns(&(0..self.cols).collect::<Vec<_>>())?;
        Ok(Some(Solution {
            particular,
            kernel: kernel_from_rref(&coeffs, &pivots),
        }))
    }
}

/// Rank of a row-major `rows x cols` buffer, destroying its contents.
/// Used by the inner loops of the exact oracles to avoid allocating a [`Matrix`].
pub fn rank_in_place(ctx: &FieldCtx, buf: &mut [Elem], rows: usize, cols: usize) -> usize {
    debug_assert_eq!(buf.len(), rows * cols);
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !buf[i * cols + c].is_zero()) else {
            continue;
        };
        if p != r {
            for j in c..cols {
                buf.swap(p * cols + j, r * cols + j);
            }
        }
        let inv = ctx.inv(buf[r * cols + c]).expect("pivot is nonzero");
        for j in c..cols {
            buf[r * cols + j] = ctx.mul(buf[r * cols + j], inv);
        }
        for i in r + 1..rows {
            let factor = buf[i * cols + c];
            if factor.is_zero() {
                continue;
            }
            for j in c..cols {
                let t = ctx.mul(factor, buf[r * cols + j]);
                buf[i * cols + j] = ctx.sub(buf[i * cols + j], t);
            }
        }
        r += 1;
    }
    r
}

fn kernel_from_rref(rref: &Matrix, pivots: &[usize]) -> Vec<Vec<Elem>> {
    let f = rref.ctx;
    let cols = rref.cols;
    let mut is_pivot = vec![false; cols];
    for &p in pivots {
        is_pivot[p] = true;
    }
    (0..cols)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = vec![Elem::ZERO; cols];
            v[free] = Elem::ONE;
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = f.neg(rref.get(r, free));
            }
            v
        })
        .collect()
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "Matrix {}x{} over F_{}^{}",
            self.rows,
            self.cols,
            self.ctx.q(),
            self.ctx.m()
        )?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|e| e.0.to_string()).collect();
            writeln!(f, "  [{}]", row.join(" "))?;
        }
        Ok(())
    }
}
