//! F_q-linear codes in the Hamming metric and their brute-force oracles.

use std::ops::ControlFlow;

use rand::Rng;

use crate::enumerate::{for_each_projective, for_each_vector};
use crate::error::{Error, Result};
use crate::field::{Elem, FieldCtx};
use crate::matrix::Matrix;

/// A linear `[n, k]` code over a prime field, with a cached parity-check matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearCode {
    generator: Matrix,
    parity_check: Matrix,
}

/// A minimum weight together with one vector attaining it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinWeight {
    pub weight: usize,
    pub witness: Vec<Elem>,
}

impl LinearCode {
    /// `generator` must have full row rank over a prime field.
    pub fn from_generator(generator: Matrix) -> Result<Self> {
        if !generator.ctx().is_base() {
            return Err(Error::FieldMismatch);
        }
        if generator.rank() != generator.rows() {
            return Err(Error::RankDeficient);
        }
        let parity_check = kernel_matrix(&generator)?;
        Ok(LinearCode {
            generator,
            parity_check,
        })
    }

    /// The code spanned by the rows of `m`, which may be dependent.
    pub fn from_spanning_rows(m: &Matrix) -> Result<Self> {
        Self::from_generator(m.row_space_basis())
    }

    /// The code `{x : H x^T = 0}`; `h` may have dependent rows.
    pub fn from_parity_check(h: &Matrix) -> Result<Self> {
        if !h.ctx().is_base() {
            return Err(Error::FieldMismatch);
        }
        Self::from_generator(kernel_matrix(h)?)
    }

    pub fn zero_code(ctx: FieldCtx, n: usize) -> Result<Self> {
        Self::from_generator(Matrix::zeros(ctx, 0, n))
    }

    pub fn full_space(ctx: FieldCtx, n: usize) -> Result<Self> {
        Self::from_generator(Matrix::identity(ctx, n))
    }

    pub fn ctx(&self) -> &FieldCtx {
        self.generator.ctx()
    }

    pub fn n(&self) -> usize {
        self.generator.cols()
    }

    pub fn k(&self) -> usize {
        self.generator.rows()
    }

    pub fn generator(&self) -> &Matrix {
        &self.generator
    }

    /// `(n - k) x n`, full row rank.
    pub fn parity_check(&self) -> &Matrix {
        &self.parity_check
    }

    pub fn encode(&self, message: &[Elem]) -> Result<Vec<Elem>> {
        self.generator.vec_mul(message)
    }

    pub fn contains(&self, x: &[Elem]) -> Result<bool> {
        Ok(self.parity_check.mul_vec(x)?.iter().all(|e| e.is_zero()))
    }

    pub fn dual(&self) -> LinearCode {
        LinearCode {
            generator: self.parity_check.clone(),
            parity_check: self.generator.clone(),
        }
    }

    /// True when both codes have the same row space.
    pub fn same_code(&self, other: &LinearCode) -> bool {
        self.ctx() == other.ctx()
            && self.n() == other.n()
            && self.generator.rref().matrix == other.generator.rref().matrix
    }

    /// All `q^k` codewords, in message-lexicographic order.
    pub fn codewords(&self) -> Vec<Vec<Elem>> {
        let mut out = Vec::new();
        for_each_vector::<()>(self.ctx(), self.k(), |u| {
            out.push(self.generator.vec_mul(u).expect("message length is k"));
            ControlFlow::Continue(())
        });
        out
    }
}

/// Matrix whose rows form a basis of the right kernel of `m`.
pub(crate) fn kernel_matrix(m: &Matrix) -> Result<Matrix> {
    Matrix::from_rows(*m.ctx(), m.cols(), &m.kernel())
}

pub fn hamming_weight(x: &[Elem]) -> usize {
    x.iter().filter(|e| !e.is_zero()).count()
}

pub fn hamming_distance(x: &[Elem], y: &[Elem]) -> usize {
    x.iter().zip(y).filter(|(a, b)| a != b).count()
}

/// Exact minimum distance by enumerating one codeword per projective class.
pub fn min_hamming_distance(code: &LinearCode) -> Result<MinWeight> {
    if code.k() == 0 {
        return Err(Error::ZeroDimensionalCode);
    }
    let g = code.generator();
    let mut best: Option<MinWeight> = None;
    for_each_projective(code.ctx(), code.k(), |u| {
        let c = g.vec_mul(u).expect("message length is k");
        let w = hamming_weight(&c);
        if best.as_ref().is_none_or(|b| w < b.weight) {
            best = Some(MinWeight {
                weight: w,
                witness: c,
            });
            if w == 1 {
                return ControlFlow::Break(());
            }
        }
        ControlFlow::Continue(())
    });
    Ok(best.expect("k >= 1 gives at least one class"))
}

/// Hamming syndrome decoding instance: parity-check `h`, syndrome `s`, weight bound `w`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HammingSdpInstance {
    pub h: Matrix,
    pub syndrome: Vec<Elem>,
    pub w: usize,
}

impl HammingSdpInstance {
    pub fn new(h: Matrix, syndrome: Vec<Elem>, w: usize) -> Result<Self> {
        if !h.ctx().is_base() {
            return Err(Error::FieldMismatch);
        }
        if syndrome.len() != h.rows() {
            return Err(Error::DimensionMismatch(format!(
                "syndrome of length {} for {} parity checks",
                syndrome.len(),
                h.rows()
            )));
        }
        for &s in &syndrome {
            h.ctx().check(s)?;
        }
        Ok(HammingSdpInstance { h, syndrome, w })
    }

    pub fn n(&self) -> usize {
        self.h.cols()
    }

    pub fn is_consistent(&self) -> bool {
        matches!(self.h.solve(&self.syndrome), Ok(Some(_)))
    }
}

/// Minimum Hamming weight over the solution coset `x0 + ker(H)`.
pub fn min_weight_coset(inst: &HammingSdpInstance) -> Result<MinWeight> {
    let sol = inst
        .h
        .solve(&inst.syndrome)?
        .ok_or(Error::InconsistentSystem)?;
    let ctx = *inst.h.ctx();
    let floor = if inst.syndrome.iter().all(|e| e.is_zero()) {
        0
    } else {
        1
    };
    let mut best: Option<MinWeight> = None;
    for_each_vector(&ctx, sol.kernel.len(), |coeffs| {
        let mut x = sol.particular.clone();
        for (&c, k) in coeffs.iter().zip(&sol.kernel) {
            if c.is_zero() {
                continue;
            }
            for (xi, &ki) in x.iter_mut().zip(k) {
                *xi = ctx.add(*xi, ctx.mul(c, ki));
            }
        }
        let w = hamming_weight(&x);
        if best.as_ref().is_none_or(|b| w < b.weight) {
            best = Some(MinWeight {
                weight: w,
                witness: x,
            });
            if w == floor {
                return ControlFlow::Break(());
            }
        }
        ControlFlow::Continue(())
    });
    Ok(best.expect("the coset is nonempty"))
}

/// Codewords of `code` vanishing at coordinate `j`, with that coordinate removed.
/// Computed by deleting column `j` of the parity-check matrix.
pub fn shorten(code: &LinearCode, j: usize) -> Result<LinearCode> {
    let h = code.parity_check().delete_column(j)?;
    LinearCode::from_parity_check(&h)
}

/// Griesmer bound: `n >= sum_{i<k} ceil(d / q^i)`.
pub fn griesmer_holds(n: usize, k: usize, d: usize, q: u64) -> bool {
    let mut sum: u128 = 0;
    let mut qi: u128 = 1;
    for _ in 0..k {
        sum += (d as u128).div_ceil(qi);
        qi = qi.saturating_mul(q as u128);
        if sum > n as u128 {
            return false;
        }
    }
    sum <= n as u128
}

/// Uniform random `k x n` generator, resampled until it has rank k.
pub fn random_code<R: Rng + ?Sized>(
    n: usize,
    k: usize,
    ctx: FieldCtx,
    rng: &mut R,
) -> Result<LinearCode> {
    if k == 0 || k > n {
        return Err(Error::InvalidParameter(format!(
            "need 1 <= k <= n, got k={k} n={n}"
        )));
    }
    if !ctx.is_base() {
        return Err(Error::FieldMismatch);
    }
    loop {
        let g = Matrix::from_fn(ctx, k, n, |_, _| ctx.sample_uniform(rng));
        if g.rank() == k {
            return LinearCode::from_generator(g);
        }
    }
}
