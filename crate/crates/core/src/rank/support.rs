//! Exact rank-metric search over row spaces ("rank supports").
//!
//! `x` in F_Q^n has rank weight at most `w` iff `x = y M` for some `y` in F_Q^w
//! and some `w x n` matrix `M` over F_q, i.e. iff the rows of its expansion lie
//! in a `w`-dimensional subspace of F_q^n. For a code with parity-check `H`:
//!
//! * a nonzero codeword lives in the subspace spanned by `M` iff `H M^T` has a
//!   nontrivial kernel, i.e. `rank(H M^T) < w`;
//! * a solution of `H x^T = s` lives there iff `s` is in the column span of `H M^T`.
//!
//! Enumerating the `[n choose w]_q` subspaces is therefore an exhaustive search
//! whose cost does not depend on the extension degree m.

use std::ops::ControlFlow;

use crate::enumerate::{check_budget, for_each_subspace, gaussian_binomial};
use crate::error::{Error, Result};
use crate::field::{Elem, FieldCtx};
use crate::hamming::MinWeight;
use crate::matrix::{rank_in_place, Matrix};

use super::{RankCode, RankSdpInstance};

/// Subspaces visited by a single fixed-`w` query.
pub fn word_cost(n: usize, w: usize, q: u64) -> Option<u128> {
    gaussian_binomial(n, w.min(n), q)
}

fn cumulative_cost(n: usize, max_w: usize, q: u64) -> Option<u128> {
    (1..=max_w.min(n)).try_fold(0u128, |acc, w| acc.checked_add(gaussian_binomial(n, w, q)?))
}

/// Worst-case subspaces visited by [`min_rank_distance`]. The answer is at
/// most `n - k + 1` (Singleton), which bounds the search.
pub fn distance_cost(code: &RankCode) -> Option<u128> {
    cumulative_cost(code.n(), code.n() + 1 - code.k().max(1), code.ctx().q())
}

/// Worst-case subspaces visited by [`min_rank_weight_coset`]; a basic solution
/// has Hamming (hence rank) weight at most `rank(H)`.
pub fn coset_cost(inst: &RankSdpInstance) -> Option<u128> {
    cumulative_cost(inst.n(), inst.h.rank(), inst.ctx().q())
}

/// Fills `out` (row-major `rows x w`) with `H M^T`, `M` given as `w x n` over F_q.
#[inline]
fn project(ctx: &FieldCtx, h: &Matrix, m: &[Elem], w: usize, out: &mut [Elem], stride: usize) {
    let n = h.cols();
    for i in 0..h.rows() {
        let hrow = h.row(i);
        for l in 0..w {
            let mrow = &m[l * n..(l + 1) * n];
            let mut acc = Elem::ZERO;
            for (&hij, &mlj) in hrow.iter().zip(mrow) {
                if mlj.is_zero() {
                    continue;
                }
                let t = if mlj == Elem::ONE {
                    hij
                } else {
                    ctx.mul(hij, mlj)
                };
                acc = ctx.add(acc, t);
            }
            out[i * stride + l] = acc;
        }
    }
}

fn combine(ctx: &FieldCtx, y: &[Elem], m: &[Elem], n: usize) -> Vec<Elem> {
    let mut x = vec![Elem::ZERO; n];
    for (l, &yl) in y.iter().enumerate() {
        if yl.is_zero() {
            continue;
        }
        for (xj, &mlj) in x.iter_mut().zip(&m[l * n..(l + 1) * n]) {
            *xj = ctx.add(*xj, ctx.mul(yl, mlj));
        }
    }
    x
}

/// A nonzero codeword of rank weight at most `w`, if one exists.
pub fn word_within(code: &RankCode, w: usize, budget: u64) -> Result<Option<Vec<Elem>>> {
    let n = code.n();
    let w = w.min(n);
    if code.k() == 0 || w == 0 {
        return Ok(None);
    }
    let ctx = *code.ctx();
    check_budget(word_cost(n, w, ctx.q()), budget)?;
    let h = code.parity_check();
    let r = h.rows();
    let mut buf = vec![Elem::ZERO; r * w];
    let hit = for_each_subspace(ctx.q(), n, w, |m| {
        project(&ctx, h, m, w, &mut buf, w);
        if rank_in_place(&ctx, &mut buf, r, w) < w {
            ControlFlow::Break(m.to_vec())
        } else {
            ControlFlow::Continue(())
        }
    });
    Ok(hit.map(|m| {
        let mut a = vec![Elem::ZERO; r * w];
        project(&ctx, h, &m, w, &mut a, w);
        let a = Matrix::from_fn(ctx, r, w, |i, l| a[i * w + l]);
        let y = a.kernel().into_iter().next().expect("rank below w");
        combine(&ctx, &y, &m, n)
    }))
}

/// A solution of `H x^T = s` of rank weight at most `w`, if one exists.
pub fn coset_within(h: &Matrix, s: &[Elem], w: usize, budget: u64) -> Result<Option<Vec<Elem>>> {
    let n = h.cols();
    let ctx = *h.ctx();
    if s.len() != h.rows() {
        return Err(Error::DimensionMismatch(format!(
            "syndrome of length {} for {} parity checks",
            s.len(),
            h.rows()
        )));
    }
    if s.iter().all(|e| e.is_zero()) {
        return Ok(Some(vec![Elem::ZERO; n]));
    }
    let w = w.min(n);
    if w == 0 {
        return Ok(None);
    }
    check_budget(word_cost(n, w, ctx.q()), budget)?;
    let r = h.rows();
    let stride = w + 1;
    let mut aug = vec![Elem::ZERO; r * stride];
    let mut plain = vec![Elem::ZERO; r * w];
    let hit = for_each_subspace(ctx.q(), n, w, |m| {
        project(&ctx, h, m, w, &mut aug, stride);
        for i in 0..r {
            aug[i * stride + w] = s[i];
            plain[i * w..(i + 1) * w].copy_from_slice(&aug[i * stride..i * stride + w]);
        }
        let with_s = rank_in_place(&ctx, &mut aug, r, stride);
        let without = rank_in_place(&ctx, &mut plain, r, w);
        if with_s == without {
            ControlFlow::Break(m.to_vec())
        } else {
            ControlFlow::Continue(())
        }
    });
    let Some(m) = hit else {
        return Ok(None);
    };
    let mut a = vec![Elem::ZERO; r * w];
    project(&ctx, h, &m, w, &mut a, w);
    let a = Matrix::from_fn(ctx, r, w, |i, l| a[i * w + l]);
    let y = a.solve(s)?.expect("s is in the span").particular;
    Ok(Some(combine(&ctx, &y, &m, n)))
}

/// Minimum rank distance by increasing `w` until a subspace captures a codeword.
pub fn min_rank_distance(code: &RankCode, budget: u64) -> Result<MinWeight> {
    if code.k() == 0 {
        return Err(Error::ZeroDimensionalCode);
    }
    check_budget(distance_cost(code), budget)?;
    for w in 1..=code.n() {
        if let Some(witness) = word_within(code, w, budget)? {
            return Ok(MinWeight { weight: w, witness });
        }
    }
    unreachable!("the whole space F_q^n captures every codeword")
}

/// Minimum rank weight of a solution of `H x^T = s`.
pub fn min_rank_weight_coset(inst: &RankSdpInstance, budget: u64) -> Result<MinWeight> {
    if inst.h.solve(&inst.syndrome)?.is_none() {
        return Err(Error::InconsistentSystem);
    }
    if inst.syndrome_is_zero() {
        return Ok(MinWeight {
            weight: 0,
            witness: vec![Elem::ZERO; inst.n()],
        });
    }
    check_budget(coset_cost(inst), budget)?;
    for w in 1..=inst.n() {
        if let Some(witness) = coset_within(&inst.h, &inst.syndrome, w, budget)? {
            return Ok(MinWeight { weight: w, witness });
        }
    }
    unreachable!("a consistent system has a solution of rank at most n")
}
