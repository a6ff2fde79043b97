//! Exhaustive enumerators shared by the brute-force oracles.
//!
//! All enumerations run in a fixed lexicographic order so that "first
//! minimizer found" is a deterministic witness.

use std::ops::ControlFlow;

use crate::error::{Error, Result};
use crate::field::{Elem, FieldCtx};

/// Default number of candidates an oracle may enumerate before giving up.
pub const DEFAULT_BUDGET: u64 = 1 << 22;

pub fn check_budget(needed: Option<u128>, budget: u64) -> Result<()> {
    match needed {
        Some(n) if n <= budget as u128 => Ok(()),
        Some(n) => Err(Error::BudgetExceeded { needed: n, budget }),
        None => Err(Error::BudgetExceeded {
            needed: u128::MAX,
            budget,
        }),
    }
}

/// `order^k`, or `None` on overflow.
pub fn power_count(order: u64, k: usize) -> Option<u128> {
    (order as u128).checked_pow(k as u32)
}

/// Number of one-dimensional subspaces of F^k, `(order^k - 1) / (order - 1)`.
pub fn projective_count(order: u64, k: usize) -> Option<u128> {
    let mut total: u128 = 0;
    let mut term: u128 = 1;
    for _ in 0..k {
        total = total.checked_add(term)?;
        term = term.checked_mul(order as u128)?;
    }
    Some(total)
}

/// Gaussian binomial `[n choose w]_q`: the number of w-dimensional subspaces of F_q^n.
pub fn gaussian_binomial(n: usize, w: usize, q: u64) -> Option<u128> {
    if w > n {
        return Some(0);
    }
    let q = q as u128;
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..w {
        num = num.checked_mul(q.checked_pow((n - i) as u32)?.checked_sub(1)?)?;
        den = den.checked_mul(q.checked_pow((i + 1) as u32)?.checked_sub(1)?)?;
    }
    Some(num / den)
}

/// Advances a little mixed-radix counter (last position fastest).
/// Returns false once it wraps around to all zeros.
#[inline]
fn advance(digits: &mut [u64], radix: u64) -> bool {
    for d in digits.iter_mut().rev() {
        *d += 1;
        if *d < radix {
            return true;
        }
        *d = 0;
    }
    false
}

/// Visits every vector of F^k in lexicographic order.
pub fn for_each_vector<B>(
    ctx: &FieldCtx,
    k: usize,
    mut visit: impl FnMut(&[Elem]) -> ControlFlow<B>,
) -> Option<B> {
    let mut digits = vec![0u64; k];
    loop {
        let v: Vec<Elem> = digits.iter().map(|&d| Elem(d)).collect();
        if let ControlFlow::Break(b) = visit(&v) {
            return Some(b);
        }
        if !advance(&mut digits, ctx.order()) {
            return None;
        }
    }
}

/// Visits one representative per projective class of F^k \ {0}: the vectors
/// whose first nonzero coordinate equals 1.
pub fn for_each_projective<B>(
    ctx: &FieldCtx,
    k: usize,
    mut visit: impl FnMut(&[Elem]) -> ControlFlow<B>,
) -> Option<B> {
    let mut v = vec![Elem::ZERO; k];
    for lead in 0..k {
        v.iter_mut().for_each(|e| *e = Elem::ZERO);
        v[lead] = Elem::ONE;
        let tail_len = k - lead - 1;
        let mut digits = vec![0u64; tail_len];
        loop {
            for (slot, &d) in v[lead + 1..].iter_mut().zip(&digits) {
                *slot = Elem(d);
            }
            if let ControlFlow::Break(b) = visit(&v) {
                return Some(b);
            }
            if !advance(&mut digits, ctx.order()) {
                break;
            }
        }
    }
    None
}

/// Visits every w-dimensional subspace of F_q^n exactly once, as its unique
/// w x n reduced row-echelon basis (flattened row-major, entries in `0..q`).
pub fn for_each_subspace<B>(
    q: u64,
    n: usize,
    w: usize,
    mut visit: impl FnMut(&[Elem]) -> ControlFlow<B>,
) -> Option<B> {
    if w > n {
        return None;
    }
    let mut basis = vec![Elem::ZERO; w * n];
    let mut pivots: Vec<usize> = (0..w).collect();
    loop {
        // free slots: (row, col) with col > pivot[row] and col not a pivot column
        let mut is_pivot = vec![false; n];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let free: Vec<(usize, usize)> = pivots
            .iter()
            .enumerate()
            .flat_map(|(r, &p)| ((p + 1)..n).filter(|&c| !is_pivot[c]).map(move |c| (r, c)))
            .collect();
        basis.iter_mut().for_each(|e| *e = Elem::ZERO);
        for (r, &p) in pivots.iter().enumerate() {
            basis[r * n + p] = Elem::ONE;
        }
        let mut digits = vec![0u64; free.len()];
        loop {
            for (&(r, c), &d) in free.iter().zip(&digits) {
                basis[r * n + c] = Elem(d);
            }
            if let ControlFlow::Break(b) = visit(&basis) {
                return Some(b);
            }
            if !advance(&mut digits, q) {
                break;
            }
        }
        if !next_combination(&mut pivots, n) {
            return None;
        }
    }
}

/// Next w-subset of 0..n in lexicographic order.
pub fn next_combination(c: &mut [usize], n: usize) -> bool {
    let w = c.len();
    let mut i = w;
    while i > 0 {
        i -= 1;
        if c[i] < n - w + i {
            c[i] += 1;
            for j in i + 1..w {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Visits every w-subset of 0..n in lexicographic order.
pub fn for_each_subset<B>(
    n: usize,
    w: usize,
    mut visit: impl FnMut(&[usize]) -> ControlFlow<B>,
) -> Option<B> {
    if w > n {
        return None;
    }
    let mut c: Vec<usize> = (0..w).collect();
    loop {
        if let ControlFlow::Break(b) = visit(&c) {
            return Some(b);
        }
        if !next_combination(&mut c, n) {
            return None;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::Matrix;
    use std::collections::HashSet;

    #[test]
    fn counts() {
        assert_eq!(projective_count(2, 3), Some(7));
        assert_eq!(projective_count(8, 2), Some(9));
        assert_eq!(projective_count(5, 0), Some(0));
        assert_eq!(gaussian_binomial(4, 2, 2), Some(35));
        assert_eq!(gaussian_binomial(8, 4, 2), Some(200_787));
        assert_eq!(gaussian_binomial(3, 0, 3), Some(1));
        assert_eq!(gaussian_binomial(3, 4, 3), Some(0));
        assert!(check_budget(Some(10), 10).is_ok());
        assert!(check_budget(Some(11), 10).unwrap_err().is_budget());
    }

    #[test]
    fn projective_enumeration_hits_every_class_once() {
        let f4 = FieldCtx::new(2, 2).unwrap();
        let mut seen = HashSet::new();
        let mut count = 0u128;
        for_each_projective::<()>(&f4, 3, |v| {
            count += 1;
            // every nonzero scalar multiple lands in a fresh class
            for s in f4.nonzero_elements() {
                let scaled: Vec<Elem> = v.iter().map(|&e| f4.mul(e, s)).collect();
                assert!(seen.insert(scaled));
            }
            ControlFlow::Continue(())
        });
        assert_eq!(count, projective_count(4, 3).unwrap());
        assert_eq!(seen.len(), 63);
    }

    #[test]
    fn subspace_enumeration_is_complete_and_distinct() {
        for &(q, n) in &[(2u64, 4usize), (3, 3), (2, 5)] {
            let base = FieldCtx::prime(q).unwrap();
            for w in 0..=n {
                let mut seen = HashSet::new();
                for_each_subspace::<()>(q, n, w, |rows| {
                    let m = Matrix::from_fn(base, w, n, |i, j| rows[i * n + j]);
                    assert_eq!(m.rank(), w);
                    assert_eq!(m.rref().matrix, m, "already reduced");
                    assert!(seen.insert(rows.to_vec()));
                    ControlFlow::Continue(())
                });
                assert_eq!(seen.len() as u128, gaussian_binomial(n, w, q).unwrap());
            }
        }
    }

    #[test]
    fn subsets() {
        let mut all = Vec::new();
        for_each_subset::<()>(4, 2, |s| {
            all.push(s.to_vec());
            ControlFlow::Continue(())
        });
        assert_eq!(all.len(), 6);
        assert_eq!(all[0], vec![0, 1]);
        assert_eq!(all[5], vec![2, 3]);
        let mut empty = 0;
        for_each_subset::<()>(3, 0, |_| {
            empty += 1;
            ControlFlow::Continue(())
        });
        assert_eq!(empty, 1);
    }
}
