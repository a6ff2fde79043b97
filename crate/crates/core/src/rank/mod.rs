//! Rank-metric codes in vector representation over F_{q^m}.
//!
//! A vector `x` of F_{q^m}^n is expanded into the `m x n` matrix over F_q whose
//! column `i` holds the coordinates of `x_i` in an [`ExpansionBasis`]; its rank
//! is the rank weight of `x`.

pub mod support;

use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};

use crate::enumerate::{
    check_budget, for_each_projective, for_each_subset, for_each_vector, power_count,
    projective_count, DEFAULT_BUDGET,
};
use crate::error::{Error, Result};
use crate::field::{Elem, FieldCtx};
use crate::hamming::{kernel_matrix, MinWeight};
use crate::matrix::Matrix;

pub use crate::hamming::hamming_weight as hamming_weight_ext;

/// An F_{q^m}-linear `[n, k]` code given by a full-row-rank generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankCode {
    generator: Matrix,
    parity_check: Matrix,
}

impl RankCode {
    pub fn from_generator(generator: Matrix) -> Result<Self> {
        if generator.rank() != generator.rows() {
            return Err(Error::RankDeficient);
        }
        let parity_check = kernel_matrix(&generator)?;
        Ok(RankCode {
            generator,
            parity_check,
        })
    }

    /// The code `{x : H x^T = 0}`.
    pub fn from_parity_check(h: &Matrix) -> Result<Self> {
        Self::from_generator(kernel_matrix(h)?)
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

    pub fn parity_check(&self) -> &Matrix {
        &self.parity_check
    }

    pub fn encode(&self, message: &[Elem]) -> Result<Vec<Elem>> {
        self.generator.vec_mul(message)
    }

    pub fn contains(&self, x: &[Elem]) -> Result<bool> {
        Ok(self.parity_check.mul_vec(x)?.iter().all(|e| e.is_zero()))
    }

    pub fn dual(&self) -> RankCode {
        RankCode {
            generator: self.parity_check.clone(),
            parity_check: self.generator.clone(),
        }
    }
}

/// An F_q-basis of F_{q^m}, used to expand field elements into coordinate columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpansionBasis {
    ctx: FieldCtx,
    elems: Vec<Elem>,
    // maps polynomial-basis coordinates to coordinates in this basis
    to_coords: Matrix,
    polynomial: bool,
}

impl ExpansionBasis {
    /// `1, g, ..., g^{m-1}`.
    pub fn polynomial(ctx: FieldCtx) -> Self {
        let base = ctx.base();
        let elems = (0..ctx.m()).map(|i| Elem(ctx.q().pow(i))).collect();
        ExpansionBasis {
            ctx,
            elems,
            to_coords: Matrix::identity(base, ctx.m() as usize),
            polynomial: true,
        }
    }

    pub fn new(ctx: FieldCtx, elems: Vec<Elem>) -> Result<Self> {
        let m = ctx.m() as usize;
        if elems.len() != m {
            return Err(Error::DimensionMismatch(format!(
                "a basis of F_q^{m} needs {m} elements, got {}",
                elems.len()
            )));
        }
        for &e in &elems {
            ctx.check(e)?;
        }
        let base = ctx.base();
        // column j holds the polynomial coordinates of elems[j]
        let p = Matrix::from_fn(base, m, m, |i, j| Elem(ctx.expand(elems[j])[i]));
        let inv = p.hstack(&Matrix::identity(base, m))?.rref();
        if inv.rank < m || inv.pivots[m - 1] != m - 1 {
            return Err(Error::DependentBasis);
        }
        let to_coords = inv.matrix.select_columns(&(m..2 * m).collect::<Vec<_>>())?;
        Ok(ExpansionBasis {
            ctx,
            elems,
            to_coords,
            polynomial: false,
        })
    }

    /// A uniformly random basis (rejection sampling of m-tuples).
    pub fn random<R: rand::Rng + ?Sized>(ctx: FieldCtx, rng: &mut R) -> Self {
        loop {
            let elems = (0..ctx.m()).map(|_| ctx.sample_uniform(rng)).collect();
            if let Ok(b) = Self::new(ctx, elems) {
                return b;
            }
        }
    }

    pub fn ctx(&self) -> &FieldCtx {
        &self.ctx
    }

    pub fn elems(&self) -> &[Elem] {
        &self.elems
    }

    /// Coordinates of `a` in this basis, as base-field elements.
    pub fn coords(&self, a: Elem) -> Vec<Elem> {
        let poly: Vec<Elem> = self.ctx.expand(a).into_iter().map(Elem).collect();
        if self.polynomial {
            return poly;
        }
        self.to_coords.mul_vec(&poly).expect("m coordinates")
    }
}

/// The `m x n` expansion of `x` over F_q, column `i` = coordinates of `x_i`.
pub fn to_matrix(x: &[Elem], basis: &ExpansionBasis) -> Result<Matrix> {
    let ctx = basis.ctx();
    for &e in x {
        ctx.check(e)?;
    }
    let cols: Vec<Vec<Elem>> = x.iter().map(|&e| basis.coords(e)).collect();
    Ok(Matrix::from_fn(
        ctx.base(),
        ctx.m() as usize,
        x.len(),
        |i, j| cols[j][i],
    ))
}

pub fn rank_weight(x: &[Elem], basis: &ExpansionBasis) -> Result<usize> {
    Ok(to_matrix(x, basis)?.rank())
}

/// Rank weight under the polynomial basis, without building a [`Matrix`].
/// The rank does not depend on the basis, so this is the hot-path variant.
pub fn rank_weight_poly(ctx: &FieldCtx, x: &[Elem]) -> usize {
    if ctx.q() == 2 {
        // columns are bit vectors; insert them into an xor basis keyed by top bit
        let mut basis = [0u64; 64];
        let mut rank = 0;
        for &e in x {
            let mut v = e.0;
            while v != 0 {
                let top = 63 - v.leading_zeros() as usize;
                if basis[top] == 0 {
                    basis[top] = v;
                    rank += 1;
                    break;
                }
                v ^= basis[top];
            }
        }
        return rank;
    }
    let m = ctx.m() as usize;
    let mut buf: Vec<Elem> = Vec::with_capacity(m * x.len());
    // rows = elements, columns = coordinates: the transpose has the same rank
    for &e in x {
        buf.extend(ctx.expand(e).into_iter().map(Elem));
    }
    crate::matrix::rank_in_place(&ctx.base(), &mut buf, x.len(), m)
}

pub fn rank_distance(x: &[Elem], y: &[Elem], basis: &ExpansionBasis) -> Result<usize> {
    if x.len() != y.len() {
        return Err(Error::DimensionMismatch(format!(
            "vectors of lengths {} and {}",
            x.len(),
            y.len()
        )));
    }
    let ctx = basis.ctx();
    let diff: Vec<Elem> = x.iter().zip(y).map(|(&a, &b)| ctx.sub(a, b)).collect();
    rank_weight(&diff, basis)
}

/// Exact minimum rank distance by enumerating one codeword per F_Q-projective class.
pub fn min_rank_distance(code: &RankCode, budget: u64) -> Result<MinWeight> {
    if code.k() == 0 {
        return Err(Error::ZeroDimensionalCode);
    }
    let ctx = *code.ctx();
    check_budget(projective_count(ctx.order(), code.k()), budget)?;
    let g = code.generator();
    let n = code.n();
    let mut c = vec![Elem::ZERO; n];
    let mut best: Option<MinWeight> = None;
    for_each_projective(&ctx, code.k(), |u| {
        c.iter_mut().for_each(|e| *e = Elem::ZERO);
        for (i, &ui) in u.iter().enumerate() {
            if ui.is_zero() {
                continue;
            }
            for (cj, &gij) in c.iter_mut().zip(g.row(i)) {
                *cj = ctx.add(*cj, ctx.mul(ui, gij));
            }
        }
        let w = rank_weight_poly(&ctx, &c);
        if best.as_ref().is_none_or(|b| w < b.weight) {
            best = Some(MinWeight {
                weight: w,
                witness: c.clone(),
            });
            if w == 1 {
                return ControlFlow::Break(());
            }
        }
        ControlFlow::Continue(())
    });
    Ok(best.expect("k >= 1 gives at least one class"))
}

/// Minimum Hamming distance of an F_Q-linear code, by support enumeration:
/// a nonzero codeword supported inside `W` exists iff the generator columns
/// outside `W` have rank below k.
pub fn min_hamming_distance_ext(code: &RankCode) -> Result<MinWeight> {
    if code.k() == 0 {
        return Err(Error::ZeroDimensionalCode);
    }
    let n = code.n();
    let k = code.k();
    let g = code.generator();
    for w in 1..=n {
        let hit = for_each_subset(n, w, |support| {
            let outside: Vec<usize> = (0..n).filter(|j| !support.contains(j)).collect();
            let rest = g.select_columns(&outside).expect("indices in range");
            if rest.rank() < k {
                ControlFlow::Break(rest)
            } else {
                ControlFlow::Continue(())
            }
        });
        if let Some(rest) = hit {
            let u = rest
                .transpose()
                .kernel()
                .into_iter()
                .next()
                .expect("rank deficient");
            let witness = g.vec_mul(&u)?;
            return Ok(MinWeight { weight: w, witness });
        }
    }
    unreachable!("a nonzero code has a codeword supported on all n coordinates")
}

/// Rank syndrome decoding instance over F_{q^m}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankSdpInstance {
    pub h: Matrix,
    pub syndrome: Vec<Elem>,
    pub w: usize,
}

impl RankSdpInstance {
    pub fn new(h: Matrix, syndrome: Vec<Elem>, w: usize) -> Result<Self> {
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
        Ok(RankSdpInstance { h, syndrome, w })
    }

    pub fn ctx(&self) -> &FieldCtx {
        self.h.ctx()
    }

    pub fn n(&self) -> usize {
        self.h.cols()
    }

    pub fn syndrome_is_zero(&self) -> bool {
        self.syndrome.iter().all(|e| e.is_zero())
    }
}

/// Exact minimum rank weight over the solution coset, by enumerating all
/// `Q^{n - rank(H)}` solutions.
pub fn min_rank_weight_coset(inst: &RankSdpInstance, budget: u64) -> Result<MinWeight> {
    let sol = inst
        .h
        .solve(&inst.syndrome)?
        .ok_or(Error::InconsistentSystem)?;
    let ctx = *inst.ctx();
    check_budget(power_count(ctx.order(), sol.kernel.len()), budget)?;
    let floor = if inst.syndrome_is_zero() { 0 } else { 1 };
    let mut x = sol.particular.clone();
    let mut best: Option<MinWeight> = None;
    for_each_vector(&ctx, sol.kernel.len(), |coeffs| {
        x.copy_from_slice(&sol.particular);
        for (&c, k) in coeffs.iter().zip(&sol.kernel) {
            if c.is_zero() {
                continue;
            }
            for (xi, &ki) in x.iter_mut().zip(k) {
                *xi = ctx.add(*xi, ctx.mul(c, ki));
            }
        }
        let w = rank_weight_poly(&ctx, &x);
        if best.as_ref().is_none_or(|b| w < b.weight) {
            best = Some(MinWeight {
                weight: w,
                witness: x.clone(),
            });
            if w == floor {
                return ControlFlow::Break(());
            }
        }
        ControlFlow::Continue(())
    });
    Ok(best.expect("the coset is nonempty"))
}

/// How the exact solver searches.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SearchMethod {
    /// Projective codeword enumeration / full coset enumeration over F_Q.
    Enumerate,
    /// Enumeration of F_q-subspaces of F_q^n (see [`support`]); cost independent of m.
    Support,
    /// Whichever of the two visits fewer candidates.
    Auto,
}

/// Exact (zero-error) rank-metric solver with an enumeration budget.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExactRankSolver {
    pub budget: u64,
    pub method: SearchMethod,
}

impl Default for ExactRankSolver {
    fn default() -> Self {
        ExactRankSolver {
            budget: DEFAULT_BUDGET,
            method: SearchMethod::Auto,
        }
    }
}

impl ExactRankSolver {
    pub fn new(budget: u64, method: SearchMethod) -> Self {
        ExactRankSolver { budget, method }
    }

    fn resolve(&self, enumerate_cost: Option<u128>, support_cost: Option<u128>) -> SearchMethod {
        match self.method {
            SearchMethod::Auto => {
                let e = enumerate_cost.unwrap_or(u128::MAX);
                let s = support_cost.unwrap_or(u128::MAX);
                if e <= s {
                    SearchMethod::Enumerate
                } else {
                    SearchMethod::Support
                }
            }
            other => other,
        }
    }

    pub fn min_distance(&self, code: &RankCode) -> Result<MinWeight> {
        let method = self.resolve(
            projective_count(code.ctx().order(), code.k()),
            support::distance_cost(code),
        );
        match method {
            SearchMethod::Enumerate => min_rank_distance(code, self.budget),
            _ => support::min_rank_distance(code, self.budget),
        }
    }

    pub fn min_coset_weight(&self, inst: &RankSdpInstance) -> Result<MinWeight> {
        let free = inst.n() - inst.h.rank();
        let method = self.resolve(
            power_count(inst.ctx().order(), free),
            support::coset_cost(inst),
        );
        match method {
            SearchMethod::Enumerate => min_rank_weight_coset(inst, self.budget),
            _ => support::min_rank_weight_coset(inst, self.budget),
        }
    }

    /// Does `code` contain a nonzero word of rank weight at most `w`?
    pub fn has_word_within(&self, code: &RankCode, w: usize) -> Result<bool> {
        if code.k() == 0 || w == 0 {
            return Ok(false);
        }
        let method = self.resolve(
            projective_count(code.ctx().order(), code.k()),
            support::word_cost(code.n(), w, code.ctx().q()),
        );
        match method {
            SearchMethod::Enumerate => Ok(min_rank_distance(code, self.budget)?.weight <= w),
            _ => Ok(support::word_within(code, w, self.budget)?.is_some()),
        }
    }

    /// Does the instance have a solution of rank weight at most `inst.w`?
    /// Inconsistent instances answer `false`.
    pub fn has_solution_within(&self, inst: &RankSdpInstance) -> Result<bool> {
        let Some(sol) = inst.h.solve(&inst.syndrome)? else {
            return Ok(false);
        };
        if inst.syndrome_is_zero() {
            return Ok(true);
        }
        let method = self.resolve(
            power_count(inst.ctx().order(), sol.kernel.len()),
            support::word_cost(inst.n(), inst.w, inst.ctx().q()),
        );
        match method {
            SearchMethod::Enumerate => {
                Ok(min_rank_weight_coset(inst, self.budget)?.weight <= inst.w)
            }
            _ => Ok(support::coset_within(&inst.h, &inst.syndrome, inst.w, self.budget)?.is_some()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn f8() -> FieldCtx {
        FieldCtx::new(2, 3).unwrap()
    }

    fn v(xs: &[u64]) -> Vec<Elem> {
        xs.iter().copied().map(Elem).collect()
    }

    #[test]
    fn expansion_examples() {
        let b = ExpansionBasis::polynomial(f8());
        assert!(to_matrix(&v(&[0, 0, 0]), &b).unwrap().is_zero());
        assert_eq!(
            to_matrix(&v(&[1, 2, 4]), &b).unwrap(),
            Matrix::identity(f8().base(), 3)
        );
        let m = to_matrix(&v(&[3, 3, 3]), &b).unwrap();
        for j in 0..3 {
            assert_eq!(m.column(j), v(&[1, 1, 0]));
        }
        assert!(to_matrix(&v(&[8]), &b).is_err());
    }

    #[test]
    fn rank_weight_examples() {
        let b = ExpansionBasis::polynomial(f8());
        assert_eq!(rank_weight(&v(&[3, 3, 3]), &b).unwrap(), 1);
        assert_eq!(rank_weight(&v(&[1, 2, 4]), &b).unwrap(), 3);
        assert_eq!(rank_weight(&v(&[0, 0, 0]), &b).unwrap(), 0);
        let x = v(&[1, 2, 4]);
        assert_eq!(rank_distance(&x, &x, &b).unwrap(), 0);
        assert_eq!(rank_distance(&x, &v(&[0, 0, 0]), &b).unwrap(), 3);
        assert_eq!(rank_distance(&x, &v(&[1, 1, 1]), &b).unwrap(), 2);
        assert_eq!(hamming_weight_ext(&v(&[3, 3, 3])), 3);
        assert_eq!(hamming_weight_ext(&v(&[0, 2, 0])), 1);
    }

    #[test]
    fn dependent_basis_is_rejected() {
        assert_eq!(
            ExpansionBasis::new(f8(), v(&[1, 2, 3])),
            Err(Error::DependentBasis)
        );
        assert!(ExpansionBasis::new(f8(), v(&[1, 2])).is_err());
        assert!(ExpansionBasis::new(f8(), v(&[3, 6, 7])).is_ok());
    }

    #[test]
    fn basis_coordinates_reconstruct_the_element() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        let ctx = FieldCtx::new(3, 3).unwrap();
        for _ in 0..20 {
            let b = ExpansionBasis::random(ctx, &mut rng);
            for a in ctx.elements() {
                let c = b.coords(a);
                let back = c
                    .iter()
                    .zip(b.elems())
                    .fold(Elem::ZERO, |acc, (&ci, &bi)| ctx.add(acc, ctx.mul(ci, bi)));
                assert_eq!(back, a);
            }
        }
    }

    #[test]
    fn fast_rank_matches_matrix_rank() {
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        for ctx in [
            FieldCtx::new(2, 6).unwrap(),
            FieldCtx::new(3, 4).unwrap(),
            FieldCtx::new(5, 2).unwrap(),
        ] {
            let b = ExpansionBasis::polynomial(ctx);
            for _ in 0..300 {
                let n = rng.gen_range(1..7);
                let x: Vec<Elem> = (0..n)
                    .map(|_| {
                        if rng.gen_bool(0.3) {
                            Elem::ZERO
                        } else {
                            ctx.sample_uniform(&mut rng)
                        }
                    })
                    .collect();
                assert_eq!(rank_weight_poly(&ctx, &x), rank_weight(&x, &b).unwrap());
            }
        }
    }

    fn code_of(ctx: FieldCtx, rows: &[&[u64]]) -> RankCode {
        RankCode::from_generator(Matrix::from_u64_rows(ctx, rows).unwrap()).unwrap()
    }

    #[test]
    fn min_rank_distance_examples() {
        let c = code_of(f8(), &[&[1, 2, 4]]);
        let d = min_rank_distance(&c, DEFAULT_BUDGET).unwrap();
        assert_eq!(d.weight, 3);
        assert!(c.contains(&d.witness).unwrap());
        assert_eq!(
            min_rank_distance(&code_of(f8(), &[&[1, 1, 1]]), DEFAULT_BUDGET)
                .unwrap()
                .weight,
            1
        );
        let zero = RankCode::from_generator(Matrix::zeros(f8(), 0, 3)).unwrap();
        assert_eq!(
            min_rank_distance(&zero, DEFAULT_BUDGET),
            Err(Error::ZeroDimensionalCode)
        );
        let big = code_of(
            FieldCtx::new(2, 12).unwrap(),
            &[&[1, 0, 0, 5], &[0, 1, 0, 7], &[0, 0, 1, 9]],
        );
        assert!(min_rank_distance(&big, 1000).unwrap_err().is_budget());
    }

    /// Scans every nonzero codeword, Q^k - 1 of them.
    fn full_min_rank_distance(code: &RankCode) -> usize {
        let ctx = *code.ctx();
        let mut best = usize::MAX;
        for_each_vector::<()>(&ctx, code.k(), |u| {
            if u.iter().any(|e| !e.is_zero()) {
                let c = code.encode(u).unwrap();
                best = best.min(rank_weight_poly(&ctx, &c));
            }
            ControlFlow::Continue(())
        });
        best
    }

    fn random_rank_code(ctx: FieldCtx, n: usize, k: usize, rng: &mut impl Rng) -> RankCode {
        loop {
            let g = Matrix::from_fn(ctx, k, n, |_, _| ctx.sample_uniform(rng));
            if let Ok(c) = RankCode::from_generator(g) {
                return c;
            }
        }
    }

    #[test]
    fn projective_agrees_with_full_enumeration() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for &(q, m, n, k) in &[
            (2u64, 4u32, 5usize, 2usize),
            (2, 3, 4, 3),
            (3, 2, 4, 2),
            (2, 8, 4, 2),
            (2, 5, 3, 3),
        ] {
            let ctx = FieldCtx::new(q, m).unwrap();
            assert!(ctx.order().pow(k as u32) <= 1 << 16);
            for _ in 0..10 {
                let c = random_rank_code(ctx, n, k, &mut rng);
                let d = min_rank_distance(&c, DEFAULT_BUDGET).unwrap();
                assert_eq!(d.weight, full_min_rank_distance(&c));
                assert_eq!(rank_weight_poly(&ctx, &d.witness), d.weight);
                assert!(c.contains(&d.witness).unwrap());
            }
        }
    }

    #[test]
    fn hamming_distance_by_support_matches_enumeration() {
        let mut rng = ChaCha8Rng::seed_from_u64(22);
        for &(q, m, n, k) in &[(2u64, 3u32, 5usize, 2usize), (3, 2, 4, 2), (2, 2, 6, 3)] {
            let ctx = FieldCtx::new(q, m).unwrap();
            for _ in 0..10 {
                let c = random_rank_code(ctx, n, k, &mut rng);
                let d = min_hamming_distance_ext(&c).unwrap();
                assert!(c.contains(&d.witness).unwrap());
                assert_eq!(hamming_weight_ext(&d.witness), d.weight);
                let mut best = usize::MAX;
                for_each_vector::<()>(&ctx, k, |u| {
                    if u.iter().any(|e| !e.is_zero()) {
                        best = best.min(hamming_weight_ext(&c.encode(u).unwrap()));
                    }
                    ControlFlow::Continue(())
                });
                assert_eq!(d.weight, best);
            }
        }
    }

    #[test]
    fn coset_examples() {
        let ctx = f8();
        let h = Matrix::from_u64_rows(ctx, &[&[3, 5, 6]]).unwrap();
        let inst = RankSdpInstance::new(h.clone(), v(&[1]), 1).unwrap();
        let r = min_rank_weight_coset(&inst, DEFAULT_BUDGET).unwrap();
        assert_eq!(r.weight, 1);
        assert_eq!(h.mul_vec(&r.witness).unwrap(), v(&[1]));
        // (beta_1^{-1}, 0, 0) is one such weight-1 solution
        let x = vec![ctx.inv(Elem(3)).unwrap(), Elem::ZERO, Elem::ZERO];
        assert_eq!(h.mul_vec(&x).unwrap(), v(&[1]));

        let zero = RankSdpInstance::new(h, v(&[0]), 0).unwrap();
        assert_eq!(
            min_rank_weight_coset(&zero, DEFAULT_BUDGET).unwrap().weight,
            0
        );

        let id = Matrix::identity(ctx, 3);
        for s in [v(&[1, 2, 4]), v(&[3, 3, 0]), v(&[1, 2, 3])] {
            let expected = rank_weight_poly(&ctx, &s);
            let inst = RankSdpInstance::new(id.clone(), s, 3).unwrap();
            assert_eq!(
                min_rank_weight_coset(&inst, DEFAULT_BUDGET).unwrap().weight,
                expected
            );
        }

        let bad = RankSdpInstance::new(
            Matrix::from_u64_rows(ctx, &[&[1, 1], &[0, 0]]).unwrap(),
            v(&[0, 1]),
            1,
        )
        .unwrap();
        assert_eq!(
            min_rank_weight_coset(&bad, DEFAULT_BUDGET),
            Err(Error::InconsistentSystem)
        );
    }

    #[test]
    fn solver_methods_agree() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        let ctx = FieldCtx::new(2, 4).unwrap();
        let enumerate = ExactRankSolver::new(DEFAULT_BUDGET, SearchMethod::Enumerate);
        let support = ExactRankSolver::new(DEFAULT_BUDGET, SearchMethod::Support);
        for _ in 0..40 {
            let n = rng.gen_range(2..6);
            let k = rng.gen_range(1..n);
            let c = random_rank_code(ctx, n, k, &mut rng);
            let d = enumerate.min_distance(&c).unwrap().weight;
            assert_eq!(support.min_distance(&c).unwrap().weight, d);
            for w in 0..=n {
                assert_eq!(enumerate.has_word_within(&c, w).unwrap(), d <= w);
                assert_eq!(support.has_word_within(&c, w).unwrap(), d <= w);
            }
            let h = c.parity_check().clone();
            let s: Vec<Elem> = (0..h.rows())
                .map(|_| ctx.sample_uniform(&mut rng))
                .collect();
            let inst = RankSdpInstance::new(h, s, 0).unwrap();
            let wr = enumerate.min_coset_weight(&inst).unwrap().weight;
            assert_eq!(support.min_coset_weight(&inst).unwrap().weight, wr);
            for w in 0..=n {
                let inst = RankSdpInstance { w, ..inst.clone() };
                assert_eq!(enumerate.has_solution_within(&inst).unwrap(), wr <= w);
                assert_eq!(support.has_solution_within(&inst).unwrap(), wr <= w);
            }
        }
    }
}
