//! The scaling embedding `psi_alpha : F_q^n -> F_{q^m}^n`,
//! `x -> (x_1 alpha_1, ..., x_n alpha_n)`, and the codes and syndrome
//! instances it induces.
//!
//! The embedded code of `C` is the F_{q^m}-span of `psi_alpha(C)`. Since
//! `psi_alpha` is F_q-linear, that span is the row space of `G diag(alpha)`,
//! and its dual is the embedding of `C^perp` under `alpha^{-1}`, generated by
//! `H diag(alpha^{-1})`. The same scaled parity-check matrix carries Hamming
//! syndrome instances to rank syndrome instances.

use std::ops::ControlFlow;

use rand::Rng;

use crate::enumerate::{check_budget, for_each_projective, for_each_subset, projective_count};
use crate::error::{Error, Result};
use crate::field::{Elem, FieldCtx};
use crate::hamming::{hamming_weight, min_hamming_distance, HammingSdpInstance, LinearCode};
use crate::matrix::Matrix;
use crate::rank::{rank_weight_poly, RankCode, RankSdpInstance};

/// A vector of nonzero elements of F_{q^m}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alpha {
    ctx: FieldCtx,
    values: Vec<Elem>,
}

impl Alpha {
    pub fn new(ctx: FieldCtx, values: Vec<Elem>) -> Result<Self> {
        for (i, &v) in values.iter().enumerate() {
            ctx.check(v)?;
            if v.is_zero() {
                return Err(Error::ZeroCoordinate(i));
            }
        }
        Ok(Alpha { ctx, values })
    }

    pub fn ones(ctx: FieldCtx, n: usize) -> Self {
        Alpha {
            ctx,
            values: vec![Elem::ONE; n],
        }
    }

    /// Coordinates drawn uniformly from the nonzero elements.
    pub fn sample<R: Rng + ?Sized>(n: usize, ctx: FieldCtx, rng: &mut R) -> Self {
        Alpha {
            ctx,
            values: (0..n).map(|_| ctx.sample_nonzero(rng)).collect(),
        }
    }

    pub fn ctx(&self) -> &FieldCtx {
        &self.ctx
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[Elem] {
        &self.values
    }

    /// Coordinatewise inverse.
    pub fn inverse(&self) -> Alpha {
        Alpha {
            ctx: self.ctx,
            values: self
                .values
                .iter()
                .map(|&v| self.ctx.inv(v).expect("coordinates are nonzero"))
                .collect(),
        }
    }

    /// Rank weight of alpha itself; equals n iff the coordinates are F_q-independent.
    pub fn rank(&self) -> usize {
        rank_weight_poly(&self.ctx, &self.values)
    }

    pub fn without(&self, j: usize) -> Alpha {
        let mut values = self.values.clone();
        values.remove(j);
        Alpha {
            ctx: self.ctx,
            values,
        }
    }
}

pub fn sample_alpha<R: Rng + ?Sized>(n: usize, ctx: FieldCtx, rng: &mut R) -> Alpha {
    Alpha::sample(n, ctx, rng)
}

pub fn alpha_rank(alpha: &Alpha) -> usize {
    alpha.rank()
}

/// `psi_alpha(x)` for `x` over the base field.
pub fn psi(x: &[Elem], alpha: &Alpha) -> Result<Vec<Elem>> {
    if x.len() != alpha.len() {
        return Err(Error::DimensionMismatch(format!(
            "vector of length {} against alpha of length {}",
            x.len(),
            alpha.len()
        )));
    }
    let ctx = alpha.ctx();
    x.iter()
        .zip(alpha.values())
        .map(|(&xi, &ai)| {
            if !ctx.in_base_field(xi) {
                return Err(Error::FieldMismatch);
            }
            Ok(ctx.mul(xi, ai))
        })
        .collect()
}

/// A Hamming code together with its image under an embedding.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmbeddedCode {
    pub source: LinearCode,
    pub alpha: Alpha,
    pub result: RankCode,
}

fn check_compatible(code_ctx: &FieldCtx, n: usize, alpha: &Alpha) -> Result<()> {
    if alpha.ctx().q() != code_ctx.q() {
        return Err(Error::FieldMismatch);
    }
    if alpha.len() != n {
        return Err(Error::DimensionMismatch(format!(
            "code of length {n} against alpha of length {}",
            alpha.len()
        )));
    }
    Ok(())
}

pub fn embed_code(code: &LinearCode, alpha: &Alpha) -> Result<EmbeddedCode> {
    check_compatible(code.ctx(), code.n(), alpha)?;
    let g = code
        .generator()
        .lift(*alpha.ctx())?
        .scale_columns(alpha.values())?;
    Ok(EmbeddedCode {
        source: code.clone(),
        alpha: alpha.clone(),
        result: RankCode::from_generator(g)?,
    })
}

/// `(embed(C, alpha), embed(C^perp, alpha^{-1}))`.
pub fn dual_pair(code: &LinearCode, alpha: &Alpha) -> Result<(EmbeddedCode, EmbeddedCode)> {
    Ok((
        embed_code(code, alpha)?,
        embed_code(&code.dual(), &alpha.inverse())?,
    ))
}

/// `G_1 G_2^T` for a dual pair; zero exactly when the codes are orthogonal.
pub fn orthogonality_product(pair: &(EmbeddedCode, EmbeddedCode)) -> Result<Matrix> {
    pair.0
        .result
        .generator()
        .mul(&pair.1.result.generator().transpose())
}

/// `(H, s, w) -> (H(beta), s, w)` with column j of H scaled by `beta_j`.
pub fn transform_sdp(inst: &HammingSdpInstance, beta: &Alpha) -> Result<RankSdpInstance> {
    check_compatible(inst.h.ctx(), inst.n(), beta)?;
    let ext = *beta.ctx();
    let h = inst.h.lift(ext)?.scale_columns(beta.values())?;
    RankSdpInstance::new(h, inst.syndrome.clone(), inst.w)
}

/// Carries a Hamming solution `x` of `(H, s)` to the solution `psi_{beta^{-1}}(x)` of `(H(beta), s)`.
pub fn transport_solution(x: &[Elem], beta: &Alpha) -> Result<Vec<Elem>> {
    psi(x, &beta.inverse())
}

/// Outcome of [`low_weight_structure_check`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LowWeightReport {
    /// Every embedded codeword of Hamming weight `w` is `lambda * psi_alpha(x)` with `x` in C.
    pub holds: bool,
    /// An embedded codeword of weight `w` without that form, if any.
    pub counterexample: Option<Vec<Elem>>,
    pub supports_checked: usize,
    /// Projective classes of weight-`w` embedded codewords examined.
    pub codewords_checked: u64,
    /// Whether every examined codeword also had rank weight `w`.
    pub rank_equals_weight: bool,
}

/// If `c = lambda * psi_alpha(x)` for some `x` in `code`, returns `x` normalized
/// so its first nonzero coordinate is 1.
pub fn divide_out(c: &[Elem], alpha: &Alpha, code: &LinearCode) -> Result<Option<Vec<Elem>>> {
    let ctx = alpha.ctx();
    let beta = alpha.inverse();
    let y: Vec<Elem> = c
        .iter()
        .zip(beta.values())
        .map(|(&a, &b)| ctx.mul(a, b))
        .collect();
    let Some(&lead) = y.iter().find(|e| !e.is_zero()) else {
        return Ok(Some(y));
    };
    let lead_inv = ctx.inv(lead)?;
    let x: Vec<Elem> = y.iter().map(|&e| ctx.mul(e, lead_inv)).collect();
    if !x.iter().all(|&e| ctx.in_base_field(e)) {
        return Ok(None);
    }
    Ok(code.contains(&x)?.then_some(x))
}

/// Checks that the weight-`w` codewords of the embedded code are all scalar
/// multiples of embedded codewords of `code`, for `w < (q+1) d / q`.
///
/// For each support `W` of size `w`, the codewords supported inside `W` are
/// `u G'` with `u` in the left kernel of the columns of `G'` outside `W`;
/// one representative per projective class of that kernel is examined.
pub fn low_weight_structure_check(
    code: &LinearCode,
    alpha: &Alpha,
    w: usize,
    budget: u64,
) -> Result<LowWeightReport> {
    let q = code.ctx().q() as usize;
    let d = min_hamming_distance(code)?.weight;
    if q * w >= (q + 1) * d {
        return Err(Error::InvalidParameter(format!(
            "weight {w} is not below (q+1)d/q with q={q}, d={d}"
        )));
    }
    let embedded = embed_code(code, alpha)?;
    let g = embedded.result.generator();
    let ctx = *alpha.ctx();
    let n = code.n();
    let mut report = LowWeightReport {
        holds: true,
        counterexample: None,
        supports_checked: 0,
        codewords_checked: 0,
        rank_equals_weight: true,
    };
    if w == 0 {
        return Ok(report);
    }
    let mut failure: Option<Error> = None;
    for_each_subset(n, w, |support| {
        report.supports_checked += 1;
        let outside: Vec<usize> = (0..n).filter(|j| !support.contains(j)).collect();
        let rest = g.select_columns(&outside).expect("indices in range");
        let kernel = rest.transpose().kernel();
        if kernel.is_empty() {
            return ControlFlow::Continue(());
        }
        if let Err(e) = check_budget(projective_count(ctx.order(), kernel.len()), budget) {
            failure = Some(e);
            return ControlFlow::Break(());
        }
        let basis: Vec<Vec<Elem>> = kernel
            .iter()
            .map(|u| g.vec_mul(u).expect("u has length k"))
            .collect();
        let found = for_each_projective(&ctx, basis.len(), |coeffs| {
            let mut c = vec![Elem::ZERO; n];
            for (&a, b) in coeffs.iter().zip(&basis) {
                for (ci, &bi) in c.iter_mut().zip(b) {
                    *ci = ctx.add(*ci, ctx.mul(a, bi));
                }
            }
            if hamming_weight(&c) != w {
                return ControlFlow::Continue(());
            }
            report.codewords_checked += 1;
            if rank_weight_poly(&ctx, &c) != w {
                report.rank_equals_weight = false;
            }
            match divide_out(&c, alpha, code) {
                Ok(Some(_)) => ControlFlow::Continue(()),
                Ok(None) => ControlFlow::Break(c),
                Err(_) => ControlFlow::Break(c),
            }
        });
        match found {
            Some(c) => {
                report.holds = false;
                report.counterexample = Some(c);
                ControlFlow::Break(())
            }
            None => ControlFlow::Continue(()),
        }
    });
    if let Some(e) = failure {
        return Err(e);
    }
    Ok(report)
}

/// For a coordinate set `W` that supports no nonzero codeword of `code` and
/// `j` in `W`, finds a word of the dual embedded code (the embedding of
/// `C^perp` under `alpha^{-1}`) whose support meets `W` exactly in `{j}`.
pub fn support_dual_word(
    code: &LinearCode,
    alpha: &Alpha,
    w_set: &[usize],
    j: usize,
) -> Result<Option<Vec<Elem>>> {
    if !w_set.contains(&j) {
        return Err(Error::InvalidParameter(format!(
            "{j} is not in the coordinate set"
        )));
    }
    let dual = embed_code(&code.dual(), &alpha.inverse())?;
    let d = dual.result.generator();
    if d.rows() == 0 {
        return Ok(None);
    }
    // find u with (u D)_i = [i == j] for i in W
    let sub = d.select_columns(w_set)?;
    let target: Vec<Elem> = w_set
        .iter()
        .map(|&i| if i == j { Elem::ONE } else { Elem::ZERO })
        .collect();
    match sub.transpose().solve(&target)? {
        Some(sol) => Ok(Some(d.vec_mul(&sol.particular)?)),
        None => Ok(None),
    }
}

/// True when no nonzero codeword of `code` has its support inside `w_set`.
pub fn supports_no_codeword(code: &LinearCode, w_set: &[usize]) -> Result<bool> {
    let outside: Vec<usize> = (0..code.n()).filter(|j| !w_set.contains(j)).collect();
    Ok(code.generator().select_columns(&outside)?.rank() == code.k())
}
