//! Column-removal witness search: decides a Hamming problem using only a
//! yes/no oracle for the corresponding rank problem on freshly randomized
//! embeddings.
//!
//! For minimum distance, coordinates are tentatively removed by shortening
//! (deleting a parity-check column) and the removal is kept whenever the
//! re-embedded shortened code still has a word of rank weight at most `w`.
//! For syndrome decoding, removing column `j` of `H` forces `x_j = 0`.

use rand::{Rng, RngCore};

use crate::embedding::{embed_code, transform_sdp, Alpha};
use crate::error::Result;
use crate::field::FieldCtx;
use crate::hamming::{shorten, HammingSdpInstance, LinearCode};
use crate::rank::{ExactRankSolver, RankCode, RankSdpInstance};

/// Answers "does this rank code have a nonzero word of rank weight at most `w`?".
pub trait MinDistanceOracle {
    fn query(&self, code: &RankCode, w: usize, rng: &mut dyn RngCore) -> Result<bool>;
}

/// Answers "does `H x = s` have a solution of rank weight at most `inst.w`?".
pub trait SyndromeOracle {
    fn query(&self, inst: &RankSdpInstance, rng: &mut dyn RngCore) -> Result<bool>;
}

/// Zero-error oracle backed by exhaustive search.
#[derive(Clone, Copy, Debug, Default)]
pub struct ExactOracle {
    pub solver: ExactRankSolver,
}

impl MinDistanceOracle for ExactOracle {
    fn query(&self, code: &RankCode, w: usize, _rng: &mut dyn RngCore) -> Result<bool> {
        self.solver.has_word_within(code, w)
    }
}

impl SyndromeOracle for ExactOracle {
    fn query(&self, inst: &RankSdpInstance, _rng: &mut dyn RngCore) -> Result<bool> {
        self.solver.has_solution_within(inst)
    }
}

/// Wraps an oracle so that each YES answer is independently lost with
/// probability `false_negative_rate`; a query is retried `retries` times and
/// answers YES if any attempt does. NO answers are always correct.
#[derive(Clone, Copy, Debug)]
pub struct NoisyOracle<O> {
    pub inner: O,
    pub false_negative_rate: f64,
    pub retries: u32,
}

impl<O> NoisyOracle<O> {
    pub fn new(inner: O, false_negative_rate: f64) -> Self {
        NoisyOracle {
            inner,
            false_negative_rate,
            retries: 1,
        }
    }

    fn degrade(&self, truth: bool, rng: &mut dyn RngCore) -> bool {
        truth
            && (0..self.retries.max(1))
                .any(|_| !rng.gen_bool(self.false_negative_rate.clamp(0.0, 1.0)))
    }
}

impl<O: MinDistanceOracle> MinDistanceOracle for NoisyOracle<O> {
    fn query(&self, code: &RankCode, w: usize, rng: &mut dyn RngCore) -> Result<bool> {
        let truth = self.inner.query(code, w, rng)?;
        Ok(self.degrade(truth, rng))
    }
}

impl<O: SyndromeOracle> SyndromeOracle for NoisyOracle<O> {
    fn query(&self, inst: &RankSdpInstance, rng: &mut dyn RngCore) -> Result<bool> {
        let truth = self.inner.query(inst, rng)?;
        Ok(self.degrade(truth, rng))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessOutcome {
    pub accepted: bool,
    pub queries: usize,
    /// Original indices of the coordinates left at the end.
    pub remaining_columns: Vec<usize>,
}

/// Decides `d_H(code) <= w` through a rank minimum-distance oracle over F_{q^m}.
pub fn witness_search_mdp<O: MinDistanceOracle + ?Sized>(
    code: &LinearCode,
    w: usize,
    m: u32,
    oracle: &O,
    rng: &mut dyn RngCore,
) -> Result<WitnessOutcome> {
    let ext = FieldCtx::new(code.ctx().q(), m)?;
    let ask = |c: &LinearCode, rng: &mut dyn RngCore| -> Result<bool> {
        let alpha = Alpha::sample(c.n(), ext, rng);
        oracle.query(&embed_code(c, &alpha)?.result, w, rng)
    };

    let mut remaining: Vec<usize> = (0..code.n()).collect();
    let mut queries = 1;
    if !ask(code, rng)? {
        return Ok(WitnessOutcome {
            accepted: false,
            queries,
            remaining_columns: remaining,
        });
    }
    let mut current = code.clone();
    let mut pos = 0;
    while current.n() > w && pos < current.n() {
        let candidate = shorten(&current, pos)?;
        queries += 1;
        if ask(&candidate, rng)? {
            current = candidate;
            remaining.remove(pos);
        } else {
            pos += 1;
        }
    }
    Ok(WitnessOutcome {
        accepted: current.n() <= w && current.k() >= 1,
        queries,
        remaining_columns: remaining,
    })
}

/// Decides whether `H x = s` has a solution of Hamming weight at most `w`
/// through a rank syndrome-decoding oracle over F_{q^m}.
pub fn witness_search_sdp<O: SyndromeOracle + ?Sized>(
    inst: &HammingSdpInstance,
    w: usize,
    m: u32,
    oracle: &O,
    rng: &mut dyn RngCore,
) -> Result<WitnessOutcome> {
    let ext = FieldCtx::new(inst.h.ctx().q(), m)?;
    let s = &inst.syndrome;
    let s_is_zero = s.iter().all(|e| e.is_zero());
    let ask = |h: &crate::matrix::Matrix, rng: &mut dyn RngCore| -> Result<bool> {
        let beta = Alpha::sample(h.cols(), ext, rng);
        let reduced = HammingSdpInstance::new(h.clone(), s.clone(), w)?;
        oracle.query(&transform_sdp(&reduced, &beta)?, rng)
    };

    let mut remaining: Vec<usize> = (0..inst.n()).collect();
    let mut queries = 1;
    if !ask(&inst.h, rng)? {
        return Ok(WitnessOutcome {
            accepted: false,
            queries,
            remaining_columns: remaining,
        });
    }
    let mut h = inst.h.clone();
    let mut pos = 0;
    while remaining.len() > w && pos < remaining.len() {
        // with no columns left the only solution is empty, of weight 0
        let keep = if remaining.len() == 1 {
            s_is_zero
        } else {
            let candidate = h.delete_column(pos)?;
            queries += 1;
            if ask(&candidate, rng)? {
                h = candidate;
                remaining.remove(pos);
                continue;
            }
            false
        };
        if keep {
            remaining.clear();
        } else {
            pos += 1;
        }
    }
    let consistent = if remaining.is_empty() {
        s_is_zero
    } else {
        h.solve(s)?.is_some()
    };
    Ok(WitnessOutcome {
        accepted: remaining.len() <= w && consistent,
        queries,
        remaining_columns: remaining,
    })
}
