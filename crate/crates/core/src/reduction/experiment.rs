//! Seeded Monte Carlo trials comparing Hamming quantities of a code with the
//! rank quantities of its random embeddings.
//!
//! Trial `i` draws from its own ChaCha stream `(seed, i)`, so records do not
//! depend on scheduling; trials run on the rayon pool and are collected in
//! index order.

use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::embedding::{embed_code, transform_sdp, Alpha};
use crate::error::{Error, Result};
use crate::field::FieldCtx;
use crate::hamming::{min_hamming_distance, min_weight_coset, HammingSdpInstance, LinearCode};
use crate::rank::ExactRankSolver;

/// The RNG for trial `index` of an experiment seeded with `seed`.
pub fn trial_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

#[derive(Clone, Debug, Default)]
pub struct ExperimentOptions {
    pub solver: ExactRankSolver,
    /// Record wall-clock time per trial. Off by default so output is reproducible.
    pub timing: bool,
    /// Use this embedding vector in every trial instead of sampling one.
    pub alpha: Option<Alpha>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DistanceTrialRecord {
    pub q: u64,
    pub n: usize,
    pub k: usize,
    pub m: u32,
    pub seed: u64,
    pub trial_index: u64,
    pub d_h: usize,
    pub d_r: Option<usize>,
    pub equal: bool,
    pub elapsed_ms: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DecodingTrialRecord {
    pub q: u64,
    pub n: usize,
    pub r: usize,
    pub m: u32,
    pub seed: u64,
    pub trial_index: u64,
    pub w_h: usize,
    pub w_r: Option<usize>,
    pub equal: bool,
    pub elapsed_ms: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct DistanceExperiment {
    pub records: Vec<DistanceTrialRecord>,
    /// Completed trials with `d_R < d_H`.
    pub failures: usize,
    /// Trials that did not complete (budget).
    pub errors: usize,
    /// `failures / completed`; absent when nothing completed.
    pub failure_rate: Option<f64>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct DecodingExperiment {
    pub records: Vec<DecodingTrialRecord>,
    pub failures: usize,
    pub errors: usize,
    pub failure_rate: Option<f64>,
}

fn rate(failures: usize, errors: usize, trials: usize) -> Option<f64> {
    let completed = trials - errors;
    (completed > 0).then(|| failures as f64 / completed as f64)
}

fn check_alpha(alpha: &Option<Alpha>, ext: &FieldCtx, n: usize) -> Result<()> {
    if let Some(a) = alpha {
        if a.ctx() != ext {
            return Err(Error::FieldMismatch);
        }
        if a.len() != n {
            return Err(Error::DimensionMismatch(format!(
                "fixed alpha of length {} for length {n}",
                a.len()
            )));
        }
    }
    Ok(())
}

fn elapsed(start: Option<Instant>) -> Option<f64> {
    start.map(|s| s.elapsed().as_secs_f64() * 1000.0)
}

/// Embeds `code` into F_{q^m} `trials` times and compares rank with Hamming distance.
///
/// Budget failures of single trials are recorded in the trial's `error` field.
pub fn mc_distance_experiment(
    code: &LinearCode,
    m: u32,
    trials: usize,
    seed: u64,
    opts: &ExperimentOptions,
) -> Result<DistanceExperiment> {
    let q = code.ctx().q();
    let ext = FieldCtx::new(q, m)?;
    let n = code.n();
    check_alpha(&opts.alpha, &ext, n)?;
    let d_h = min_hamming_distance(code)?.weight;

    let records: Vec<DistanceTrialRecord> = (0..trials as u64)
        .into_par_iter()
        .map(|trial_index| {
            let start = opts.timing.then(Instant::now);
            let mut rng = trial_rng(seed, trial_index);
            let alpha = match &opts.alpha {
                Some(a) => a.clone(),
                None => Alpha::sample(n, ext, &mut rng),
            };
            let outcome =
                embed_code(code, &alpha).and_then(|e| opts.solver.min_distance(&e.result));
            let (d_r, error) = match outcome {
                Ok(w) => (Some(w.weight), None),
                Err(e) => (None, Some(e.to_string())),
            };
            DistanceTrialRecord {
                q,
                n,
                k: code.k(),
                m,
                seed,
                trial_index,
                d_h,
                d_r,
                equal: d_r == Some(d_h),
                elapsed_ms: elapsed(start),
                error,
            }
        })
        .collect();

    let errors = records.iter().filter(|r| r.d_r.is_none()).count();
    let failures = records
        .iter()
        .filter(|r| r.d_r.is_some() && !r.equal)
        .count();
    Ok(DistanceExperiment {
        failure_rate: rate(failures, errors, trials),
        records,
        failures,
        errors,
    })
}

/// Transforms the syndrome instance with a fresh nonzero `beta` per trial and
/// compares the minimum rank weight of the coset with the Hamming one.
pub fn mc_decoding_experiment(
    inst: &HammingSdpInstance,
    m: u32,
    trials: usize,
    seed: u64,
    opts: &ExperimentOptions,
) -> Result<DecodingExperiment> {
    let q = inst.h.ctx().q();
    let ext = FieldCtx::new(q, m)?;
    let n = inst.n();
    check_alpha(&opts.alpha, &ext, n)?;
    let w_h = min_weight_coset(inst)?.weight;

    let records: Vec<DecodingTrialRecord> = (0..trials as u64)
        .into_par_iter()
        .map(|trial_index| {
            let start = opts.timing.then(Instant::now);
            let mut rng = trial_rng(seed, trial_index);
            let beta = match &opts.alpha {
                Some(a) => a.clone(),
                None => Alpha::sample(n, ext, &mut rng),
            };
            let outcome = transform_sdp(inst, &beta).and_then(|r| opts.solver.min_coset_weight(&r));
            let (w_r, error) = match outcome {
                Ok(w) => (Some(w.weight), None),
                Err(e) => (None, Some(e.to_string())),
            };
            DecodingTrialRecord {
                q,
                n,
                r: inst.h.rows(),
                m,
                seed,
                trial_index,
                w_h,
                w_r,
                equal: w_r == Some(w_h),
                elapsed_ms: elapsed(start),
                error,
            }
        })
        .collect();

    let errors = records.iter().filter(|r| r.w_r.is_none()).count();
    let failures = records
        .iter()
        .filter(|r| r.w_r.is_some() && !r.equal)
        .count();
    Ok(DecodingExperiment {
        failure_rate: rate(failures, errors, trials),
        records,
        failures,
        errors,
    })
}
