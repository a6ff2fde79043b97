//! Promise ("gap") versions of the minimum-distance and nearest-codeword
//! problems, and their transport through the embedding.
//!
//! An instance with threshold `t` and factor `gamma` is YES when the relevant
//! distance is at most `t` and NO when it exceeds `gamma * t`.

use serde::{Deserialize, Serialize};

use crate::embedding::{embed_code, psi, Alpha};
use crate::error::{Error, Result};
use crate::field::Elem;
use crate::hamming::{min_hamming_distance, min_weight_coset, HammingSdpInstance, LinearCode};
use crate::rank::{ExactRankSolver, RankCode, RankSdpInstance};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum PromiseLabel {
    Yes,
    No,
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GapCode {
    Hamming(LinearCode),
    Rank(RankCode),
}

impl GapCode {
    pub fn n(&self) -> usize {
        match self {
            GapCode::Hamming(c) => c.n(),
            GapCode::Rank(c) => c.n(),
        }
    }
}

/// Minimum-distance instance when `target` is absent, nearest-codeword otherwise.
#[derive(Clone, Debug, PartialEq)]
pub struct GapInstance {
    pub code: GapCode,
    pub target: Option<Vec<Elem>>,
    pub t: usize,
    pub gamma: f64,
    pub label: PromiseLabel,
}

impl GapInstance {
    pub fn new(
        code: GapCode,
        target: Option<Vec<Elem>>,
        t: usize,
        gamma: f64,
        label: PromiseLabel,
    ) -> Result<Self> {
        if t < 1 {
            return Err(Error::InvalidParameter(
                "threshold t must be at least 1".into(),
            ));
        }
        if gamma.is_nan() || gamma < 1.0 {
            return Err(Error::InvalidParameter(format!(
                "gamma must be at least 1, got {gamma}"
            )));
        }
        if let Some(v) = &target {
            if v.len() != code.n() {
                return Err(Error::DimensionMismatch(format!(
                    "target of length {} for a code of length {}",
                    v.len(),
                    code.n()
                )));
            }
        }
        Ok(GapInstance {
            code,
            target,
            t,
            gamma,
            label,
        })
    }

    /// Classifies a distance against the promise.
    pub fn classify(&self, distance: usize) -> PromiseLabel {
        if distance <= self.t {
            PromiseLabel::Yes
        } else if distance as f64 > self.gamma * self.t as f64 {
            PromiseLabel::No
        } else {
            PromiseLabel::Unknown
        }
    }

    /// Hamming or rank distance of the instance: minimum distance of the code,
    /// or distance from the target to the code.
    pub fn distance(&self, solver: &ExactRankSolver) -> Result<usize> {
        match (&self.code, &self.target) {
            (GapCode::Hamming(c), None) => Ok(min_hamming_distance(c)?.weight),
            (GapCode::Rank(c), None) => Ok(solver.min_distance(c)?.weight),
            (GapCode::Hamming(c), Some(v)) => {
                let h = c.parity_check();
                let inst = HammingSdpInstance::new(h.clone(), h.mul_vec(v)?, 0)?;
                Ok(min_weight_coset(&inst)?.weight)
            }
            (GapCode::Rank(c), Some(v)) => {
                let h = c.parity_check();
                let inst = RankSdpInstance::new(h.clone(), h.mul_vec(v)?, 0)?;
                Ok(solver.min_coset_weight(&inst)?.weight)
            }
        }
    }
}

/// Carries a Hamming promise instance to a rank one over the field of `alpha`.
///
/// The code becomes its embedding and the target `v` becomes `psi_alpha(v)`,
/// whose syndrome under the embedded parity check `H diag(alpha^{-1})` is `H v`.
/// YES labels transport because embedding never increases weight; NO labels
/// only survive when the sampled embedding preserves distance, so they become
/// UNKNOWN (see [`certify`]).
pub fn gap_transform(inst: &GapInstance, alpha: &Alpha) -> Result<GapInstance> {
    let GapCode::Hamming(code) = &inst.code else {
        return Err(Error::InvalidParameter(
            "expected a Hamming-metric instance".into(),
        ));
    };
    let embedded = embed_code(code, alpha)?;
    let target = inst.target.as_deref().map(|v| psi(v, alpha)).transpose()?;
    let label = match inst.label {
        PromiseLabel::Yes => PromiseLabel::Yes,
        _ => PromiseLabel::Unknown,
    };
    GapInstance::new(
        GapCode::Rank(embedded.result),
        target,
        inst.t,
        inst.gamma,
        label,
    )
}

/// The label an instance actually deserves, by exact computation.
pub fn certify(inst: &GapInstance, solver: &ExactRankSolver) -> Result<PromiseLabel> {
    Ok(inst.classify(inst.distance(solver)?))
}
