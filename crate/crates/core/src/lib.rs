//! Hamming-metric linear codes over F_q, rank-metric codes over F_{q^m}, and
//! the randomized scaling embedding that carries one into the other.
//!
//! Everything is exact: distances and syndrome-decoding answers come from
//! exhaustive search under an explicit work budget.

pub mod embedding;
pub mod enumerate;
pub mod error;
pub mod field;
pub mod hamming;
pub mod matrix;
pub mod rank;
pub mod reduction;

pub use embedding::{embed_code, psi, transform_sdp, Alpha, EmbeddedCode};
pub use error::{Error, Result};
pub use field::{Elem, FieldCtx};
pub use hamming::{HammingSdpInstance, LinearCode, MinWeight};
pub use matrix::Matrix;
pub use rank::{ExactRankSolver, RankCode, RankSdpInstance, SearchMethod};
