//! Experiments and reductions built on the embedding: seeded Monte Carlo
//! estimates of how often the embedding preserves distance or decoding
//! weight, the column-removal witness search, diagnostic bounds, and
//! promise-instance transforms.

pub mod bounds;
pub mod experiment;
pub mod gap;
pub mod witness;

pub use bounds::{
    distance_bound_terms, lin_dep_probability, lin_dep_probability_exact, BoundKind, BoundTerm,
};
pub use experiment::{
    mc_decoding_experiment, mc_distance_experiment, trial_rng, DecodingExperiment,
    DecodingTrialRecord, DistanceExperiment, DistanceTrialRecord, ExperimentOptions,
};
pub use gap::{certify, gap_transform, GapCode, GapInstance, PromiseLabel};
pub use witness::{
    witness_search_mdp, witness_search_sdp, ExactOracle, MinDistanceOracle, NoisyOracle,
    SyndromeOracle, WitnessOutcome,
};
