//! # seqmatch
//!
//! Reward functions for imitating a single demonstration that may be
//! *temporally misaligned* with the learner: the demonstrator can pause,
//! accelerate, or move at speeds the learner cannot match.
//!
//! Every reward function here consumes a learner [`Trajectory`] and a
//! demonstration [`Trajectory`] (ordered frame embeddings) and produces a
//! [`RewardSeries`]: one scalar per learner timestep.
//!
//! | Function | Module | Matching level |
//! |----------|--------|----------------|
//! | Ordered coverage (ORCA) | [`orca`] | sequence |
//! | Entropic optimal transport | [`transport`] | frame |
//! | TemporalOT (masked transport) | [`transport`] | frame |
//! | Dynamic time warping | [`dtw`] | frame |
//! | Threshold subgoal tracker | [`threshold`] | frame |
//!
//! The frame-level functions share a failure mode: they can reward learners
//! that visit subgoals out of order, stall on an intermediate subgoal, or
//! never reach the final one. The [`gridworld`] module constructs small
//! navigation scenarios in which each failure is an executable assertion,
//! and the [`rl`] module trains tabular Q-learning agents against any of
//! the reward functions to compare outcomes end to end. The [`misalign`]
//! module generates temporally perturbed demonstrations for benchmarking.

use thiserror::Error;

pub mod confidence;
pub mod dtw;
pub mod gridworld;
pub mod matrix;
pub mod metric;
pub mod misalign;
pub mod orca;
pub mod rl;
pub mod threshold;
pub mod trajectory;
pub mod transport;

pub use confidence::{confidence_scale, ConfidenceStats};
pub use dtw::{dtw_align, dtw_rewards, WarpPath};
pub use matrix::{
    context_smooth, cost_matrix, probability_matrix, CostMatrix, ProbabilityMatrix,
};
pub use metric::{cosine_distance, euclidean_distance, manhattan_distance, Metric};
pub use orca::{coverage_matrix, coverage_oracle, orca_rewards, CoverageMatrix};
pub use threshold::{threshold_rewards, ThresholdConfig};
pub use trajectory::{FrameEmbedding, RewardSeries, Trajectory};
pub use transport::{
    build_mask, default_mask_width, ot_rewards, sinkhorn, temporal_ot_rewards, Coupling, Mask,
    SinkhornParams,
};

/// Temperature for converting distances into occupancy probabilities.
pub const DEFAULT_LAMBDA: f64 = 1.0;
/// Context window for cost-matrix smoothing.
pub const DEFAULT_CONTEXT_WINDOW: usize = 3;
/// Entropic regularization weight for transport rewards.
pub const DEFAULT_EPSILON: f64 = 1.0;

/// Errors shared by all reward computations.
#[derive(Debug, Error)]
pub enum Error {
    /// Two frames (or trajectories) disagree on embedding dimension.
    #[error("embedding dimension mismatch: {0} vs {1}")]
    DimMismatch(usize, usize),

    /// A trajectory, matrix, or batch was empty where at least one element
    /// is required.
    #[error("empty input: {0}")]
    EmptyInput(&'static str),

    /// A frame contained NaN or infinite entries.
    #[error("non-finite value in {0}")]
    NonFinite(&'static str),

    /// Cosine distance is undefined for zero-norm vectors.
    #[error("zero-norm vector passed to cosine distance")]
    ZeroVector,

    /// A numeric parameter was outside its valid range.
    #[error("invalid parameter {name}: {reason}")]
    InvalidParameter { name: &'static str, reason: String },

    /// The TemporalOT mask left a row or column without any admissible match.
    #[error("infeasible mask: {0}")]
    InfeasibleMask(String),

    /// Sinkhorn hit the iteration cap before meeting the marginal tolerance.
    #[error("sinkhorn did not converge in {iterations} iterations (marginal violation {violation:.3e})")]
    NotConverged { iterations: usize, violation: f64 },

    /// A trajectory file failed to parse or violated an invariant.
    #[error("trajectory format error: {0}")]
    Format(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

/// Result alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
