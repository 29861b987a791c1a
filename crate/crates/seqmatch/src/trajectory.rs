//! Frame embeddings, trajectories, and the on-disk trajectory format.
//!
//! A frame is an observation that has already been passed through whatever
//! encoder the experiment uses; this crate only ever sees the resulting
//! feature vector. A trajectory is a non-empty, time-ordered list of frames
//! that all share one embedding dimension.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// One encoded observation: a finite feature vector of dimension >= 1.
#[derive(Debug, Clone, PartialEq)]
pub struct FrameEmbedding {
    values: Vec<f64>,
}

impl FrameEmbedding {
    /// Builds a frame, rejecting empty vectors and non-finite entries.
    pub fn new(values: Vec<f64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::EmptyInput("frame embedding"));
        }
        if values.iter().any(|v| !v.is_finite()) {
            return Err(Error::NonFinite("frame embedding"));
        }
        Ok(Self { values })
    }

    pub fn dim(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }
}

/// Serialized form: `{"dim": 2, "frames": [[0.0, 1.0], ...]}` with the outer
/// order of `frames` being time.
#[derive(Debug, Serialize, Deserialize)]
struct TrajectoryFile {
    dim: usize,
    frames: Vec<Vec<f64>>,
}

/// A time-ordered, non-empty sequence of frames with a common dimension.
#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory {
    frames: Vec<FrameEmbedding>,
}

impl Trajectory {
    pub fn new(frames: Vec<FrameEmbedding>) -> Result<Self> {
        let Some(first) = frames.first() else {
            return Err(Error::EmptyInput("trajectory"));
        };
        let dim = first.dim();
        for frame in &frames {
            if frame.dim() != dim {
                return Err(Error::DimMismatch(dim, frame.dim()));
            }
        }
        Ok(Self { frames })
    }

    /// Convenience constructor from raw rows (outer index = time).
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let frames = rows
            .iter()
            .map(|r| FrameEmbedding::new(r.clone()))
            .collect::<Result<Vec<_>>>()?;
        Self::new(frames)
    }

    /// Convenience constructor for 1-D sequences.
    pub fn from_scalars(values: &[f64]) -> Result<Self> {
        Self::from_rows(&values.iter().map(|&v| vec![v]).collect::<Vec<_>>())
    }

    /// Number of frames (always >= 1).
    pub fn len(&self) -> usize {
        self.frames.len()
    }

    /// Trajectories are never empty, but clippy insists.
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn dim(&self) -> usize {
        self.frames[0].dim()
    }

    pub fn frames(&self) -> &[FrameEmbedding] {
        &self.frames
    }

    pub fn frame(&self, t: usize) -> &FrameEmbedding {
        &self.frames[t]
    }

    /// The first `t` frames as a new trajectory (`t >= 1`).
    pub fn prefix(&self, t: usize) -> Result<Self> {
        if t == 0 || t > self.len() {
            return Err(Error::InvalidParameter {
                name: "prefix length",
                reason: format!("must be in 1..={}, got {t}", self.len()),
            });
        }
        Ok(Self {
            frames: self.frames[..t].to_vec(),
        })
    }

    /// Same frames in reverse time order.
    pub fn reversed(&self) -> Self {
        let mut frames = self.frames.clone();
        frames.reverse();
        Self { frames }
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let file: TrajectoryFile = serde_json::from_str(s)?;
        let traj = Self::from_rows(&file.frames)?;
        if traj.dim() != file.dim {
            return Err(Error::Format(format!(
                "declared dim {} does not match frame dim {}",
                file.dim,
                traj.dim()
            )));
        }
        Ok(traj)
    }

    pub fn to_json_string(&self) -> String {
        let file = TrajectoryFile {
            dim: self.dim(),
            frames: self.frames.iter().map(|f| f.values.clone()).collect(),
        };
        serde_json::to_string_pretty(&file).expect("trajectory serialization cannot fail")
    }

    pub fn load(path: &Path) -> Result<Self> {
        Self::from_json_str(&std::fs::read_to_string(path)?)
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        std::fs::write(path, self.to_json_string())?;
        Ok(())
    }
}

/// Per-timestep rewards; always as long as the learner trajectory.
#[derive(Debug, Clone, PartialEq)]
pub struct RewardSeries {
    rewards: Vec<f64>,
}

impl RewardSeries {
    pub fn new(rewards: Vec<f64>) -> Result<Self> {
        if rewards.is_empty() {
            return Err(Error::EmptyInput("reward series"));
        }
        if rewards.iter().any(|r| !r.is_finite()) {
            return Err(Error::NonFinite("reward series"));
        }
        Ok(Self { rewards })
    }

    pub fn len(&self) -> usize {
        self.rewards.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn values(&self) -> &[f64] {
        &self.rewards
    }

    pub fn get(&self, t: usize) -> f64 {
        self.rewards[t]
    }

    /// Cumulative (undiscounted) reward.
    pub fn total(&self) -> f64 {
        self.rewards.iter().sum()
    }

    pub fn mean(&self) -> f64 {
        self.total() / self.rewards.len() as f64
    }
}
