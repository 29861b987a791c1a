//! Cost and occupancy-probability matrices.
//!
//! Rows index learner time `t`, columns index demonstration time `j`,
//! everywhere in this crate. Cost entries are nonnegative distances; the
//! probability matrix rescales them into occupancy probabilities
//! `P(t, j) = exp(-lambda * d(t, j))`, so a zero distance maps to
//! probability 1 and probabilities decay monotonically with distance.

use ndarray::Array2;

use crate::metric::Metric;
use crate::trajectory::Trajectory;
use crate::{Error, Result};

/// Pairwise distances between learner and demonstration frames.
#[derive(Debug, Clone, PartialEq)]
pub struct CostMatrix {
    entries: Array2<f64>,
}

impl CostMatrix {
    /// Wraps a raw matrix, rejecting empty shapes, negatives, and non-finite
    /// entries.
    pub fn new(entries: Array2<f64>) -> Result<Self> {
        if entries.nrows() == 0 || entries.ncols() == 0 {
            return Err(Error::EmptyInput("cost matrix"));
        }
        if entries.iter().any(|&c| !c.is_finite() || c < 0.0) {
            return Err(Error::NonFinite("cost matrix"));
        }
        Ok(Self { entries })
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::Format("ragged cost matrix".into()));
        }
        let flat: Vec<f64> = rows.iter().flatten().copied().collect();
        let entries = Array2::from_shape_vec((nrows, ncols), flat)
            .map_err(|e| Error::Format(e.to_string()))?;
        Self::new(entries)
    }

    /// Learner length `T`.
    pub fn nrows(&self) -> usize {
        self.entries.nrows()
    }

    /// Demonstration length `T~`.
    pub fn ncols(&self) -> usize {
        self.entries.ncols()
    }

    pub fn get(&self, t: usize, j: usize) -> f64 {
        self.entries[[t, j]]
    }

    pub fn as_array(&self) -> &Array2<f64> {
        &self.entries
    }
}

/// Occupancy probabilities `P(t, j) = exp(-lambda * cost(t, j))`, each in
/// `(0, 1]` with equality to 1 exactly when the cost is 0.
#[derive(Debug, Clone, PartialEq)]
pub struct ProbabilityMatrix {
    entries: Array2<f64>,
    lambda: f64,
}

impl ProbabilityMatrix {
    pub fn nrows(&self) -> usize {
        self.entries.nrows()
    }

    pub fn ncols(&self) -> usize {
        self.entries.ncols()
    }

    pub fn get(&self, t: usize, j: usize) -> f64 {
        self.entries[[t, j]]
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    pub fn as_array(&self) -> &Array2<f64> {
        &self.entries
    }

    /// Test-support constructor for hand-built probability tables. Entries
    /// must lie in `(0, 1]`.
    pub fn from_rows(rows: &[Vec<f64>], lambda: f64) -> Result<Self> {
        let cost = CostMatrix::from_rows(rows)?;
        if cost.as_array().iter().any(|&p| p <= 0.0 || p > 1.0) {
            return Err(Error::InvalidParameter {
                name: "probability entries",
                reason: "must lie in (0, 1]".into(),
            });
        }
        Ok(Self {
            entries: cost.entries,
            lambda,
        })
    }
}

/// Builds the `T x T~` cost matrix `entry(t, j) = metric(learner[t], demo[j])`.
pub fn cost_matrix(learner: &Trajectory, demo: &Trajectory, metric: Metric) -> Result<CostMatrix> {
    if learner.dim() != demo.dim() {
        return Err(Error::DimMismatch(learner.dim(), demo.dim()));
    }
    let mut entries = Array2::zeros((learner.len(), demo.len()));
    for (t, lf) in learner.frames().iter().enumerate() {
        for (j, df) in demo.frames().iter().enumerate() {
            entries[[t, j]] = metric.distance(lf, df)?;
        }
    }
    CostMatrix::new(entries)
}

/// Diagonal smoothing: replaces each entry by the average over the next
/// `window` entries along the diagonal, clamping indices at the trajectory
/// ends so the shape is preserved.
///
/// `entry(t, j) = (1/w) * sum_{k=0}^{w-1} cost(min(t+k, T-1), min(j+k, T~-1))`
///
/// A window of 1 returns the input unchanged. Smoothing regularizes noisy
/// frame distances at the price of blurring sharp speed changes.
pub fn context_smooth(cost: &CostMatrix, window: usize) -> Result<CostMatrix> {
    if window < 1 {
        return Err(Error::InvalidParameter {
            name: "context window",
            reason: "must be >= 1".into(),
        });
    }
    if window == 1 {
        return Ok(cost.clone());
    }
    let (rows, cols) = (cost.nrows(), cost.ncols());
    let mut smoothed = Array2::zeros((rows, cols));
    for t in 0..rows {
        for j in 0..cols {
            let mut acc = 0.0;
            for k in 0..window {
                let tt = (t + k).min(rows - 1);
                let jj = (j + k).min(cols - 1);
                acc += cost.get(tt, jj);
            }
            smoothed[[t, j]] = acc / window as f64;
        }
    }
    CostMatrix::new(smoothed)
}

/// Converts costs into occupancy probabilities `exp(-lambda * cost)`.
pub fn probability_matrix(cost: &CostMatrix, lambda: f64) -> Result<ProbabilityMatrix> {
    if !(lambda > 0.0 && lambda.is_finite()) {
        return Err(Error::InvalidParameter {
            name: "lambda",
            reason: format!("must be a positive finite real, got {lambda}"),
        });
    }
    Ok(ProbabilityMatrix {
        entries: cost.as_array().mapv(|c| (-lambda * c).exp()),
        lambda,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cost_matrix_manhattan_example() {
        let learner = Trajectory::from_scalars(&[0.0, 1.0, 2.0]).unwrap();
        let demo = Trajectory::from_scalars(&[0.0, 2.0]).unwrap();
        let cost = cost_matrix(&learner, &demo, Metric::Manhattan).unwrap();
        let expected = [[0.0, 2.0], [1.0, 1.0], [2.0, 0.0]];
        for t in 0..3 {
            for j in 0..2 {
                assert_eq!(cost.get(t, j), expected[t][j]);
            }
        }
    }

    #[test]
    fn cost_matrix_zero_diagonal_for_identical_trajectories() {
        let traj = Trajectory::from_rows(&[vec![0.0, 1.0], vec![2.0, 0.0], vec![1.0, 1.0]]).unwrap();
        let cost = cost_matrix(&traj, &traj, Metric::Euclidean).unwrap();
        for t in 0..3 {
            assert_eq!(cost.get(t, t), 0.0);
        }
    }

    #[test]
    fn cost_matrix_rejects_dim_mismatch() {
        let a = Trajectory::from_scalars(&[0.0]).unwrap();
        let b = Trajectory::from_rows(&[vec![0.0, 1.0]]).unwrap();
        assert!(matches!(
            cost_matrix(&a, &b, Metric::Manhattan),
            Err(Error::DimMismatch(1, 2))
        ));
    }

    #[test]
    fn smooth_window_one_is_identity() {
        let cost = CostMatrix::from_rows(&[vec![0.0, 2.0], vec![1.0, 1.0]]).unwrap();
        let out = context_smooth(&cost, 1).unwrap();
        assert_eq!(out, cost);
        assert!(context_smooth(&cost, 0).is_err());
    }

    #[test]
    fn smooth_clamps_at_ends() {
        let cost = CostMatrix::from_rows(&[vec![0.0, 2.0], vec![1.0, 1.0], vec![2.0, 0.0]]).unwrap();
        let out = context_smooth(&cost, 2).unwrap();
        // entry(0,0) averages cost(0,0) and cost(1,1)
        assert_eq!(out.get(0, 0), 0.5);
        // bottom-right corner clamps both indices onto itself
        assert_eq!(out.get(2, 1), 0.0);
        // last row clamps t+1 to t
        assert_eq!(out.get(2, 0), (2.0 + 0.0) / 2.0);
    }

    #[test]
    fn smooth_preserves_zero_matrix() {
        let cost = CostMatrix::from_rows(&[vec![0.0; 4]; 3]).unwrap();
        for w in 1..=5 {
            let out = context_smooth(&cost, w).unwrap();
            assert!(out.as_array().iter().all(|&c| c == 0.0));
        }
    }

    #[test]
    fn probability_examples() {
        let cost = CostMatrix::from_rows(&[vec![0.0, 1.0, 2.0]]).unwrap();
        let p1 = probability_matrix(&cost, 1.0).unwrap();
        assert_eq!(p1.get(0, 0), 1.0);
        assert!((p1.get(0, 1) - 0.36787944117144233).abs() < 1e-15);
        let p_half = probability_matrix(&cost, 0.5).unwrap();
        assert!((p_half.get(0, 2) - 0.36787944117144233).abs() < 1e-15);
        assert!(probability_matrix(&cost, 0.0).is_err());
        assert!(probability_matrix(&cost, -1.0).is_err());
    }
}
