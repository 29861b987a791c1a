//! Pairwise frame distances.

use std::fmt;
use std::str::FromStr;

use crate::trajectory::FrameEmbedding;
use crate::{Error, Result};

/// Distance selector. Cosine suits normalized visual embeddings, Euclidean
/// suits coordinate-like embeddings (e.g. joint predictions), Manhattan is
/// the natural metric on grid cells.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Metric {
    Euclidean,
    Cosine,
    Manhattan,
}

impl Metric {
    pub fn distance(self, a: &FrameEmbedding, b: &FrameEmbedding) -> Result<f64> {
        match self {
            Metric::Euclidean => euclidean_distance(a, b),
            Metric::Cosine => cosine_distance(a, b),
            Metric::Manhattan => manhattan_distance(a, b),
        }
    }
}

impl fmt::Display for Metric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Metric::Euclidean => "euclidean",
            Metric::Cosine => "cosine",
            Metric::Manhattan => "manhattan",
        };
        f.write_str(name)
    }
}

impl FromStr for Metric {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "euclidean" => Ok(Metric::Euclidean),
            "cosine" => Ok(Metric::Cosine),
            "manhattan" => Ok(Metric::Manhattan),
            other => Err(Error::InvalidParameter {
                name: "metric",
                reason: format!("unknown metric {other:?} (euclidean|cosine|manhattan)"),
            }),
        }
    }
}

fn check_dims(a: &FrameEmbedding, b: &FrameEmbedding) -> Result<()> {
    if a.dim() != b.dim() {
        return Err(Error::DimMismatch(a.dim(), b.dim()));
    }
    Ok(())
}

/// `||a - b||_2`
pub fn euclidean_distance(a: &FrameEmbedding, b: &FrameEmbedding) -> Result<f64> {
    check_dims(a, b)?;
    let sum: f64 = a
        .values()
        .iter()
        .zip(b.values())
        .map(|(x, y)| (x - y) * (x - y))
        .sum();
    Ok(sum.sqrt())
}

/// `1 - (a . b) / (||a|| ||b||)`, in `[0, 2]`. Errors on zero-norm input.
pub fn cosine_distance(a: &FrameEmbedding, b: &FrameEmbedding) -> Result<f64> {
    check_dims(a, b)?;
    let mut dot = 0.0;
    let mut na = 0.0;
    let mut nb = 0.0;
    for (x, y) in a.values().iter().zip(b.values()) {
        dot += x * y;
        na += x * x;
        nb += y * y;
    }
    if na == 0.0 || nb == 0.0 {
        return Err(Error::ZeroVector);
    }
    let cos = dot / (na.sqrt() * nb.sqrt());
    // Rounding can push |cos| a hair past 1; clamp so the distance stays in [0, 2].
    Ok(1.0 - cos.clamp(-1.0, 1.0))
}

/// `sum_i |a_i - b_i|`
pub fn manhattan_distance(a: &FrameEmbedding, b: &FrameEmbedding) -> Result<f64> {
    check_dims(a, b)?;
    Ok(a.values()
        .iter()
        .zip(b.values())
        .map(|(x, y)| (x - y).abs())
        .sum())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn frame(values: &[f64]) -> FrameEmbedding {
        FrameEmbedding::new(values.to_vec()).unwrap()
    }

    #[test]
    fn euclidean_examples() {
        assert_eq!(
            euclidean_distance(&frame(&[0.0, 0.0]), &frame(&[0.0, 0.0])).unwrap(),
            0.0
        );
        assert_eq!(
            euclidean_distance(&frame(&[0.0, 0.0]), &frame(&[3.0, 4.0])).unwrap(),
            5.0
        );
        // sqrt(1 + 4 + 4) = 3
        assert_eq!(
            euclidean_distance(&frame(&[1.0, 2.0, 2.0]), &frame(&[0.0, 0.0, 0.0])).unwrap(),
            3.0
        );
    }

    #[test]
    fn cosine_examples() {
        let e = |a: &[f64], b: &[f64]| cosine_distance(&frame(a), &frame(b)).unwrap();
        assert!((e(&[1.0, 0.0], &[1.0, 0.0])).abs() < 1e-15);
        assert!((e(&[1.0, 0.0], &[0.0, 1.0]) - 1.0).abs() < 1e-15);
        assert!((e(&[1.0, 0.0], &[-1.0, 0.0]) - 2.0).abs() < 1e-15);
    }

    #[test]
    fn cosine_rejects_zero_vector() {
        let err = cosine_distance(&frame(&[0.0, 0.0]), &frame(&[1.0, 0.0]));
        assert!(matches!(err, Err(Error::ZeroVector)));
    }

    #[test]
    fn manhattan_examples() {
        let m = |a: &[f64], b: &[f64]| manhattan_distance(&frame(a), &frame(b)).unwrap();
        assert_eq!(m(&[0.0, 0.0], &[0.0, 0.0]), 0.0);
        assert_eq!(m(&[0.0, 0.0], &[2.0, 3.0]), 5.0);
        assert_eq!(m(&[1.0, 1.0], &[4.0, 0.0]), 4.0);
    }

    #[test]
    fn dim_mismatch_is_rejected() {
        for metric in [Metric::Euclidean, Metric::Cosine, Metric::Manhattan] {
            let err = metric.distance(&frame(&[1.0]), &frame(&[1.0, 2.0]));
            assert!(matches!(err, Err(Error::DimMismatch(1, 2))));
        }
    }

    #[test]
    fn metric_parses_from_str() {
        assert_eq!("cosine".parse::<Metric>().unwrap(), Metric::Cosine);
        assert!("chebyshev".parse::<Metric>().is_err());
    }
}
