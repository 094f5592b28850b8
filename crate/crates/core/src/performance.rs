//! Deterministic overall-performance scoring and qualitative banding.
//!
//! The overall performance of a cluster is the mean of its members'
//! per-course averages, expressed as a percentage. The score is then mapped
//! to one of six qualitative bands over half-open intervals.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::data::ScoreMatrix;
use crate::error::{Error, Result};
use crate::kmeans::ClusterModel;
use crate::scalar::Scalar;

/// Qualitative performance label, ordered from worst to best.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum PerformanceBand {
    Poor,
    Fair,
    VeryFair,
    Good,
    VeryGood,
    Excellent,
}

impl PerformanceBand {
    /// All bands, worst to best.
    pub const ALL: [PerformanceBand; 6] = [
        PerformanceBand::Poor,
        PerformanceBand::Fair,
        PerformanceBand::VeryFair,
        PerformanceBand::Good,
        PerformanceBand::VeryGood,
        PerformanceBand::Excellent,
    ];

    /// Human-readable label.
    pub fn label(self) -> &'static str {
        match self {
            PerformanceBand::Poor => "Poor",
            PerformanceBand::Fair => "Fair",
            PerformanceBand::VeryFair => "Very Fair",
            PerformanceBand::Good => "Good",
            PerformanceBand::VeryGood => "Very Good",
            PerformanceBand::Excellent => "Excellent",
        }
    }

    /// Inverse of [`PerformanceBand::label`].
    pub fn from_label(label: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|b| b.label() == label)
    }

    /// Inclusive lower bound of the band's score interval.
    pub fn lower(self) -> f64 {
        match self {
            PerformanceBand::Poor => 0.0,
            PerformanceBand::Fair => 40.0,
            PerformanceBand::VeryFair => 45.0,
            PerformanceBand::Good => 50.0,
            PerformanceBand::VeryGood => 60.0,
            PerformanceBand::Excellent => 70.0,
        }
    }

    /// Exclusive upper bound, or `None` for the open-ended top band.
    pub fn upper(self) -> Option<f64> {
        match self {
            PerformanceBand::Poor => Some(40.0),
            PerformanceBand::Fair => Some(45.0),
            PerformanceBand::VeryFair => Some(50.0),
            PerformanceBand::Good => Some(60.0),
            PerformanceBand::VeryGood => Some(70.0),
            PerformanceBand::Excellent => None,
        }
    }
}

impl fmt::Display for PerformanceBand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Maps a non-negative performance value to its band.
///
/// The intervals partition `[0, ∞)`: `[70, ∞)` Excellent, `[60, 70)` Very
/// Good, `[50, 60)` Good, `[45, 50)` Very Fair, `[40, 45)` Fair, `[0, 40)`
/// Poor.
pub fn band_of<S: Scalar>(overall: S) -> Result<PerformanceBand> {
    if !overall.is_finite() || overall < S::zero() {
        return Err(Error::InvalidInput(format!(
            "performance value must be finite and non-negative, got {overall}"
        )));
    }
    let band = if overall >= S::cast(70.0) {
        PerformanceBand::Excellent
    } else if overall >= S::cast(60.0) {
        PerformanceBand::VeryGood
    } else if overall >= S::cast(50.0) {
        PerformanceBand::Good
    } else if overall >= S::cast(45.0) {
        PerformanceBand::VeryFair
    } else if overall >= S::cast(40.0) {
        PerformanceBand::Fair
    } else {
        PerformanceBand::Poor
    };
    Ok(band)
}

/// Mean of the members' per-course average scores.
pub fn overall_performance<S: Scalar>(members: &[&[S]]) -> Result<S> {
    if members.is_empty() {
        return Err(Error::InvalidInput(
            "cannot score a cluster with no members".into(),
        ));
    }
    let dim = members[0].len();
    if dim == 0 {
        return Err(Error::InvalidInput("rows must have at least one score".into()));
    }
    let mut sum_of_means = S::zero();
    for row in members {
        if row.len() != dim {
            return Err(Error::DimensionMismatch {
                left: row.len(),
                right: dim,
            });
        }
        sum_of_means += row.iter().copied().sum::<S>() / S::from_count(dim);
    }
    Ok(sum_of_means / S::from_count(members.len()))
}

/// Performance summary for one cluster.
///
/// `overall` and `band` are absent for empty clusters, which have no
/// defined performance value.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClusterPerformance<S> {
    pub cluster_index: usize,
    pub size: usize,
    pub overall: Option<S>,
    pub band: Option<PerformanceBand>,
}

/// Scores every cluster of a fitted model, ordered by cluster index.
pub fn evaluate_clusters<S: Scalar>(
    data: &ScoreMatrix<S>,
    model: &ClusterModel<S>,
) -> Result<Vec<ClusterPerformance<S>>> {
    if model.assignments.len() != data.n_rows() {
        return Err(Error::DimensionMismatch {
            left: model.assignments.len(),
            right: data.n_rows(),
        });
    }
    let k = model.k();
    let mut members: Vec<Vec<&[S]>> = vec![Vec::new(); k];
    for (row, &a) in data.rows().zip(&model.assignments) {
        if a >= k {
            return Err(Error::Internal(format!(
                "assignment index {a} out of range for k={k}"
            )));
        }
        members[a].push(row);
    }
    members
        .iter()
        .enumerate()
        .map(|(j, rows)| {
            if rows.is_empty() {
                Ok(ClusterPerformance {
                    cluster_index: j,
                    size: 0,
                    overall: None,
                    band: None,
                })
            } else {
                let overall = overall_performance(rows)?;
                Ok(ClusterPerformance {
                    cluster_index: j,
                    size: rows.len(),
                    overall: Some(overall),
                    band: Some(band_of(overall)?),
                })
            }
        })
        .collect()
}
