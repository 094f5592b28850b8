//! Lloyd-style k-means over score matrices, plus the silhouette validity
//! metric.
//!
//! The iteration alternates nearest-centroid assignment (squared Euclidean
//! distance, ties to the lowest cluster index) with arithmetic-mean centroid
//! updates, and stops as soon as the assignment-step SSE fails to strictly
//! decrease. Distances within one pass are always measured against the
//! previous pass's centroids; updates go into separate accumulators.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::data::ScoreMatrix;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Centroid seeding strategy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum InitStrategy {
    /// Copy the first k rows in row order.
    FirstK,
    /// Sample k distinct rows with a ChaCha8 stream seeded from the config
    /// seed. Same seed and data give the same choice on every platform.
    RandomSample,
}

/// What to do when an update pass leaves a cluster with no members.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum EmptyClusterPolicy {
    /// Keep the literal accumulator arithmetic: an empty cluster's sum is
    /// the zero vector and the divisor is clamped to 1, so its centroid
    /// collapses to the origin.
    Faithful,
    /// Re-seed the empty cluster with the point farthest from its current
    /// centroid (ties to the highest row index), removing that point from
    /// its donor cluster's mean for this update. Never steals a donor's
    /// last member.
    Robust,
}

/// Clustering parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct KMeansConfig {
    pub k: usize,
    pub init: InitStrategy,
    /// RNG seed for `RandomSample`; ignored by `FirstK`.
    pub seed: u64,
    pub max_iterations: usize,
    pub empty_cluster_policy: EmptyClusterPolicy,
}

impl KMeansConfig {
    pub const DEFAULT_MAX_ITERATIONS: usize = 300;

    pub fn new(k: usize) -> Self {
        Self {
            k,
            init: InitStrategy::RandomSample,
            seed: 0,
            max_iterations: Self::DEFAULT_MAX_ITERATIONS,
            empty_cluster_policy: EmptyClusterPolicy::Robust,
        }
    }

    pub fn with_init(mut self, init: InitStrategy) -> Self {
        self.init = init;
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_max_iterations(mut self, max_iterations: usize) -> Self {
        self.max_iterations = max_iterations;
        self
    }

    pub fn with_policy(mut self, policy: EmptyClusterPolicy) -> Self {
        self.empty_cluster_policy = policy;
        self
    }
}

/// A cluster center in the score space.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Centroid<S> {
    pub coords: Vec<S>,
}

impl<S: Scalar> Centroid<S> {
    pub fn new(coords: Vec<S>) -> Self {
        Self { coords }
    }
}

/// Final state of a k-means run.
///
/// `assignments`, `sse` and `mse` are recomputed against the final
/// centroids, so they describe the returned model rather than the last
/// in-loop pass. `sse_trace` keeps the per-pass assignment-step SSE for
/// convergence diagnostics.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClusterModel<S> {
    pub centroids: Vec<Centroid<S>>,
    pub assignments: Vec<usize>,
    pub iterations: usize,
    pub converged: bool,
    pub sse: S,
    pub mse: S,
    pub sse_trace: Vec<S>,
}

impl<S: Scalar> ClusterModel<S> {
    /// Number of clusters.
    pub fn k(&self) -> usize {
        self.centroids.len()
    }

    /// Member count per cluster index.
    pub fn cluster_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0usize; self.k()];
        for &a in &self.assignments {
            sizes[a] += 1;
        }
        sizes
    }
}

/// Sum of squared coordinate differences between two equal-length vectors.
///
/// Symmetric, non-negative, zero exactly when `a == b`.
pub fn squared_euclidean_distance<S: Scalar>(a: &[S], b: &[S]) -> Result<S> {
    if a.len() != b.len() {
        return Err(Error::DimensionMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    Ok(sqdist(a, b))
}

/// Hot-loop variant of [`squared_euclidean_distance`]; lengths must already
/// be validated.
fn sqdist<S: Scalar>(a: &[S], b: &[S]) -> S {
    debug_assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .map(|(&x, &y)| {
            let d = x - y;
            d * d
        })
        .sum()
}

/// Picks the k starting centroids.
pub fn initialize_centroids<S: Scalar>(
    data: &ScoreMatrix<S>,
    config: &KMeansConfig,
) -> Result<Vec<Centroid<S>>> {
    let n = data.n_rows();
    if config.k == 0 {
        return Err(Error::InvalidConfig("k must be at least 1".into()));
    }
    if config.k > n {
        return Err(Error::InvalidConfig(format!(
            "k={} exceeds n={}",
            config.k, n
        )));
    }
    let indices: Vec<usize> = match config.init {
        InitStrategy::FirstK => (0..config.k).collect(),
        InitStrategy::RandomSample => {
            let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
            rand::seq::index::sample(&mut rng, n, config.k).into_vec()
        }
    };
    Ok(indices
        .into_iter()
        .map(|i| Centroid::new(data.row(i).to_vec()))
        .collect())
}

/// Maps every point to its nearest centroid and accumulates the SSE of the
/// chosen distances. Ties go to the lowest centroid index.
pub fn assign_points<S: Scalar>(
    data: &ScoreMatrix<S>,
    centroids: &[Centroid<S>],
) -> Result<(Vec<usize>, S)> {
    if centroids.is_empty() {
        return Err(Error::InvalidInput("at least one centroid required".into()));
    }
    for c in centroids {
        if c.coords.len() != data.n_cols() {
            return Err(Error::DimensionMismatch {
                left: c.coords.len(),
                right: data.n_cols(),
            });
        }
    }
    let mut assignments = Vec::with_capacity(data.n_rows());
    let mut sse = S::zero();
    for row in data.rows() {
        let mut best = 0usize;
        let mut best_dist = sqdist(row, &centroids[0].coords);
        for (j, c) in centroids.iter().enumerate().skip(1) {
            let d = sqdist(row, &c.coords);
            if d < best_dist {
                best = j;
                best_dist = d;
            }
        }
        assignments.push(best);
        sse += best_dist;
    }
    Ok((assignments, sse))
}

/// Recomputes the k centroids as coordinate-wise means of their members,
/// using accumulators separate from `previous`.
///
/// Empty clusters are handled per `policy`; `Robust` measures "farthest"
/// against `previous`, the centroids the assignments were made with.
pub fn update_centroids<S: Scalar>(
    data: &ScoreMatrix<S>,
    assignments: &[usize],
    k: usize,
    policy: EmptyClusterPolicy,
    previous: &[Centroid<S>],
) -> Result<Vec<Centroid<S>>> {
    let n = data.n_rows();
    let d = data.n_cols();
    if assignments.len() != n {
        return Err(Error::Internal(format!(
            "{} assignments for {n} rows",
            assignments.len()
        )));
    }
    if previous.len() != k {
        return Err(Error::Internal(format!(
            "{} previous centroids for k={k}",
            previous.len()
        )));
    }
    for &a in assignments {
        if a >= k {
            return Err(Error::Internal(format!(
                "assignment index {a} out of range for k={k}"
            )));
        }
    }

    let mut sums = vec![vec![S::zero(); d]; k];
    let mut counts = vec![0usize; k];
    for (row, &a) in data.rows().zip(assignments) {
        counts[a] += 1;
        for (acc, &v) in sums[a].iter_mut().zip(row) {
            *acc += v;
        }
    }

    if policy == EmptyClusterPolicy::Robust && counts.contains(&0) {
        // Distance of every point to the centroid it was assigned against.
        let dist: Vec<S> = data
            .rows()
            .zip(assignments)
            .map(|(row, &a)| sqdist(row, &previous[a].coords))
            .collect();
        let mut owner: Vec<usize> = assignments.to_vec();
        for j in 0..k {
            if counts[j] > 0 {
                continue;
            }
            let mut chosen: Option<usize> = None;
            for i in 0..n {
                if counts[owner[i]] < 2 {
                    continue;
                }
                match chosen {
                    None => chosen = Some(i),
                    Some(b) if dist[i] >= dist[b] => chosen = Some(i),
                    Some(_) => {}
                }
            }
            let i = chosen.ok_or_else(|| {
                Error::Internal("no donor cluster available for re-seeding".into())
            })?;
            let donor = owner[i];
            counts[donor] -= 1;
            for (acc, &v) in sums[donor].iter_mut().zip(data.row(i)) {
                *acc -= v;
            }
            sums[j] = data.row(i).to_vec();
            counts[j] = 1;
            owner[i] = j;
        }
    }

    Ok(sums
        .into_iter()
        .zip(&counts)
        .map(|(sum, &count)| {
            let divisor = S::from_count(count.max(1));
            Centroid::new(sum.into_iter().map(|v| v / divisor).collect())
        })
        .collect())
}

/// Runs the full k-means loop.
///
/// Stops when a pass's assignment-step SSE fails to strictly decrease, or
/// after `max_iterations` passes (flagged as `converged: false`).
pub fn run_kmeans<S: Scalar>(data: &ScoreMatrix<S>, config: &KMeansConfig) -> Result<ClusterModel<S>> {
    if config.max_iterations == 0 {
        return Err(Error::InvalidConfig("max_iterations must be at least 1".into()));
    }
    let mut centroids = initialize_centroids(data, config)?;

    let mut sse_trace = Vec::new();
    let mut old_sse = S::infinity();
    let mut iterations = 0usize;
    let mut converged = false;
    loop {
        let (assignments, sse) = assign_points(data, &centroids)?;
        centroids = update_centroids(
            data,
            &assignments,
            config.k,
            config.empty_cluster_policy,
            &centroids,
        )?;
        iterations += 1;
        sse_trace.push(sse);
        // Stop once the SSE fails to strictly decrease.
        if sse >= old_sse {
            converged = true;
            break;
        }
        old_sse = sse;
        if iterations >= config.max_iterations {
            break;
        }
    }

    // Report against the final centroids: the in-loop SSE was accumulated
    // against pre-update centroids, the objective is a final-state property.
    let (assignments, sse) = assign_points(data, &centroids)?;
    let mse = sse / S::from_count(data.n_rows());
    Ok(ClusterModel {
        centroids,
        assignments,
        iterations,
        converged,
        sse,
        mse,
        sse_trace,
    })
}

/// Per-point silhouette widths and their mean.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SilhouetteScore<S> {
    pub per_point: Vec<S>,
    pub mean: S,
}

/// Rousseeuw silhouette width under plain (non-squared) Euclidean distance.
///
/// `s(i) = (b(i) - a(i)) / max(a(i), b(i))` with `a(i)` the mean distance to
/// the point's own cluster (excluding itself) and `b(i)` the smallest mean
/// distance to another non-empty cluster. Singleton points and the 0/0 case
/// score 0. Requires k >= 2 and at least two non-empty clusters; clusters
/// without members are skipped when minimizing `b(i)`.
pub fn silhouette_width<S: Scalar>(
    data: &ScoreMatrix<S>,
    assignments: &[usize],
    k: usize,
) -> Result<SilhouetteScore<S>> {
    let n = data.n_rows();
    if k < 2 {
        return Err(Error::InvalidInput(format!(
            "silhouette requires k >= 2, got k={k}"
        )));
    }
    if assignments.len() != n {
        return Err(Error::DimensionMismatch {
            left: assignments.len(),
            right: n,
        });
    }
    let mut counts = vec![0usize; k];
    for &a in assignments {
        if a >= k {
            return Err(Error::Internal(format!(
                "assignment index {a} out of range for k={k}"
            )));
        }
        counts[a] += 1;
    }
    if counts.iter().filter(|&&c| c > 0).count() < 2 {
        return Err(Error::InvalidInput(
            "silhouette requires at least two non-empty clusters".into(),
        ));
    }

    let mut per_point = Vec::with_capacity(n);
    let mut dist_sums = vec![S::zero(); k];
    for i in 0..n {
        let own = assignments[i];
        if counts[own] == 1 {
            per_point.push(S::zero());
            continue;
        }
        for s in dist_sums.iter_mut() {
            *s = S::zero();
        }
        for j in 0..n {
            if i == j {
                continue;
            }
            dist_sums[assignments[j]] += sqdist(data.row(i), data.row(j)).sqrt();
        }
        let a = dist_sums[own] / S::from_count(counts[own] - 1);
        let mut b = S::infinity();
        for (c, &sum) in dist_sums.iter().enumerate() {
            if c == own || counts[c] == 0 {
                continue;
            }
            let mean = sum / S::from_count(counts[c]);
            if mean < b {
                b = mean;
            }
        }
        let denom = a.max(b);
        per_point.push(if denom == S::zero() {
            S::zero()
        } else {
            (b - a) / denom
        });
    }
    let mean = per_point.iter().copied().sum::<S>() / S::from_count(n);
    Ok(SilhouetteScore { per_point, mean })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn matrix(rows: &[&[f64]]) -> ScoreMatrix<f64> {
        ScoreMatrix::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn centroids(coords: &[&[f64]]) -> Vec<Centroid<f64>> {
        coords.iter().map(|c| Centroid::new(c.to_vec())).collect()
    }

    /// Two tight blobs around 10 and 90, three points each.
    fn six_point_fixture() -> ScoreMatrix<f64> {
        matrix(&[&[9.0], &[10.0], &[11.0], &[89.0], &[90.0], &[91.0]])
    }

    #[test]
    fn distance_identity_is_zero() {
        let d = squared_euclidean_distance(&[5.0, 5.0, 5.0], &[5.0, 5.0, 5.0]).unwrap();
        assert_eq!(d, 0.0);
    }

    #[test]
    fn distance_hand_computed() {
        assert_eq!(squared_euclidean_distance(&[0.0, 3.0], &[4.0, 0.0]).unwrap(), 25.0);
        assert_eq!(
            squared_euclidean_distance(&[1.0, 2.0, 3.0], &[1.0, 2.0, 4.0]).unwrap(),
            1.0
        );
    }

    #[test]
    fn distance_is_symmetric_and_generic() {
        let a = [1.5f32, 2.0];
        let b = [0.5f32, 4.0];
        assert_eq!(
            squared_euclidean_distance(&a, &b).unwrap(),
            squared_euclidean_distance(&b, &a).unwrap()
        );
    }

    #[test]
    fn distance_dimension_mismatch_names_lengths() {
        let err = squared_euclidean_distance(&[1.0], &[1.0, 2.0]).unwrap_err();
        assert!(matches!(err, Error::DimensionMismatch { left: 1, right: 2 }));
    }

    #[test]
    fn first_k_copies_rows_in_order() {
        let data = matrix(&[&[1.0], &[2.0], &[3.0]]);
        let config = KMeansConfig::new(2).with_init(InitStrategy::FirstK);
        let c = initialize_centroids(&data, &config).unwrap();
        assert_eq!(c, centroids(&[&[1.0], &[2.0]]));

        let config = KMeansConfig::new(3).with_init(InitStrategy::FirstK);
        let c = initialize_centroids(&data, &config).unwrap();
        assert_eq!(c, centroids(&[&[1.0], &[2.0], &[3.0]]));
    }

    #[test]
    fn random_sample_is_seeded_and_distinct() {
        let data = six_point_fixture();
        let config = KMeansConfig::new(2)
            .with_init(InitStrategy::RandomSample)
            .with_seed(42);
        let a = initialize_centroids(&data, &config).unwrap();
        let b = initialize_centroids(&data, &config).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.len(), 2);
        assert_ne!(a[0], a[1], "sampled rows must be distinct");

        let other = initialize_centroids(&data, &config.with_seed(43)).unwrap();
        assert_eq!(other.len(), 2);
    }

    #[test]
    fn init_rejects_bad_k() {
        let data = matrix(&[&[1.0], &[2.0]]);
        assert!(matches!(
            initialize_centroids(&data, &KMeansConfig::new(0)),
            Err(Error::InvalidConfig(_))
        ));
        let err = initialize_centroids(&data, &KMeansConfig::new(3)).unwrap_err();
        assert!(err.to_string().contains("k=3 exceeds n=2"));
    }

    #[test]
    fn assign_points_coincident() {
        let data = matrix(&[&[0.0], &[10.0]]);
        let (a, sse) = assign_points(&data, &centroids(&[&[0.0], &[10.0]])).unwrap();
        assert_eq!(a, [0, 1]);
        assert_eq!(sse, 0.0);
    }

    #[test]
    fn assign_points_tie_breaks_low() {
        let data = matrix(&[&[5.0]]);
        let (a, sse) = assign_points(&data, &centroids(&[&[0.0], &[10.0]])).unwrap();
        assert_eq!(a, [0]);
        assert_eq!(sse, 25.0);
    }

    #[test]
    fn assign_points_hand_computed() {
        let data = matrix(&[&[1.0], &[2.0], &[9.0]]);
        let (a, sse) = assign_points(&data, &centroids(&[&[1.5], &[9.0]])).unwrap();
        assert_eq!(a, [0, 0, 1]);
        assert_eq!(sse, 0.5);
    }

    #[test]
    fn assign_points_rejects_dimension_mismatch() {
        let data = matrix(&[&[1.0, 2.0]]);
        assert!(matches!(
            assign_points(&data, &centroids(&[&[1.0]])),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn update_mean_of_two_points() {
        let data = matrix(&[&[2.0], &[4.0]]);
        let c = update_centroids(
            &data,
            &[0, 0],
            1,
            EmptyClusterPolicy::Robust,
            &centroids(&[&[3.0]]),
        )
        .unwrap();
        assert_eq!(c, centroids(&[&[3.0]]));
    }

    #[test]
    fn update_faithful_collapses_empty_to_zero() {
        let data = matrix(&[&[2.0], &[4.0]]);
        let c = update_centroids(
            &data,
            &[0, 0],
            2,
            EmptyClusterPolicy::Faithful,
            &centroids(&[&[3.0], &[9.0]]),
        )
        .unwrap();
        assert_eq!(c, centroids(&[&[3.0], &[0.0]]));
    }

    #[test]
    fn update_robust_reseeds_farthest() {
        let data = matrix(&[&[2.0], &[4.0]]);
        let c = update_centroids(
            &data,
            &[0, 0],
            2,
            EmptyClusterPolicy::Robust,
            &centroids(&[&[3.0], &[9.0]]),
        )
        .unwrap();
        // Both points are distance 1 from their centroid; the tie resolves
        // to the highest row index, so cluster 1 is re-seeded with [4].
        assert_eq!(c, centroids(&[&[2.0], &[4.0]]));
    }

    #[test]
    fn update_robust_fills_several_empties_without_draining_donors() {
        let data = matrix(&[&[0.0], &[5.0], &[9.0]]);
        let c = update_centroids(
            &data,
            &[0, 0, 0],
            3,
            EmptyClusterPolicy::Robust,
            &centroids(&[&[4.0], &[50.0], &[70.0]]),
        )
        .unwrap();
        // Farthest point [9] (d=25) seeds cluster 1, then [0] (d=16) seeds
        // cluster 2; the donor keeps [5].
        assert_eq!(c, centroids(&[&[5.0], &[9.0], &[0.0]]));
    }

    #[test]
    fn iteration_cap_flags_non_convergence() {
        let data = six_point_fixture();
        let config = KMeansConfig::new(2)
            .with_init(InitStrategy::FirstK)
            .with_max_iterations(1);
        let model = run_kmeans(&data, &config).unwrap();
        assert!(!model.converged);
        assert_eq!(model.iterations, 1);
        assert_eq!(model.sse_trace.len(), 1);
    }

    #[test]
    fn update_rejects_out_of_range_assignment() {
        let data = matrix(&[&[2.0]]);
        let err = update_centroids(
            &data,
            &[3],
            2,
            EmptyClusterPolicy::Robust,
            &centroids(&[&[1.0], &[2.0]]),
        )
        .unwrap_err();
        assert!(matches!(err, Error::Internal(_)));
    }

    #[test]
    fn run_kmeans_separates_symmetric_pairs() {
        let data = matrix(&[&[0.0], &[0.0], &[10.0], &[10.0]]);
        let config = KMeansConfig::new(2).with_init(InitStrategy::FirstK);
        let model = run_kmeans(&data, &config).unwrap();
        assert_eq!(model.sse, 0.0);
        assert_eq!(model.mse, 0.0);
        assert!(model.converged);
        let mut coords: Vec<f64> = model.centroids.iter().map(|c| c.coords[0]).collect();
        coords.sort_by(|a, b| a.partial_cmp(b).unwrap());
        assert_eq!(coords, [0.0, 10.0]);
        assert_eq!(model.assignments[0], model.assignments[1]);
        assert_eq!(model.assignments[2], model.assignments[3]);
        assert_ne!(model.assignments[0], model.assignments[2]);
    }

    #[test]
    fn run_kmeans_k_equals_n() {
        let data = matrix(&[&[1.0], &[5.0], &[9.0], &[13.0]]);
        let config = KMeansConfig::new(4).with_init(InitStrategy::FirstK);
        let model = run_kmeans(&data, &config).unwrap();
        assert_eq!(model.sse, 0.0);
        assert!(model.converged);
        for (c, row) in model.centroids.iter().zip(data.rows()) {
            assert_eq!(c.coords.as_slice(), row);
        }
    }

    #[test]
    fn run_kmeans_mse_is_sse_over_n() {
        let data = six_point_fixture();
        let config = KMeansConfig::new(2).with_seed(7);
        let model = run_kmeans(&data, &config).unwrap();
        assert_eq!(model.mse, model.sse / 6.0);
        assert_eq!(model.assignments.len(), 6);
        assert!(model.iterations >= 1);
        assert_eq!(model.sse_trace.len(), model.iterations);
    }

    #[test]
    fn run_kmeans_rejects_bad_inputs() {
        let data = matrix(&[&[1.0], &[2.0]]);
        assert!(run_kmeans(&data, &KMeansConfig::new(3)).is_err());
        assert!(run_kmeans(&data, &KMeansConfig::new(0)).is_err());
        assert!(run_kmeans(&data, &KMeansConfig::new(1).with_max_iterations(0)).is_err());
    }

    #[test]
    fn run_kmeans_is_deterministic() {
        let data = six_point_fixture();
        let config = KMeansConfig::new(2).with_seed(99);
        assert_eq!(run_kmeans(&data, &config).unwrap(), run_kmeans(&data, &config).unwrap());
    }

    #[test]
    fn silhouette_separated_pairs() {
        let data = matrix(&[&[0.0], &[0.0], &[10.0], &[10.0]]);
        let s = silhouette_width(&data, &[0, 0, 1, 1], 2).unwrap();
        assert_eq!(s.per_point, [1.0, 1.0, 1.0, 1.0]);
        assert_eq!(s.mean, 1.0);
    }

    #[test]
    fn silhouette_identical_points_score_zero() {
        let data = matrix(&[&[5.0], &[5.0], &[5.0], &[5.0]]);
        let s = silhouette_width(&data, &[0, 0, 1, 1], 2).unwrap();
        assert_eq!(s.per_point, [0.0, 0.0, 0.0, 0.0]);
        assert_eq!(s.mean, 0.0);
    }

    #[test]
    fn silhouette_singleton_scores_zero() {
        let data = matrix(&[&[0.0], &[10.0], &[11.0]]);
        let s = silhouette_width(&data, &[0, 1, 1], 2).unwrap();
        assert_eq!(s.per_point[0], 0.0);
        assert!(s.per_point[1] > 0.0);
    }

    #[test]
    fn silhouette_rejects_k_below_two() {
        let data = matrix(&[&[0.0], &[1.0]]);
        assert!(matches!(
            silhouette_width(&data, &[0, 0], 1),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn silhouette_requires_two_populated_clusters() {
        let data = matrix(&[&[0.0], &[1.0]]);
        assert!(matches!(
            silhouette_width(&data, &[0, 0], 2),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn separated_blobs_beat_overlapping_blobs() {
        let tight = matrix(&[&[1.0], &[2.0], &[3.0], &[51.0], &[52.0], &[53.0]]);
        let loose = matrix(&[&[1.0], &[26.0], &[51.0], &[2.0], &[27.0], &[52.0]]);
        let labels = [0, 0, 0, 1, 1, 1];
        let s_tight = silhouette_width(&tight, &labels, 2).unwrap();
        let s_loose = silhouette_width(&loose, &labels, 2).unwrap();
        assert!(s_tight.mean > s_loose.mean);
    }

    #[test]
    fn f32_pipeline_matches_shapes() {
        let rows: Vec<Vec<f32>> = vec![vec![1.0, 2.0], vec![9.0, 8.0], vec![1.5, 2.5]];
        let data = ScoreMatrix::<f32>::from_rows(rows).unwrap();
        let model = run_kmeans(&data, &KMeansConfig::new(2).with_seed(3)).unwrap();
        assert_eq!(model.assignments.len(), 3);
        assert_eq!(model.k(), 2);
    }
}
