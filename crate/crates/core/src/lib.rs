//! Deterministic k-means clustering and performance banding for student
//! score matrices.
//!
//! The pipeline: load or synthesize an N×M score matrix ([`data`]), cluster
//! the rows with seeded Lloyd iteration ([`kmeans`]), score each cluster
//! with the mean-of-row-means performance model and band it qualitatively
//! ([`performance`]), then render tables, exports and charts ([`report`]).
//!
//! All numeric code is generic over [`Scalar`] (`f32` or `f64`); the
//! crate-root aliases pin the common instantiations.
//!
//! ```
//! use perfcluster::{build_report, generate_synthetic, AnalysisOptions};
//!
//! let matrix = generate_synthetic::<f64>(79, 9, 3, &[62.0, 53.0, 46.0], 3.0, 7).unwrap();
//! let options = AnalysisOptions { seed: 42, ..AnalysisOptions::default() };
//! let report = build_report(&matrix, &[3, 4, 5], &options).unwrap();
//! assert_eq!(report.per_k.len(), 3);
//! ```

pub mod data;
pub mod error;
pub mod kmeans;
pub mod performance;
pub mod report;
pub mod scalar;

pub use data::{generate_synthetic, load_csv, CsvOptions, ScoreMatrix, SCORE_MAX, SCORE_MIN};
pub use error::{Error, Result};
pub use kmeans::{
    assign_points, initialize_centroids, run_kmeans, silhouette_width,
    squared_euclidean_distance, update_centroids, Centroid, ClusterModel, EmptyClusterPolicy,
    InitStrategy, KMeansConfig, SilhouetteScore,
};
pub use performance::{
    band_of, evaluate_clusters, overall_performance, ClusterPerformance, PerformanceBand,
};
pub use report::{
    build_report, format_two_decimals, render_chart, write_csv, AnalysisOptions, AnalysisReport,
    DatasetStats, KReport, ReportCluster, ReportFormat,
};
pub use scalar::Scalar;

/// Double-precision pipeline types (the CLI default).
pub type ScoreMatrix64 = ScoreMatrix<f64>;
pub type ClusterModel64 = ClusterModel<f64>;
pub type AnalysisReport64 = AnalysisReport<f64>;

/// Single-precision pipeline types.
pub type ScoreMatrix32 = ScoreMatrix<f32>;
pub type ClusterModel32 = ClusterModel<f32>;
pub type AnalysisReport32 = AnalysisReport<f32>;
