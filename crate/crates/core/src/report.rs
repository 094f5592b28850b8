//! Report assembly and rendering: per-k cluster tables as text, CSV or
//! JSON, plus deterministic SVG bar charts.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::data::ScoreMatrix;
use crate::error::{Error, Result};
use crate::kmeans::{
    run_kmeans, silhouette_width, EmptyClusterPolicy, InitStrategy, KMeansConfig,
};
use crate::performance::{evaluate_clusters, ClusterPerformance, PerformanceBand};
use crate::scalar::Scalar;

/// Shape of the analyzed dataset.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DatasetStats {
    pub n_students: usize,
    pub n_courses: usize,
}

/// One rendered cluster row: the cluster's performance plus its 2-decimal
/// display value (half-up rounding). Exports carry both.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportCluster<S> {
    pub cluster_index: usize,
    pub size: usize,
    pub overall: Option<S>,
    pub overall_display: Option<String>,
    pub band: Option<PerformanceBand>,
}

impl<S: Scalar> From<ClusterPerformance<S>> for ReportCluster<S> {
    fn from(perf: ClusterPerformance<S>) -> Self {
        Self {
            cluster_index: perf.cluster_index,
            size: perf.size,
            overall_display: perf.overall.map(format_two_decimals),
            overall: perf.overall,
            band: perf.band,
        }
    }
}

/// Clustering outcome for a single k.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct KReport<S> {
    pub k: usize,
    pub converged: bool,
    pub iterations: usize,
    pub mse: S,
    pub clusters: Vec<ReportCluster<S>>,
    pub mean_silhouette: Option<S>,
}

/// Full analysis over a list of k values, sorted by k ascending.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AnalysisReport<S> {
    pub dataset_stats: DatasetStats,
    pub per_k: Vec<KReport<S>>,
}

/// Output encodings for [`AnalysisReport::render`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Text,
    Csv,
    Json,
}

/// Knobs for [`build_report`]; `k` comes from the k list instead.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AnalysisOptions {
    pub init: InitStrategy,
    pub seed: u64,
    pub max_iterations: usize,
    pub policy: EmptyClusterPolicy,
    pub silhouette: bool,
}

impl Default for AnalysisOptions {
    fn default() -> Self {
        Self {
            init: InitStrategy::RandomSample,
            seed: 0,
            max_iterations: KMeansConfig::DEFAULT_MAX_ITERATIONS,
            policy: EmptyClusterPolicy::Robust,
            silhouette: false,
        }
    }
}

/// Runs the clustering-and-scoring pipeline for every k in `ks`.
///
/// `ks` must be non-empty, strictly increasing and start at 1 or above.
/// The mean silhouette is filled in only when requested and defined
/// (k >= 2 with at least two non-empty clusters).
pub fn build_report<S: Scalar>(
    data: &ScoreMatrix<S>,
    ks: &[usize],
    options: &AnalysisOptions,
) -> Result<AnalysisReport<S>> {
    if ks.is_empty() {
        return Err(Error::InvalidInput("k list must not be empty".into()));
    }
    if ks[0] == 0 {
        return Err(Error::InvalidInput("k values must be at least 1".into()));
    }
    if ks.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidInput(
            "k list must be strictly increasing".into(),
        ));
    }

    let mut per_k = Vec::with_capacity(ks.len());
    for &k in ks {
        let config = KMeansConfig {
            k,
            init: options.init,
            seed: options.seed,
            max_iterations: options.max_iterations,
            empty_cluster_policy: options.policy,
        };
        let model = run_kmeans(data, &config)?;
        let clusters: Vec<ReportCluster<S>> = evaluate_clusters(data, &model)?
            .into_iter()
            .map(ReportCluster::from)
            .collect();
        let populated = clusters.iter().filter(|c| c.size > 0).count();
        let mean_silhouette = if options.silhouette && k >= 2 && populated >= 2 {
            Some(silhouette_width(data, &model.assignments, k)?.mean)
        } else {
            None
        };
        per_k.push(KReport {
            k,
            converged: model.converged,
            iterations: model.iterations,
            mse: model.mse,
            clusters,
            mean_silhouette,
        });
    }
    Ok(AnalysisReport {
        dataset_stats: DatasetStats {
            n_students: data.n_rows(),
            n_courses: data.n_cols(),
        },
        per_k,
    })
}

/// Formats a value with exactly two decimals, rounding halves up (away
/// from zero), e.g. `0.125` -> `"0.13"`.
pub fn format_two_decimals<S: Scalar>(v: S) -> String {
    let v = v.to_f64().unwrap_or(f64::NAN);
    if !v.is_finite() {
        return v.to_string();
    }
    // f64::round ties away from zero, which is half-up for magnitudes.
    let cents = (v.abs() * 100.0).round() as i64;
    let sign = if v < 0.0 && cents > 0 { "-" } else { "" };
    format!("{sign}{}.{:02}", cents / 100, cents % 100)
}

const CSV_HEADER: &str = "n_students,n_courses,k,converged,iterations,mse,mean_silhouette,cluster,size,overall,overall_display,band";

impl<S: Scalar> AnalysisReport<S> {
    pub fn render(&self, format: ReportFormat) -> String {
        match format {
            ReportFormat::Text => self.to_text(),
            ReportFormat::Csv => self.to_csv(),
            ReportFormat::Json => self.to_json(),
        }
    }

    /// Plain-text tables, one per k, fields separated by two spaces.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "Dataset: {} students, {} courses",
            self.dataset_stats.n_students, self.dataset_stats.n_courses
        );
        for entry in &self.per_k {
            let _ = writeln!(out);
            let _ = writeln!(out, "K = {}", entry.k);
            let _ = write!(
                out,
                "iterations: {}  converged: {}  mse: {}",
                entry.iterations, entry.converged, entry.mse
            );
            if let Some(s) = &entry.mean_silhouette {
                let _ = write!(out, "  mean silhouette: {s}");
            }
            let _ = writeln!(out);
            let _ = writeln!(out, "Cluster #  Cluster size  Overall Performance  Band");
            for c in &entry.clusters {
                let overall = c.overall_display.as_deref().unwrap_or("-");
                let band = c.band.map_or("-", PerformanceBand::label);
                let _ = writeln!(out, "{}  {}  {}  {}", c.cluster_index + 1, c.size, overall, band);
            }
        }
        out
    }

    /// Flat CSV, one row per cluster; per-k fields repeat on each row.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{CSV_HEADER}");
        for entry in &self.per_k {
            let silhouette = entry
                .mean_silhouette
                .as_ref()
                .map(|s| s.to_string())
                .unwrap_or_default();
            for c in &entry.clusters {
                let _ = writeln!(
                    out,
                    "{},{},{},{},{},{},{},{},{},{},{},{}",
                    self.dataset_stats.n_students,
                    self.dataset_stats.n_courses,
                    entry.k,
                    entry.converged,
                    entry.iterations,
                    entry.mse,
                    silhouette,
                    c.cluster_index + 1,
                    c.size,
                    c.overall.as_ref().map(|v| v.to_string()).unwrap_or_default(),
                    c.overall_display.clone().unwrap_or_default(),
                    c.band.map(PerformanceBand::label).unwrap_or_default(),
                );
            }
        }
        out
    }

    /// Pretty-printed JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    /// Parses the output of [`AnalysisReport::to_csv`] back into a report.
    pub fn from_csv(text: &str) -> Result<Self> {
        let mut lines = text.lines().filter(|l| !l.is_empty());
        match lines.next() {
            Some(h) if h == CSV_HEADER => {}
            _ => return Err(Error::InvalidInput("missing report csv header".into())),
        }
        let mut stats: Option<DatasetStats> = None;
        let mut per_k: Vec<KReport<S>> = Vec::new();
        for (idx, line) in lines.enumerate() {
            let row = idx + 1;
            let fields: Vec<&str> = line.split(',').collect();
            if fields.len() != 12 {
                return Err(Error::RaggedRow {
                    row,
                    expected: 12,
                    found: fields.len(),
                });
            }
            let parse_err =
                |what: &str| Error::InvalidInput(format!("report csv row {row}: bad {what}"));
            let n_students: usize = fields[0].parse().map_err(|_| parse_err("n_students"))?;
            let n_courses: usize = fields[1].parse().map_err(|_| parse_err("n_courses"))?;
            let row_stats = DatasetStats { n_students, n_courses };
            match &stats {
                None => stats = Some(row_stats),
                Some(s) if *s == row_stats => {}
                Some(_) => return Err(parse_err("dataset stats (inconsistent)")),
            }
            let k: usize = fields[2].parse().map_err(|_| parse_err("k"))?;
            let converged: bool = fields[3].parse().map_err(|_| parse_err("converged"))?;
            let iterations: usize = fields[4].parse().map_err(|_| parse_err("iterations"))?;
            let mse: S = fields[5].parse().map_err(|_| parse_err("mse"))?;
            let mean_silhouette: Option<S> = if fields[6].is_empty() {
                None
            } else {
                Some(fields[6].parse().map_err(|_| parse_err("mean_silhouette"))?)
            };
            let cluster_no: usize = fields[7].parse().map_err(|_| parse_err("cluster"))?;
            if cluster_no == 0 {
                return Err(parse_err("cluster (1-based)"));
            }
            let size: usize = fields[8].parse().map_err(|_| parse_err("size"))?;
            let overall: Option<S> = if fields[9].is_empty() {
                None
            } else {
                Some(fields[9].parse().map_err(|_| parse_err("overall"))?)
            };
            let overall_display = if fields[10].is_empty() {
                None
            } else {
                Some(fields[10].to_string())
            };
            let band = if fields[11].is_empty() {
                None
            } else {
                Some(PerformanceBand::from_label(fields[11]).ok_or_else(|| parse_err("band"))?)
            };
            let cluster = ReportCluster {
                cluster_index: cluster_no - 1,
                size,
                overall,
                overall_display,
                band,
            };
            match per_k.last_mut() {
                Some(entry) if entry.k == k => {
                    if entry.converged != converged
                        || entry.iterations != iterations
                        || entry.mse != mse
                        || entry.mean_silhouette != mean_silhouette
                    {
                        return Err(parse_err("per-k fields (inconsistent)"));
                    }
                    entry.clusters.push(cluster);
                }
                _ => per_k.push(KReport {
                    k,
                    converged,
                    iterations,
                    mse,
                    clusters: vec![cluster],
                    mean_silhouette,
                }),
            }
        }
        let dataset_stats = stats.ok_or(Error::EmptyInput)?;
        Ok(AnalysisReport { dataset_stats, per_k })
    }
}

// Chart geometry. The plot area maps overall performance onto a fixed
// 0-100 vertical axis so bar height stays proportional to the value.
const CHART_W: f64 = 640.0;
const CHART_H: f64 = 400.0;
const MARGIN_LEFT: f64 = 60.0;
const MARGIN_RIGHT: f64 = 20.0;
const MARGIN_TOP: f64 = 50.0;
const MARGIN_BOTTOM: f64 = 70.0;
const PLOT_W: f64 = CHART_W - MARGIN_LEFT - MARGIN_RIGHT;
const PLOT_H: f64 = CHART_H - MARGIN_TOP - MARGIN_BOTTOM;
const BASELINE_Y: f64 = CHART_H - MARGIN_BOTTOM;

/// Renders the entry for `k` as a standalone SVG bar chart: one bar per
/// non-empty cluster, bar height proportional to overall performance on a
/// 0-100 axis, cluster sizes along the x axis. Byte output is a pure
/// function of the report.
pub fn render_chart<S: Scalar>(report: &AnalysisReport<S>, k: usize) -> Result<String> {
    let entry = report
        .per_k
        .iter()
        .find(|e| e.k == k)
        .ok_or(Error::KNotInReport { k })?;
    let bars: Vec<&ReportCluster<S>> = entry.clusters.iter().filter(|c| c.size > 0).collect();

    let mut svg = String::new();
    let _ = writeln!(svg, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{CHART_W}" height="{CHART_H}" viewBox="0 0 {CHART_W} {CHART_H}">"#
    );
    let _ = writeln!(svg, r##"<rect x="0" y="0" width="{CHART_W}" height="{CHART_H}" fill="#ffffff"/>"##);
    let _ = writeln!(
        svg,
        r#"<text x="{:.2}" y="28" font-family="sans-serif" font-size="16" text-anchor="middle">Overall Performance versus cluster size (K = {k})</text>"#,
        CHART_W / 2.0
    );

    // Horizontal gridlines and y-axis tick labels every 20 points.
    for tick in (0..=100).step_by(20) {
        let y = BASELINE_Y - f64::from(tick) / 100.0 * PLOT_H;
        let _ = writeln!(
            svg,
            r##"<line x1="{MARGIN_LEFT}" y1="{y:.2}" x2="{:.2}" y2="{y:.2}" stroke="#dddddd" stroke-width="1"/>"##,
            MARGIN_LEFT + PLOT_W
        );
        let _ = writeln!(
            svg,
            r#"<text x="{:.2}" y="{:.2}" font-family="sans-serif" font-size="11" text-anchor="end">{tick}</text>"#,
            MARGIN_LEFT - 8.0,
            y + 4.0
        );
    }

    for (i, c) in bars.iter().enumerate() {
        let overall = c
            .overall
            .as_ref()
            .and_then(|v| v.to_f64())
            .unwrap_or_default();
        let slot = PLOT_W / bars.len() as f64;
        let bar_w = slot * 0.6;
        let x = MARGIN_LEFT + i as f64 * slot + (slot - bar_w) / 2.0;
        let height = overall / 100.0 * PLOT_H;
        let y = BASELINE_Y - height;
        let _ = writeln!(
            svg,
            r##"<rect class="bar" x="{x:.2}" y="{y:.2}" width="{bar_w:.2}" height="{height:.2}" fill="#4878a8"/>"##
        );
        let center = x + bar_w / 2.0;
        let label = c.overall_display.as_deref().unwrap_or("");
        let _ = writeln!(
            svg,
            r#"<text x="{center:.2}" y="{:.2}" font-family="sans-serif" font-size="12" text-anchor="middle">{label}</text>"#,
            y - 6.0
        );
        let _ = writeln!(
            svg,
            r#"<text x="{center:.2}" y="{:.2}" font-family="sans-serif" font-size="12" text-anchor="middle">{}</text>"#,
            BASELINE_Y + 18.0,
            c.size
        );
    }

    // Axes over the gridlines.
    let _ = writeln!(
        svg,
        r##"<line x1="{MARGIN_LEFT}" y1="{MARGIN_TOP}" x2="{MARGIN_LEFT}" y2="{BASELINE_Y}" stroke="#333333" stroke-width="1"/>"##
    );
    let _ = writeln!(
        svg,
        r##"<line x1="{MARGIN_LEFT}" y1="{BASELINE_Y}" x2="{:.2}" y2="{BASELINE_Y}" stroke="#333333" stroke-width="1"/>"##,
        MARGIN_LEFT + PLOT_W
    );
    let _ = writeln!(
        svg,
        r#"<text x="{:.2}" y="{:.2}" font-family="sans-serif" font-size="13" text-anchor="middle">Cluster size (# of students)</text>"#,
        MARGIN_LEFT + PLOT_W / 2.0,
        BASELINE_Y + 42.0
    );
    let _ = writeln!(
        svg,
        r#"<text x="18" y="{:.2}" font-family="sans-serif" font-size="13" text-anchor="middle" transform="rotate(-90 18 {:.2})">Overall Performance (%)</text>"#,
        MARGIN_TOP + PLOT_H / 2.0,
        MARGIN_TOP + PLOT_H / 2.0
    );
    svg.push_str("</svg>\n");
    Ok(svg)
}

/// Emits a score matrix in the ingestion CSV dialect: a header line when
/// course names are present, always a leading id column, LF line endings,
/// scores at full round-trip precision.
pub fn write_csv<S: Scalar>(matrix: &ScoreMatrix<S>) -> String {
    let mut out = String::new();
    if let Some(names) = matrix.course_names() {
        let _ = writeln!(out, "id,{}", names.join(","));
    }
    for (id, row) in matrix.student_ids().iter().zip(matrix.rows()) {
        let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
        let _ = writeln!(out, "{id},{}", cells.join(","));
    }
    out
}
