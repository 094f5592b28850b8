//! Command-line front end: wires CSV ingestion, k-means clustering,
//! performance banding and report rendering into one pipeline.
//!
//! Exit codes: 0 success, 1 validation failure (unreadable or invalid
//! data, k exceeding the dataset size, missing k in a report), 2 usage
//! failure (bad flags or flag combinations).

use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use perfcluster::{
    band_of, build_report, generate_synthetic, load_csv, render_chart, run_kmeans, write_csv,
    AnalysisOptions, AnalysisReport, ClusterModel, CsvOptions, EmptyClusterPolicy, InitStrategy,
    KMeansConfig, ReportFormat, ScoreMatrix,
};
use serde::Serialize;

#[derive(Parser)]
#[command(
    name = "perfcluster",
    version,
    about = "Cluster student score matrices and band cluster performance"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Cluster for every k, score each cluster and render a report
    Analyze(AnalyzeArgs),
    /// Cluster only; emit centroids and per-student assignments
    Cluster(ClusterArgs),
    /// Print the performance band for a score
    Band(BandArgs),
    /// Generate a synthetic score CSV
    Gen(GenArgs),
    /// Render an SVG bar chart from a JSON report
    Plot(PlotArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum InitArg {
    /// Seed centroids from the first k rows
    First,
    /// Seed centroids from k distinct seeded-random rows
    Random,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    /// Empty clusters collapse to the zero vector
    Faithful,
    /// Empty clusters are re-seeded from the farthest point
    Robust,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Text,
    Csv,
    Json,
}

#[derive(clap::Args)]
struct KMeansFlags {
    /// Cluster counts, comma separated, strictly increasing
    #[arg(long = "k", value_delimiter = ',', default_values_t = [3usize, 4, 5])]
    k: Vec<usize>,
    #[arg(long, value_enum, default_value_t = InitArg::Random)]
    init: InitArg,
    /// RNG seed; required with --init random, ignored with --init first
    #[arg(long)]
    seed: Option<u64>,
    /// Iteration cap per run
    #[arg(long = "max-iter", default_value_t = KMeansConfig::DEFAULT_MAX_ITERATIONS)]
    max_iter: usize,
    /// Empty-cluster handling
    #[arg(long, value_enum, default_value_t = ModeArg::Robust)]
    mode: ModeArg,
}

#[derive(clap::Args)]
struct AnalyzeArgs {
    /// Input CSV: header line plus a leading id column
    input: PathBuf,
    #[command(flatten)]
    kmeans: KMeansFlags,
    #[arg(long, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,
    /// Also compute the mean silhouette width per k
    #[arg(long)]
    silhouette: bool,
    /// Write the report here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(clap::Args)]
struct ClusterArgs {
    /// Input CSV: header line plus a leading id column
    input: PathBuf,
    #[command(flatten)]
    kmeans: KMeansFlags,
    #[arg(long, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,
    /// Write the output here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(clap::Args)]
struct BandArgs {
    /// Overall performance score in [0, 100]
    #[arg(allow_negative_numbers = true)]
    score: f64,
}

#[derive(clap::Args)]
struct GenArgs {
    /// Number of students (rows)
    #[arg(long, default_value_t = 79)]
    n: usize,
    /// Number of courses (columns)
    #[arg(long, default_value_t = 9)]
    m: usize,
    /// Number of planted clusters
    #[arg(long = "k-true", default_value_t = 3)]
    k_true: usize,
    /// Per-cluster score centers, comma separated
    #[arg(long, value_delimiter = ',', default_values_t = [62.0, 53.0, 46.0])]
    centers: Vec<f64>,
    /// Per-score normal spread around the center
    #[arg(long, default_value_t = 3.0)]
    spread: f64,
    /// RNG seed
    #[arg(long)]
    seed: u64,
    /// Write the CSV here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(clap::Args)]
struct PlotArgs {
    /// JSON report produced by `analyze --format json`
    input: PathBuf,
    /// Which k entry to chart
    #[arg(long)]
    k: usize,
    /// Write the SVG here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

/// Failures carry their exit-code class.
enum Failure {
    /// Exit 1: the data or a requested operation on it is invalid.
    Validation(String),
    /// Exit 2: the invocation itself is malformed.
    Usage(String),
}

impl From<perfcluster::Error> for Failure {
    fn from(err: perfcluster::Error) -> Self {
        Failure::Validation(err.to_string())
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Validation(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Analyze(args) => analyze(args),
        Command::Cluster(args) => cluster(args),
        Command::Band(args) => band(args),
        Command::Gen(args) => gen(args),
        Command::Plot(args) => plot(args),
    }
}

fn analyze(args: AnalyzeArgs) -> Result<(), Failure> {
    let (ks, options) = resolve_kmeans_flags(&args.kmeans, args.silhouette)?;
    let matrix = read_matrix(&args.input)?;
    check_k_fits(&ks, matrix.n_rows())?;
    let report = build_report(&matrix, &ks, &options)?;
    emit(&report.render(report_format(args.format)), args.out.as_deref())
}

/// Per-k clustering dump for the `cluster` subcommand.
#[derive(Serialize)]
struct ClusterRun<'a> {
    k: usize,
    converged: bool,
    iterations: usize,
    sse: f64,
    mse: f64,
    centroids: Vec<Vec<f64>>,
    /// 1-based cluster number per student, in input order.
    assignments: Vec<StudentAssignment<'a>>,
}

#[derive(Serialize)]
struct StudentAssignment<'a> {
    student: &'a str,
    cluster: usize,
}

impl<'a> ClusterRun<'a> {
    fn new(k: usize, model: &ClusterModel<f64>, matrix: &'a ScoreMatrix<f64>) -> Self {
        Self {
            k,
            converged: model.converged,
            iterations: model.iterations,
            sse: model.sse,
            mse: model.mse,
            centroids: model.centroids.iter().map(|c| c.coords.clone()).collect(),
            assignments: matrix
                .student_ids()
                .iter()
                .zip(&model.assignments)
                .map(|(id, &a)| StudentAssignment {
                    student: id,
                    cluster: a + 1,
                })
                .collect(),
        }
    }
}

fn cluster(args: ClusterArgs) -> Result<(), Failure> {
    let (ks, options) = resolve_kmeans_flags(&args.kmeans, false)?;
    let matrix = read_matrix(&args.input)?;
    check_k_fits(&ks, matrix.n_rows())?;
    let mut runs = Vec::with_capacity(ks.len());
    for &k in &ks {
        let config = KMeansConfig {
            k,
            init: options.init,
            seed: options.seed,
            max_iterations: options.max_iterations,
            empty_cluster_policy: options.policy,
        };
        let model = run_kmeans(&matrix, &config)?;
        runs.push(ClusterRun::new(k, &model, &matrix));
    }
    let output = match args.format {
        FormatArg::Text => {
            let mut out = format!(
                "Dataset: {} students, {} courses\n",
                matrix.n_rows(),
                matrix.n_cols()
            );
            for run in &runs {
                out.push_str(&format!("\nK = {}\n", run.k));
                out.push_str(&format!(
                    "iterations: {}  converged: {}  sse: {}  mse: {}\n",
                    run.iterations, run.converged, run.sse, run.mse
                ));
                out.push_str("Student  Cluster\n");
                for a in &run.assignments {
                    out.push_str(&format!("{}  {}\n", a.student, a.cluster));
                }
            }
            out
        }
        FormatArg::Csv => {
            let mut out = String::from("k,student,cluster\n");
            for run in &runs {
                for a in &run.assignments {
                    out.push_str(&format!("{},{},{}\n", run.k, a.student, a.cluster));
                }
            }
            out
        }
        FormatArg::Json => {
            let mut s = serde_json::to_string_pretty(&runs)
                .map_err(|e| Failure::Validation(e.to_string()))?;
            s.push('\n');
            s
        }
    };
    emit(&output, args.out.as_deref())
}

fn band(args: BandArgs) -> Result<(), Failure> {
    if !args.score.is_finite() || args.score < 0.0 {
        return Err(Failure::Usage(format!(
            "score must be finite and non-negative, got {}",
            args.score
        )));
    }
    let band = band_of(args.score)?;
    println!("{band}");
    Ok(())
}

fn gen(args: GenArgs) -> Result<(), Failure> {
    if args.n == 0 || args.m == 0 || args.k_true == 0 {
        return Err(Failure::Usage("--n, --m and --k-true must be at least 1".into()));
    }
    if args.n < args.k_true {
        return Err(Failure::Usage(format!(
            "--n {} is smaller than --k-true {}",
            args.n, args.k_true
        )));
    }
    if args.centers.len() != args.k_true {
        return Err(Failure::Usage(format!(
            "--centers has {} values but --k-true is {}",
            args.centers.len(),
            args.k_true
        )));
    }
    if args.centers.iter().any(|c| !c.is_finite() || !(0.0..=100.0).contains(c)) {
        return Err(Failure::Usage("--centers values must lie in [0, 100]".into()));
    }
    if !args.spread.is_finite() || args.spread < 0.0 {
        return Err(Failure::Usage(format!(
            "--spread must be finite and non-negative, got {}",
            args.spread
        )));
    }
    let matrix = generate_synthetic::<f64>(
        args.n,
        args.m,
        args.k_true,
        &args.centers,
        args.spread,
        args.seed,
    )?;
    emit(&write_csv(&matrix), args.out.as_deref())
}

fn plot(args: PlotArgs) -> Result<(), Failure> {
    let text = fs::read_to_string(&args.input)
        .map_err(|e| Failure::Validation(format!("cannot read {}: {e}", args.input.display())))?;
    let report = AnalysisReport::<f64>::from_json(&text)?;
    let svg = render_chart(&report, args.k)?;
    emit(&svg, args.out.as_deref())
}

fn resolve_kmeans_flags(
    flags: &KMeansFlags,
    silhouette: bool,
) -> Result<(Vec<usize>, AnalysisOptions), Failure> {
    if flags.k.is_empty() {
        return Err(Failure::Usage("--k needs at least one value".into()));
    }
    if flags.k[0] == 0 {
        return Err(Failure::Usage("--k values must be at least 1".into()));
    }
    if flags.k.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Failure::Usage("--k values must be strictly increasing".into()));
    }
    if flags.max_iter == 0 {
        return Err(Failure::Usage("--max-iter must be at least 1".into()));
    }
    let init = match flags.init {
        InitArg::First => InitStrategy::FirstK,
        InitArg::Random => InitStrategy::RandomSample,
    };
    let seed = match (init, flags.seed) {
        (InitStrategy::RandomSample, None) => {
            return Err(Failure::Usage("--seed is required with --init random".into()));
        }
        (_, seed) => seed.unwrap_or(0),
    };
    let policy = match flags.mode {
        ModeArg::Faithful => EmptyClusterPolicy::Faithful,
        ModeArg::Robust => EmptyClusterPolicy::Robust,
    };
    Ok((
        flags.k.clone(),
        AnalysisOptions {
            init,
            seed,
            max_iterations: flags.max_iter,
            policy,
            silhouette,
        },
    ))
}

fn report_format(format: FormatArg) -> ReportFormat {
    match format {
        FormatArg::Text => ReportFormat::Text,
        FormatArg::Csv => ReportFormat::Csv,
        FormatArg::Json => ReportFormat::Json,
    }
}

fn read_matrix(path: &Path) -> Result<ScoreMatrix<f64>, Failure> {
    let bytes = fs::read(path)
        .map_err(|e| Failure::Validation(format!("cannot read {}: {e}", path.display())))?;
    Ok(load_csv(bytes.as_slice(), CsvOptions::PIPELINE)?)
}

fn check_k_fits(ks: &[usize], n: usize) -> Result<(), Failure> {
    for &k in ks {
        if k > n {
            return Err(Failure::Validation(format!("k={k} exceeds n={n}")));
        }
    }
    Ok(())
}

fn emit(content: &str, out: Option<&Path>) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, content)
            .map_err(|e| Failure::Validation(format!("cannot write {}: {e}", path.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(content.as_bytes())
                .and_then(|()| stdout.flush())
                .map_err(|e| Failure::Validation(format!("cannot write to stdout: {e}")))
        }
    }
}
