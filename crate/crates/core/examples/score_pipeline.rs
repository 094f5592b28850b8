//! End-to-end demo: synthesize a score matrix, sweep k = 3..5, print the
//! banded tables and write an SVG chart for k = 3.
//!
//! Run with `cargo run --example score_pipeline`.

use perfcluster::{build_report, generate_synthetic, render_chart, AnalysisOptions, ReportFormat};

fn main() -> Result<(), perfcluster::Error> {
    let matrix = generate_synthetic::<f64>(79, 9, 3, &[62.0, 53.0, 46.0], 3.0, 7)?;
    let options = AnalysisOptions {
        seed: 42,
        silhouette: true,
        ..AnalysisOptions::default()
    };
    let report = build_report(&matrix, &[3, 4, 5], &options)?;
    print!("{}", report.render(ReportFormat::Text));
    std::fs::write("chart_k3.svg", render_chart(&report, 3)?)?;
    eprintln!("wrote chart_k3.svg");
    Ok(())
}
