//! Exhaustive lemma scans over small graphs, written as CSV.

use chibound::harness::{run_scan, ScanConfig, ScanLemma};

fn main() -> chibound::Result<()> {
    for lemma in [ScanLemma::Ramsey, ScanLemma::SplitPartition, ScanLemma::NondominatingPath, ScanLemma::HornLift] {
        let report = run_scan(&ScanConfig::new(lemma, 5))?;
        println!(
            "{:<20} graphs {:>5}  cases {:>7}  counterexamples {}  outcomes {:?}",
            lemma.name(),
            report.instances(),
            report.cases(),
            report.counterexamples(),
            report.outcomes()
        );
    }
    let mut grid = ScanConfig::new(ScanLemma::NondominatingPath, 3);
    grid.grid = "k=1".parse()?;
    let report = run_scan(&grid)?;
    if let Some((row, why)) = report.first_failure() {
        println!("k = 1 fails on {}: {why}", chibound::graph::emit_g6(&row.graph));
    }
    let csv = report.csv_string()?;
    println!("{}", csv.lines().next().unwrap_or_default());
    Ok(())
}
