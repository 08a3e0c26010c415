//! A seeded campaign over 2P4-free random graphs, with CSV and an SVG chart.
//!
//! ```text
//! cargo run --release --example empirical -- /tmp/out
//! ```

use chibound::harness::{run_empirical, EmpiricalConfig, FamilySpec};
use chibound::patterns::PatternSpec;

fn main() -> chibound::Result<()> {
    let out = std::env::args().nth(1).map(std::path::PathBuf::from).unwrap_or_else(std::env::temp_dir);
    let mut cfg = EmpiricalConfig::new(FamilySpec::Gnp { n: 12, p: None }, 500, 1);
    cfg.free_of = Some(PatternSpec::TwoP4);
    cfg.audit = true;
    let report = run_empirical(&cfg)?;
    println!(
        "{} samples, max chi/omega^2 = {:.3}, bound failures {}, audit failures {}",
        report.rows.len(),
        report.max_ratio(),
        report.bound16_violations(),
        report.audit_violations()
    );
    let csv = out.join("empirical.csv");
    let svg = out.join("empirical.svg");
    report.write_csv(std::fs::File::create(&csv).expect("create csv"))?;
    std::fs::write(&svg, report.svg("2P4-free G(12, p)")).expect("write svg");
    println!("wrote {} and {}", csv.display(), svg.display());
    Ok(())
}
