//! Generators, enumeration, campaigns and their output files.

pub mod campaign;
pub mod chart;
pub mod enumerate;
pub mod family;
pub mod generators;

pub use campaign::{
    run_empirical, run_scan, EmpiricalConfig, EmpiricalReport, Grid, RandomCorpus, ScanConfig, ScanLemma, ScanReport,
    CSV_SCHEMA,
};
pub use family::FamilySpec;

use crate::error::{Error, Result};
use crate::graph::{parse_dimacs, parse_g6, Graph};

/// Reads a graph given as a file path, inline graph6, inline DIMACS
/// (`p edge` lines, with `;` accepted as a line break), or a deterministic
/// family such as `mycielski(7)`.
///
/// An existing path wins; file contents are DIMACS when a line starts with
/// `p`, `c` or `e`, otherwise the first nonblank line is graph6. Parentheses
/// never occur in graph6, so `name(...)` is read as a family.
pub fn read_graph_arg(arg: &str) -> Result<Graph> {
    let path = std::path::Path::new(arg);
    if path.is_file() {
        let text = std::fs::read_to_string(path).map_err(|e| Error::input(format!("reading {arg}: {e}")))?;
        return parse_graph_text(&text);
    }
    if arg.contains('(') {
        return arg.parse::<FamilySpec>()?.build();
    }
    parse_graph_text(&arg.replace(';', "\n"))
}

/// Parses graph text that is either DIMACS or graph6.
pub fn parse_graph_text(text: &str) -> Result<Graph> {
    let is_dimacs = text
        .lines()
        .map(str::trim_start)
        .any(|l| l.starts_with("p ") || l.starts_with("c ") || l == "c" || l.starts_with("e "));
    if is_dimacs {
        return parse_dimacs(text);
    }
    let line = text.lines().map(str::trim).find(|l| !l.is_empty()).ok_or_else(|| Error::input("empty graph text"))?;
    parse_g6(line)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph_arguments() {
        let c5 = read_graph_arg("Dhc").unwrap();
        assert_eq!((c5.n(), c5.edge_count()), (5, 5));
        let p3 = read_graph_arg("p edge 3 2;e 1 2;e 2 3").unwrap();
        assert_eq!((p3.n(), p3.edge_count()), (3, 2));
        let dir = std::env::temp_dir().join("chibound-read-arg.g6");
        std::fs::write(&dir, ">>graph6<<Dhc\n").unwrap();
        assert_eq!(read_graph_arg(dir.to_str().unwrap()).unwrap(), c5);
        assert!(read_graph_arg("").is_err());
        assert_eq!(read_graph_arg("mycielski(2)").unwrap().n(), 11);
    }
}
