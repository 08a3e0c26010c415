//! Exhaustive lemma scans and empirical family campaigns, with CSV output.
//!
//! Instances run in parallel; results are collected in instance order, so
//! output never depends on the worker count.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use super::enumerate::scan_graphs;
use super::family::{FamilySpec, Sample, P_GRID};
use super::generators::{gnp, split_seed};
use crate::error::{Error, Result};
use crate::graph::{emit_g6, Graph, VertexSet};
use crate::invariants::{omega, Budget, InvariantCache, TABLE_LIMIT};
use crate::lemmas::{
    gyarfas_path_with, horn_lift, nondominating_audit, nondominating_path, ramsey_witness, scattering_audit,
    split_partition, HornLift, LemmaOptions, RamseyOutcome,
};
use crate::patterns::PatternSpec;
use crate::polynomial::Polynomial;
use crate::structures::{
    verify_horn, verify_partition, verify_scattering, verify_tall, HornCheck, HornMode, HornWitness,
};

/// Version of both CSV layouts; bump on any column change.
pub const CSV_SCHEMA: u32 = 1;

pub const SCAN_HEADER: [&str; 11] = [
    "schema",
    "lemma",
    "index",
    "order",
    "edges",
    "graph6",
    "cases",
    "counterexamples",
    "resource_limited",
    "outcomes",
    "first_failure",
];

pub const EMPIRICAL_HEADER: [&str; 14] = [
    "schema",
    "sample",
    "seed",
    "p",
    "attempts",
    "order",
    "edges",
    "graph6",
    "omega",
    "chi",
    "chi_over_omega_sq",
    "bound16_holds",
    "scattering",
    "nondominating_p4",
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ScanLemma {
    Ramsey,
    GyarfasPath,
    NondominatingPath,
    SplitPartition,
    HornLift,
}

impl ScanLemma {
    pub const ALL: [ScanLemma; 5] = [
        ScanLemma::Ramsey,
        ScanLemma::GyarfasPath,
        ScanLemma::NondominatingPath,
        ScanLemma::SplitPartition,
        ScanLemma::HornLift,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ScanLemma::Ramsey => "ramsey",
            ScanLemma::GyarfasPath => "gyarfas-path",
            ScanLemma::NondominatingPath => "nondominating-path",
            ScanLemma::SplitPartition => "split-partition",
            ScanLemma::HornLift => "horn-lift",
        }
    }
}

impl fmt::Display for ScanLemma {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ScanLemma {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ScanLemma::ALL.into_iter().find(|l| l.name() == s).ok_or_else(|| {
            let names: Vec<&str> = ScanLemma::ALL.iter().map(|l| l.name()).collect();
            Error::input(format!("unknown lemma {s:?}; expected one of {}", names.join(", ")))
        })
    }
}

/// Named integer parameter lists, written `d=0,1;z=0..1`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Grid(pub BTreeMap<String, Vec<usize>>);

impl Grid {
    pub fn get(&self, key: &str) -> Option<&[usize]> {
        self.0.get(key).map(Vec::as_slice)
    }

    pub fn values_or(&self, key: &str, default: &[usize]) -> Vec<usize> {
        self.get(key).map(<[usize]>::to_vec).unwrap_or_else(|| default.to_vec())
    }

    fn allows(&self, key: &str, v: usize) -> bool {
        self.get(key).is_none_or(|vs| vs.contains(&v))
    }
}

impl FromStr for Grid {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut map = BTreeMap::new();
        for item in s.split([';', ' ']).map(str::trim).filter(|t| !t.is_empty()) {
            let (key, vals) =
                item.split_once('=').ok_or_else(|| Error::input(format!("grid entry {item:?} is not key=values")))?;
            let mut out = Vec::new();
            for part in vals.split(',').map(str::trim) {
                let num =
                    |t: &str| t.trim().parse::<usize>().map_err(|_| Error::input(format!("bad grid value {t:?}")));
                match part.split_once("..") {
                    Some((a, b)) => {
                        let (a, b) = (num(a)?, num(b.trim_start_matches('='))?);
                        if b < a || b - a > 1_000 {
                            return Err(Error::input(format!("bad grid range {part:?}")));
                        }
                        out.extend(a..=b);
                    }
                    None => out.push(num(part)?),
                }
            }
            map.insert(key.trim().to_string(), out);
        }
        Ok(Grid(map))
    }
}

impl fmt::Display for Grid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|(k, v)| format!("{k}={}", v.iter().map(usize::to_string).collect::<Vec<_>>().join(",")))
            .collect();
        f.write_str(&parts.join(";"))
    }
}

/// Seeded G(n, p) instances appended to a scan's exhaustive corpus.
#[derive(Clone, Debug, PartialEq)]
pub struct RandomCorpus {
    pub samples: usize,
    pub min_n: usize,
    pub max_n: usize,
    pub seed: u64,
}

impl RandomCorpus {
    fn graphs(&self) -> Result<Vec<Graph>> {
        if self.min_n > self.max_n {
            return Err(Error::input("random corpus needs min_n ≤ max_n"));
        }
        let span = self.max_n - self.min_n + 1;
        (0..self.samples)
            .map(|i| {
                let n = self.min_n + i % span;
                let p = P_GRID[(i / span) % P_GRID.len()];
                gnp(n, p, split_seed(self.seed, i as u64))
            })
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ScanConfig {
    pub lemma: ScanLemma,
    pub min_n: usize,
    pub max_n: usize,
    /// Orders up to this are enumerated labeled; larger ones up to isomorphism.
    pub labeled_up_to: usize,
    pub grid: Grid,
    pub random: Option<RandomCorpus>,
    pub budget: Budget,
}

impl ScanConfig {
    pub fn new(lemma: ScanLemma, max_n: usize) -> Self {
        ScanConfig {
            lemma,
            min_n: 1,
            max_n,
            labeled_up_to: 6,
            grid: Grid::default(),
            random: None,
            budget: Budget::from_env(),
        }
    }
}

/// Per-instance results of a scan.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Tally {
    pub cases: u64,
    pub counterexamples: u64,
    pub resource_limited: u64,
    pub outcomes: BTreeMap<String, u64>,
    pub first_failure: Option<String>,
}

impl Tally {
    fn hit(&mut self, outcome: &str) {
        self.cases += 1;
        *self.outcomes.entry(outcome.to_string()).or_default() += 1;
    }

    fn fail(&mut self, what: String) {
        self.cases += 1;
        self.counterexamples += 1;
        if self.first_failure.is_none() {
            self.first_failure = Some(what);
        }
    }

    fn record(&mut self, what: impl FnOnce() -> String, r: Result<&str>) {
        match r {
            Ok(outcome) => self.hit(outcome),
            Err(Error::Resource(_)) => {
                self.cases += 1;
                self.resource_limited += 1;
            }
            Err(e) => self.fail(format!("{}: {e}", what())),
        }
    }

    fn outcomes_field(&self) -> String {
        self.outcomes.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(";")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanRow {
    pub index: usize,
    pub graph: Graph,
    pub tally: Tally,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanReport {
    pub lemma: ScanLemma,
    pub rows: Vec<ScanRow>,
}

impl ScanReport {
    pub fn instances(&self) -> usize {
        self.rows.len()
    }

    pub fn cases(&self) -> u64 {
        self.rows.iter().map(|r| r.tally.cases).sum()
    }

    pub fn counterexamples(&self) -> u64 {
        self.rows.iter().map(|r| r.tally.counterexamples).sum()
    }

    pub fn resource_limited(&self) -> u64 {
        self.rows.iter().map(|r| r.tally.resource_limited).sum()
    }

    pub fn outcomes(&self) -> BTreeMap<String, u64> {
        let mut all = BTreeMap::new();
        for r in &self.rows {
            for (k, v) in &r.tally.outcomes {
                *all.entry(k.clone()).or_default() += v;
            }
        }
        all
    }

    pub fn first_failure(&self) -> Option<(&ScanRow, &str)> {
        self.rows.iter().find_map(|r| r.tally.first_failure.as_deref().map(|f| (r, f)))
    }

    pub fn write_csv<W: std::io::Write>(&self, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        let io = |e: csv::Error| Error::resource(format!("writing CSV: {e}"));
        w.write_record(SCAN_HEADER).map_err(io)?;
        for r in &self.rows {
            w.write_record([
                CSV_SCHEMA.to_string(),
                self.lemma.to_string(),
                r.index.to_string(),
                r.graph.n().to_string(),
                r.graph.edge_count().to_string(),
                emit_g6(&r.graph),
                r.tally.cases.to_string(),
                r.tally.counterexamples.to_string(),
                r.tally.resource_limited.to_string(),
                r.tally.outcomes_field(),
                r.tally.first_failure.clone().unwrap_or_default(),
            ])
            .map_err(io)?;
        }
        w.flush().map_err(|e| Error::resource(format!("writing CSV: {e}")))?;
        Ok(())
    }

    pub fn csv_string(&self) -> Result<String> {
        let mut buf = Vec::new();
        self.write_csv(&mut buf)?;
        Ok(String::from_utf8(buf).expect("CSV is UTF-8"))
    }
}

/// Runs `lemma` over every graph of the configured corpus.
pub fn run_scan(cfg: &ScanConfig) -> Result<ScanReport> {
    let mut graphs = Vec::new();
    for n in cfg.min_n..=cfg.max_n {
        graphs.extend(scan_graphs(n, cfg.labeled_up_to)?);
    }
    if let Some(r) = &cfg.random {
        graphs.extend(r.graphs()?);
    }
    let rows = graphs
        .into_par_iter()
        .enumerate()
        .map(|(index, graph)| {
            let tally = scan_instance(cfg, &graph);
            ScanRow { index, graph, tally }
        })
        .collect();
    Ok(ScanReport { lemma: cfg.lemma, rows })
}

/// Runs one scan lemma on one graph over its whole parameter range.
pub fn scan_instance(cfg: &ScanConfig, g: &Graph) -> Tally {
    let mut t = Tally::default();
    let r = match cfg.lemma {
        ScanLemma::Ramsey => scan_ramsey(g, &cfg.grid, &mut t),
        ScanLemma::GyarfasPath => scan_gyarfas(g, &cfg.grid, cfg.budget, &mut t),
        ScanLemma::NondominatingPath => scan_nondominating(g, &cfg.grid, cfg.budget, &mut t),
        ScanLemma::SplitPartition => scan_split(g, &cfg.grid, &mut t),
        ScanLemma::HornLift => scan_horn_lift(g, &cfg.grid, cfg.budget, &mut t),
    };
    match r {
        Ok(()) => {}
        Err(Error::Resource(_)) => t.resource_limited += 1,
        Err(e) => {
            t.counterexamples += 1;
            t.first_failure.get_or_insert(format!("setup: {e}"));
        }
    }
    t
}

fn scan_ramsey(g: &Graph, grid: &Grid, t: &mut Tally) -> Result<()> {
    let n = g.n();
    for x in 2..=n.max(2) {
        if !grid.allows("x", x) {
            continue;
        }
        for y in 1.. {
            match x.checked_pow(y as u32) {
                Some(p) if p <= n => {}
                _ => break,
            }
            if !grid.allows("y", y) {
                continue;
            }
            let r = ramsey_witness(g, x, y).and_then(|o| {
                let ok = match &o {
                    RamseyOutcome::Clique(c) => c.0.len() == x + 1 && c.verify(g),
                    RamseyOutcome::Stable(s) => s.0.len() == y && s.verify(g),
                };
                if !ok {
                    return Err(Error::Counterexample("witness does not verify".into()));
                }
                Ok(match o {
                    RamseyOutcome::Clique(_) => "clique",
                    RamseyOutcome::Stable(_) => "stable",
                })
            });
            t.record(|| format!("x={x} y={y}"), r);
        }
    }
    Ok(())
}

fn mask_set(n: usize, m: u32) -> VertexSet {
    VertexSet::from_members(n, (0..n).filter(|&i| m >> i & 1 == 1)).expect("in range")
}

fn max_neighbourhood_chi(cache: &mut InvariantCache) -> Result<usize> {
    let g = cache.graph();
    let mut best = 0;
    for v in 0..g.n() {
        best = best.max(cache.chi_value(&g.neighbors(v)?)?);
    }
    Ok(best)
}

fn scan_gyarfas(g: &Graph, grid: &Grid, budget: Budget, t: &mut Tally) -> Result<()> {
    let n = g.n();
    if n < 2 || !g.is_connected() {
        return Ok(());
    }
    if n > TABLE_LIMIT {
        return Err(Error::resource("gyarfas scan needs the subset table"));
    }
    let mut cache = InvariantCache::tabulated(g, budget);
    let xmin = max_neighbourhood_chi(&mut cache)?.max(1);
    for v in 0..n {
        for hm in 1u32..1 << n {
            if hm >> v & 1 == 1 {
                continue;
            }
            let h = mask_set(n, hm);
            if !g.has_neighbor_in(v, &h) || !g.is_connected_within(&h) {
                continue;
            }
            let chi_h = cache.chi_value(&h)?;
            for x in xmin..=xmin.max(chi_h) {
                if !grid.allows("x", x) {
                    continue;
                }
                let mut k = 1;
                while k <= 2 || chi_h > (k - 2) * x {
                    if grid.allows("k", k) {
                        let r = gyarfas_path_with(&mut cache, v, &h, k, x, false).and_then(|p| {
                            let ok = p.verify(g, k) && p.0[0] == v && p.0[1..].iter().all(|&u| h.contains(u));
                            if ok {
                                Ok("path")
                            } else {
                                Err(Error::Counterexample(format!("path {:?} does not verify", p.0)))
                            }
                        });
                        t.record(|| format!("v={v} h={h:?} k={k} x={x}"), r);
                    }
                    k += 1;
                }
            }
        }
    }
    Ok(())
}

fn scan_nondominating(g: &Graph, grid: &Grid, budget: Budget, t: &mut Tally) -> Result<()> {
    let n = g.n();
    if n == 0 {
        return Ok(());
    }
    let mut cache = InvariantCache::with_budget(g, budget);
    let all = g.vertices();
    let chi = cache.chi_value(&all)?;
    let w = cache.omega_value(&all)?;
    let xmin = max_neighbourhood_chi(&mut cache)?.max(1);
    let opts = LemmaOptions { budget, ..LemmaOptions::default() };
    for sigma0 in grid.values_or("sigma", &[0]) {
        let sigma = Polynomial::constant(sigma0 as u64);
        for k in grid.values_or("k", &[2, 3, 4]) {
            for x in xmin..=n {
                if !grid.allows("x", x) || chi <= k * x + sigma0 {
                    continue;
                }
                let r = nondominating_path(g, k, x, &sigma, &opts).and_then(|(p, nd)| {
                    if p.verify(g, k) && crate::structures::verify_nondominating(g, &nd, &sigma)? {
                        Ok("path")
                    } else {
                        Err(Error::Counterexample("witness does not verify".into()))
                    }
                });
                t.record(|| format!("k={k} x={x} sigma={sigma0} omega={w}"), r);
            }
        }
    }
    Ok(())
}

fn scan_split(g: &Graph, grid: &Grid, t: &mut Tally) -> Result<()> {
    let opts = LemmaOptions::default();
    for d in grid.values_or("d", &[0, 1]) {
        for z in grid.values_or("z", &[0, 1]) {
            let r = split_partition(g, d, z, &opts).and_then(|p| {
                if verify_partition(g, &p, d, z)? {
                    Ok(if p.k() <= 1 { "k<=1" } else { "k>=2" })
                } else {
                    Err(Error::Counterexample(format!("partition {:?} does not verify", p.blocks)))
                }
            });
            t.record(|| format!("d={d} z={z}"), r);
        }
    }
    Ok(())
}

/// Horn candidates `(v, A, B)` with `A ⊆ N(v)`, `B ⊆ V ∖ N[v]` both nonempty:
/// every pair of subsets when `n ≤ sub`, else only `A = N(v)`, `B = V ∖ N[v]`.
fn horn_candidates(g: &Graph, sub: usize) -> Vec<HornWitness> {
    let n = g.n();
    let mut out = Vec::new();
    for v in 0..n {
        let nv = g.nbrs(v);
        let mut far = g.vertices().difference(&nv);
        far.remove(v);
        if nv.is_empty() || far.is_empty() {
            continue;
        }
        if n <= sub {
            let a_list = nv.to_vec();
            let b_list = far.to_vec();
            for am in 1u32..1 << a_list.len() {
                for bm in 1u32..1 << b_list.len() {
                    let pick = |list: &[usize], m: u32| {
                        VertexSet::from_members(
                            n,
                            list.iter().enumerate().filter(|(i, _)| m >> i & 1 == 1).map(|(_, &u)| u),
                        )
                        .expect("in range")
                    };
                    out.push(HornWitness { v, a: pick(&a_list, am), b: pick(&b_list, bm), tail: vec![v] });
                }
            }
        } else {
            out.push(HornWitness { v, a: nv, b: far, tail: vec![v] });
        }
    }
    out
}

fn scan_horn_lift(g: &Graph, grid: &Grid, budget: Budget, t: &mut Tally) -> Result<()> {
    let sub = grid.values_or("sub", &[5])[0];
    let psi = Polynomial::zero();
    let opts = LemmaOptions { budget, ..LemmaOptions::default() };
    let exhaustive = HornMode::Exhaustive { cap: TABLE_LIMIT };
    for w in horn_candidates(g, sub) {
        for d in grid.values_or("d", &[0, 1]) {
            for z in grid.values_or("z", &[0, 1]) {
                if verify_horn(g, &w, d, z, &exhaustive)? != HornCheck::Verified {
                    continue;
                }
                let r = horn_lift(g, &w, 1, (d, z), (0, 0), 0, &psi, &opts).and_then(|out| match out {
                    HornLift::Scattering(sc) => {
                        if verify_scattering(g, &sc, &psi, 0)? {
                            Ok("scattering")
                        } else {
                            Err(Error::Counterexample("scattering does not verify".into()))
                        }
                    }
                    HornLift::TallerHorn { witness, .. } => {
                        let check = verify_horn(g, &witness, 0, 0, &exhaustive)?;
                        if check == HornCheck::Verified && verify_tall(g, &witness, 2)? {
                            Ok("taller-horn")
                        } else {
                            Err(Error::Counterexample(format!("lifted horn fails: {check:?}")))
                        }
                    }
                });
                t.record(|| format!("v={} A={:?} B={:?} d={d} z={z}", w.v, w.a, w.b), r);
            }
        }
    }
    Ok(())
}

/// Settings of an empirical family campaign.
#[derive(Clone, Debug, PartialEq)]
pub struct EmpiricalConfig {
    pub family: FamilySpec,
    pub samples: usize,
    /// Rejection-sample graphs free of this pattern.
    pub free_of: Option<PatternSpec>,
    pub seed: u64,
    pub max_attempts: u64,
    /// Audit the structural consequences of 2P4-freeness: no
    /// (x, 4)-scattering and no x-nondominating 4-vertex path.
    pub audit: bool,
    pub budget: Budget,
}

impl EmpiricalConfig {
    pub fn new(family: FamilySpec, samples: usize, seed: u64) -> Self {
        EmpiricalConfig {
            family,
            samples,
            free_of: None,
            seed,
            max_attempts: 1_000_000,
            audit: false,
            budget: Budget::from_env(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum AuditResult {
    Skipped,
    None,
    Found,
}

impl AuditResult {
    fn as_str(self) -> &'static str {
        match self {
            AuditResult::Skipped => "skipped",
            AuditResult::None => "none",
            AuditResult::Found => "found",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct EmpiricalRow {
    pub sample: Sample,
    pub omega: usize,
    pub chi: usize,
    pub scattering: AuditResult,
    pub nondominating_p4: AuditResult,
}

impl EmpiricalRow {
    pub fn ratio(&self) -> f64 {
        if self.omega == 0 {
            0.0
        } else {
            self.chi as f64 / (self.omega * self.omega) as f64
        }
    }

    /// `χ ≤ ω^16`, evaluated exactly.
    pub fn bound16_holds(&self) -> bool {
        (self.chi as u128) <= (self.omega as u128).saturating_pow(16)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct EmpiricalReport {
    pub rows: Vec<EmpiricalRow>,
}

impl EmpiricalReport {
    pub fn max_ratio(&self) -> f64 {
        self.rows.iter().map(EmpiricalRow::ratio).fold(0.0, f64::max)
    }

    pub fn bound16_violations(&self) -> usize {
        self.rows.iter().filter(|r| !r.bound16_holds()).count()
    }

    /// Rows where an audit found a structure that 2P4-freeness rules out.
    pub fn audit_violations(&self) -> usize {
        self.rows
            .iter()
            .filter(|r| r.scattering == AuditResult::Found || r.nondominating_p4 == AuditResult::Found)
            .count()
    }

    pub fn audited(&self) -> usize {
        self.rows.iter().filter(|r| r.scattering != AuditResult::Skipped).count()
    }

    pub fn write_csv<W: std::io::Write>(&self, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        let io = |e: csv::Error| Error::resource(format!("writing CSV: {e}"));
        w.write_record(EMPIRICAL_HEADER).map_err(io)?;
        for r in &self.rows {
            let s = &r.sample;
            w.write_record([
                CSV_SCHEMA.to_string(),
                s.index.to_string(),
                s.seed.to_string(),
                s.p.map(|p| format!("{p}")).unwrap_or_default(),
                s.attempts.to_string(),
                s.graph.n().to_string(),
                s.graph.edge_count().to_string(),
                emit_g6(&s.graph),
                r.omega.to_string(),
                r.chi.to_string(),
                format!("{:.6}", r.ratio()),
                r.bound16_holds().to_string(),
                r.scattering.as_str().to_string(),
                r.nondominating_p4.as_str().to_string(),
            ])
            .map_err(io)?;
        }
        w.flush().map_err(|e| Error::resource(format!("writing CSV: {e}")))?;
        Ok(())
    }

    pub fn csv_string(&self) -> Result<String> {
        let mut buf = Vec::new();
        self.write_csv(&mut buf)?;
        Ok(String::from_utf8(buf).expect("CSV is UTF-8"))
    }

    /// ω against χ, one marker per distinct pair, with `χ = ω²` dashed.
    pub fn svg(&self, title: &str) -> String {
        let pts: Vec<(usize, usize)> = self.rows.iter().map(|r| (r.omega, r.chi)).collect();
        super::chart::scatter_svg(title, "ω", "χ", &pts)
    }
}

/// Draws the configured samples and records their invariants.
pub fn run_empirical(cfg: &EmpiricalConfig) -> Result<EmpiricalReport> {
    let count = if cfg.family.is_random() { cfg.samples } else { cfg.samples.min(1) };
    let rows: Result<Vec<EmpiricalRow>> = (0..count)
        .into_par_iter()
        .map(|i| {
            let sample = cfg.family.sample(i, cfg.seed, cfg.free_of.as_ref(), cfg.max_attempts)?;
            empirical_row(sample, cfg)
        })
        .collect();
    Ok(EmpiricalReport { rows: rows? })
}

fn empirical_row(sample: Sample, cfg: &EmpiricalConfig) -> Result<EmpiricalRow> {
    let g = &sample.graph;
    let all = g.vertices();
    let (w, _) = omega(g, &all)?;
    let chi = match cfg.family.known_invariants() {
        Some((c, _)) if g.n() > TABLE_LIMIT => c,
        _ => crate::invariants::chi_with_budget(g, &all, &cfg.budget)?.0,
    };
    let (mut scattering, mut nondominating_p4) = (AuditResult::Skipped, AuditResult::Skipped);
    if cfg.audit && g.n() <= TABLE_LIMIT {
        let alpha = Polynomial::x();
        scattering = match scattering_audit(g, &alpha, 4, TABLE_LIMIT + 1)? {
            Some(_) => AuditResult::Found,
            None => AuditResult::None,
        };
        nondominating_p4 = match nondominating_audit(g, 4, &alpha)? {
            Some(_) => AuditResult::Found,
            None => AuditResult::None,
        };
    }
    Ok(EmpiricalRow { sample, omega: w, chi, scattering, nondominating_p4 })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_syntax() {
        let g: Grid = "d=0..1;z=0,1 x=3".parse().unwrap();
        assert_eq!(g.get("d"), Some(&[0, 1][..]));
        assert_eq!(g.get("x"), Some(&[3][..]));
        assert_eq!(g.to_string(), "d=0,1;x=3;z=0,1");
        assert!("d".parse::<Grid>().is_err());
        assert!("d=3..1".parse::<Grid>().is_err());
    }

    #[test]
    fn small_scans_are_clean() {
        for lemma in ScanLemma::ALL {
            let cfg = ScanConfig::new(lemma, 4);
            let r = run_scan(&cfg).unwrap();
            assert_eq!(r.counterexamples(), 0, "{lemma}: {:?}", r.first_failure().map(|f| f.1.to_string()));
            assert_eq!(r.instances(), 1 + 2 + 8 + 64);
        }
    }

    #[test]
    fn nondominating_k1_flaw_is_reported() {
        let mut cfg = ScanConfig::new(ScanLemma::NondominatingPath, 2);
        cfg.grid = "k=1".parse().unwrap();
        let r = run_scan(&cfg).unwrap();
        // K2 with x = 1: χ = 2 > 1, yet N[v] is everything.
        assert_eq!(r.counterexamples(), 1);
    }

    #[test]
    fn empirical_is_deterministic() {
        let mut cfg = EmpiricalConfig::new(FamilySpec::Gnp { n: 9, p: None }, 12, 5);
        cfg.free_of = Some(PatternSpec::TwoP4);
        cfg.audit = true;
        let a = run_empirical(&cfg).unwrap();
        let b = run_empirical(&cfg).unwrap();
        assert_eq!(a.csv_string().unwrap(), b.csv_string().unwrap());
        assert_eq!(a.audit_violations(), 0);
        assert_eq!(a.bound16_violations(), 0);
        let csv = a.csv_string().unwrap();
        assert_eq!(csv.lines().count(), 13);
        assert!(csv.starts_with("schema,sample,seed,p,attempts,"));
    }
}
