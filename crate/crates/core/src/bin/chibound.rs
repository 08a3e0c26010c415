use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use chibound::harness::{
    read_graph_arg, run_empirical, run_scan, EmpiricalConfig, FamilySpec, Grid, RandomCorpus, ScanConfig,
};
use chibound::invariants::{chi_with_budget, max_stable, omega, Budget};
use chibound::lemmas::{self, HornLift, HornOrBroom, LemmaOptions, RamseyOutcome, SweepOutcome};
use chibound::patterns::{find_induced, verify_witness, PatternSpec};
use chibound::polynomial::{choose_c, sweep_polys, SweepParameters};
use chibound::structures::{
    emit_witnesses, parse_witnesses, verify_horn, verify_nondominating, verify_partition, verify_scattering,
    verify_tall, HornMode, HornWitness, Witness,
};
use chibound::{Error, Graph, Polynomial, Result, VertexSet};

#[derive(Parser)]
#[command(
    name = "chibound",
    version,
    about = "Exact invariants, patterns and witness-checked lemmas for χ-boundedness experiments"
)]
struct Cli {
    /// Node budget per colourability search (default: $CHIBOUND_BUDGET or 20000000).
    #[arg(long, global = true)]
    budget: Option<u64>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// χ, ω and α with witnesses.
    Invariants {
        graph: String,
        #[arg(long)]
        chi: bool,
        #[arg(long)]
        omega: bool,
        #[arg(long)]
        stable: bool,
        /// Check the clique/stable witnesses in FILE instead of solving.
        #[arg(long, value_name = "FILE")]
        verify_only: Option<PathBuf>,
    },
    /// Decide whether a graph is free of an induced pattern.
    Free {
        #[arg(long)]
        pattern: PatternSpec,
        graph: String,
        #[arg(long, value_name = "FILE")]
        verify_only: Option<PathBuf>,
    },
    /// Sweep polynomial table and exponent c.
    Polys {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        q: u64,
        #[arg(long, default_value = "0")]
        psi: Polynomial,
        #[arg(long, default_value = "0")]
        sigma: Polynomial,
        /// Also check every bound exactly for 2 ≤ x ≤ N.
        #[arg(long, value_name = "N")]
        check_upto: Option<u64>,
    },
    /// Run one lemma and report its verified outcome.
    Lemma {
        name: String,
        graph: String,
        #[command(flatten)]
        params: LemmaParams,
        #[arg(long)]
        assume_preconditions: bool,
        /// Check the witnesses in FILE against the lemma's conclusion instead of running it.
        #[arg(long, value_name = "FILE")]
        verify_only: Option<PathBuf>,
    },
    /// Exhaustive lemma scan over small graphs.
    Scan {
        #[arg(long)]
        lemma: chibound::harness::ScanLemma,
        #[arg(long)]
        exhaustive_n: usize,
        #[arg(long, default_value = "1")]
        min_n: usize,
        #[arg(long, default_value = "")]
        grid: Grid,
        #[arg(long, default_value = "6")]
        labeled_up_to: usize,
        /// Append this many seeded G(n, p) instances.
        #[arg(long, default_value = "0")]
        random: usize,
        #[arg(long, default_value = "7..12", value_name = "A..B")]
        random_n: String,
        #[arg(long, default_value = "1")]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Sample a family and record (n, ω, χ, χ/ω²) per graph.
    Empirical {
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value = "1")]
        samples: usize,
        /// Keep only graphs free of this pattern.
        #[arg(long)]
        pattern: Option<PatternSpec>,
        #[arg(long, default_value = "1")]
        seed: u64,
        #[arg(long, default_value = "1000000")]
        max_attempts: u64,
        /// Audit for (x,4)-scatterings and x-nondominating P4s (on by default with 2P4).
        #[arg(long)]
        audit: Option<bool>,
        #[arg(long)]
        out: PathBuf,
        /// Chart path; defaults to the CSV path with an .svg extension.
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Exhaustive search for a (ψ, q)-scattering.
    AuditScattering {
        graph: String,
        #[arg(long, default_value = "0")]
        psi: Polynomial,
        #[arg(long, default_value = "0")]
        q: u64,
    },
}

#[derive(Args, Default)]
struct LemmaParams {
    #[arg(long)]
    x: Option<usize>,
    #[arg(long)]
    y: Option<usize>,
    #[arg(long)]
    v: Option<usize>,
    /// Vertex list, comma separated.
    #[arg(long)]
    h: Option<String>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    s: Option<usize>,
    #[arg(long)]
    d: Option<usize>,
    #[arg(long)]
    z: Option<usize>,
    #[arg(long)]
    c: Option<u32>,
    #[arg(long)]
    l: Option<usize>,
    #[arg(long)]
    d2: Option<usize>,
    #[arg(long)]
    z2: Option<usize>,
    #[arg(long)]
    q: Option<u64>,
    #[arg(long)]
    psi: Option<Polynomial>,
    #[arg(long)]
    sigma: Option<Polynomial>,
    /// File holding the input horn (horn-lift).
    #[arg(long, value_name = "FILE")]
    horn: Option<PathBuf>,
}

impl LemmaParams {
    fn need<T: Copy>(v: Option<T>, name: &str) -> Result<T> {
        v.ok_or_else(|| Error::Input(format!("missing --{name}")))
    }
    fn x(&self) -> Result<usize> {
        Self::need(self.x, "x")
    }
    fn k(&self) -> Result<usize> {
        Self::need(self.k, "k")
    }
    fn s(&self) -> Result<usize> {
        Self::need(self.s, "s")
    }
    fn d(&self) -> Result<usize> {
        Self::need(self.d, "d")
    }
    fn z(&self) -> Result<usize> {
        Self::need(self.z, "z")
    }
    fn psi(&self) -> Polynomial {
        self.psi.clone().unwrap_or_default()
    }
    fn sigma(&self) -> Polynomial {
        self.sigma.clone().unwrap_or_default()
    }
    fn h(&self, n: usize) -> Result<VertexSet> {
        let text = self.h.as_deref().ok_or_else(|| Error::Input("missing --h".into()))?;
        let mut members = Vec::new();
        for t in text.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            members.push(t.parse().map_err(|_| Error::Input(format!("bad vertex {t:?} in --h")))?);
        }
        VertexSet::from_members(n, members)
    }
    fn horn(&self) -> Result<HornWitness> {
        let path = self.horn.as_ref().ok_or_else(|| Error::Input("missing --horn".into()))?;
        match read_witnesses(path)?.into_iter().next() {
            Some(Witness::Horn(h)) => Ok(h),
            _ => Err(Error::Input(format!("{} holds no horn witness", path.display()))),
        }
    }
    fn sweep(&self) -> Result<SweepParameters> {
        SweepParameters::new(self.k()?, self.s()?, Self::need(self.q, "q")?, self.psi(), self.sigma())
    }
}

fn read_witnesses(path: &PathBuf) -> Result<Vec<Witness>> {
    let text = fs::read_to_string(path).map_err(|e| Error::Input(format!("reading {}: {e}", path.display())))?;
    parse_witnesses(&text)
}

/// What a subcommand found: success, or a counterexample to report.
enum Verdict {
    Ok,
    Counterexample(String),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let budget = cli.budget.map(|nodes| Budget { nodes }).unwrap_or_else(Budget::from_env);
    match run(cli.cmd, budget) {
        Ok(Verdict::Ok) => ExitCode::SUCCESS,
        Ok(Verdict::Counterexample(msg)) => {
            eprintln!("counterexample: {msg}");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn print_witnesses(ws: &[Witness]) {
    print!("{}", emit_witnesses(ws));
}

fn check(ok: bool, what: &str) -> Verdict {
    if ok {
        println!("# verified");
        Verdict::Ok
    } else {
        Verdict::Counterexample(format!("{what} does not verify"))
    }
}

fn run(cmd: Cmd, budget: Budget) -> Result<Verdict> {
    match cmd {
        Cmd::Invariants { graph, chi, omega: om, stable, verify_only } => {
            let g = read_graph_arg(&graph)?;
            if let Some(path) = verify_only {
                let ok = read_witnesses(&path)?.iter().all(|w| match w {
                    Witness::Clique(s) => chibound::invariants::CliqueWitness(s.clone()).verify(&g),
                    Witness::Stable(s) => chibound::invariants::StableWitness(s.clone()).verify(&g),
                    _ => false,
                });
                return Ok(check(ok, "witness file"));
            }
            let all_flags = !(chi || om || stable);
            let all = g.vertices();
            println!("# n {} m {}", g.n(), g.edge_count());
            let mut ws = Vec::new();
            if om || all_flags {
                let (w, c) = omega(&g, &all)?;
                println!("# omega {w}");
                ws.push(Witness::Clique(c.0));
            }
            if stable || all_flags {
                let (a, s) = max_stable(&g, &all)?;
                println!("# alpha {a}");
                ws.push(Witness::Stable(s.0));
            }
            if chi || all_flags {
                let (k, col) = chi_with_budget(&g, &all, &budget)?;
                println!("# chi {k}");
                for (i, class) in col.classes().iter().enumerate() {
                    println!("# colour {i}: {:?}", class.to_vec());
                }
            }
            print_witnesses(&ws);
            Ok(Verdict::Ok)
        }
        Cmd::Free { pattern, graph, verify_only } => {
            let g = read_graph_arg(&graph)?;
            if let Some(path) = verify_only {
                let ok = read_witnesses(&path)?.iter().all(|w| match w {
                    Witness::Pattern(p) => verify_witness(&g, &pattern, p).unwrap_or(false),
                    _ => false,
                });
                return Ok(check(ok, "pattern witness"));
            }
            match find_induced(&g, &pattern)? {
                Some(w) => {
                    println!("# contains {pattern}");
                    print_witnesses(&[Witness::Pattern(w)]);
                }
                None => println!("# free of {pattern}"),
            }
            Ok(Verdict::Ok)
        }
        Cmd::Polys { k, s, q, psi, sigma, check_upto } => {
            let params = SweepParameters::new(k, s, q, psi, sigma)?;
            let table = sweep_polys(&params)?;
            for i in (1..=k).rev() {
                println!("zeta_{i}(x) = {}", table.zeta(i));
                println!("delta_{i}(x) = {}", table.delta(i));
            }
            let choice = choose_c(&params, &table)?;
            for (b, cert) in choice.bounds.iter().zip(&choice.certificates) {
                println!("bound: {b}   [checked 2..={}, tail {:?}]", cert.x0, cert.tail);
            }
            println!("c = {}", choice.c);
            if let Some(upto) = check_upto {
                if let Some((i, x)) = choice.first_violation(upto) {
                    return Ok(Verdict::Counterexample(format!("bound {} fails at x = {x}", i + 1)));
                }
                println!("# all bounds hold for 2 <= x <= {upto}");
            }
            Ok(Verdict::Ok)
        }
        Cmd::Lemma { name, graph, params, assume_preconditions, verify_only } => {
            let g = read_graph_arg(&graph)?;
            let opts = LemmaOptions { assume_preconditions, budget, ..LemmaOptions::default() };
            match verify_only {
                Some(path) => verify_lemma(&name, &g, &params, &read_witnesses(&path)?, &opts),
                None => run_lemma(&name, &g, &params, &opts),
            }
        }
        Cmd::Scan { lemma, exhaustive_n, min_n, grid, labeled_up_to, random, random_n, seed, out } => {
            let mut cfg = ScanConfig::new(lemma, exhaustive_n);
            cfg.min_n = min_n;
            cfg.grid = grid;
            cfg.labeled_up_to = labeled_up_to;
            cfg.budget = budget;
            if random > 0 {
                let (a, b) = random_n.split_once("..").ok_or_else(|| Error::Input("--random-n expects A..B".into()))?;
                let num = |t: &str| t.trim().parse::<usize>().map_err(|_| Error::Input(format!("bad order {t:?}")));
                cfg.random = Some(RandomCorpus { samples: random, min_n: num(a)?, max_n: num(b)?, seed });
            }
            let report = run_scan(&cfg)?;
            if let Some(path) = out {
                fs::write(&path, report.csv_string()?)
                    .map_err(|e| Error::Input(format!("writing {}: {e}", path.display())))?;
            }
            println!(
                "lemma {lemma} instances {} cases {} counterexamples {} resource-limited {}",
                report.instances(),
                report.cases(),
                report.counterexamples(),
                report.resource_limited()
            );
            for (k, v) in report.outcomes() {
                println!("outcome {k} {v}");
            }
            match report.first_failure() {
                Some((row, what)) => Ok(Verdict::Counterexample(format!(
                    "instance {} ({}): {what}",
                    row.index,
                    chibound::graph::emit_g6(&row.graph)
                ))),
                None if report.resource_limited() > 0 => {
                    Err(Error::Resource(format!("{} cases hit the budget", report.resource_limited())))
                }
                None => Ok(Verdict::Ok),
            }
        }
        Cmd::Empirical { family, n, samples, pattern, seed, max_attempts, audit, out, svg } => {
            let family = FamilySpec::parse_with_n(&family, n)?;
            let mut cfg = EmpiricalConfig::new(family.clone(), samples, seed);
            cfg.audit = audit.unwrap_or(pattern == Some(PatternSpec::TwoP4));
            cfg.free_of = pattern;
            cfg.max_attempts = max_attempts;
            cfg.budget = budget;
            let report = run_empirical(&cfg)?;
            let write = |p: &PathBuf, text: String| {
                fs::write(p, text).map_err(|e| Error::Input(format!("writing {}: {e}", p.display())))
            };
            write(&out, report.csv_string()?)?;
            let svg = svg.unwrap_or_else(|| out.with_extension("svg"));
            write(&svg, report.svg(&format!("{family}: ω vs χ ({} samples)", report.rows.len())))?;
            println!(
                "samples {} max chi/omega^2 {:.6} bound16-violations {} audited {} audit-violations {}",
                report.rows.len(),
                report.max_ratio(),
                report.bound16_violations(),
                report.audited(),
                report.audit_violations()
            );
            if report.bound16_violations() + report.audit_violations() > 0 {
                return Ok(Verdict::Counterexample("empirical invariant violated".into()));
            }
            Ok(Verdict::Ok)
        }
        Cmd::AuditScattering { graph, psi, q } => {
            let g = read_graph_arg(&graph)?;
            match lemmas::scattering_audit(&g, &psi, q, chibound::invariants::TABLE_LIMIT + 1)? {
                Some(w) => {
                    println!("# scattering found");
                    print_witnesses(&[Witness::Scattering(w)]);
                }
                None => println!("# no ({psi}, {q})-scattering exists"),
            }
            Ok(Verdict::Ok)
        }
    }
}

fn run_lemma(name: &str, g: &Graph, p: &LemmaParams, opts: &LemmaOptions) -> Result<Verdict> {
    let ws: Vec<Witness> = match name {
        "ramsey" => match lemmas::ramsey_witness(g, p.x()?, LemmaParams::need(p.y, "y")?)? {
            RamseyOutcome::Clique(c) => vec![Witness::Clique(c.0)],
            RamseyOutcome::Stable(s) => vec![Witness::Stable(s.0)],
        },
        "gyarfas-path" => {
            let path = lemmas::gyarfas_path(g, LemmaParams::need(p.v, "v")?, &p.h(g.n())?, p.k()?, p.x()?, opts)?;
            vec![Witness::Path(path.0)]
        }
        "nondominating-path" => {
            let (path, nd) = lemmas::nondominating_path(g, p.k()?, p.x()?, &p.sigma(), opts)?;
            vec![Witness::Path(path.0), Witness::Nondomination(nd)]
        }
        "broom" => vec![Witness::Pattern(lemmas::broom_finder(g, p.k()?, p.s()?, p.x()?, opts)?)],
        "horn-or-broom" => {
            let c = LemmaParams::need(p.c, "c")?;
            match lemmas::horn_or_broom(g, p.k()?, p.s()?, p.d()?, p.z()?, c, &p.sigma(), opts)? {
                HornOrBroom::Horn { witness, check } => {
                    println!("# outcome horn ({check:?})");
                    vec![Witness::Horn(witness)]
                }
                HornOrBroom::BroomAndPath { broom, path, nondomination } => {
                    println!("# outcome broom-and-path");
                    vec![Witness::Pattern(broom), Witness::Path(path.0), Witness::Nondomination(nondomination)]
                }
            }
        }
        "split-partition" => vec![Witness::Partition(lemmas::split_partition(g, p.d()?, p.z()?, opts)?)],
        "horn-lift" => {
            let horn = p.horn()?;
            let l = p.l.unwrap_or(horn.tail.len());
            let next = (LemmaParams::need(p.d2, "d2")?, LemmaParams::need(p.z2, "z2")?);
            match lemmas::horn_lift(g, &horn, l, (p.d()?, p.z()?), next, p.q.unwrap_or(0), &p.psi(), opts)? {
                HornLift::Scattering(s) => {
                    println!("# outcome scattering");
                    vec![Witness::Scattering(s)]
                }
                HornLift::TallerHorn { witness, check } => {
                    println!("# outcome taller-horn ({check:?})");
                    vec![Witness::Horn(witness)]
                }
            }
        }
        "sweep" => {
            let report = lemmas::sweep(g, &p.sweep()?, opts)?;
            println!("# c {} via-horn {} lift-rounds {}", report.c, report.via_horn, report.lift_rounds);
            match report.outcome {
                SweepOutcome::Found { broom, path, nondomination } => {
                    println!("# outcome broom-and-path");
                    vec![Witness::Pattern(broom), Witness::Path(path.0), Witness::Nondomination(nondomination)]
                }
                SweepOutcome::Scattering(s) => {
                    println!("# outcome scattering");
                    vec![Witness::Scattering(s)]
                }
            }
        }
        other => return Err(Error::Input(format!("unknown lemma {other:?}"))),
    };
    println!("# verified");
    print_witnesses(&ws);
    Ok(Verdict::Ok)
}

/// Checks witnesses against the conclusion of lemma `name` without running it.
fn verify_lemma(name: &str, g: &Graph, p: &LemmaParams, ws: &[Witness], opts: &LemmaOptions) -> Result<Verdict> {
    let path_of = |k: usize| {
        ws.iter().find_map(|w| match w {
            Witness::Path(path) if path.len() == k && g.is_induced_path(path) => Some(path.clone()),
            _ => None,
        })
    };
    let nondom = |path: &[usize]| -> Result<bool> {
        let pset = VertexSet::from_members(g.n(), path.iter().copied())?;
        for w in ws {
            if let Witness::Nondomination(nd) = w {
                if nd.path == pset && verify_nondominating(g, nd, &p.sigma())? {
                    return Ok(true);
                }
            }
        }
        Ok(false)
    };
    let broom = |k: usize, s: usize| -> Result<bool> {
        let spec = PatternSpec::Broom { k, d: s };
        for w in ws {
            if let Witness::Pattern(pw) = w {
                if verify_witness(g, &spec, pw)? {
                    return Ok(true);
                }
            }
        }
        Ok(false)
    };
    let broom_and_path = |k: usize, s: usize| -> Result<bool> {
        Ok(broom(k, s)? && path_of(k).map_or(Ok(false), |path| nondom(&path))?)
    };
    let horn_ok = |d: usize, z: usize, l: usize| -> Result<bool> {
        for w in ws {
            if let Witness::Horn(h) = w {
                let mode = if h.a.len() + h.b.len() <= opts.horn_cap {
                    HornMode::Exhaustive { cap: opts.horn_cap }
                } else {
                    HornMode::Spot(opts.spot_candidates.clone())
                };
                if verify_tall(g, h, l)? && verify_horn(g, h, d, z, &mode)?.passed() {
                    return Ok(true);
                }
            }
        }
        Ok(false)
    };
    let scattering_ok = || -> Result<bool> {
        for w in ws {
            if let Witness::Scattering(s) = w {
                if verify_scattering(g, s, &p.psi(), p.q.unwrap_or(0))? {
                    return Ok(true);
                }
            }
        }
        Ok(false)
    };
    let ok = match name {
        "ramsey" => {
            let (x, y) = (p.x()?, LemmaParams::need(p.y, "y")?);
            ws.iter().any(|w| match w {
                Witness::Clique(s) => s.len() == x + 1 && chibound::invariants::CliqueWitness(s.clone()).verify(g),
                Witness::Stable(s) => s.len() == y && chibound::invariants::StableWitness(s.clone()).verify(g),
                _ => false,
            })
        }
        "gyarfas-path" => {
            let (v, h, k) = (LemmaParams::need(p.v, "v")?, p.h(g.n())?, p.k()?);
            path_of(k).is_some_and(|path| path[0] == v && path[1..].iter().all(|&u| h.contains(u)))
        }
        "nondominating-path" => path_of(p.k()?).map_or(Ok(false), |path| nondom(&path))?,
        "broom" => broom(p.k()?, p.s()?)?,
        "horn-or-broom" => horn_ok(p.d()?, p.z()?, 1)? || broom_and_path(p.k()?, p.s()?)?,
        "split-partition" => ws.iter().any(|w| match w {
            Witness::Partition(part) => {
                verify_partition(g, part, p.d().unwrap_or(0), p.z().unwrap_or(0)).unwrap_or(false)
            }
            _ => false,
        }),
        "horn-lift" => {
            let l = p.l.unwrap_or(1);
            let next = (LemmaParams::need(p.d2, "d2")?, LemmaParams::need(p.z2, "z2")?);
            scattering_ok()? || horn_ok(next.0, next.1, l + 1)?
        }
        "sweep" => {
            let params = p.sweep()?;
            scattering_ok()? || broom_and_path(params.k, params.s)?
        }
        other => return Err(Error::Input(format!("unknown lemma {other:?}"))),
    };
    Ok(check(ok, "witness file"))
}
