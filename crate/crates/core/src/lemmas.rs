//! Witness-producing versions of the constructive arguments: Ramsey
//! extraction, Gyárfás paths, nondominating paths, broom finding, the
//! horn-or-broom dichotomy, split partitions, horn lifting and the sweep.
//!
//! Every operation checks its result with the definition-level checkers in
//! [`crate::structures`] before returning it; a failed check is reported as
//! [`Error::Counterexample`].

use crate::error::{Error, Result};
use crate::graph::{Graph, Induced, VertexSet};
use crate::invariants::{max_stable, omega, Budget, CliqueWitness, InvariantCache, StableWitness, TABLE_LIMIT};
use crate::patterns::{PatternSpec, PatternWitness};
use crate::polynomial::{choose_c, sweep_polys, Polynomial, SweepParameters};
use crate::structures::{
    cache_for, check_nondominating, check_scattering, eval_sat, find_split, is_unsplittable, verify_horn, verify_tall,
    HornCheck, HornMode, HornWitness, NondominationWitness, PartitionWitness, ScatteringWitness, HORN_CAP, UNSPLIT_CAP,
};

/// Knobs shared by all lemma operations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LemmaOptions {
    /// Accept χ-valued preconditions and criticality on the caller's word.
    /// Arithmetic preconditions are still checked.
    pub assume_preconditions: bool,
    pub horn_cap: usize,
    pub unsplit_cap: usize,
    pub budget: Budget,
    /// Deletion sets tried when a horn is too large to check exhaustively.
    pub spot_candidates: Vec<VertexSet>,
}

impl Default for LemmaOptions {
    fn default() -> Self {
        LemmaOptions {
            assume_preconditions: false,
            horn_cap: HORN_CAP,
            unsplit_cap: UNSPLIT_CAP,
            budget: Budget::default(),
            spot_candidates: Vec::new(),
        }
    }
}

impl LemmaOptions {
    pub fn assuming() -> Self {
        LemmaOptions { assume_preconditions: true, ..Self::default() }
    }

    fn horn_mode(&self, a: &VertexSet, b: &VertexSet) -> HornMode {
        if a.len() + b.len() <= self.horn_cap.min(TABLE_LIMIT) {
            HornMode::Exhaustive { cap: self.horn_cap }
        } else {
            HornMode::Spot(self.spot_candidates.clone())
        }
    }
}

/// An induced path listed from one end.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct PathWitness(pub Vec<usize>);

impl PathWitness {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn vertex_set(&self, n: usize) -> VertexSet {
        let mut s = VertexSet::empty(n);
        for &v in &self.0 {
            s.insert(v);
        }
        s
    }

    /// A `k`-vertex induced path of `g`.
    pub fn verify(&self, g: &Graph, k: usize) -> bool {
        self.0.len() == k && g.is_induced_path(&self.0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RamseyOutcome {
    Clique(CliqueWitness),
    Stable(StableWitness),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HornOrBroom {
    Horn { witness: HornWitness, check: HornCheck },
    BroomAndPath { broom: PatternWitness, path: PathWitness, nondomination: NondominationWitness },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HornLift {
    Scattering(ScatteringWitness),
    TallerHorn { witness: HornWitness, check: HornCheck },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SweepOutcome {
    Found {
        broom: PatternWitness,
        path: PathWitness,
        nondomination: NondominationWitness,
    },
    /// A scattering turned up, so the graph violates the sweep's hypothesis.
    Scattering(ScatteringWitness),
}

/// The sweep's result together with how it was reached. Witnesses use host
/// vertex indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepReport {
    pub outcome: SweepOutcome,
    pub c: u32,
    /// Vertices of the critical subgraph the chain ran on.
    pub critical: VertexSet,
    /// Whether the chain went through a horn (as opposed to the broom branch).
    pub via_horn: bool,
    pub lift_rounds: usize,
}

fn counterexample(msg: impl std::fmt::Display) -> Error {
    Error::Counterexample(msg.to_string())
}

fn sat_pow(base: usize, exp: u32) -> usize {
    base.checked_pow(exp).unwrap_or(usize::MAX)
}

/// `χ(N(u)) ≤ x` for every vertex `u`.
fn neighbourhoods_within(cache: &mut InvariantCache, x: usize) -> Result<bool> {
    let g = cache.graph();
    for u in 0..g.n() {
        if cache.chi_exceeds(&g.nbrs(u), x)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A component of maximum χ, ties to the least minimum vertex. When
/// preconditions are assumed and no subset table is at hand, exact χ is
/// skipped and the largest component (same tie rule) is taken instead.
fn pick_component(cache: &mut InvariantCache, comps: Vec<VertexSet>, assume: bool) -> Result<Option<VertexSet>> {
    if comps.len() <= 1 {
        return Ok(comps.into_iter().next());
    }
    let mut best: Option<(usize, VertexSet)> = None;
    for c in comps {
        let score = if assume && cache.table().is_none() { c.len() } else { cache.chi_value(&c)? };
        let better = match &best {
            None => true,
            Some((s, b)) => score > *s || (score == *s && c.first() < b.first()),
        };
        if better {
            best = Some((score, c));
        }
    }
    Ok(best.map(|(_, c)| c))
}

/// A stable subset of `set` with exactly `size` members, greedy first.
fn stable_subset(g: &Graph, set: &VertexSet, size: usize) -> Result<Option<VertexSet>> {
    let mut left = set.clone();
    let mut picked = VertexSet::empty(g.n());
    while picked.len() < size {
        let Some(u) = left.iter().min_by_key(|&u| (g.neighbors_in(u, &left).len(), u)) else {
            break;
        };
        picked.insert(u);
        left.remove(u);
        left.subtract(&g.nbrs(u));
    }
    if picked.len() < size {
        let (alpha, StableWitness(s)) = max_stable(g, set)?;
        if alpha < size {
            return Ok(None);
        }
        picked = VertexSet::from_members(g.n(), s.iter().take(size))?;
    }
    Ok(Some(picked))
}

/// A clique on `x + 1` vertices or a stable set on `y` vertices, given
/// `|G| ≥ x^y`.
pub fn ramsey_witness(g: &Graph, x: usize, y: usize) -> Result<RamseyOutcome> {
    if x < 2 || y < 1 {
        return Err(Error::input("Ramsey extraction needs x ≥ 2 and y ≥ 1"));
    }
    if g.n() < sat_pow(x, y as u32) {
        return Err(Error::precondition(format!("graph has {} < {x}^{y} vertices", g.n())));
    }
    let all = g.vertices();
    let (w, CliqueWitness(k)) = omega(g, &all)?;
    let out = if w > x {
        RamseyOutcome::Clique(CliqueWitness(VertexSet::from_members(g.n(), k.iter().take(x + 1))?))
    } else {
        let (a, StableWitness(s)) = max_stable(g, &all)?;
        if a < y {
            return Err(counterexample(format!("no clique of size {} and no stable set of size {y}", x + 1)));
        }
        RamseyOutcome::Stable(StableWitness(VertexSet::from_members(g.n(), s.iter().take(y))?))
    };
    let ok = match &out {
        RamseyOutcome::Clique(c) => c.0.len() == x + 1 && c.verify(g),
        RamseyOutcome::Stable(s) => s.0.len() == y && s.verify(g),
    };
    if !ok {
        return Err(counterexample("Ramsey witness failed verification"));
    }
    Ok(out)
}

/// An induced `k`-vertex path starting at `v` with every other vertex in `h`.
///
/// Preconditions (checked exactly unless assumed): `g` connected,
/// `χ(N(u)) ≤ x` for all `u`, `g[h]` connected, `v ∉ h` with a neighbour in
/// `h`, and `χ(h) > (k−2)x`.
pub fn gyarfas_path(
    g: &Graph,
    v: usize,
    h: &VertexSet,
    k: usize,
    x: usize,
    opts: &LemmaOptions,
) -> Result<PathWitness> {
    gyarfas_path_with(&mut cache_for(g, opts.budget), v, h, k, x, opts.assume_preconditions)
}

/// As [`gyarfas_path`], reusing the invariants already computed in `cache`.
pub fn gyarfas_path_with(
    cache: &mut InvariantCache,
    v: usize,
    h: &VertexSet,
    k: usize,
    x: usize,
    assume: bool,
) -> Result<PathWitness> {
    let g = cache.graph();
    let h = g.coerce(h)?;
    if k == 0 {
        return Err(Error::input("path length k must be at least 1"));
    }
    if v >= g.n() || h.contains(v) || !g.has_neighbor_in(v, &h) {
        return Err(Error::precondition("v must lie outside h and have a neighbour in h"));
    }
    if !assume {
        if !g.is_connected() || !g.is_connected_within(&h) {
            return Err(Error::precondition("g and g[h] must be connected"));
        }
        if !neighbourhoods_within(cache, x)? {
            return Err(Error::precondition(format!("some neighbourhood has χ > {x}")));
        }
        if k >= 2 && !cache.chi_exceeds(&h, (k - 2) * x)? {
            return Err(Error::precondition(format!("χ(h) ≤ (k−2)x = {}", (k - 2) * x)));
        }
    }
    let path = PathWitness(gyarfas_rec(cache, v, &h, k, assume)?);
    if !path.verify(g, k) || path.0[0] != v || path.0[1..].iter().any(|&u| !h.contains(u)) {
        return Err(counterexample(format!("Gyárfás path {:?} failed verification", path.0)));
    }
    Ok(PathWitness(path.0))
}

fn gyarfas_rec(cache: &mut InvariantCache, v: usize, h: &VertexSet, k: usize, assume: bool) -> Result<Vec<usize>> {
    let g = cache.graph();
    match k {
        1 => return Ok(vec![v]),
        2 => {
            let u = g.neighbors_in(v, h).first().ok_or_else(|| counterexample("v has no neighbour in h"))?;
            return Ok(vec![v, u]);
        }
        _ => {}
    }
    let nv = g.neighbors_in(v, h);
    let j = h.difference(&nv);
    let comp =
        pick_component(cache, g.components_within(&j), assume)?.ok_or_else(|| counterexample("h ∖ N(v) is empty"))?;
    let next = nv
        .iter()
        .find(|&u| g.has_neighbor_in(u, &comp))
        .ok_or_else(|| counterexample("no neighbour of v reaches the chosen component"))?;
    let mut path = vec![v];
    path.extend(gyarfas_rec(cache, next, &comp, k - 1, assume)?);
    Ok(path)
}

/// A `k`-vertex induced path `P` and a set `X` anticomplete to it with
/// `χ(X) > σ(ω(X))`.
///
/// Preconditions: `χ(N(v)) ≤ x` for all `v`, and `χ(G) > kx + σ(ω(G))`.
/// For `k ≥ 2` the first vertex of a maximum-χ component works. For `k = 1`
/// the argument can fail (in `K2` with `x = 1`, `σ = 0`, every `X` is empty),
/// so every start vertex is tried and a counterexample is reported if none works.
pub fn nondominating_path(
    g: &Graph,
    k: usize,
    x: usize,
    sigma: &Polynomial,
    opts: &LemmaOptions,
) -> Result<(PathWitness, NondominationWitness)> {
    if k == 0 || x == 0 {
        return Err(Error::input("nondominating path needs k, x ≥ 1"));
    }
    let mut cache = cache_for(g, opts.budget);
    if !opts.assume_preconditions {
        if !neighbourhoods_within(&mut cache, x)? {
            return Err(Error::precondition(format!("some neighbourhood has χ > {x}")));
        }
        let w = cache.omega_value(&g.vertices())?;
        let need = (k * x).saturating_add(eval_sat(sigma, w));
        if !cache.chi_exceeds(&g.vertices(), need)? {
            return Err(Error::precondition(format!("χ(G) ≤ kx + σ(ω) = {need}")));
        }
    }
    nondominating_in(&mut cache, k, sigma, opts.assume_preconditions)
}

fn nondominating_in(
    cache: &mut InvariantCache,
    k: usize,
    sigma: &Polynomial,
    assume: bool,
) -> Result<(PathWitness, NondominationWitness)> {
    let g = cache.graph();
    let comp = pick_component(cache, g.components(), assume)?.ok_or_else(|| counterexample("empty graph"))?;
    let starts: Vec<usize> = if k == 1 {
        comp.iter().chain(g.vertices().difference(&comp).iter()).collect()
    } else {
        comp.first().into_iter().collect()
    };
    for v in starts {
        let path = if k == 1 {
            vec![v]
        } else {
            let mut rest = comp.clone();
            rest.remove(v);
            let h = pick_component(cache, g.components_within(&rest), assume)?
                .ok_or_else(|| counterexample("component minus a vertex is empty"))?;
            gyarfas_rec(cache, v, &h, k, assume)?
        };
        let pset = PathWitness(path.clone()).vertex_set(g.n());
        let x = g.vertices().difference(&pset).difference(&g.boundary(&pset));
        let w = NondominationWitness { path: pset, x };
        if g.is_induced_path(&path) && path.len() == k && check_nondominating(cache, &w, sigma)? {
            return Ok((PathWitness(path), w));
        }
    }
    Err(counterexample(format!("no σ-nondominating {k}-vertex path found")))
}

/// An induced `(k, s)`-broom, following the three-case argument: a vertex of
/// degree ≥ ω^{2s}, a stable `2s`-set `S` among its neighbours, a Gyárfás
/// path from the fringe `M` of `S ∪ {v}` into a maximum-χ component beyond,
/// then a broom of length `k`, `k+1` or `k+2` truncated to `k` path vertices
/// counted from the bristle end.
///
/// Preconditions: `χ(N(v)) ≤ x` for all `v` and
/// `χ(G) > max(ω^{2s}, (2s+1)(x+1) + (k−2)x)`. A disconnected graph is
/// handled inside a component of maximum χ.
pub fn broom_finder(g: &Graph, k: usize, s: usize, x: usize, opts: &LemmaOptions) -> Result<PatternWitness> {
    if k == 0 {
        return Err(Error::input("broom length k must be at least 1"));
    }
    let mut cache = cache_for(g, opts.budget);
    if !opts.assume_preconditions {
        if !neighbourhoods_within(&mut cache, x)? {
            return Err(Error::precondition(format!("some neighbourhood has χ > {x}")));
        }
        let w = cache.omega_value(&g.vertices())?;
        let linear = ((2 * s + 1) * (x + 1) + k * x).saturating_sub(2 * x);
        let need = sat_pow(w, 2 * s as u32).max(linear);
        if !cache.chi_exceeds(&g.vertices(), need)? {
            return Err(Error::precondition(format!("χ(G) ≤ {need}")));
        }
    }
    broom_in(&mut cache, k, s, opts.assume_preconditions)
}

fn broom_in(cache: &mut InvariantCache, k: usize, s: usize, assume: bool) -> Result<PatternWitness> {
    let g = cache.graph();
    let comp = pick_component(cache, g.components(), assume)?.ok_or_else(|| counterexample("empty graph"))?;
    let w = cache.omega_value(&comp)?;
    let degree_floor = sat_pow(w, 2 * s as u32);
    let v = comp
        .iter()
        .find(|&u| g.degree(u) >= degree_floor)
        .ok_or_else(|| counterexample(format!("no vertex of degree ≥ ω^2s = {degree_floor}")))?;
    let big_s = stable_subset(g, &g.nbrs(v), 2 * s)?
        .ok_or_else(|| counterexample("no stable 2s-set among the neighbours of v"))?;
    let mut core = big_s.clone();
    core.insert(v);
    let fringe = g.boundary(&core);
    let rest = comp.difference(&core).difference(&fringe);
    let h = pick_component(cache, g.components_within(&rest), assume)?
        .ok_or_else(|| counterexample("nothing left beyond the fringe"))?;
    let u = fringe
        .iter()
        .find(|&m| g.has_neighbor_in(m, &h))
        .ok_or_else(|| counterexample("no fringe vertex reaches the far component"))?;
    let p = gyarfas_rec(cache, u, &h, k, assume)?;
    let s_nbrs = g.neighbors_in(u, &big_s);
    let (path, bristles): (Vec<usize>, Vec<usize>) = if s_nbrs.len() >= s {
        (p, s_nbrs.iter().take(s).collect())
    } else {
        let s_prime: Vec<usize> = big_s.difference(&s_nbrs).iter().take(s).collect();
        let mut long = vec![v];
        if !g.adjacent(u, v) {
            let wv = s_nbrs.first().ok_or_else(|| counterexample("fringe vertex has no neighbour in S ∪ {v}"))?;
            long.push(wv);
        }
        long.extend(p);
        long.truncate(k);
        (long, s_prime)
    };
    let mut map = path;
    map.extend(bristles);
    let witness = PatternWitness { map };
    let pattern = PatternSpec::Broom { k, d: s }.build()?;
    if !pattern.verify(g, &witness) {
        return Err(counterexample(format!("broom {:?} failed verification", witness.map)));
    }
    Ok(witness)
}

/// Checks that every proper induced subgraph `G'` has `χ(G') ≤ ω(G')^c`.
///
/// Uses the subset table up to 16 vertices. For `ω(G) ≤ 2` it suffices to
/// look at vertex deletions: every proper subgraph with ω = 2 lies in some
/// `G − v`, and subgraphs with ω ≤ 1 satisfy the bound trivially.
pub fn is_critical(g: &Graph, c: u32, budget: Budget) -> Result<bool> {
    let mut cache = cache_for(g, budget);
    critical_check(&mut cache, c)
}

fn critical_check(cache: &mut InvariantCache, c: u32) -> Result<bool> {
    let g = cache.graph();
    if let Some(t) = cache.table() {
        let full = t.full_mask();
        return Ok((0..full).all(|m| t.chi(m) <= sat_pow(t.omega(m), c)));
    }
    if cache.omega_value(&g.vertices())? <= 2 {
        for v in 0..g.n() {
            let mut rest = g.vertices();
            rest.remove(v);
            let w = cache.omega_value(&rest)?;
            if cache.chi_exceeds(&rest, sat_pow(w, c))? {
                return Ok(false);
            }
        }
        return Ok(true);
    }
    Err(Error::resource(format!(
        "criticality check needs ≤ {TABLE_LIMIT} vertices or ω ≤ 2; assume preconditions for larger fixtures"
    )))
}

/// Descends to an induced subgraph `G'` with `χ(G') > ω(G')^c` all of whose
/// proper induced subgraphs satisfy the bound. `g` itself must satisfy
/// `χ > ω^c`.
///
/// Small graphs pick the least such subset by size from the subset table;
/// larger graphs with ω ≤ 2 delete vertices one at a time in index order.
pub fn critical_descent(g: &Graph, c: u32, budget: Budget) -> Result<Induced> {
    let mut cache = cache_for(g, budget);
    if let Some(t) = cache.table() {
        let full = t.full_mask();
        let mut masks: Vec<u32> = (0..=full).collect();
        masks.sort_by_key(|m| (m.count_ones(), *m));
        let m = masks
            .into_iter()
            .find(|&m| t.chi(m) > sat_pow(t.omega(m), c))
            .ok_or_else(|| Error::precondition(format!("χ(G) ≤ ω(G)^{c}")))?;
        return g.induced(&VertexSet::from_members(g.n(), crate::invariants::mask_members(m))?);
    }
    let mut keep = g.vertices();
    let w0 = cache.omega_value(&keep)?;
    if !cache.chi_exceeds(&keep, sat_pow(w0, c))? {
        return Err(Error::precondition(format!("χ(G) ≤ ω(G)^{c}")));
    }
    if w0 > 2 {
        return Err(Error::resource("critical descent on large graphs is limited to ω ≤ 2"));
    }
    for v in 0..g.n() {
        let mut trial = keep.clone();
        trial.remove(v);
        let w = cache.omega_value(&trial)?;
        if cache.chi_exceeds(&trial, sat_pow(w, c))? {
            keep = trial;
        }
    }
    g.induced(&keep)
}

/// The five arithmetic preconditions of the horn-or-broom dichotomy, at ω.
fn horn_or_broom_arithmetic(
    w: usize,
    k: usize,
    s: usize,
    d: usize,
    z: usize,
    c: u32,
    sigma: &Polynomial,
) -> Result<()> {
    if c < 2 * s as u32 {
        return Err(Error::input("c must be at least 2s"));
    }
    let wc = sat_pow(w, c);
    let first = sat_pow(w.saturating_sub(1), c).saturating_add(z).saturating_add(d.saturating_mul(w)).saturating_add(2);
    let second = (2 * s + 1).saturating_mul(z + 1).saturating_add(k.saturating_mul(z)).saturating_sub(2 * z);
    let third = k.saturating_mul(z).saturating_add(eval_sat(sigma, w));
    if wc < first || wc < second || wc < third {
        return Err(Error::input(format!("ω^c = {wc} must be ≥ {first}, {second} and {third}")));
    }
    Ok(())
}

/// Either a `(d, z)`-horn, or a `(k, s)`-broom together with a
/// σ-nondominating `k`-vertex path.
///
/// If every neighbourhood has `χ ≤ z` the broom branch runs with `x = z`.
/// Otherwise the least `v` with `χ(N(v)) > z` gives the horn
/// `(v, N(v), V ∖ N[v])`, checked exhaustively when it fits the cap.
#[allow(clippy::too_many_arguments)]
pub fn horn_or_broom(
    g: &Graph,
    k: usize,
    s: usize,
    d: usize,
    z: usize,
    c: u32,
    sigma: &Polynomial,
    opts: &LemmaOptions,
) -> Result<HornOrBroom> {
    if k == 0 || s == 0 {
        return Err(Error::input("k and s must be at least 1"));
    }
    let mut cache = cache_for(g, opts.budget);
    let w = cache.omega_value(&g.vertices())?;
    horn_or_broom_arithmetic(w, k, s, d, z, c, sigma)?;
    if !opts.assume_preconditions {
        if !cache.chi_exceeds(&g.vertices(), sat_pow(w, c))? {
            return Err(Error::precondition(format!("χ(G) ≤ ω(G)^{c}")));
        }
        if !critical_check(&mut cache, c)? {
            return Err(Error::precondition("some proper induced subgraph has χ > ω^c"));
        }
    }
    horn_or_broom_in(&mut cache, k, s, d, z, sigma, opts)
}

#[allow(clippy::too_many_arguments)]
fn horn_or_broom_in(
    cache: &mut InvariantCache,
    k: usize,
    s: usize,
    d: usize,
    z: usize,
    sigma: &Polynomial,
    opts: &LemmaOptions,
) -> Result<HornOrBroom> {
    let g = cache.graph();
    let mut heavy = None;
    for v in 0..g.n() {
        if cache.chi_exceeds(&g.nbrs(v), z)? {
            heavy = Some(v);
            break;
        }
    }
    match heavy {
        None => {
            let broom = broom_in(cache, k, s, opts.assume_preconditions)?;
            let (path, nondomination) = nondominating_in(cache, k, sigma, opts.assume_preconditions)?;
            Ok(HornOrBroom::BroomAndPath { broom, path, nondomination })
        }
        Some(v) => {
            let a = g.nbrs(v);
            let mut b = g.vertices().difference(&a);
            b.remove(v);
            let witness = HornWitness { v, a, b, tail: vec![v] };
            let check = verify_horn(g, &witness, d, z, &opts.horn_mode(&witness.a, &witness.b))?;
            if let HornCheck::Refuted(zs) = &check {
                return Err(counterexample(format!("horn at {v} refuted by Z = {zs:?}")));
            }
            if let HornCheck::Malformed(why) = &check {
                return Err(counterexample(why));
            }
            Ok(HornOrBroom::Horn { witness, check })
        }
    }
}

/// A partition `(D_0, ..., D_k)` with `k ≤ ω(G)`, `χ(D_0) ≤ zω(G)` and each
/// `G[D_i]` `(d, z, ω(G))`-unsplittable, by repeated refinement from `(∅, V)`.
pub fn split_partition(g: &Graph, d: usize, z: usize, opts: &LemmaOptions) -> Result<PartitionWitness> {
    let w = omega(g, &g.vertices())?.0;
    split_partition_with_omega(g, d, z, w, opts.unsplit_cap)
}

/// As [`split_partition`] with unsplittability measured against a given `ω`
/// (for example that of a host graph). The bound `k ≤ ω` still holds since
/// `ω(G) ≤ ω` is only needed through the density thresholds.
pub fn split_partition_with_omega(g: &Graph, d: usize, z: usize, w: usize, cap: usize) -> Result<PartitionWitness> {
    let n = g.n();
    if n == 0 {
        return Ok(PartitionWitness { blocks: vec![VertexSet::empty(0)] });
    }
    let mut blocks = vec![VertexSet::empty(n), g.vertices()];
    let mut settled = vec![true, false];
    while let Some(i) = settled.iter().position(|s| !s) {
        let sub = g.induced(&blocks[i])?;
        if sub.graph.n() > cap.min(TABLE_LIMIT) {
            return Err(Error::resource(format!(
                "block of {} vertices exceeds the unsplittability cap {cap}",
                sub.graph.n()
            )));
        }
        let t = crate::invariants::SubsetTable::new(&sub.graph)?;
        match find_split(&t, d, z, w) {
            None => settled[i] = true,
            Some((am, bm, zm)) => {
                let lift = |m: u32| sub.lift(&mask_to_set(sub.graph.n(), m), n);
                blocks[0].union_with(&lift(zm));
                blocks[i] = lift(am);
                blocks.insert(i + 1, lift(bm));
                settled[0] = true;
                settled.insert(i + 1, false);
                if blocks.len() - 1 > w.max(1) {
                    return Err(counterexample(format!("refinement exceeded k ≤ ω = {w}")));
                }
            }
        }
    }
    Ok(PartitionWitness { blocks })
}

fn mask_to_set(n: usize, m: u32) -> VertexSet {
    VertexSet::from_members(n, crate::invariants::mask_members(m)).expect("mask within range")
}

/// From an `ℓ`-tall `(d, z)`-horn, either a `(ψ, q)`-scattering `(v, P, Q)`
/// with `P ⊆ A`, `Q ⊆ B`, or an `(ℓ+1)`-tall `(d', z')`-horn
/// `(v', A', B')` with `v' ∈ A` and `A', B' ⊆ B`. The new tail is `v'`
/// followed by the old tail.
///
/// Arithmetic preconditions `z ≥ (2ψ(ω) + (1+q)z' + qd'ω)ω` and
/// `d ≥ (z' + d'ω)ω` are always checked; the input horn is checked
/// exhaustively unless preconditions are assumed or it exceeds the cap.
#[allow(clippy::too_many_arguments)]
pub fn horn_lift(
    g: &Graph,
    w: &HornWitness,
    l: usize,
    (d, z): (usize, usize),
    (d2, z2): (usize, usize),
    q: u64,
    psi: &Polynomial,
    opts: &LemmaOptions,
) -> Result<HornLift> {
    let mut cache = cache_for(g, opts.budget);
    let om = cache.omega_value(&g.vertices())?;
    let q = q as usize;
    let p = eval_sat(psi, om);
    let unit = z2.saturating_add(d2.saturating_mul(om));
    let z_need = (2usize.saturating_mul(p))
        .saturating_add((1 + q).saturating_mul(z2))
        .saturating_add(q.saturating_mul(d2).saturating_mul(om))
        .saturating_mul(om);
    if z < z_need || d < unit.saturating_mul(om) {
        return Err(Error::precondition(format!("need z ≥ {z_need} and d ≥ {}", unit.saturating_mul(om))));
    }
    if !verify_tall(g, w, l)? {
        return Err(Error::precondition(format!("horn is not {l}-tall")));
    }
    if !opts.assume_preconditions {
        let check = verify_horn(g, w, d, z, &opts.horn_mode(&w.a, &w.b))?;
        if !check.passed() {
            return Err(Error::precondition(format!("input is not a ({d},{z})-horn: {check:?}")));
        }
    }
    let (a, b) = (g.coerce(&w.a)?, g.coerce(&w.b)?);
    let gb = g.induced(&b)?;
    let part = split_partition_with_omega(&gb.graph, d2, z2, om, opts.unsplit_cap)?;
    let blocks: Vec<VertexSet> = part.blocks.iter().map(|blk| gb.lift(blk, g.n())).collect();
    let thr = q.saturating_mul(unit).saturating_add(p);

    let mut big = Vec::new();
    let mut pool = VertexSet::empty(g.n());
    let mut zset = blocks[0].clone();
    for di in &blocks[1..] {
        if !cache.chi_exceeds(di, thr)? {
            zset.union_with(di);
            continue;
        }
        let mut pi = VertexSet::empty(g.n());
        for u in a.iter() {
            if cache.chi_at_most(&g.neighbors_in(u, di), unit)? {
                pi.insert(u);
            }
        }
        if cache.chi_exceeds(&pi, p)? {
            let sc = ScatteringWitness { v: w.v, p: pi, q: di.clone() };
            if !check_scattering(&mut cache, &sc, psi, q as u64)? {
                return Err(counterexample("scattering failed verification"));
            }
            return Ok(HornLift::Scattering(sc));
        }
        pool.union_with(&pi);
        big.push(di.clone());
    }
    zset.union_with(&pool);
    let rest_b = b.difference(&zset);
    let mut lifted = None;
    for v2 in a.difference(&pool).iter() {
        if cache.chi_exceeds(&g.non_neighbors_in(v2, &rest_b), d)? {
            lifted = Some(v2);
            break;
        }
    }
    let v2 = lifted.ok_or_else(|| {
        Error::precondition(format!("input is not a ({d},{z})-horn: Z = {zset:?} leaves A∖Z d-dense to B∖Z"))
    })?;
    let mut chosen = None;
    for di in &big {
        let miss = g.non_neighbors_in(v2, di);
        let chi_miss = cache.chi_value(&miss)?;
        if chi_miss.saturating_mul(om) > d {
            chosen = Some(di.clone());
            break;
        }
    }
    let di = chosen.ok_or_else(|| counterexample("no block carries the non-neighbours of v'"))?;
    let mut tail = vec![v2];
    tail.extend(w.tail.iter().copied());
    let witness = HornWitness { v: v2, a: g.neighbors_in(v2, &di), b: g.non_neighbors_in(v2, &di), tail };
    if !verify_tall(g, &witness, l + 1)? {
        return Err(counterexample("lifted horn is not taller"));
    }
    let check = verify_horn(g, &witness, d2, z2, &opts.horn_mode(&witness.a, &witness.b))?;
    if !check.passed() {
        return Err(counterexample(format!("lifted horn failed: {check:?}")));
    }
    Ok(HornLift::TallerHorn { witness, check })
}

/// Final step of the sweep: a `k`-tall `(0, z)`-horn `(v, A, B)` yields a
/// `(k, s)`-broom (tail plus a stable `s`-set of `A`) and a σ-nondominating
/// path (the tail, with `X = B`).
fn finish_from_horn(
    cache: &mut InvariantCache,
    w: &HornWitness,
    s: usize,
    sigma: &Polynomial,
) -> Result<(PatternWitness, PathWitness, NondominationWitness)> {
    let g = cache.graph();
    let k = w.tail.len();
    let bristles = stable_subset(g, &w.a, s)?.ok_or_else(|| counterexample("A has no stable s-set"))?;
    let mut map = w.tail.clone();
    map.extend(bristles.iter());
    let broom = PatternWitness { map };
    if !(PatternSpec::Broom { k, d: s }).build()?.verify(g, &broom) {
        return Err(counterexample("broom from the tall horn failed verification"));
    }
    let path = PathWitness(w.tail.clone());
    let nd = NondominationWitness { path: path.vertex_set(g.n()), x: w.b.clone() };
    if !path.verify(g, k) || !check_nondominating(cache, &nd, sigma)? {
        return Err(counterexample("nondominating path from the tall horn failed verification"));
    }
    Ok((broom, path, nd))
}

/// Runs the induction behind the sweep on `g`: descent to a critical
/// subgraph, the horn-or-broom step with `(δ₁(ω), ζ₁(ω))`, `k − 1` horn lifts
/// along `(δ_i, ζ_i)`, and extraction of the broom and nondominating path.
///
/// That `g` contains no `(ψ, q)`-scattering is assumed, not checked; if one
/// shows up it is returned as [`SweepOutcome::Scattering`].
pub fn sweep(g: &Graph, params: &SweepParameters, opts: &LemmaOptions) -> Result<SweepReport> {
    let table = sweep_polys(params)?;
    let c = choose_c(params, &table)?.c;
    let crit = if opts.assume_preconditions { g.induced(&g.vertices())? } else { critical_descent(g, c, opts.budget)? };
    let h = &crit.graph;
    let mut cache = cache_for(h, opts.budget);
    let w = cache.omega_value(&h.vertices())?;
    let at = |p: &Polynomial| eval_sat(p, w);
    let (d1, z1) = (at(table.delta(1)), at(table.zeta(1)));
    horn_or_broom_arithmetic(w, params.k, params.s, d1, z1, c, &params.sigma)?;
    let first = horn_or_broom_in(&mut cache, params.k, params.s, d1, z1, &params.sigma, opts)?;
    let lift_set = |s: &VertexSet| crit.lift(s, g.n());
    let lift_vec = |v: &[usize]| v.iter().map(|&u| crit.to_host[u]).collect::<Vec<_>>();
    let mut report = SweepReport {
        outcome: SweepOutcome::Scattering(ScatteringWitness {
            v: 0,
            p: VertexSet::empty(g.n()),
            q: VertexSet::empty(g.n()),
        }),
        c,
        critical: lift_set(&h.vertices()),
        via_horn: false,
        lift_rounds: 0,
    };
    let (broom, path, nd) = match first {
        HornOrBroom::BroomAndPath { broom, path, nondomination } => (broom, path, nondomination),
        HornOrBroom::Horn { witness, .. } => {
            report.via_horn = true;
            let schedule: Vec<(usize, usize)> =
                (1..=params.k).map(|i| (at(table.delta(i)), at(table.zeta(i)))).collect();
            match lift_chain(&mut cache, witness, &schedule, params, opts, &mut report.lift_rounds)? {
                Ok(found) => found,
                Err(sc) => {
                    report.outcome = SweepOutcome::Scattering(ScatteringWitness {
                        v: crit.to_host[sc.v],
                        p: lift_set(&sc.p),
                        q: lift_set(&sc.q),
                    });
                    return Ok(report);
                }
            }
        }
    };
    report.outcome = SweepOutcome::Found {
        broom: PatternWitness { map: lift_vec(&broom.map) },
        path: PathWitness(lift_vec(&path.0)),
        nondomination: NondominationWitness { path: lift_set(&nd.path), x: lift_set(&nd.x) },
    };
    Ok(report)
}

type Found = (PatternWitness, PathWitness, NondominationWitness);

/// Lifts `horn` through `schedule[0] → schedule[1] → ...` and finishes from
/// the last horn. The inner `Err` carries a scattering met on the way.
fn lift_chain(
    cache: &mut InvariantCache,
    mut horn: HornWitness,
    schedule: &[(usize, usize)],
    params: &SweepParameters,
    opts: &LemmaOptions,
    rounds: &mut usize,
) -> Result<std::result::Result<Found, ScatteringWitness>> {
    let g = cache.graph();
    for i in 1..schedule.len() {
        let inner = LemmaOptions { assume_preconditions: true, ..opts.clone() };
        match horn_lift(g, &horn, i, schedule[i - 1], schedule[i], params.q, &params.psi, &inner)? {
            HornLift::Scattering(sc) => {
                *rounds += 1;
                return Ok(Err(sc));
            }
            HornLift::TallerHorn { witness, .. } => {
                *rounds += 1;
                horn = witness;
            }
        }
    }
    Ok(Ok(finish_from_horn(cache, &horn, params.s, &params.sigma)?))
}

/// Runs the horn-lifting part of the sweep from a given 1-tall horn along a
/// caller-chosen schedule of `(d_i, z_i)` pairs, the last of which should be
/// `(0, z)`. Each step's arithmetic preconditions are checked by
/// [`horn_lift`]; `params.k` is ignored in favour of the schedule length.
pub fn sweep_from_horn(
    g: &Graph,
    horn: &HornWitness,
    schedule: &[(usize, usize)],
    params: &SweepParameters,
    opts: &LemmaOptions,
) -> Result<(SweepOutcome, usize)> {
    if schedule.is_empty() {
        return Err(Error::input("schedule must have at least one step"));
    }
    if !opts.assume_preconditions {
        let (d, z) = schedule[0];
        let check = verify_horn(g, horn, d, z, &opts.horn_mode(&horn.a, &horn.b))?;
        if !check.passed() {
            return Err(Error::precondition(format!("starting triple is not a ({d},{z})-horn: {check:?}")));
        }
    }
    let mut cache = cache_for(g, opts.budget);
    let mut rounds = 0;
    let out = match lift_chain(&mut cache, horn.clone(), schedule, params, opts, &mut rounds)? {
        Ok((broom, path, nondomination)) => SweepOutcome::Found { broom, path, nondomination },
        Err(sc) => SweepOutcome::Scattering(sc),
    };
    Ok((out, rounds))
}

/// Exhaustive search for a `(ψ, q)`-scattering.
///
/// For each `v`, tabulates χ and ω on `G[N(v)]` and on the non-neighbours,
/// lists the candidate `P ⊆ N(v)` with `χ(P) > ψ(ω(P))` and `Q` with
/// `χ(Q) > ψ(ω(Q))`, and checks each pair against `χ(Q) > qr + ψ(ω(Q))`.
/// Order: `v`, then `P`, then `Q` by increasing mask.
pub fn scattering_audit(g: &Graph, psi: &Polynomial, q: u64, cap: usize) -> Result<Option<ScatteringWitness>> {
    if g.n() > cap.min(TABLE_LIMIT + 1) {
        return Err(Error::resource(format!("scattering audit limited to {} vertices", cap.min(TABLE_LIMIT + 1))));
    }
    for v in 0..g.n() {
        let nv = g.nbrs(v);
        let mut far = g.vertices().difference(&nv);
        far.remove(v);
        if nv.is_empty() || far.is_empty() {
            continue;
        }
        let gp = g.induced(&nv)?;
        let tp = crate::invariants::SubsetTable::new(&gp.graph)?;
        let ps: Vec<u32> = (1..=tp.full_mask()).filter(|&m| tp.chi(m) > eval_sat(psi, tp.omega(m))).collect();
        if ps.is_empty() {
            continue;
        }
        let gq = g.induced(&far)?;
        let tq = crate::invariants::SubsetTable::new(&gq.graph)?;
        // Neighbourhood of each P-vertex inside the far side, as a local mask.
        let reach: Vec<u32> = gp
            .to_host
            .iter()
            .map(|&u| {
                gq.to_host.iter().enumerate().filter(|&(_, &x)| g.adjacent(u, x)).fold(0u32, |m, (j, _)| m | 1 << j)
            })
            .collect();
        let qs: Vec<(u32, usize)> = (1..=tq.full_mask())
            .filter_map(|m| {
                let base = eval_sat(psi, tq.omega(m));
                (tq.chi(m) > base).then_some((m, base))
            })
            .collect();
        for &pm in &ps {
            for &(qm, base) in &qs {
                let r = crate::invariants::mask_members(pm).map(|u| tq.chi(reach[u] & qm)).max().unwrap_or(0);
                if tq.chi(qm) > (q as usize).saturating_mul(r).saturating_add(base) {
                    let w = ScatteringWitness {
                        v,
                        p: gp.lift(&mask_to_set(gp.graph.n(), pm), g.n()),
                        q: gq.lift(&mask_to_set(gq.graph.n(), qm), g.n()),
                    };
                    if !check_scattering(&mut InvariantCache::new(g), &w, psi, q)? {
                        return Err(counterexample("audited scattering failed verification"));
                    }
                    return Ok(Some(w));
                }
            }
        }
    }
    Ok(None)
}

/// Exhaustive search for a σ-nondominating induced `k`-vertex path: some
/// induced path `P` and `X ⊆ V ∖ N[P]` with `χ(X) > σ(ω(X))`. The sets
/// `V ∖ N[P]` must fit the subset table.
///
/// Paths are enumerated from each start vertex in index order, extending by
/// increasing index; each path is reported from its smaller end.
pub fn nondominating_audit(
    g: &Graph,
    k: usize,
    sigma: &Polynomial,
) -> Result<Option<(PathWitness, NondominationWitness)>> {
    if k == 0 {
        return Err(Error::input("path length k must be at least 1"));
    }
    let mut seen = std::collections::HashMap::<Vec<u64>, Option<VertexSet>>::new();
    let mut found = None;
    let mut stack: Vec<Vec<usize>> = (0..g.n()).rev().map(|v| vec![v]).collect();
    while let Some(path) = stack.pop() {
        if path.len() < k {
            let last = *path.last().expect("nonempty");
            let mut allowed = g.nbrs(last);
            for &u in &path[..path.len() - 1] {
                allowed.subtract(&g.nbrs(u));
                allowed.remove(u);
            }
            allowed.remove(last);
            for u in allowed.iter().collect::<Vec<_>>().into_iter().rev() {
                let mut next = path.clone();
                next.push(u);
                stack.push(next);
            }
            continue;
        }
        if k >= 2 && path[0] > path[k - 1] {
            continue;
        }
        let pset = PathWitness(path.clone()).vertex_set(g.n());
        let rest = g.vertices().difference(&pset).difference(&g.boundary(&pset));
        let key = rest.words().to_vec();
        let hit = match seen.get(&key) {
            Some(h) => h.clone(),
            None => {
                let h = violating_subset(g, &rest, sigma)?;
                seen.insert(key, h.clone());
                h
            }
        };
        if let Some(x) = hit {
            found = Some((PathWitness(path), NondominationWitness { path: pset, x }));
            break;
        }
    }
    if let Some((_, w)) = &found {
        if !crate::structures::verify_nondominating(g, w, sigma)? {
            return Err(counterexample("audited nondominating path failed verification"));
        }
    }
    Ok(found)
}

/// Least mask `X ⊆ set` with `χ(X) > σ(ω(X))`.
fn violating_subset(g: &Graph, set: &VertexSet, sigma: &Polynomial) -> Result<Option<VertexSet>> {
    if set.len() > TABLE_LIMIT {
        return Err(Error::resource(format!("anticomplete remainder of {} vertices exceeds the table", set.len())));
    }
    let sub = g.induced(set)?;
    let t = crate::invariants::SubsetTable::new(&sub.graph)?;
    Ok((1..=t.full_mask())
        .find(|&m| t.chi(m) > eval_sat(sigma, t.omega(m)))
        .map(|m| sub.lift(&mask_to_set(sub.graph.n(), m), g.n())))
}

/// `is_unsplittable` with the default cap, re-exported for callers that want
/// the split itself.
pub fn find_unsplittable_violation(
    g: &Graph,
    d: usize,
    z: usize,
    w: usize,
) -> Result<Option<crate::structures::Split>> {
    is_unsplittable(g, d, z, w, UNSPLIT_CAP)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::generators::mycielski;

    fn set(n: usize, m: &[usize]) -> VertexSet {
        VertexSet::from_members(n, m.iter().copied()).unwrap()
    }

    #[test]
    fn ramsey_examples() {
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(ramsey_witness(&c5, 2, 2).unwrap(), RamseyOutcome::Stable(StableWitness(set(5, &[0, 2]))));
        let k9 = Graph::complete(9).unwrap();
        assert_eq!(ramsey_witness(&k9, 2, 3).unwrap(), RamseyOutcome::Clique(CliqueWitness(set(9, &[0, 1, 2]))));
        let e8 = Graph::empty(8).unwrap();
        assert_eq!(ramsey_witness(&e8, 2, 3).unwrap(), RamseyOutcome::Stable(StableWitness(set(8, &[0, 1, 2]))));
        assert!(matches!(ramsey_witness(&c5, 2, 3), Err(Error::Precondition(_))));
        assert!(matches!(ramsey_witness(&c5, 1, 1), Err(Error::Input(_))));
    }

    #[test]
    fn gyarfas_examples() {
        let p5 = Graph::path(5).unwrap();
        let h = set(5, &[1, 2, 3, 4]);
        let o = LemmaOptions::default();
        assert_eq!(gyarfas_path(&p5, 0, &h, 3, 1, &o).unwrap(), PathWitness(vec![0, 1, 2]));
        assert_eq!(gyarfas_path(&p5, 0, &h, 1, 1, &o).unwrap(), PathWitness(vec![0]));
        assert_eq!(gyarfas_path(&p5, 0, &h, 2, 1, &o).unwrap(), PathWitness(vec![0, 1]));
        assert_eq!(gyarfas_path(&p5, 0, &h, 5, 1, &o).map_err(|e| e.exit_code()), Err(2));
        let small = set(5, &[1, 2]);
        assert!(gyarfas_path(&p5, 0, &small, 3, 1, &o).is_ok());
    }

    #[test]
    fn nondominating_examples() {
        // Two far triangles; χ(N(v)) = 2 there, so x = 2.
        let g = Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        let o = LemmaOptions::default();
        let (p, w) = nondominating_path(&g, 1, 2, &Polynomial::zero(), &o).unwrap();
        assert_eq!(p, PathWitness(vec![0]));
        assert_eq!(w.x, set(6, &[3, 4, 5]));
        // With x = 1 the neighbourhood precondition fails.
        assert!(matches!(nondominating_path(&g, 1, 1, &Polynomial::zero(), &o), Err(Error::Precondition(_))));
        let grotzsch = mycielski(2).unwrap();
        let (p, w) = nondominating_path(&grotzsch, 2, 1, &Polynomial::zero(), &o).unwrap();
        assert!(p.verify(&grotzsch, 2));
        assert!(crate::structures::verify_nondominating(&grotzsch, &w, &Polynomial::zero()).unwrap());
        // K2 with k = 1, x = 1: preconditions hold but no nondominating vertex exists.
        let k2 = Graph::complete(2).unwrap();
        assert!(matches!(nondominating_path(&k2, 1, 1, &Polynomial::zero(), &o), Err(Error::Counterexample(_))));
    }

    #[test]
    fn broom_examples() {
        let o = LemmaOptions::default();
        // Triangle-free, so x = 1. Broom(1,1) needs χ > max(4, 5), broom(2,1) χ > 6.
        let m4 = mycielski(4).unwrap();
        let w = broom_finder(&m4, 1, 1, 1, &o).unwrap();
        assert_eq!(w.map.len(), 2);
        assert!(matches!(broom_finder(&m4, 2, 1, 1, &o), Err(Error::Precondition(_))));
        let m5 = mycielski(5).unwrap();
        let w = broom_finder(&m5, 3, 1, 1, &LemmaOptions::assuming()).unwrap();
        assert!(PatternSpec::Broom { k: 3, d: 1 }.build().unwrap().verify(&m5, &w));
        let m3 = mycielski(3).unwrap();
        assert!(matches!(broom_finder(&m3, 1, 1, 1, &o), Err(Error::Precondition(_))));
    }

    #[test]
    fn horn_or_broom_on_mycielski() {
        let m3 = mycielski(3).unwrap();
        let out = horn_or_broom(&m3, 1, 1, 0, 0, 2, &Polynomial::zero(), &LemmaOptions::default()).unwrap();
        match out {
            HornOrBroom::Horn { witness, check } => {
                assert_eq!(witness.tail, vec![witness.v]);
                assert!(check.passed());
            }
            HornOrBroom::BroomAndPath { .. } => panic!("χ(N(v)) = 1 > 0 forces the horn branch"),
        }
    }

    #[test]
    fn split_partition_examples() {
        let o = LemmaOptions::default();
        let k5 = Graph::complete(5).unwrap();
        let p = split_partition(&k5, 1, 0, &o).unwrap();
        assert_eq!(p.blocks, vec![set(5, &[]), set(5, &[0, 1, 2, 3, 4])]);
        let k22 = Graph::from_edges(4, [(0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        let p = split_partition(&k22, 0, 0, &o).unwrap();
        assert_eq!(p.k(), 2);
        assert!(crate::structures::verify_partition(&k22, &p, 0, 0).unwrap());
        let e = Graph::empty(0).unwrap();
        assert_eq!(split_partition(&e, 0, 0, &o).unwrap().k(), 0);
    }

    #[test]
    fn horn_lift_basic() {
        // v = 0 adjacent to a = 1; B = path 2-3-4 with a adjacent only to 2.
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        let w = HornWitness { v: 0, a: set(5, &[1]), b: set(5, &[2, 3, 4]), tail: vec![0] };
        let out = horn_lift(&g, &w, 1, (0, 0), (0, 0), 0, &Polynomial::zero(), &LemmaOptions::default()).unwrap();
        match out {
            HornLift::Scattering(sc) => {
                assert!(crate::structures::verify_scattering(&g, &sc, &Polynomial::zero(), 0).unwrap())
            }
            HornLift::TallerHorn { witness, .. } => assert!(verify_tall(&g, &witness, 2).unwrap()),
        }
    }

    #[test]
    fn audit_examples() {
        let e = Graph::empty(5).unwrap();
        assert_eq!(scattering_audit(&e, &Polynomial::zero(), 0, 16).unwrap(), None);
        let g = Graph::from_edges(5, [(0, 1), (2, 3), (3, 4), (2, 4)]).unwrap();
        let w = scattering_audit(&g, &Polynomial::zero(), 0, 16).unwrap().unwrap();
        assert!(crate::structures::verify_scattering(&g, &w, &Polynomial::zero(), 0).unwrap());
        assert_eq!(scattering_audit(&g, &Polynomial::constant(100), 0, 16).unwrap(), None);
    }

    #[test]
    fn nondominating_audit_examples() {
        // C5 plus a far C5: the path 0 leaves the second C5, which is imperfect.
        let g = Graph::from_edges(10, (0..5).flat_map(|i| [(i, (i + 1) % 5), (5 + i, 5 + (i + 1) % 5)])).unwrap();
        let (p, w) = nondominating_audit(&g, 3, &Polynomial::x()).unwrap().unwrap();
        assert_eq!(p, PathWitness(vec![0, 1, 2]));
        assert_eq!(w.x, set(10, &[5, 6, 7, 8, 9]));
        assert_eq!(nondominating_audit(&Graph::cycle(5).unwrap(), 2, &Polynomial::x()).unwrap(), None);
        assert!(nondominating_audit(&Graph::path(9).unwrap(), 4, &Polynomial::x()).unwrap().is_none());
    }

    #[test]
    fn sweep_small_k1() {
        let params = SweepParameters::new(1, 1, 0, Polynomial::zero(), Polynomial::zero()).unwrap();
        // Mycielski depth 2 (Grötzsch) has χ = 4 ≤ 8: precondition fails.
        assert!(sweep(&mycielski(2).unwrap(), &params, &LemmaOptions::default()).is_err());
    }
}
