//! Definition-level checkers for dense pairs, scatterings, nondominating
//! sets, horns, tallness, unsplittability and split partitions.
//!
//! Every checker recomputes χ and ω itself; nothing stored in a witness is
//! trusted beyond its vertex sets.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::invariants::{mask_members, Budget, InvariantCache, SubsetTable, TABLE_LIMIT};
use crate::polynomial::Polynomial;

/// Default cap on `|A ∪ B|` for exhaustive horn checks.
pub const HORN_CAP: usize = 14;
/// Default cap on `|V(G)|` for exhaustive unsplittability checks.
pub const UNSPLIT_CAP: usize = 12;

/// `(v, P, Q)` claimed to be a `(ψ, q)`-scattering.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScatteringWitness {
    pub v: usize,
    pub p: VertexSet,
    pub q: VertexSet,
}

/// `(v, A, B)` claimed to be a horn, with the path hanging off `v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HornWitness {
    pub v: usize,
    pub a: VertexSet,
    pub b: VertexSet,
    /// Induced path starting at `v`; its length is the tallness.
    pub tail: Vec<usize>,
}

/// Blocks `D_0, D_1, ..., D_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionWitness {
    pub blocks: Vec<VertexSet>,
}

impl PartitionWitness {
    /// `k`, the number of blocks after `D_0`.
    pub fn k(&self) -> usize {
        self.blocks.len().saturating_sub(1)
    }
}

/// A vertex set `V(P)` and a set `X` claimed anticomplete to it with large χ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NondominationWitness {
    pub path: VertexSet,
    pub x: VertexSet,
}

/// A partition `(A, B, Z)` showing that a graph is splittable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Split {
    pub a: VertexSet,
    pub b: VertexSet,
    pub z: VertexSet,
}

/// Outcome of a horn check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HornCheck {
    /// Every `Z` with `χ(Z) ≤ z` was examined.
    Verified,
    /// Structure and the supplied `Z` candidates passed; not exhaustive.
    SpotChecked,
    /// This `Z` has `χ(Z) ≤ z` and leaves `A∖Z` d-dense to `B∖Z`.
    Refuted(VertexSet),
    /// The triple is not even a candidate: overlap, or `v` wrongly attached.
    Malformed(String),
}

impl HornCheck {
    pub fn passed(&self) -> bool {
        matches!(self, HornCheck::Verified | HornCheck::SpotChecked)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HornMode {
    /// Enumerate every `Z ⊆ A ∪ B`; `cap` bounds `|A ∪ B|`.
    Exhaustive { cap: usize },
    /// Check only the listed deletion sets.
    Spot(Vec<VertexSet>),
}

/// `A` is d-dense to `B`: every `a ∈ A` has `χ(B ∖ N(a)) ≤ d`.
pub fn is_d_dense(g: &Graph, a: &VertexSet, b: &VertexSet, d: usize) -> Result<bool> {
    d_dense(&mut InvariantCache::new(g), a, b, d)
}

pub(crate) fn d_dense(cache: &mut InvariantCache, a: &VertexSet, b: &VertexSet, d: usize) -> Result<bool> {
    let g = cache.graph();
    let (a, b) = (g.coerce(a)?, g.coerce(b)?);
    if !a.is_disjoint(&b) {
        return Err(Error::input("dense-pair sets overlap"));
    }
    for u in a.iter() {
        if cache.chi_exceeds(&g.non_neighbors_in(u, &b), d)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Evaluates `ψ(w)` as a machine integer, saturating.
pub(crate) fn eval_sat(p: &Polynomial, w: usize) -> usize {
    p.eval_usize(w).unwrap_or(usize::MAX)
}

pub fn verify_scattering(g: &Graph, w: &ScatteringWitness, psi: &Polynomial, q: u64) -> Result<bool> {
    check_scattering(&mut InvariantCache::new(g), w, psi, q)
}

pub(crate) fn check_scattering(
    cache: &mut InvariantCache,
    w: &ScatteringWitness,
    psi: &Polynomial,
    q: u64,
) -> Result<bool> {
    let g = cache.graph();
    let (p, qs) = (g.coerce(&w.p)?, g.coerce(&w.q)?);
    if w.v >= g.n() || !p.is_disjoint(&qs) || p.contains(w.v) || qs.contains(w.v) {
        return Ok(false);
    }
    let nv = g.nbrs(w.v);
    if !p.is_subset(&nv) || !qs.is_disjoint(&nv) {
        return Ok(false);
    }
    let wp = cache.omega_value(&p)?;
    if !cache.chi_exceeds(&p, eval_sat(psi, wp))? {
        return Ok(false);
    }
    let mut r = 0;
    for u in p.iter() {
        r = r.max(cache.chi_value(&g.neighbors_in(u, &qs))?);
    }
    let wq = cache.omega_value(&qs)?;
    let need = (q as usize).saturating_mul(r).saturating_add(eval_sat(psi, wq));
    cache.chi_exceeds(&qs, need)
}

pub fn verify_nondominating(g: &Graph, w: &NondominationWitness, sigma: &Polynomial) -> Result<bool> {
    check_nondominating(&mut InvariantCache::new(g), w, sigma)
}

pub(crate) fn check_nondominating(
    cache: &mut InvariantCache,
    w: &NondominationWitness,
    sigma: &Polynomial,
) -> Result<bool> {
    let g = cache.graph();
    let (p, x) = (g.coerce(&w.path)?, g.coerce(&w.x)?);
    if !p.is_disjoint(&x) {
        return Err(Error::input("nondomination sets overlap"));
    }
    if p.iter().any(|u| g.has_neighbor_in(u, &x)) {
        return Ok(false);
    }
    let wx = cache.omega_value(&x)?;
    cache.chi_exceeds(&x, eval_sat(sigma, wx))
}

fn horn_shape(g: &Graph, w: &HornWitness) -> Result<Option<String>> {
    let (a, b) = (g.coerce(&w.a)?, g.coerce(&w.b)?);
    if w.v >= g.n() {
        return Ok(Some(format!("horn vertex {} out of range", w.v)));
    }
    if !a.is_disjoint(&b) {
        return Ok(Some("A and B overlap".into()));
    }
    if a.contains(w.v) || b.contains(w.v) {
        return Ok(Some("horn vertex lies in A ∪ B".into()));
    }
    let nv = g.nbrs(w.v);
    if !a.is_subset(&nv) {
        return Ok(Some("horn vertex is not complete to A".into()));
    }
    if !b.is_disjoint(&nv) {
        return Ok(Some("horn vertex is not anticomplete to B".into()));
    }
    Ok(None)
}

/// Checks that no `Z ⊆ A ∪ B` with `χ(Z) ≤ z` leaves `A∖Z` d-dense to `B∖Z`.
///
/// Exhaustive mode tabulates χ on `G[A ∪ B]` and examines every subset;
/// `Z = A` and `Z = B` are tried first so that the trivial refutations are
/// the ones reported.
pub fn verify_horn(g: &Graph, w: &HornWitness, d: usize, z: usize, mode: &HornMode) -> Result<HornCheck> {
    if let Some(why) = horn_shape(g, w)? {
        return Ok(HornCheck::Malformed(why));
    }
    let (a, b) = (g.coerce(&w.a)?, g.coerce(&w.b)?);
    match mode {
        HornMode::Exhaustive { cap } => {
            let ab = a.union(&b);
            let cap = (*cap).min(TABLE_LIMIT);
            if ab.len() > cap {
                return Err(Error::resource(format!(
                    "exhaustive horn check limited to |A ∪ B| ≤ {cap}, got {}",
                    ab.len()
                )));
            }
            let local = g.induced(&ab)?;
            let table = SubsetTable::new(&local.graph)?;
            let am = table.mask(&local.lower(&a));
            let bm = table.mask(&local.lower(&b));
            let refutes = |zm: u32| {
                table.chi(zm) <= z && mask_members(am & !zm).all(|u| table.chi(bm & !zm & !table.adjacency(u)) <= d)
            };
            let lift = |zm: u32| local.lift(&mask_set(local.graph.n(), zm), g.n());
            for zm in [am, bm].into_iter().chain(0..=table.full_mask()) {
                if refutes(zm) {
                    return Ok(HornCheck::Refuted(lift(zm)));
                }
            }
            Ok(HornCheck::Verified)
        }
        HornMode::Spot(candidates) => {
            let mut cache = InvariantCache::new(g);
            let ab = a.union(&b);
            for zs in candidates {
                let zs = g.coerce(zs)?;
                if !zs.is_subset(&ab) {
                    return Err(Error::input("spot candidate Z is not inside A ∪ B"));
                }
                if cache.chi_at_most(&zs, z)? && d_dense(&mut cache, &a.difference(&zs), &b.difference(&zs), d)? {
                    return Ok(HornCheck::Refuted(zs));
                }
            }
            Ok(HornCheck::SpotChecked)
        }
    }
}

fn mask_set(n: usize, m: u32) -> VertexSet {
    let mut s = VertexSet::empty(n);
    for v in mask_members(m) {
        s.insert(v);
    }
    s
}

/// The tail has `ℓ` vertices, starts at `v`, is an induced path, and apart
/// from `v` is disjoint from and anticomplete to `A ∪ B`.
pub fn verify_tall(g: &Graph, w: &HornWitness, l: usize) -> Result<bool> {
    let ab = g.coerce(&w.a)?.union(&g.coerce(&w.b)?);
    if w.tail.len() != l || w.tail.first() != Some(&w.v) || !g.is_induced_path(&w.tail) {
        return Ok(false);
    }
    Ok(w.tail[1..].iter().all(|&u| !ab.contains(u) && !g.has_neighbor_in(u, &ab)))
}

/// Searches all partitions `(A, B, Z)` of `V(g)` for one with `χ(Z) ≤ z`,
/// `χ(A), χ(B) > dω` and `A` d-dense to `B`.
///
/// `Z` runs over subsets in increasing mask order, then `A` over subsets of
/// the rest; the first split found is returned. Both orientations of each
/// `{A, B}` pair are examined because density is directional.
pub fn is_unsplittable(g: &Graph, d: usize, z: usize, omega: usize, cap: usize) -> Result<Option<Split>> {
    let cap = cap.min(TABLE_LIMIT);
    if g.n() > cap {
        return Err(Error::resource(format!(
            "exhaustive unsplittability limited to {cap} vertices, graph has {}",
            g.n()
        )));
    }
    let t = SubsetTable::new(g)?;
    Ok(find_split(&t, d, z, omega).map(|(a, b, zm)| Split {
        a: mask_set(g.n(), a),
        b: mask_set(g.n(), b),
        z: mask_set(g.n(), zm),
    }))
}

pub(crate) fn find_split(t: &SubsetTable, d: usize, z: usize, omega: usize) -> Option<(u32, u32, u32)> {
    let full = t.full_mask();
    let need = d.saturating_mul(omega);
    let mut zm: u32 = 0;
    loop {
        let rest = full & !zm;
        if t.chi(zm) <= z && t.chi(rest) > need {
            let mut a = rest;
            loop {
                let b = rest & !a;
                if t.chi(a) > need && t.chi(b) > need && mask_members(a).all(|u| t.chi(b & !t.adjacency(u)) <= d) {
                    return Some((a, b, zm));
                }
                if a == 0 {
                    break;
                }
                a = (a - 1) & rest;
            }
        }
        if zm == full {
            return None;
        }
        zm += 1;
    }
}

/// Checks `k ≤ ω(G)`, `χ(D_0) ≤ zω(G)` and that each `G[D_i]` is
/// `(d, z, ω(G))`-unsplittable.
pub fn verify_partition(g: &Graph, w: &PartitionWitness, d: usize, z: usize) -> Result<bool> {
    verify_partition_with_omega(g, w, d, z, None)
}

/// As [`verify_partition`], with `ω` supplied instead of `ω(G)`.
pub fn verify_partition_with_omega(
    g: &Graph,
    w: &PartitionWitness,
    d: usize,
    z: usize,
    omega: Option<usize>,
) -> Result<bool> {
    if w.blocks.is_empty() {
        return Ok(g.n() == 0);
    }
    let mut seen = VertexSet::empty(g.n());
    for blk in &w.blocks {
        let blk = g.coerce(blk)?;
        if !seen.is_disjoint(&blk) {
            return Ok(false);
        }
        seen.union_with(&blk);
    }
    if seen.len() != g.n() {
        return Ok(false);
    }
    let mut cache = InvariantCache::new(g);
    let om = match omega {
        Some(o) => o,
        None => cache.omega_value(&g.vertices())?,
    };
    if w.k() > om || cache.chi_exceeds(&w.blocks[0], z.saturating_mul(om))? {
        return Ok(false);
    }
    for blk in &w.blocks[1..] {
        let sub = g.induced(blk)?;
        if is_unsplittable(&sub.graph, d, z, om, UNSPLIT_CAP)?.is_some() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Any witness, for the line-oriented text form.
///
/// Each witness is a block of lines: `kind <name>`, `n <host order>`, then
/// one line per field holding the field name and its members separated by
/// spaces. Set fields are sorted; `tail` and `map` keep their order.
/// Blocks are separated by blank lines.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    Scattering(ScatteringWitness),
    Horn(HornWitness),
    Partition(PartitionWitness),
    Nondomination(NondominationWitness),
    Pattern(crate::patterns::PatternWitness),
    Clique(VertexSet),
    Stable(VertexSet),
    Path(Vec<usize>),
}

fn write_list<I: IntoIterator<Item = usize>>(f: &mut fmt::Formatter<'_>, name: &str, it: I) -> fmt::Result {
    write!(f, "{name}")?;
    for v in it {
        write!(f, " {v}")?;
    }
    writeln!(f)
}

impl Witness {
    fn universe(&self) -> usize {
        match self {
            Witness::Scattering(w) => w.p.universe(),
            Witness::Horn(w) => w.a.universe(),
            Witness::Partition(w) => w.blocks.first().map_or(0, |b| b.universe()),
            Witness::Nondomination(w) => w.x.universe(),
            Witness::Clique(s) | Witness::Stable(s) => s.universe(),
            Witness::Pattern(w) => w.map.iter().max().map_or(0, |m| m + 1),
            Witness::Path(p) => p.iter().max().map_or(0, |m| m + 1),
        }
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match self {
            Witness::Scattering(_) => "scattering",
            Witness::Horn(_) => "horn",
            Witness::Partition(_) => "partition",
            Witness::Nondomination(_) => "nondomination",
            Witness::Pattern(_) => "pattern",
            Witness::Clique(_) => "clique",
            Witness::Stable(_) => "stable",
            Witness::Path(_) => "path",
        };
        writeln!(f, "kind {kind}")?;
        writeln!(f, "n {}", self.universe())?;
        match self {
            Witness::Scattering(w) => {
                writeln!(f, "v {}", w.v)?;
                write_list(f, "P", w.p.iter())?;
                write_list(f, "Q", w.q.iter())
            }
            Witness::Horn(w) => {
                writeln!(f, "v {}", w.v)?;
                write_list(f, "A", w.a.iter())?;
                write_list(f, "B", w.b.iter())?;
                write_list(f, "tail", w.tail.iter().copied())
            }
            Witness::Partition(w) => {
                for (i, b) in w.blocks.iter().enumerate() {
                    write_list(f, &format!("D{i}"), b.iter())?;
                }
                Ok(())
            }
            Witness::Nondomination(w) => {
                write_list(f, "P", w.path.iter())?;
                write_list(f, "X", w.x.iter())
            }
            Witness::Pattern(w) => write_list(f, "map", w.map.iter().copied()),
            Witness::Clique(s) | Witness::Stable(s) => write_list(f, "S", s.iter()),
            Witness::Path(p) => write_list(f, "path", p.iter().copied()),
        }
    }
}

struct Lines<'a> {
    lines: Vec<(usize, &'a str)>,
    pos: usize,
    end: usize,
}

impl<'a> Lines<'a> {
    fn field(&mut self, name: &str) -> Result<(usize, Vec<usize>)> {
        let Some(&(off, line)) = self.lines.get(self.pos) else {
            return Err(Error::parse(self.end, format!("missing `{name}` line")));
        };
        let mut parts = line.split(' ');
        if parts.next() != Some(name) {
            return Err(Error::parse(off, format!("expected `{name}` line")));
        }
        let mut vals = Vec::new();
        let mut col = name.len() + 1;
        for p in parts {
            vals.push(p.parse::<usize>().map_err(|_| Error::parse(off + col, format!("bad vertex `{p}`")))?);
            col += p.len() + 1;
        }
        self.pos += 1;
        Ok((off, vals))
    }

    fn single(&mut self, name: &str) -> Result<usize> {
        let (off, v) = self.field(name)?;
        match v.as_slice() {
            [x] => Ok(*x),
            _ => Err(Error::parse(off, format!("`{name}` takes exactly one value"))),
        }
    }

    fn set(&mut self, name: &str, n: usize) -> Result<VertexSet> {
        let (off, v) = self.field(name)?;
        if v.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::parse(off, format!("`{name}` must list vertices in increasing order")));
        }
        VertexSet::from_members(n, v).map_err(|e| Error::parse(off, e))
    }

    fn list(&mut self, name: &str, n: usize) -> Result<Vec<usize>> {
        let (off, v) = self.field(name)?;
        if v.iter().any(|&x| x >= n) {
            return Err(Error::parse(off, format!("`{name}` has a vertex out of range")));
        }
        Ok(v)
    }
}

impl FromStr for Witness {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut all = parse_witnesses(s)?;
        match all.len() {
            1 => Ok(all.pop().unwrap()),
            k => Err(Error::parse(0, format!("expected one witness, found {k}"))),
        }
    }
}

/// Parses blank-line separated witness blocks. Lines starting with `#` are
/// comments and are skipped.
pub fn parse_witnesses(text: &str) -> Result<Vec<Witness>> {
    let mut blocks: Vec<Vec<(usize, &str)>> = vec![Vec::new()];
    let mut off = 0;
    for line in text.split_inclusive('\n') {
        let body = line.trim_end_matches('\n');
        if body.starts_with('#') {
            off += line.len();
            continue;
        }
        if body.is_empty() {
            if !blocks.last().unwrap().is_empty() {
                blocks.push(Vec::new());
            }
        } else {
            blocks.last_mut().unwrap().push((off, body));
        }
        off += line.len();
    }
    blocks.into_iter().filter(|b| !b.is_empty()).map(|b| parse_block(Lines { lines: b, pos: 0, end: off })).collect()
}

fn parse_block(mut ls: Lines) -> Result<Witness> {
    let (off, kind) = ls.lines[0];
    let kind = kind.strip_prefix("kind ").ok_or_else(|| Error::parse(off, "expected `kind` line"))?;
    ls.pos = 1;
    let n = ls.single("n")?;
    let w = match kind {
        "scattering" => {
            Witness::Scattering(ScatteringWitness { v: ls.single("v")?, p: ls.set("P", n)?, q: ls.set("Q", n)? })
        }
        "horn" => Witness::Horn(HornWitness {
            v: ls.single("v")?,
            a: ls.set("A", n)?,
            b: ls.set("B", n)?,
            tail: ls.list("tail", n)?,
        }),
        "partition" => {
            let mut blocks = Vec::new();
            while ls.pos < ls.lines.len() {
                blocks.push(ls.set(&format!("D{}", blocks.len()), n)?);
            }
            Witness::Partition(PartitionWitness { blocks })
        }
        "nondomination" => Witness::Nondomination(NondominationWitness { path: ls.set("P", n)?, x: ls.set("X", n)? }),
        "pattern" => Witness::Pattern(crate::patterns::PatternWitness { map: ls.list("map", n)? }),
        "clique" => Witness::Clique(ls.set("S", n)?),
        "stable" => Witness::Stable(ls.set("S", n)?),
        "path" => Witness::Path(ls.list("path", n)?),
        other => return Err(Error::parse(off + 5, format!("unknown witness kind `{other}`"))),
    };
    if let Some(&(o, _)) = ls.lines.get(ls.pos) {
        return Err(Error::parse(o, "unexpected extra line in witness"));
    }
    if w.universe() > n {
        return Err(Error::parse(off, "witness refers to vertices beyond n"));
    }
    Ok(w)
}

/// Emits witnesses separated by blank lines.
pub fn emit_witnesses(ws: &[Witness]) -> String {
    ws.iter().map(|w| w.to_string()).collect::<Vec<_>>().join("\n")
}

/// Budget-aware cache constructor used by lemma code: tabulates small graphs.
pub(crate) fn cache_for(g: &Graph, budget: Budget) -> InvariantCache<'_> {
    if g.n() <= TABLE_LIMIT {
        InvariantCache::tabulated(g, budget)
    } else {
        InvariantCache::with_budget(g, budget)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(n: usize, m: &[usize]) -> VertexSet {
        VertexSet::from_members(n, m.iter().copied()).unwrap()
    }

    /// Edge `v=0, p=1` and a triangle `{2,3,4}` elsewhere.
    fn scattering_graph() -> Graph {
        Graph::from_edges(5, [(0, 1), (2, 3), (3, 4), (2, 4)]).unwrap()
    }

    #[test]
    fn dense_pairs() {
        let g = Graph::from_edges(4, [(1, 2), (2, 3), (1, 3)]).unwrap();
        let a = set(4, &[0]);
        let b = set(4, &[1, 2, 3]);
        assert!(!is_d_dense(&g, &a, &b, 0).unwrap());
        assert!(is_d_dense(&g, &a, &b, 3).unwrap());
        assert!(is_d_dense(&g, &set(4, &[]), &b, 0).unwrap());
        let k4 = Graph::complete(4).unwrap();
        assert!(is_d_dense(&k4, &set(4, &[0, 1]), &set(4, &[2, 3]), 0).unwrap());
        assert!(is_d_dense(&g, &b, &b, 0).is_err());
    }

    #[test]
    fn scatterings() {
        let g = scattering_graph();
        let w = ScatteringWitness { v: 0, p: set(5, &[1]), q: set(5, &[2, 3, 4]) };
        assert!(verify_scattering(&g, &w, &Polynomial::zero(), 0).unwrap());
        assert!(!verify_scattering(&g, &w, &Polynomial::x(), 0).unwrap());
        let g2 = Graph::from_edges(5, [(0, 1), (2, 3), (3, 4), (2, 4), (1, 2)]).unwrap();
        assert!(verify_scattering(&g2, &w, &Polynomial::zero(), 1).unwrap());
        assert!(!verify_scattering(&g2, &w, &Polynomial::zero(), 3).unwrap());
        let bad = ScatteringWitness { v: 2, p: set(5, &[1]), q: set(5, &[3, 4]) };
        assert!(!verify_scattering(&g, &bad, &Polynomial::zero(), 0).unwrap());
    }

    #[test]
    fn nondomination() {
        let g = scattering_graph();
        let w = NondominationWitness { path: set(5, &[0, 1]), x: set(5, &[2, 3, 4]) };
        assert!(verify_nondominating(&g, &w, &Polynomial::zero()).unwrap());
        // A triangle has ω = 3, so 3 > σ(3) fails for σ = x; a far C5 passes.
        assert!(!verify_nondominating(&g, &w, &Polynomial::x()).unwrap());
        let c5 = Graph::from_edges(7, [(0, 1), (2, 3), (3, 4), (4, 5), (5, 6), (6, 2)]).unwrap();
        let w5 = NondominationWitness { path: set(7, &[0, 1]), x: set(7, &[2, 3, 4, 5, 6]) };
        assert!(verify_nondominating(&c5, &w5, &Polynomial::x()).unwrap());
        let empty = NondominationWitness { path: set(5, &[0]), x: set(5, &[]) };
        assert!(!verify_nondominating(&g, &empty, &Polynomial::zero()).unwrap());
    }

    #[test]
    fn trivial_horn_refutations() {
        // v = 0 adjacent to 1, 2; B = {3, 4} an edge.
        let g = Graph::from_edges(5, [(0, 1), (0, 2), (3, 4), (1, 3)]).unwrap();
        let w = HornWitness { v: 0, a: set(5, &[1, 2]), b: set(5, &[3, 4]), tail: vec![0] };
        let ex = HornMode::Exhaustive { cap: HORN_CAP };
        assert_eq!(verify_horn(&g, &w, 0, 1, &ex).unwrap(), HornCheck::Refuted(set(5, &[1, 2])));
        let w2 = HornWitness { v: 0, a: set(5, &[1, 2]), b: set(5, &[3]), tail: vec![0] };
        assert_eq!(verify_horn(&g, &w2, 5, 0, &ex).unwrap(), HornCheck::Refuted(set(5, &[])));
        let bad = HornWitness { v: 0, a: set(5, &[1, 3]), b: set(5, &[4]), tail: vec![0] };
        assert!(matches!(verify_horn(&g, &bad, 0, 0, &ex).unwrap(), HornCheck::Malformed(_)));
    }

    #[test]
    fn genuine_horn() {
        // v = 0 complete to the triangle A = {1,2,3}, B = triangle {4,5,6}
        // with no edges between A and B: removing χ ≤ 1 keeps both sides
        // non-empty, and every a misses all of B, which has χ ≥ 2 > 1 = d.
        let g = Graph::from_edges(7, [(0, 1), (0, 2), (0, 3), (1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6)]).unwrap();
        let w = HornWitness { v: 0, a: set(7, &[1, 2, 3]), b: set(7, &[4, 5, 6]), tail: vec![0] };
        assert_eq!(verify_horn(&g, &w, 1, 1, &HornMode::Exhaustive { cap: HORN_CAP }).unwrap(), HornCheck::Verified);
        assert!(matches!(
            verify_horn(&g, &w, 1, 3, &HornMode::Exhaustive { cap: HORN_CAP }).unwrap(),
            HornCheck::Refuted(_)
        ));
        assert_eq!(verify_horn(&g, &w, 1, 1, &HornMode::Spot(vec![set(7, &[4])])).unwrap(), HornCheck::SpotChecked);
        assert!(verify_horn(&g, &w, 1, 1, &HornMode::Exhaustive { cap: 3 }).is_err());
    }

    #[test]
    fn tallness() {
        // Path 5-6-0 hangs off v = 0; A = {1}, B = {2}.
        let g = Graph::from_edges(7, [(0, 1), (0, 6), (5, 6)]).unwrap();
        let mut w = HornWitness { v: 0, a: set(7, &[1]), b: set(7, &[2]), tail: vec![0] };
        assert!(verify_tall(&g, &w, 1).unwrap());
        w.tail = vec![0, 6, 5];
        assert!(verify_tall(&g, &w, 3).unwrap());
        assert!(!verify_tall(&g, &w, 2).unwrap());
        let chord = Graph::from_edges(7, [(0, 1), (0, 6), (5, 6), (0, 5)]).unwrap();
        assert!(!verify_tall(&chord, &w, 3).unwrap());
        let into_b = Graph::from_edges(7, [(0, 1), (0, 6), (5, 6), (5, 2)]).unwrap();
        assert!(!verify_tall(&into_b, &w, 3).unwrap());
    }

    #[test]
    fn unsplittable_examples() {
        for n in 1..=6 {
            let k = Graph::complete(n).unwrap();
            assert_eq!(is_unsplittable(&k, 1, n - 1, n, UNSPLIT_CAP).unwrap(), None);
        }
        let e = Graph::empty(4).unwrap();
        assert_eq!(is_unsplittable(&e, 0, 0, 1, UNSPLIT_CAP).unwrap(), None);
        // Two disjoint edges each complete to nothing: A = one edge, B = other.
        let k22 = Graph::from_edges(4, [(0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        let s = is_unsplittable(&k22, 0, 0, 1, UNSPLIT_CAP).unwrap().unwrap();
        assert_eq!((s.a.len(), s.b.len(), s.z.len()), (2, 2, 0));
        assert!(is_unsplittable(&Graph::empty(13).unwrap(), 0, 0, 1, UNSPLIT_CAP).is_err());
    }

    #[test]
    fn partitions() {
        let k4 = Graph::complete(4).unwrap();
        let w = PartitionWitness { blocks: vec![set(4, &[]), set(4, &[0, 1, 2, 3])] };
        assert!(verify_partition(&k4, &w, 1, 0).unwrap());
        let e = Graph::empty(3).unwrap();
        let many = PartitionWitness { blocks: vec![set(3, &[]), set(3, &[0]), set(3, &[1]), set(3, &[2])] };
        assert!(!verify_partition(&e, &many, 0, 0).unwrap());
        let gap = PartitionWitness { blocks: vec![set(4, &[]), set(4, &[0, 1, 2])] };
        assert!(!verify_partition(&k4, &gap, 1, 0).unwrap());
    }

    #[test]
    fn witness_text_round_trip() {
        let ws = vec![
            Witness::Horn(HornWitness { v: 0, a: set(7, &[1, 2]), b: set(7, &[4]), tail: vec![0, 6, 5] }),
            Witness::Scattering(ScatteringWitness { v: 3, p: set(7, &[]), q: set(7, &[1, 6]) }),
            Witness::Partition(PartitionWitness { blocks: vec![set(7, &[]), set(7, &[0, 1, 2, 3, 4, 5, 6])] }),
            Witness::Nondomination(NondominationWitness { path: set(7, &[0]), x: set(7, &[2, 3]) }),
            Witness::Pattern(crate::patterns::PatternWitness { map: vec![4, 2, 6] }),
            Witness::Clique(set(7, &[1, 2])),
            Witness::Path(vec![3, 1]),
        ];
        let text = emit_witnesses(&ws);
        assert!(text.starts_with("kind horn\nn 7\nv 0\nA 1 2\nB 4\ntail 0 6 5\n"));
        let back = parse_witnesses(&text).unwrap();
        assert_eq!(back, ws);
        assert_eq!(emit_witnesses(&back), text);
        assert!(matches!(
            "kind horn\nn 3\nv 0\nA 2 1\nB\ntail 0\n".parse::<Witness>(),
            Err(Error::Parse { offset: 18, .. })
        ));
        assert!("kind nope\nn 1\n".parse::<Witness>().is_err());
        assert!("kind path\nn 2\npath 0 5\n".parse::<Witness>().is_err());
    }
}
