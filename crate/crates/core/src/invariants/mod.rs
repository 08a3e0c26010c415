//! Exact clique number, chromatic number and stability number, with witnesses.
//!
//! χ and ω of the empty set are both 0. χ is decided by DSATUR
//! branch-and-bound between the clique lower bound and the DSATUR upper
//! bound; a node budget turns runaway instances into [`Error::Resource`]
//! rather than a guessed answer. ω uses a lexicographic branch-and-bound with
//! a greedy-colouring bound, so the returned clique is the lexicographically
//! least maximum clique.

mod clique;
mod coloring;
mod table;

use std::collections::HashMap;

pub(crate) use table::mask_members;
pub use table::{SubsetTable, TABLE_LIMIT};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Work limit for one exact colouring search, in search-tree nodes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    pub nodes: u64,
}

impl Budget {
    pub const DEFAULT_NODES: u64 = 20_000_000;

    /// Reads `CHIBOUND_BUDGET` when set, else [`Budget::DEFAULT_NODES`].
    pub fn from_env() -> Self {
        let nodes =
            std::env::var("CHIBOUND_BUDGET").ok().and_then(|s| s.trim().parse().ok()).unwrap_or(Self::DEFAULT_NODES);
        Budget { nodes }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::from_env()
    }
}

/// A proper colouring of some vertex subset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coloring {
    palette: usize,
    colors: Vec<Option<usize>>,
}

impl Coloring {
    pub fn palette(&self) -> usize {
        self.palette
    }

    pub fn color_of(&self, v: usize) -> Option<usize> {
        self.colors.get(v).copied().flatten()
    }

    pub fn colored(&self) -> VertexSet {
        let members = self.colors.iter().enumerate().filter(|(_, c)| c.is_some()).map(|(v, _)| v);
        VertexSet::from_members(self.colors.len(), members).expect("indices are in range")
    }

    /// Colour classes, indexed by colour.
    pub fn classes(&self) -> Vec<VertexSet> {
        let mut out = vec![VertexSet::empty(self.colors.len()); self.palette];
        for (v, c) in self.colors.iter().enumerate() {
            if let Some(c) = c {
                out[*c].insert(v);
            }
        }
        out
    }

    /// Adjacent coloured vertices differ and exactly `palette` colours occur.
    pub fn is_proper(&self, g: &Graph) -> bool {
        if self.colors.len() != g.n() {
            return false;
        }
        let proper = g.edges().all(|(u, v)| match (self.colors[u], self.colors[v]) {
            (Some(a), Some(b)) => a != b,
            _ => true,
        });
        let mut used = vec![false; self.palette];
        for c in self.colors.iter().flatten() {
            if *c >= self.palette {
                return false;
            }
            used[*c] = true;
        }
        proper && used.into_iter().all(|u| u)
    }

    fn from_local(host_n: usize, to_host: &[usize], local: &[usize]) -> Coloring {
        let (palette, normal) = coloring::normalize(local);
        let mut colors = vec![None; host_n];
        for (i, &c) in normal.iter().enumerate() {
            colors[to_host[i]] = Some(c);
        }
        Coloring { palette, colors }
    }
}

/// A set of pairwise adjacent vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueWitness(pub VertexSet);

/// A set of pairwise nonadjacent vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StableWitness(pub VertexSet);

impl CliqueWitness {
    pub fn verify(&self, g: &Graph) -> bool {
        let v = self.0.to_vec();
        v.iter().all(|&a| a < g.n()) && v.iter().enumerate().all(|(i, &a)| v[i + 1..].iter().all(|&b| g.adjacent(a, b)))
    }
}

impl StableWitness {
    pub fn verify(&self, g: &Graph) -> bool {
        let v = self.0.to_vec();
        v.iter().all(|&a| a < g.n())
            && v.iter().enumerate().all(|(i, &a)| v[i + 1..].iter().all(|&b| !g.adjacent(a, b)))
    }
}

/// ω(G[x]) and the lexicographically least maximum clique.
pub fn omega(g: &Graph, x: &VertexSet) -> Result<(usize, CliqueWitness)> {
    let x = g.coerce(x)?;
    let best = clique::max_clique(g, &x);
    let w = VertexSet::from_members(g.n(), best)?;
    Ok((w.len(), CliqueWitness(w)))
}

/// α(G[x]) and the lexicographically least maximum stable set.
pub fn max_stable(g: &Graph, x: &VertexSet) -> Result<(usize, StableWitness)> {
    let x = g.coerce(x)?;
    let (k, CliqueWitness(w)) = omega(&g.complement(), &x)?;
    Ok((k, StableWitness(w)))
}

/// χ(G[x]) with an optimal colouring, using the default budget.
pub fn chi(g: &Graph, x: &VertexSet) -> Result<(usize, Coloring)> {
    chi_with_budget(g, x, &Budget::default())
}

pub fn chi_with_budget(g: &Graph, x: &VertexSet, budget: &Budget) -> Result<(usize, Coloring)> {
    let x = g.coerce(x)?;
    let local = g.induced(&x)?;
    let col = exact_coloring(&local.graph, budget)?;
    let c = Coloring::from_local(g.n(), &local.to_host, &col);
    Ok((c.palette(), c))
}

/// Largest χ(N(v)) over all vertices; 0 for edgeless graphs.
pub fn chi_of_neighborhood_max(g: &Graph) -> Result<usize> {
    let mut cache = InvariantCache::new(g);
    let mut best = 0;
    for v in 0..g.n() {
        best = best.max(cache.chi_value(&g.nbrs(v))?);
    }
    Ok(best)
}

fn exact_coloring(local: &Graph, budget: &Budget) -> Result<Vec<usize>> {
    let n = local.n();
    if n == 0 {
        return Ok(Vec::new());
    }
    let seed = clique::max_clique(local, &local.vertices());
    let upper = coloring::dsatur_greedy(local);
    let ub = coloring::normalize(&upper).0;
    for k in seed.len()..ub {
        if let Some(col) = coloring::k_coloring(local, k, &seed, budget)? {
            return Ok(col);
        }
    }
    Ok(upper)
}

/// `χ(local) <= t`, decided without computing χ exactly when bounds suffice.
fn colorable_within(local: &Graph, t: usize, budget: &Budget) -> Result<bool> {
    let n = local.n();
    if t >= n {
        return Ok(true);
    }
    if t == 0 {
        return Ok(false);
    }
    if t == 1 {
        return Ok(local.edge_count() == 0);
    }
    let ub = coloring::normalize(&coloring::dsatur_greedy(local)).0;
    if ub <= t {
        return Ok(true);
    }
    let seed = clique::max_clique(local, &local.vertices());
    if seed.len() > t {
        return Ok(false);
    }
    Ok(coloring::k_coloring(local, t, &seed, budget)?.is_some())
}

/// Memoised χ and ω queries on subsets of one fixed graph.
///
/// Graphs with at most [`TABLE_LIMIT`] vertices may carry a [`SubsetTable`];
/// queries are then table lookups. Otherwise values are computed on demand
/// and remembered per subset. Cached values always equal recomputed ones.
pub struct InvariantCache<'g> {
    graph: &'g Graph,
    budget: Budget,
    chi: HashMap<VertexSet, usize>,
    omega: HashMap<VertexSet, usize>,
    table: Option<SubsetTable>,
}

impl<'g> InvariantCache<'g> {
    pub fn new(graph: &'g Graph) -> Self {
        Self::with_budget(graph, Budget::default())
    }

    pub fn with_budget(graph: &'g Graph, budget: Budget) -> Self {
        InvariantCache { graph, budget, chi: HashMap::new(), omega: HashMap::new(), table: None }
    }

    /// Builds the full subset table when the graph is small enough.
    pub fn tabulated(graph: &'g Graph, budget: Budget) -> Self {
        let mut c = Self::with_budget(graph, budget);
        c.table = SubsetTable::new(graph).ok();
        c
    }

    pub fn graph(&self) -> &'g Graph {
        self.graph
    }

    pub fn budget(&self) -> Budget {
        self.budget
    }

    pub fn table(&self) -> Option<&SubsetTable> {
        self.table.as_ref()
    }

    pub fn clear(&mut self) {
        self.chi.clear();
        self.omega.clear();
    }

    fn key(&self, x: &VertexSet) -> Result<VertexSet> {
        self.graph.coerce(x)
    }

    pub fn chi_value(&mut self, x: &VertexSet) -> Result<usize> {
        let x = self.key(x)?;
        if let Some(t) = &self.table {
            return Ok(t.chi(t.mask(&x)));
        }
        if let Some(&c) = self.chi.get(&x) {
            return Ok(c);
        }
        let c = match x.len() {
            0 => 0,
            1 => 1,
            _ => {
                let local = self.graph.induced(&x)?;
                if local.graph.edge_count() == 0 {
                    1
                } else {
                    coloring::normalize(&exact_coloring(&local.graph, &self.budget)?).0
                }
            }
        };
        self.chi.insert(x, c);
        Ok(c)
    }

    pub fn chi(&mut self, x: &VertexSet) -> Result<(usize, Coloring)> {
        let x = self.key(x)?;
        if let Some(t) = &self.table {
            let mut colors = vec![None; self.graph.n()];
            for (v, c) in t.coloring(t.mask(&x)) {
                colors[v] = Some(c);
            }
            let local: Vec<usize> = x.iter().map(|v| colors[v].unwrap()).collect();
            let c = Coloring::from_local(self.graph.n(), &x.to_vec(), &local);
            return Ok((c.palette(), c));
        }
        let (k, c) = chi_with_budget(self.graph, &x, &self.budget)?;
        self.chi.insert(x, k);
        Ok((k, c))
    }

    pub fn omega_value(&mut self, x: &VertexSet) -> Result<usize> {
        let x = self.key(x)?;
        if let Some(t) = &self.table {
            return Ok(t.omega(t.mask(&x)));
        }
        if let Some(&w) = self.omega.get(&x) {
            return Ok(w);
        }
        let w = clique::max_clique(self.graph, &x).len();
        self.omega.insert(x, w);
        Ok(w)
    }

    /// `χ(x) <= t`.
    pub fn chi_at_most(&mut self, x: &VertexSet, t: usize) -> Result<bool> {
        let x = self.key(x)?;
        if let Some(tb) = &self.table {
            return Ok(tb.chi(tb.mask(&x)) <= t);
        }
        if let Some(&c) = self.chi.get(&x) {
            return Ok(c <= t);
        }
        if t >= x.len() {
            return Ok(true);
        }
        let local = self.graph.induced(&x)?;
        colorable_within(&local.graph, t, &self.budget)
    }

    /// `χ(x) > t`.
    pub fn chi_exceeds(&mut self, x: &VertexSet, t: usize) -> Result<bool> {
        Ok(!self.chi_at_most(x, t)?)
    }

    /// Compares exact χ values of two sets: `χ(a) > χ(b)` as an ordering.
    pub fn chi_cmp(&mut self, a: &VertexSet, b: &VertexSet) -> Result<std::cmp::Ordering> {
        Ok(self.chi_value(a)?.cmp(&self.chi_value(b)?))
    }
}

/// Checks a colouring count against the budget-free definition; used by tests.
pub fn check_coloring(g: &Graph, x: &VertexSet, c: &Coloring) -> Result<()> {
    if !c.is_proper(g) || c.colored() != g.coerce(x)? {
        return Err(Error::Counterexample("colouring is not a proper colouring of the set".into()));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::generators::mycielski;

    fn all(g: &Graph) -> VertexSet {
        g.vertices()
    }

    #[test]
    fn omega_examples() {
        let k5 = Graph::complete(5).unwrap();
        assert_eq!(omega(&k5, &all(&k5)).unwrap().0, 5);
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(omega(&c5, &all(&c5)).unwrap().0, 2);
        let fan = Graph::path(3).unwrap().cone().unwrap();
        let (w, wit) = omega(&fan, &all(&fan)).unwrap();
        assert_eq!(w, 3);
        assert!(wit.verify(&fan));
        assert_eq!(omega(&c5, &VertexSet::empty(5)).unwrap().0, 0);
    }

    #[test]
    fn chi_examples() {
        let c5 = Graph::cycle(5).unwrap();
        let (k, col) = chi(&c5, &all(&c5)).unwrap();
        assert_eq!(k, 3);
        check_coloring(&c5, &all(&c5), &col).unwrap();
        for n in 0..7 {
            let kn = Graph::complete(n).unwrap();
            assert_eq!(chi(&kn, &all(&kn)).unwrap().0, n);
        }
        let grotzsch = mycielski(2).unwrap();
        assert_eq!(grotzsch.n(), 11);
        let (k, col) = chi(&grotzsch, &all(&grotzsch)).unwrap();
        assert_eq!(k, 4);
        check_coloring(&grotzsch, &all(&grotzsch), &col).unwrap();
    }

    #[test]
    fn stable_examples() {
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(max_stable(&c5, &all(&c5)).unwrap().0, 2);
        let e = Graph::empty(6).unwrap();
        assert_eq!(max_stable(&e, &all(&e)).unwrap().0, 6);
        let p4 = Graph::path(4).unwrap();
        let (a, w) = max_stable(&p4, &all(&p4)).unwrap();
        assert_eq!(a, 2);
        assert_eq!(w.0.to_vec(), vec![0, 2]);
        assert!(w.verify(&p4));
    }

    #[test]
    fn neighbourhood_chi() {
        assert_eq!(chi_of_neighborhood_max(&Graph::cycle(7).unwrap()).unwrap(), 1);
        assert_eq!(chi_of_neighborhood_max(&Graph::complete(4).unwrap()).unwrap(), 3);
        assert_eq!(chi_of_neighborhood_max(&Graph::empty(4).unwrap()).unwrap(), 0);
        assert_eq!(chi_of_neighborhood_max(&mycielski(2).unwrap()).unwrap(), 1);
    }

    #[test]
    fn cache_agrees_with_table_and_direct() {
        let g = mycielski(2).unwrap();
        let mut plain = InvariantCache::new(&g);
        let mut tab = InvariantCache::tabulated(&g, Budget::default());
        assert!(tab.table().is_some());
        for mask in (0u32..(1 << 11)).step_by(37) {
            let x = VertexSet::from_members(11, mask_members(mask)).unwrap();
            let a = plain.chi_value(&x).unwrap();
            assert_eq!(a, tab.chi_value(&x).unwrap());
            assert_eq!(plain.omega_value(&x).unwrap(), tab.omega_value(&x).unwrap());
            for t in 0..4 {
                assert_eq!(plain.chi_at_most(&x, t).unwrap(), a <= t);
            }
            let (k, col) = tab.chi(&x).unwrap();
            assert_eq!(k, a);
            check_coloring(&g, &x, &col).unwrap();
        }
        plain.clear();
        let x = g.vertices();
        assert_eq!(plain.chi_value(&x).unwrap(), 4);
    }

    #[test]
    fn budget_exhaustion_reported() {
        let g = mycielski(3).unwrap();
        let tiny = Budget { nodes: 10 };
        assert!(matches!(chi_with_budget(&g, &g.vertices(), &tiny), Err(Error::Resource(_))));
    }
}
