use super::Budget;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// DSATUR search state over a whole (local) graph.
struct Dsatur<'a> {
    g: &'a Graph,
    k: usize,
    color: Vec<Option<usize>>,
    /// `blocked[v * k + c]` counts coloured neighbours of `v` with colour `c`.
    blocked: Vec<u32>,
    saturation: Vec<usize>,
    degree: Vec<usize>,
    uncolored: usize,
}

impl<'a> Dsatur<'a> {
    fn new(g: &'a Graph, k: usize) -> Self {
        let n = g.n();
        Dsatur {
            g,
            k,
            color: vec![None; n],
            blocked: vec![0; n * k.max(1)],
            saturation: vec![0; n],
            degree: (0..n).map(|v| g.degree(v)).collect(),
            uncolored: n,
        }
    }

    /// Uncoloured vertex of maximum saturation, then degree, then least index.
    fn select(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for v in 0..self.g.n() {
            if self.color[v].is_some() {
                continue;
            }
            match best {
                None => best = Some(v),
                Some(b) => {
                    if (self.saturation[v], self.degree[v]) > (self.saturation[b], self.degree[b]) {
                        best = Some(v);
                    }
                }
            }
        }
        best
    }

    fn assign(&mut self, v: usize, c: usize) {
        self.color[v] = Some(c);
        self.uncolored -= 1;
        for w in self.g.nbrs(v).iter() {
            let slot = &mut self.blocked[w * self.k + c];
            if *slot == 0 {
                self.saturation[w] += 1;
            }
            *slot += 1;
        }
    }

    fn unassign(&mut self, v: usize, c: usize) {
        self.color[v] = None;
        self.uncolored += 1;
        for w in self.g.nbrs(v).iter() {
            let slot = &mut self.blocked[w * self.k + c];
            *slot -= 1;
            if *slot == 0 {
                self.saturation[w] -= 1;
            }
        }
    }

    fn free(&self, v: usize, c: usize) -> bool {
        self.blocked[v * self.k + c] == 0
    }

    fn search(&mut self, used: usize, budget: &mut u64) -> Result<bool> {
        if self.uncolored == 0 {
            return Ok(true);
        }
        if *budget == 0 {
            return Err(Error::resource("chromatic search exceeded its node budget"));
        }
        *budget -= 1;
        let v = self.select().expect("an uncoloured vertex remains");
        if self.saturation[v] >= self.k {
            return Ok(false);
        }
        let limit = (used + 1).min(self.k);
        for c in 0..limit {
            if !self.free(v, c) {
                continue;
            }
            self.assign(v, c);
            if self.search(used.max(c + 1), budget)? {
                return Ok(true);
            }
            self.unassign(v, c);
        }
        Ok(false)
    }
}

/// Greedy DSATUR colouring. Returns per-vertex colours.
pub(crate) fn dsatur_greedy(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut st = Dsatur::new(g, n.max(1));
    while let Some(v) = st.select() {
        let c = (0..n).find(|&c| st.free(v, c)).expect("n colours always suffice");
        st.assign(v, c);
    }
    st.color.into_iter().map(|c| c.unwrap()).collect()
}

/// Decides whether `g` is `k`-colourable; `seed` is a clique whose vertices
/// receive colours `0..seed.len()` up front to break symmetry.
pub(crate) fn k_coloring(g: &Graph, k: usize, seed: &[usize], budget: &Budget) -> Result<Option<Vec<usize>>> {
    let n = g.n();
    if n == 0 {
        return Ok(Some(Vec::new()));
    }
    if k == 0 || seed.len() > k {
        return Ok(None);
    }
    let mut st = Dsatur::new(g, k);
    for (c, &v) in seed.iter().enumerate() {
        st.assign(v, c);
    }
    let mut nodes = budget.nodes;
    if st.search(seed.len(), &mut nodes)? {
        Ok(Some(st.color.into_iter().map(|c| c.unwrap()).collect()))
    } else {
        Ok(None)
    }
}

/// Renumbers colours by first occurrence in vertex order.
pub(crate) fn normalize(colors: &[usize]) -> (usize, Vec<usize>) {
    let mut map = std::collections::HashMap::new();
    let out = colors
        .iter()
        .map(|&c| {
            let next = map.len();
            *map.entry(c).or_insert(next)
        })
        .collect();
    (map.len(), out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn proper(g: &Graph, col: &[usize]) -> bool {
        g.edges().all(|(u, v)| col[u] != col[v])
    }

    #[test]
    fn greedy_is_proper() {
        let g = Graph::cycle(7).unwrap();
        let col = dsatur_greedy(&g);
        assert!(proper(&g, &col));
        assert_eq!(normalize(&col).0, 3);
    }

    #[test]
    fn odd_cycle_not_two_colourable() {
        let g = Graph::cycle(5).unwrap();
        let b = Budget::default();
        assert!(k_coloring(&g, 2, &[0, 1], &b).unwrap().is_none());
        let col = k_coloring(&g, 3, &[0, 1], &b).unwrap().unwrap();
        assert!(proper(&g, &col));
    }

    #[test]
    fn budget_exhaustion_is_an_error() {
        let g = Graph::cycle(9).unwrap();
        let b = Budget { nodes: 1 };
        assert!(matches!(k_coloring(&g, 2, &[], &b), Err(Error::Resource(_))));
    }
}
