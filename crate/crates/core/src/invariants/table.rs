use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Largest graph for which [`SubsetTable`] will tabulate every subset.
pub const TABLE_LIMIT: usize = 16;

/// Exact χ and ω of every vertex subset of a small graph, indexed by bitmask.
///
/// χ is filled by the standard subset recurrence: the lowest vertex of `S`
/// joins some independent set `I ⊆ S`, and `χ(S) = 1 + min χ(S \ I)`. Costs
/// `O(3^n)` time and `O(2^n)` space.
#[derive(Clone, Debug)]
pub struct SubsetTable {
    n: usize,
    adj: Vec<u32>,
    chi: Vec<u8>,
    omega: Vec<u8>,
    /// Independent set removed first in an optimal colouring of each subset.
    class: Vec<u32>,
}

impl SubsetTable {
    pub fn new(g: &Graph) -> Result<Self> {
        let n = g.n();
        if n > TABLE_LIMIT {
            return Err(Error::resource(format!("subset table limited to {TABLE_LIMIT} vertices, graph has {n}")));
        }
        let adj: Vec<u32> =
            (0..n).map(|v| (0..n).filter(|&u| g.adjacent(u, v)).fold(0u32, |m, u| m | 1 << u)).collect();
        let size = 1usize << n;
        let mut indep = vec![false; size];
        let mut omega = vec![0u8; size];
        indep[0] = true;
        for s in 1..size {
            let v = (s as u32).trailing_zeros() as usize;
            let rest = s & !(1 << v);
            indep[s] = indep[rest] && adj[v] & rest as u32 == 0;
            omega[s] = omega[rest].max(1 + omega[rest & adj[v] as usize]);
        }
        let mut chi = vec![0u8; size];
        let mut class = vec![0u32; size];
        for s in 1..size {
            let v = (s as u32).trailing_zeros() as usize;
            let bit = 1usize << v;
            let pool = s & !bit & !(adj[v] as usize);
            let mut best = u8::MAX;
            let mut best_class = bit;
            // Enumerate subsets of `pool`, largest first, so ties prefer big classes.
            let mut t = pool;
            loop {
                let i = t | bit;
                if indep[i] {
                    let c = chi[s & !i];
                    if c < best {
                        best = c;
                        best_class = i;
                    }
                }
                if t == 0 {
                    break;
                }
                t = (t - 1) & pool;
            }
            chi[s] = best + 1;
            class[s] = best_class as u32;
        }
        Ok(SubsetTable { n, adj, chi, omega, class })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn chi(&self, mask: u32) -> usize {
        self.chi[mask as usize] as usize
    }

    #[inline]
    pub fn omega(&self, mask: u32) -> usize {
        self.omega[mask as usize] as usize
    }

    #[inline]
    pub fn adjacency(&self, v: usize) -> u32 {
        self.adj[v]
    }

    pub fn full_mask(&self) -> u32 {
        if self.n == 32 {
            u32::MAX
        } else {
            (1u32 << self.n) - 1
        }
    }

    /// Optimal colouring of the subset `mask` as `(vertex, colour)` pairs.
    pub fn coloring(&self, mask: u32) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        let mut s = mask;
        let mut c = 0;
        while s != 0 {
            let mut i = self.class[s as usize];
            s &= !i;
            while i != 0 {
                out.push((i.trailing_zeros() as usize, c));
                i &= i - 1;
            }
            c += 1;
        }
        out.sort_unstable();
        out
    }

    pub fn mask(&self, set: &VertexSet) -> u32 {
        set.iter().fold(0, |m, v| m | 1 << v)
    }
}

pub(crate) fn mask_members(mut m: u32) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(v)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn c5_table() {
        let g = Graph::cycle(5).unwrap();
        let t = SubsetTable::new(&g).unwrap();
        assert_eq!(t.chi(0b11111), 3);
        assert_eq!(t.omega(0b11111), 2);
        assert_eq!(t.chi(0b01111), 2);
        assert_eq!(t.chi(0b00101), 1);
        assert_eq!(t.chi(0), 0);
        let col = t.coloring(0b11111);
        assert_eq!(col.len(), 5);
        for (u, v) in g.edges() {
            assert_ne!(col[u].1, col[v].1);
        }
    }

    #[test]
    fn oversize_table_rejected() {
        let g = Graph::empty(TABLE_LIMIT + 1).unwrap();
        assert!(matches!(SubsetTable::new(&g), Err(Error::Resource(_))));
    }
}
