//! Simple undirected graphs on dense vertex indices `0..n`.
//!
//! A [`Graph`] is immutable once built. Adjacency is stored as one packed
//! bitrow per vertex so that neighbourhood intersections cost `O(n / 64)`.
//! Every combinator returns a fresh graph, and those that move labels also
//! return the index map so that certificates never refer to stale vertices.

mod format;
mod set;

pub use format::{emit_dimacs, emit_g6, parse_dimacs, parse_g6, parse_g6_lines};
pub use set::{Members, VertexSet};

use set::{words_for, WORD};

use crate::error::{Error, Result};

/// Largest vertex count accepted by any constructor or parser.
pub const MAX_VERTICES: usize = 4096;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    stride: usize,
    rows: Vec<u64>,
}

fn check_order(n: usize) -> Result<()> {
    if n > MAX_VERTICES {
        Err(Error::input(format!("graph on {n} vertices exceeds the supported maximum of {MAX_VERTICES}")))
    } else {
        Ok(())
    }
}

/// Mutable staging area for a [`Graph`].
#[derive(Clone, Debug)]
pub struct GraphBuilder {
    g: Graph,
}

impl GraphBuilder {
    pub fn new(n: usize) -> Result<Self> {
        check_order(n)?;
        let stride = words_for(n);
        Ok(GraphBuilder { g: Graph { n, stride, rows: vec![0; stride * n] } })
    }

    pub fn n(&self) -> usize {
        self.g.n
    }

    /// Adds the edge `uv`; loops and out-of-range endpoints are rejected.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<&mut Self> {
        let n = self.g.n;
        if u >= n || v >= n {
            return Err(Error::input(format!("edge {u}-{v} out of range for {n} vertices")));
        }
        if u == v {
            return Err(Error::input(format!("self-loop at vertex {u}")));
        }
        self.g.set(u, v);
        self.g.set(v, u);
        Ok(self)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.g.adjacent(u, v)
    }

    pub fn build(self) -> Graph {
        self.g
    }
}

impl Graph {
    pub fn empty(n: usize) -> Result<Graph> {
        Ok(GraphBuilder::new(n)?.build())
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut b = GraphBuilder::new(n)?;
        for (u, v) in edges {
            b.add_edge(u, v)?;
        }
        Ok(b.build())
    }

    pub fn complete(n: usize) -> Result<Graph> {
        let mut b = GraphBuilder::new(n)?;
        for v in 1..n {
            for u in 0..v {
                b.add_edge(u, v)?;
            }
        }
        Ok(b.build())
    }

    pub fn path(n: usize) -> Result<Graph> {
        Graph::from_edges(n, (1..n).map(|v| (v - 1, v)))
    }

    pub fn cycle(n: usize) -> Result<Graph> {
        if n < 3 {
            return Err(Error::input(format!("a cycle needs at least 3 vertices, got {n}")));
        }
        Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n)))
    }

    #[inline]
    fn set(&mut self, u: usize, v: usize) {
        self.rows[u * self.stride + v / WORD] |= 1 << (v % WORD);
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub(crate) fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.stride..(v + 1) * self.stride]
    }

    #[inline]
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && (self.rows[u * self.stride + v / WORD] >> (v % WORD)) & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, ordered by `v` then `u` (graph6 order).
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (1..self.n).flat_map(move |v| (0..v).filter(move |&u| self.adjacent(u, v)).map(move |u| (u, v)))
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn vertex_set<I: IntoIterator<Item = usize>>(&self, members: I) -> Result<VertexSet> {
        VertexSet::from_members(self.n, members)
    }

    /// Open neighbourhood `N(v)`.
    pub fn neighbors(&self, v: usize) -> Result<VertexSet> {
        if v >= self.n {
            return Err(Error::input(format!("vertex {v} out of range for {} vertices", self.n)));
        }
        Ok(self.nbrs(v))
    }

    #[inline]
    pub(crate) fn nbrs(&self, v: usize) -> VertexSet {
        VertexSet::from_words(self.n, self.row(v).to_vec())
    }

    /// Members of `x` adjacent to `v`.
    pub fn neighbors_in(&self, v: usize, x: &VertexSet) -> VertexSet {
        let bits = self.row(v).iter().zip(x.words()).map(|(a, b)| a & b).collect();
        VertexSet::from_words(self.n, bits)
    }

    /// Members of `x` other than `v` that are not adjacent to `v`.
    pub fn non_neighbors_in(&self, v: usize, x: &VertexSet) -> VertexSet {
        let bits = self.row(v).iter().zip(x.words()).map(|(a, b)| !a & b).collect();
        let mut s = VertexSet::from_words(self.n, bits);
        s.remove(v);
        s
    }

    /// Vertices outside `x` with at least one neighbour in `x`.
    pub fn boundary(&self, x: &VertexSet) -> VertexSet {
        let mut out = VertexSet::empty(self.n);
        for v in x.iter() {
            out.union_with(&self.nbrs(v));
        }
        out.subtract(x);
        out
    }

    pub fn has_neighbor_in(&self, v: usize, x: &VertexSet) -> bool {
        self.row(v).iter().zip(x.words()).any(|(a, b)| a & b != 0)
    }

    fn check_set(&self, x: &VertexSet) -> Result<()> {
        if x.universe() != self.n {
            if let Some(bad) = x.iter().find(|&v| v >= self.n) {
                return Err(Error::input(format!("vertex {bad} out of range for {} vertices", self.n)));
            }
        }
        Ok(())
    }

    /// Re-expresses `x` over this graph's universe, rejecting out-of-range members.
    pub fn coerce(&self, x: &VertexSet) -> Result<VertexSet> {
        self.check_set(x)?;
        if x.universe() == self.n {
            Ok(x.clone())
        } else {
            VertexSet::from_members(self.n, x.iter())
        }
    }

    /// The subgraph induced on `x`, with vertices renumbered in increasing order.
    pub fn induced(&self, x: &VertexSet) -> Result<Induced> {
        let x = self.coerce(x)?;
        let to_host = x.to_vec();
        let mut b = GraphBuilder::new(to_host.len())?;
        for (j, &v) in to_host.iter().enumerate() {
            for (i, &u) in to_host[..j].iter().enumerate() {
                if self.adjacent(u, v) {
                    b.g.set(i, j);
                    b.g.set(j, i);
                }
            }
        }
        Ok(Induced { graph: b.build(), to_host })
    }

    pub fn is_complete_between(&self, a: &VertexSet, b: &VertexSet) -> Result<bool> {
        let (a, b) = self.disjoint_pair(a, b)?;
        Ok(a.iter().all(|u| b.is_subset(&self.nbrs(u))))
    }

    pub fn is_anticomplete_between(&self, a: &VertexSet, b: &VertexSet) -> Result<bool> {
        let (a, b) = self.disjoint_pair(a, b)?;
        Ok(a.iter().all(|u| !self.has_neighbor_in(u, &b)))
    }

    fn disjoint_pair(&self, a: &VertexSet, b: &VertexSet) -> Result<(VertexSet, VertexSet)> {
        let a = self.coerce(a)?;
        let b = self.coerce(b)?;
        if !a.is_disjoint(&b) {
            return Err(Error::input("the two vertex sets overlap"));
        }
        Ok((a, b))
    }

    /// Adds a vertex `n` adjacent to every existing vertex.
    pub fn cone(&self) -> Result<Graph> {
        let n = self.n;
        let mut b = GraphBuilder::new(n + 1)?;
        for (u, v) in self.edges() {
            b.g.set(u, v);
            b.g.set(v, u);
        }
        for u in 0..n {
            b.add_edge(u, n)?;
        }
        Ok(b.build())
    }

    /// Copies of `self` on `0..n1` and `other` on `n1..n1+n2`, with no cross edges.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let off = self.n;
        let edges = self.edges().chain(other.edges().map(|(u, v)| (u + off, v + off)));
        Graph::from_edges(self.n + other.n, edges.collect::<Vec<_>>())
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph { n: self.n, stride: self.stride, rows: self.rows.iter().map(|w| !w).collect() };
        for v in 0..self.n {
            let row = &mut g.rows[v * self.stride..(v + 1) * self.stride];
            row[v / WORD] &= !(1 << (v % WORD));
            let rem = self.n % WORD;
            if rem != 0 {
                row[self.stride - 1] &= (1u64 << rem) - 1;
            }
        }
        g
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::input("permutation length differs from vertex count"));
        }
        let mut seen = vec![false; self.n];
        for &p in perm {
            if p >= self.n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::input("not a permutation"));
            }
        }
        Graph::from_edges(self.n, self.edges().map(|(u, v)| (perm[u], perm[v])))
    }

    /// Connected components of `G[x]`, each a vertex set, ordered by least member.
    pub fn components_within(&self, x: &VertexSet) -> Vec<VertexSet> {
        let mut left = x.clone();
        let mut out = Vec::new();
        while let Some(start) = left.first() {
            let mut comp = VertexSet::empty(self.n);
            comp.insert(start);
            left.remove(start);
            let mut stack = vec![start];
            while let Some(u) = stack.pop() {
                let fresh = self.neighbors_in(u, &left);
                for w in fresh.iter() {
                    comp.insert(w);
                    stack.push(w);
                }
                left.subtract(&fresh);
            }
            out.push(comp);
        }
        out
    }

    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(&self.vertices())
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    pub fn is_connected_within(&self, x: &VertexSet) -> bool {
        self.components_within(x).len() <= 1
    }

    /// True when `path` lists distinct vertices forming an induced path in order.
    pub fn is_induced_path(&self, path: &[usize]) -> bool {
        let mut seen = VertexSet::empty(self.n);
        for &v in path {
            if v >= self.n || seen.contains(v) {
                return false;
            }
            seen.insert(v);
        }
        for (i, &u) in path.iter().enumerate() {
            for (j, &w) in path.iter().enumerate().skip(i + 1) {
                if self.adjacent(u, w) != (j == i + 1) {
                    return false;
                }
            }
        }
        true
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph({})", emit_g6(self))
    }
}

/// An induced subgraph together with the map from its vertices back to the host.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Induced {
    pub graph: Graph,
    /// `to_host[i]` is the host vertex that became vertex `i`.
    pub to_host: Vec<usize>,
}

impl Induced {
    /// Local index of a host vertex, if it was kept.
    pub fn to_local(&self, host: usize) -> Option<usize> {
        self.to_host.binary_search(&host).ok()
    }

    pub fn lift(&self, local: &VertexSet, host_n: usize) -> VertexSet {
        let mut s = VertexSet::empty(host_n);
        for v in local.iter() {
            s.insert(self.to_host[v]);
        }
        s
    }

    pub fn lower(&self, host: &VertexSet) -> VertexSet {
        let mut s = VertexSet::empty(self.graph.n());
        for v in host.iter() {
            if let Some(i) = self.to_local(v) {
                s.insert(i);
            }
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(g: &Graph, xs: &[usize]) -> VertexSet {
        g.vertex_set(xs.iter().copied()).unwrap()
    }

    #[test]
    fn induced_identity_and_path() {
        let c5 = Graph::cycle(5).unwrap();
        let all = c5.induced(&c5.vertices()).unwrap();
        assert_eq!(all.graph, c5);
        let p = c5.induced(&set(&c5, &[0, 1, 2, 3])).unwrap();
        assert_eq!(p.graph, Graph::path(4).unwrap());
        let k5 = Graph::complete(5).unwrap();
        let k = k5.induced(&set(&k5, &[1, 3, 4])).unwrap();
        assert_eq!(k.graph, Graph::complete(3).unwrap());
        assert_eq!(k.to_host, vec![1, 3, 4]);
        assert_eq!(k.to_local(3), Some(1));
    }

    #[test]
    fn induced_rejects_out_of_range() {
        let g = Graph::path(3).unwrap();
        let x = VertexSet::from_members(10, [1, 7]).unwrap();
        assert!(matches!(g.induced(&x), Err(Error::Input(_))));
    }

    #[test]
    fn neighborhoods() {
        let p = Graph::path(3).unwrap();
        assert_eq!(p.neighbors(1).unwrap().to_vec(), vec![0, 2]);
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(k4.neighbors(2).unwrap().to_vec(), vec![0, 1, 3]);
        let e = Graph::empty(4).unwrap();
        assert!(e.neighbors(0).unwrap().is_empty());
        assert!(e.neighbors(4).is_err());
    }

    #[test]
    fn complete_and_anticomplete() {
        let k4 = Graph::complete(4).unwrap();
        let (a, b) = (set(&k4, &[0, 1]), set(&k4, &[2, 3]));
        assert!(k4.is_complete_between(&a, &b).unwrap());
        assert!(!k4.is_anticomplete_between(&a, &b).unwrap());
        let two_k2 = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert!(two_k2.is_anticomplete_between(&a, &b).unwrap());
        let none = VertexSet::empty(4);
        assert!(k4.is_complete_between(&none, &b).unwrap());
        assert!(k4.is_anticomplete_between(&none, &b).unwrap());
        assert!(k4.is_complete_between(&a, &set(&k4, &[1, 2])).is_err());
    }

    #[test]
    fn cone_and_union() {
        assert_eq!(Graph::empty(0).unwrap().cone().unwrap(), Graph::complete(1).unwrap());
        assert_eq!(Graph::complete(2).unwrap().cone().unwrap(), Graph::complete(3).unwrap());
        let p4 = Graph::path(4).unwrap();
        let two = p4.disjoint_union(&p4).unwrap();
        assert_eq!((two.n(), two.edge_count()), (8, 6));
        assert_eq!(p4.disjoint_union(&Graph::empty(0).unwrap()).unwrap(), p4);
        let fan = Graph::path(3).unwrap().cone().unwrap();
        assert_eq!(fan.degree(3), 3);
    }

    #[test]
    fn components_of_small_graphs() {
        let p4 = Graph::path(4).unwrap();
        let two = p4.disjoint_union(&p4).unwrap();
        let comps = two.components();
        assert_eq!(comps.len(), 2);
        assert!(comps.iter().all(|c| c.len() == 4));
        assert_eq!(Graph::cycle(6).unwrap().components().len(), 1);
        assert_eq!(Graph::empty(5).unwrap().components().len(), 5);
    }

    #[test]
    fn complement_clears_padding() {
        let g = Graph::empty(70).unwrap().complement();
        assert_eq!(g, Graph::complete(70).unwrap());
        assert_eq!(Graph::cycle(5).unwrap().complement(), Graph::cycle(5).unwrap().permute(&[0, 2, 4, 1, 3]).unwrap());
    }

    #[test]
    fn induced_paths() {
        let c5 = Graph::cycle(5).unwrap();
        assert!(c5.is_induced_path(&[0, 1, 2, 3]));
        assert!(!c5.is_induced_path(&[0, 1, 2, 3, 4]));
        assert!(!c5.is_induced_path(&[0, 2]));
    }

    #[test]
    fn oversize_rejected() {
        assert!(Graph::empty(MAX_VERTICES + 1).is_err());
    }
}
