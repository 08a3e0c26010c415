//! Exhaustive enumeration of small graphs, labeled or up to isomorphism.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder};

/// Largest order for which labeled enumeration is offered (2^28 graphs).
pub const LABELED_LIMIT: usize = 8;
/// Largest order for which isomorphism classes are generated.
pub const CLASS_LIMIT: usize = 10;

/// Vertex pairs in graph6 order: `(0,1), (0,2), (1,2), (0,3), ...`.
pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    (1..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect()
}

/// The graph whose edge set is given by the set bits of `mask` over [`pairs`].
pub fn from_mask(n: usize, pairs: &[(usize, usize)], mask: u64) -> Graph {
    let mut b = GraphBuilder::new(n).expect("small order");
    for (i, &(u, v)) in pairs.iter().enumerate() {
        if mask >> i & 1 == 1 {
            b.add_edge(u, v).expect("valid pair");
        }
    }
    b.build()
}

/// All `2^(n(n−1)/2)` labeled graphs on `n` vertices, by increasing edge mask.
pub fn labeled(n: usize) -> Result<impl Iterator<Item = Graph>> {
    if n > LABELED_LIMIT {
        return Err(Error::resource(format!("labeled enumeration is limited to n ≤ {LABELED_LIMIT}")));
    }
    let ps = pairs(n);
    let count = 1u64 << ps.len();
    Ok((0..count).map(move |m| from_mask(n, &ps, m)))
}

fn adjacency_masks(g: &Graph) -> Vec<u32> {
    (0..g.n()).map(|v| (0..g.n()).filter(|&u| g.adjacent(u, v)).fold(0u32, |m, u| m | 1 << u)).collect()
}

/// Stable colouring by iterated neighbour-colour multisets, starting from
/// degrees. Colours are ranks of invariant signatures, so isomorphic graphs
/// get corresponding colourings.
fn refine(adj: &[u32]) -> Vec<usize> {
    let n = adj.len();
    let mut colour: Vec<usize> = adj.iter().map(|m| m.count_ones() as usize).collect();
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = (0..n).filter(|&u| adj[v] >> u & 1 == 1).map(|u| colour[u]).collect();
                nb.sort_unstable();
                (colour[v], nb)
            })
            .collect();
        let ranks: Vec<&(usize, Vec<usize>)> = sigs.iter().collect::<BTreeSet<_>>().into_iter().collect();
        let next: Vec<usize> = sigs.iter().map(|s| ranks.binary_search(&s).expect("present")).collect();
        let classes = |c: &[usize]| c.iter().collect::<BTreeSet<_>>().len();
        if classes(&next) == classes(&colour) {
            return next;
        }
        colour = next;
    }
}

/// Canonical code of a graph on at most [`CLASS_LIMIT`] vertices: the
/// largest upper-triangle bit string over all orderings that list the
/// refined colour classes in order. Two graphs are isomorphic iff their
/// codes (and orders) agree.
pub fn canonical_code(g: &Graph) -> Result<u64> {
    let n = g.n();
    if n > CLASS_LIMIT {
        return Err(Error::resource(format!("canonical forms are limited to n ≤ {CLASS_LIMIT}")));
    }
    let adj = adjacency_masks(g);
    let colour = refine(&adj);
    let mut cells: Vec<Vec<usize>> = Vec::new();
    for c in 0..n {
        let cell: Vec<usize> = (0..n).filter(|&v| colour[v] == c).collect();
        if !cell.is_empty() {
            cells.push(cell);
        }
    }
    let mut best = 0u64;
    let mut order = Vec::with_capacity(n);
    let mut used = 0u32;
    search(&adj, &cells, 0, &mut order, &mut used, &mut best);
    Ok(best)
}

fn code_of(adj: &[u32], order: &[usize]) -> u64 {
    let mut code = 0u64;
    for j in 1..order.len() {
        for i in 0..j {
            code = code << 1 | (adj[order[i]] >> order[j] & 1) as u64;
        }
    }
    code
}

fn search(adj: &[u32], cells: &[Vec<usize>], cell: usize, order: &mut Vec<usize>, used: &mut u32, best: &mut u64) {
    if cell == cells.len() {
        *best = (*best).max(code_of(adj, order));
        return;
    }
    let placed_in_cell = order.len() - cells[..cell].iter().map(Vec::len).sum::<usize>();
    if placed_in_cell == cells[cell].len() {
        search(adj, cells, cell + 1, order, used, best);
        return;
    }
    for &v in &cells[cell] {
        if *used >> v & 1 == 0 {
            *used |= 1 << v;
            order.push(v);
            search(adj, cells, cell, order, used, best);
            order.pop();
            *used &= !(1 << v);
        }
    }
}

/// One representative of each isomorphism class on `n` vertices, built by
/// extending the classes on `n − 1` vertices with every possible
/// neighbourhood of a new vertex. Output is sorted by canonical code.
pub fn nonisomorphic(n: usize) -> Result<Vec<Graph>> {
    if n > CLASS_LIMIT {
        return Err(Error::resource(format!("class generation is limited to n ≤ {CLASS_LIMIT}")));
    }
    let mut level = vec![Graph::empty(0)?];
    for order in 1..=n {
        let mut seen = std::collections::BTreeMap::new();
        for g in &level {
            for nb in 0u32..1 << (order - 1) {
                let mut b = GraphBuilder::new(order)?;
                for (u, v) in g.edges() {
                    b.add_edge(u, v)?;
                }
                for u in 0..order - 1 {
                    if nb >> u & 1 == 1 {
                        b.add_edge(u, order - 1)?;
                    }
                }
                let h = b.build();
                seen.entry(canonical_code(&h)?).or_insert(h);
            }
        }
        level = seen.into_values().collect();
    }
    Ok(level)
}

/// All graphs on `n` vertices for a scan: labeled up to `labeled_up_to`,
/// isomorphism classes beyond.
pub fn scan_graphs(n: usize, labeled_up_to: usize) -> Result<Vec<Graph>> {
    if n <= labeled_up_to {
        Ok(labeled(n)?.collect())
    } else {
        nonisomorphic(n)
    }
}
