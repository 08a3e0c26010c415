use crate::graph::{Graph, VertexSet};

/// Lexicographically least maximum clique of `g[within]`.
///
/// Branches on candidates in increasing index order (include before exclude)
/// and records only strict improvements, so the first clique of maximum size
/// reached is the lexicographically least one. Pruning uses the number of
/// classes in a greedy colouring of the candidate set.
pub(crate) fn max_clique(g: &Graph, within: &VertexSet) -> Vec<usize> {
    let mut best = Vec::new();
    let mut current = Vec::new();
    expand(g, within.clone(), &mut current, &mut best);
    best
}

fn expand(g: &Graph, mut cand: VertexSet, current: &mut Vec<usize>, best: &mut Vec<usize>) {
    if cand.is_empty() {
        if current.len() > best.len() {
            *best = current.clone();
        }
        return;
    }
    if current.len() + cand.len() <= best.len() {
        return;
    }
    if current.len() + greedy_class_count(g, &cand) <= best.len() {
        return;
    }
    while let Some(v) = cand.first() {
        if current.len() + cand.len() <= best.len() {
            return;
        }
        cand.remove(v);
        let next = g.neighbors_in(v, &cand);
        current.push(v);
        expand(g, next, current, best);
        current.pop();
    }
}

/// Classes used by sequential greedy colouring of `g[set]`; an upper bound on ω.
pub(crate) fn greedy_class_count(g: &Graph, set: &VertexSet) -> usize {
    let mut left = set.clone();
    let mut classes = 0;
    while !left.is_empty() {
        classes += 1;
        let mut avail = left.clone();
        while let Some(v) = avail.first() {
            avail.remove(v);
            left.remove(v);
            let nb = g.neighbors_in(v, &avail);
            avail.subtract(&nb);
        }
    }
    classes
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clique_sizes() {
        let k5 = Graph::complete(5).unwrap();
        assert_eq!(max_clique(&k5, &k5.vertices()), vec![0, 1, 2, 3, 4]);
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(max_clique(&c5, &c5.vertices()), vec![0, 1]);
        let e = Graph::empty(3).unwrap();
        assert_eq!(max_clique(&e, &e.vertices()), vec![0]);
        let none = Graph::empty(0).unwrap();
        assert!(max_clique(&none, &none.vertices()).is_empty());
    }

    #[test]
    fn lexicographically_least_optimum() {
        // Two triangles {1,2,3} and {0,4,5}; the latter is lexicographically smaller.
        let g = Graph::from_edges(6, [(1, 2), (2, 3), (1, 3), (0, 4), (4, 5), (0, 5)]).unwrap();
        assert_eq!(max_clique(&g, &g.vertices()), vec![0, 4, 5]);
        let sub = g.vertex_set([1, 2, 3, 4, 5]).unwrap();
        assert_eq!(max_clique(&g, &sub), vec![1, 2, 3]);
    }
}
