//! Naive reference implementations used as oracles. They share no code with
//! the library beyond `Graph::adjacent`.
#![allow(dead_code)]

use chibound::graph::Graph;

pub fn adj_masks(g: &Graph) -> Vec<u32> {
    (0..g.n()).map(|v| (0..g.n()).filter(|&u| g.adjacent(u, v)).fold(0, |m, u| m | 1 << u)).collect()
}

pub fn is_clique(adj: &[u32], m: u32) -> bool {
    (0..adj.len()).all(|v| m >> v & 1 == 0 || adj[v] & m == m & !(1 << v))
}

pub fn is_stable(adj: &[u32], m: u32) -> bool {
    (0..adj.len()).all(|v| m >> v & 1 == 0 || adj[v] & m == 0)
}

/// ω of `G[m]` by scanning every subset.
pub fn omega_of(adj: &[u32], m: u32) -> usize {
    let mut best = 0;
    let mut s = m;
    loop {
        if s.count_ones() as usize > best && is_clique(adj, s) {
            best = s.count_ones() as usize;
        }
        if s == 0 {
            break;
        }
        s = (s - 1) & m;
    }
    best
}

fn colour_rec(adj: &[u32], verts: &[usize], i: usize, k: usize, col: &mut Vec<usize>) -> bool {
    if i == verts.len() {
        return true;
    }
    let v = verts[i];
    for c in 0..k {
        if verts[..i].iter().all(|&u| adj[v] >> u & 1 == 0 || col[u] != c) {
            col[v] = c;
            if colour_rec(adj, verts, i + 1, k, col) {
                return true;
            }
        }
        // Colours above the largest used so far are interchangeable.
        if verts[..i].iter().all(|&u| col[u] < c) {
            break;
        }
    }
    col[v] = usize::MAX;
    false
}

/// χ of `G[m]` by trying k = 0, 1, 2, ... with plain index-order backtracking.
pub fn chi_of(adj: &[u32], m: u32) -> usize {
    let verts: Vec<usize> = (0..adj.len()).filter(|&v| m >> v & 1 == 1).collect();
    let mut col = vec![usize::MAX; adj.len()];
    (0..=verts.len()).find(|&k| colour_rec(adj, &verts, 0, k, &mut col)).unwrap()
}

pub fn chi(g: &Graph) -> usize {
    chi_of(&adj_masks(g), (1u32 << g.n()).wrapping_sub(1))
}

pub fn omega(g: &Graph) -> usize {
    omega_of(&adj_masks(g), (1u32 << g.n()).wrapping_sub(1))
}

/// χ of every subset mask, by the naive colouring per mask.
pub fn chi_table(g: &Graph) -> Vec<usize> {
    let adj = adj_masks(g);
    (0..1u32 << g.n()).map(|m| chi_of(&adj, m)).collect()
}

pub fn omega_table(g: &Graph) -> Vec<usize> {
    let adj = adj_masks(g);
    (0..1u32 << g.n()).map(|m| omega_of(&adj, m)).collect()
}

/// Some injection `f` with `f(i) ~ f(j)` iff `i ~ j` in `h`, by trying every injection.
pub fn induced_copy(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    fn rec(g: &Graph, h: &Graph, map: &mut Vec<usize>) -> bool {
        let i = map.len();
        if i == h.n() {
            return true;
        }
        for v in 0..g.n() {
            if map.contains(&v) {
                continue;
            }
            if (0..i).all(|j| g.adjacent(map[j], v) == h.adjacent(j, i)) {
                map.push(v);
                if rec(g, h, map) {
                    return true;
                }
                map.pop();
            }
        }
        false
    }
    let mut map = Vec::new();
    rec(g, h, &mut map).then_some(map)
}

/// Whether `G[m]` is two disjoint, anticomplete induced P4s.
pub fn is_two_p4(adj: &[u32], m: u32) -> bool {
    if m.count_ones() != 8 {
        return false;
    }
    let mut seen = 0u32;
    let mut comps = 0;
    for v in 0..adj.len() {
        if m >> v & 1 == 0 || seen >> v & 1 == 1 {
            continue;
        }
        let mut comp = 1u32 << v;
        loop {
            let grow = (0..adj.len()).filter(|&u| comp >> u & 1 == 1).fold(comp, |c, u| c | adj[u] & m);
            if grow == comp {
                break;
            }
            comp = grow;
        }
        seen |= comp;
        comps += 1;
        // A P4: four vertices, three edges, degrees 1,1,2,2.
        let mut degs: Vec<u32> =
            (0..adj.len()).filter(|&u| comp >> u & 1 == 1).map(|u| (adj[u] & comp).count_ones()).collect();
        degs.sort_unstable();
        if degs != [1, 1, 2, 2] {
            return false;
        }
    }
    comps == 2
}

/// Brute force over all 8-subsets for an induced 2P4.
pub fn has_two_p4(g: &Graph) -> bool {
    let adj = adj_masks(g);
    let n = g.n();
    (0u32..1 << n).any(|m| m.count_ones() == 8 && is_two_p4(&adj, m))
}

/// `A` is d-dense to `B` in `G` (masks, χ from `chi`).
pub fn d_dense(adj: &[u32], chi: &[usize], a: u32, b: u32, d: usize) -> bool {
    (0..adj.len()).all(|v| a >> v & 1 == 0 || chi[(b & !adj[v] & !(1 << v)) as usize] <= d)
}

/// A splitting `(A, B, Z)` of `G` by trying all 3^n assignments.
pub fn naive_split(g: &Graph, d: usize, z: usize, w: usize) -> Option<(u32, u32, u32)> {
    let n = g.n();
    let adj = adj_masks(g);
    let chi = chi_table(g);
    let mut assign = vec![0u8; n];
    loop {
        let (mut a, mut b, mut zm) = (0u32, 0u32, 0u32);
        for (v, &s) in assign.iter().enumerate() {
            match s {
                0 => a |= 1 << v,
                1 => b |= 1 << v,
                _ => zm |= 1 << v,
            }
        }
        if chi[zm as usize] <= z && chi[a as usize] > d * w && chi[b as usize] > d * w && d_dense(&adj, &chi, a, b, d) {
            return Some((a, b, zm));
        }
        let mut i = 0;
        loop {
            if i == n {
                return None;
            }
            assign[i] += 1;
            if assign[i] < 3 {
                break;
            }
            assign[i] = 0;
            i += 1;
        }
    }
}

/// Checks a partition `(D_0, ..., D_k)` by definition, with every block's
/// unsplittability decided by [`naive_split`] on the induced subgraph.
pub fn naive_partition_ok(g: &Graph, blocks: &[Vec<usize>], d: usize, z: usize) -> bool {
    let n = g.n();
    let w = omega(g);
    let mut seen = vec![false; n];
    for b in blocks {
        for &v in b {
            if seen[v] {
                return false;
            }
            seen[v] = true;
        }
    }
    if seen.iter().any(|s| !s) || blocks.is_empty() || blocks.len() - 1 > w {
        return false;
    }
    let adj = adj_masks(g);
    let d0 = blocks[0].iter().fold(0u32, |m, &v| m | 1 << v);
    if chi_of(&adj, d0) > z * w {
        return false;
    }
    blocks[1..].iter().all(|b| {
        let sub = induced(g, b);
        naive_split(&sub, d, z, w).is_none()
    })
}

pub fn induced(g: &Graph, verts: &[usize]) -> Graph {
    let edges: Vec<(usize, usize)> = (0..verts.len())
        .flat_map(|j| (0..j).map(move |i| (i, j)))
        .filter(|&(i, j)| g.adjacent(verts[i], verts[j]))
        .collect();
    Graph::from_edges(verts.len(), edges).unwrap()
}

/// Every graph on `n` vertices with edge set given by a mask over pairs in
/// graph6 order.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (1..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
    (0u64..1 << pairs.len()).map(move |m| {
        Graph::from_edges(n, pairs.iter().enumerate().filter(|(i, _)| m >> i & 1 == 1).map(|(_, &p)| p)).unwrap()
    })
}
