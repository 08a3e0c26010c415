//! Deterministic graph families and seeded random graphs.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder};

/// One Mycielski step: `n` originals, `n` shadows, one apex. Keeps ω (for
/// ω ≥ 2) and raises χ by one.
pub fn mycielskian(g: &Graph) -> Result<Graph> {
    let n = g.n();
    let mut b = GraphBuilder::new(2 * n + 1)?;
    for (u, v) in g.edges() {
        b.add_edge(u, v)?;
        b.add_edge(u, n + v)?;
        b.add_edge(n + u, v)?;
    }
    for i in 0..n {
        b.add_edge(n + i, 2 * n)?;
    }
    Ok(b.build())
}

/// `depth` Mycielski steps starting from K2: depth 1 is C5, depth 2 the
/// Grötzsch graph. χ = depth + 2 and ω = 2.
pub fn mycielski(depth: usize) -> Result<Graph> {
    let mut g = Graph::complete(2)?;
    for _ in 0..depth {
        g = mycielskian(&g)?;
    }
    Ok(g)
}

/// Kneser graph K(n, k): k-subsets of `0..n`, adjacent when disjoint. Vertices
/// are the subsets in increasing bitmask order.
pub fn kneser(n: usize, k: usize) -> Result<Graph> {
    if n > 20 || k > n {
        return Err(Error::input(format!("kneser({n},{k}) out of supported range")));
    }
    let subsets: Vec<u32> = (0u32..1 << n).filter(|m| m.count_ones() as usize == k).collect();
    let mut b = GraphBuilder::new(subsets.len())?;
    for (j, &b_mask) in subsets.iter().enumerate() {
        for (i, &a_mask) in subsets[..j].iter().enumerate() {
            if a_mask & b_mask == 0 {
                b.add_edge(i, j)?;
            }
        }
    }
    Ok(b.build())
}

/// Erdős–Rényi G(n, p) drawn from a ChaCha8 stream seeded by `seed`. Pairs
/// are visited in graph6 order, one uniform draw each.
pub fn gnp(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::input(format!("edge probability {p} outside [0, 1]")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut b = GraphBuilder::new(n)?;
    for v in 1..n {
        for u in 0..v {
            if rng.gen::<f64>() < p {
                b.add_edge(u, v)?;
            }
        }
    }
    Ok(b.build())
}

/// SplitMix64 finaliser, used to derive independent per-instance seeds.
pub fn split_seed(base: u64, index: u64) -> u64 {
    let mut z = base ^ index.wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mycielski_sizes() {
        assert_eq!(mycielski(1).unwrap(), Graph::cycle(5).unwrap().permute(&[0, 1, 2, 4, 3]).unwrap());
        let sizes: Vec<usize> = (0..5).map(|d| mycielski(d).unwrap().n()).collect();
        assert_eq!(sizes, vec![2, 5, 11, 23, 47]);
        assert_eq!(mycielski(2).unwrap().edge_count(), 20);
    }

    #[test]
    fn petersen_is_kneser_5_2() {
        let p = kneser(5, 2).unwrap();
        assert_eq!((p.n(), p.edge_count()), (10, 15));
        assert!((0..10).all(|v| p.degree(v) == 3));
    }

    #[test]
    fn gnp_is_deterministic() {
        assert_eq!(gnp(12, 0.5, 7).unwrap(), gnp(12, 0.5, 7).unwrap());
        assert_ne!(gnp(12, 0.5, 7).unwrap(), gnp(12, 0.5, 8).unwrap());
        assert_eq!(gnp(6, 1.0, 1).unwrap(), Graph::complete(6).unwrap());
        assert_ne!(split_seed(1, 0), split_seed(1, 1));
    }
}
