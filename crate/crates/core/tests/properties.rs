mod common;

use chibound::graph::{emit_dimacs, emit_g6, parse_dimacs, parse_g6, Graph};
use chibound::harness::enumerate::canonical_code;
use chibound::invariants::{chi, max_stable, omega, InvariantCache, SubsetTable};
use chibound::lemmas::{self, LemmaOptions, RamseyOutcome};
use chibound::patterns::{find_induced, verify_witness, PatternSpec, Recipe};
use chibound::polynomial::{sweep_polys, SweepParameters};
use chibound::structures::{is_unsplittable, verify_nondominating, verify_partition};
use chibound::{Error, Polynomial, VertexSet};
use num_bigint::BigUint;
use proptest::prelude::*;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        prop::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let all = (1..n).flat_map(|v| (0..v).map(move |u| (u, v)));
            Graph::from_edges(n, all.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e)).unwrap()
        })
    })
}

fn graph_and_perm(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    graph(max_n).prop_flat_map(|g| {
        let perm = Just((0..g.n()).collect::<Vec<_>>()).prop_shuffle();
        (Just(g), perm)
    })
}

fn poly() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(0u64..50, 0..5).prop_map(|c| Polynomial::from_u64s(&c))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn invariants_match_naive(g in graph(10)) {
        let all = g.vertices();
        let (c, col) = chi(&g, &all).unwrap();
        let (w, clique) = omega(&g, &all).unwrap();
        let (a, stable) = max_stable(&g, &all).unwrap();
        prop_assert_eq!(c, common::chi(&g));
        prop_assert_eq!(w, common::omega(&g));
        prop_assert_eq!(a, common::omega(&g.complement()));
        prop_assert!(col.is_proper(&g) && col.palette() == c);
        prop_assert!(clique.verify(&g) && clique.0.len() == w);
        prop_assert!(stable.verify(&g) && stable.0.len() == a);
        prop_assert!(w <= c && c <= g.n());
    }

    #[test]
    fn subset_table_matches_naive(g in graph(7)) {
        let t = SubsetTable::new(&g).unwrap();
        let chis = common::chi_table(&g);
        let omegas = common::omega_table(&g);
        for m in 0..1u32 << g.n() {
            prop_assert_eq!(t.chi(m), chis[m as usize]);
            prop_assert_eq!(t.omega(m), omegas[m as usize]);
        }
    }

    #[test]
    fn cache_agrees_with_and_without_table(g in graph(9), mask in any::<u16>()) {
        let x = VertexSet::from_members(g.n(), (0..g.n()).filter(|v| mask >> v & 1 == 1)).unwrap();
        let mut plain = InvariantCache::new(&g);
        let mut table = InvariantCache::tabulated(&g, Default::default());
        prop_assert_eq!(plain.chi_value(&x).unwrap(), table.chi_value(&x).unwrap());
        prop_assert_eq!(plain.omega_value(&x).unwrap(), table.omega_value(&x).unwrap());
    }

    #[test]
    fn formats_round_trip(g in graph(40)) {
        prop_assert_eq!(&parse_g6(&emit_g6(&g)).unwrap(), &g);
        prop_assert_eq!(&parse_dimacs(&emit_dimacs(&g)).unwrap(), &g);
    }

    #[test]
    fn canonical_code_is_label_invariant((g, perm) in graph_and_perm(9)) {
        let h = g.permute(&perm).unwrap();
        prop_assert_eq!(canonical_code(&g).unwrap(), canonical_code(&h).unwrap());
    }

    #[test]
    fn small_patterns_match_naive(g in graph(8), h in graph(4)) {
        let spec = PatternSpec::Bad(Recipe::Leaf(h.clone()));
        let ours = find_induced(&g, &spec).unwrap();
        prop_assert_eq!(ours.is_some(), common::induced_copy(&g, &h).is_some());
        if let Some(w) = ours {
            prop_assert!(verify_witness(&g, &spec, &w).unwrap());
        }
    }

    #[test]
    fn pattern_search_is_label_invariant((g, perm) in graph_and_perm(10), k in 1usize..4, d in 1usize..3) {
        let spec = PatternSpec::Broom { k, d };
        let h = g.permute(&perm).unwrap();
        prop_assert_eq!(find_induced(&g, &spec).unwrap().is_some(), find_induced(&h, &spec).unwrap().is_some());
    }

    #[test]
    fn polynomial_arithmetic_evaluates_pointwise(p in poly(), q in poly(), x in 0u64..100) {
        let xb = BigUint::from(x);
        prop_assert_eq!((&p + &q).eval(&xb), p.eval(&xb) + q.eval(&xb));
        prop_assert_eq!((&p * &q).eval(&xb), p.eval(&xb) * q.eval(&xb));
        prop_assert_eq!(p.compose(&q).eval(&xb), p.eval(&q.eval(&xb)));
        prop_assert_eq!(p.to_string().parse::<Polynomial>().unwrap(), p);
    }

    #[test]
    fn sweep_polynomials_satisfy_recurrence(k in 1usize..5, s in 1usize..3, q in 0u64..5, psi in poly(), sigma in poly(), x in 0u64..20) {
        let params = SweepParameters::new(k, s, q, psi.clone(), sigma.clone()).unwrap();
        let t = sweep_polys(&params).unwrap();
        let xb = BigUint::from(x);
        let at = |p: &Polynomial| p.eval(&xb);
        prop_assert_eq!(at(t.zeta(k)), at(&sigma) + xb.pow(s as u32));
        prop_assert_eq!(at(t.delta(k)), BigUint::from(0u32));
        for i in 1..k {
            let (z, d) = (at(t.zeta(i + 1)), at(t.delta(i + 1)));
            let x2 = &xb * &xb;
            prop_assert_eq!(at(t.zeta(i)), 2u32 * &xb * at(&psi) + (1 + q) * &xb * &z + q * &x2 * &d);
            prop_assert_eq!(at(t.delta(i)), &xb * z + x2 * d);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn ramsey_outcome_verifies(g in graph(12), x in 2usize..4, y in 1usize..3) {
        match lemmas::ramsey_witness(&g, x, y) {
            Ok(RamseyOutcome::Clique(c)) => prop_assert!(c.verify(&g) && c.0.len() == x + 1),
            Ok(RamseyOutcome::Stable(s)) => prop_assert!(s.verify(&g) && s.0.len() == y),
            Err(Error::Precondition(_)) => prop_assert!(g.n() < x.pow(y as u32)),
            Err(e) => prop_assert!(false, "{e}"),
        }
    }

    #[test]
    fn split_partition_verifies_and_matches_naive(g in graph(7), d in 0usize..2, z in 0usize..2) {
        let p = lemmas::split_partition(&g, d, z, &LemmaOptions::default()).unwrap();
        prop_assert!(verify_partition(&g, &p, d, z).unwrap());
        let blocks: Vec<Vec<usize>> = p.blocks.iter().map(VertexSet::to_vec).collect();
        prop_assert!(common::naive_partition_ok(&g, &blocks, d, z));
    }

    #[test]
    fn unsplittable_blocks_split_into_themselves(g in graph(8), d in 0usize..2, z in 0usize..2) {
        let w = common::omega(&g);
        let p = lemmas::split_partition(&g, d, z, &LemmaOptions::default()).unwrap();
        for b in &p.blocks[1..] {
            let sub = g.induced(b).unwrap();
            prop_assert!(is_unsplittable(&sub.graph, d, z, w, 16).unwrap().is_none());
            let again = lemmas::split_partition_with_omega(&sub.graph, d, z, w, 16).unwrap();
            prop_assert_eq!(again.blocks.len(), 2);
            prop_assert!(again.blocks[0].is_empty());
        }
    }

    #[test]
    fn nondominating_path_when_preconditions_hold(g in graph(10), k in 2usize..4) {
        let x = chibound::invariants::chi_of_neighborhood_max(&g).unwrap().max(1);
        let sigma = Polynomial::zero();
        match lemmas::nondominating_path(&g, k, x, &sigma, &LemmaOptions::default()) {
            Ok((path, w)) => {
                prop_assert!(path.verify(&g, k));
                prop_assert!(verify_nondominating(&g, &w, &sigma).unwrap());
            }
            Err(Error::Precondition(_)) => prop_assert!(common::chi(&g) <= k * x),
            Err(e) => prop_assert!(false, "{e}"),
        }
    }

    #[test]
    fn gyarfas_path_when_preconditions_hold(g in graph(9), v in 0usize..9, k in 1usize..4) {
        prop_assume!(v < g.n() && g.n() > 1 && g.is_connected());
        let x = chibound::invariants::chi_of_neighborhood_max(&g).unwrap().max(1);
        let mut rest = g.vertices();
        rest.remove(v);
        for comp in g.components_within(&rest) {
            match lemmas::gyarfas_path(&g, v, &comp, k, x, &LemmaOptions::default()) {
                Ok(p) => {
                    prop_assert!(p.verify(&g, k));
                    prop_assert_eq!(p.0[0], v);
                    prop_assert!(p.0[1..].iter().all(|&u| comp.contains(u)));
                }
                Err(Error::Precondition(_)) => {
                    let sub = common::induced(&g, &comp.to_vec());
                    prop_assert!(common::chi(&sub) <= k.saturating_sub(2) * x);
                }
                Err(e) => prop_assert!(false, "{e}"),
            }
        }
    }
}
