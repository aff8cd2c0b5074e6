use c5cert::blowup::{compose_identity_check, recursion_value, BlowupTree};
use c5cert::canonical::{canonical_key, is_isomorphic};
use c5cert::counting::c5_count;
use c5cert::grid::{objective_scaled, NeighborProfile};
use c5cert::rational::{parse_fraction, to_fraction, Rational, RationalJson};
use c5cert::SmallGraph;
use proptest::prelude::*;

fn graph(max_n: usize) -> impl Strategy<Value = SmallGraph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut g = SmallGraph::empty(n).unwrap();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] {
                        g.add_edge(u, v);
                    }
                    k += 1;
                }
            }
            g
        })
    })
}

fn sized(lo: usize, hi: usize) -> impl Strategy<Value = SmallGraph> {
    graph(hi).prop_filter("order", move |g| g.n() >= lo)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn pentagon_blowup_count(inner in proptest::collection::vec(graph(4), 5)) {
        let expect: u64 = inner.iter().map(|h| h.n() as u64).product::<u64>()
            + inner.iter().map(c5_count).sum::<u64>();
        let g = BlowupTree::pentagon_with_inner(inner).unwrap().realize().unwrap();
        prop_assert!(g.n() <= 22);
        prop_assert_eq!(c5_count(&g), expect);
    }

    #[test]
    fn composition_identity(outer in sized(1, 7), h in sized(1, 3)) {
        let c = compose_identity_check(&outer, &h).unwrap();
        prop_assert_eq!(c.lhs, c.rhs);
    }

    #[test]
    fn canonical_key_ignores_labels(g in graph(12), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut perm: Vec<usize> = (0..g.n()).collect();
        perm.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
        let h = g.permuted(&perm);
        prop_assert_eq!(canonical_key(&g), canonical_key(&h));
        prop_assert!(is_isomorphic(&g, &h));
        prop_assert_eq!(c5_count(&g), c5_count(&h));
    }

    #[test]
    fn graph6_round_trip(g in graph(40)) {
        let text = g.to_graph6();
        prop_assert_eq!(SmallGraph::from_graph6(&text).unwrap(), g);
    }

    #[test]
    fn rational_json_round_trip(p in -10_000i64..10_000, q in 1i64..10_000) {
        let r = Rational::new(p.into(), q.into());
        let j = RationalJson::from(&r);
        prop_assert_eq!(j.value().unwrap(), r.clone());
        prop_assert_eq!(parse_fraction(&to_fraction(&r)).unwrap(), r);
    }

    #[test]
    fn grid_objective_is_dihedral(u in proptest::array::uniform5(0u32..=60), shift in 0usize..5) {
        let s = 60;
        let base = objective_scaled(&NeighborProfile { u }, s);
        let mut rot = u;
        rot.rotate_left(shift);
        prop_assert_eq!(objective_scaled(&NeighborProfile { u: rot }, s), base);
        let mut rev = u;
        rev.reverse();
        prop_assert_eq!(objective_scaled(&NeighborProfile { u: rev }, s), base);
    }

    #[test]
    fn recursion_is_monotone(n in 1u64..1_000_000) {
        prop_assert!(recursion_value(n) <= recursion_value(n + 1));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn complement_has_same_pentagons(g in sized(5, 12)) {
        prop_assert_eq!(c5_count(&g), c5_count(&g.complement()));
    }
}
