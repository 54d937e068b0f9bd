use matchcover::corpus::{
    random_bipartite_matching_covered, random_matchable_bipartite, random_matching_covered,
};
use matchcover::{
    augment_to_matching_covered, build_gkm, classify, dm_decomposition, dm_digraph,
    enumerate_perfect_matchings, equivalent_classes, is_feasible, is_matching_covered, nabla,
    parse_graph, removable_edges, serialize_graph, EdgeSet, Graph,
};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn covered(seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = 2 * rng.gen_range(2..=5);
    let r = rng.gen_range(2..=3);
    random_matching_covered(&mut rng, n, r)
}

fn subset(seed: u64, g: &Graph) -> EdgeSet {
    let mut rng = ChaCha8Rng::seed_from_u64(seed.rotate_left(17));
    EdgeSet::from_ids(
        g.edge_count(),
        (0..g.edge_count()).filter(|_| rng.gen_bool(0.5)),
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn switching_preserves_feasibility(seed in any::<u64>(), mask in any::<u16>()) {
        let g = covered(seed);
        let x = subset(seed, &g);
        let u: Vec<usize> = g.vertices().filter(|&v| mask >> v & 1 == 1).collect();
        let y = x.symmetric_difference(&nabla(&g, &u).unwrap());
        prop_assert_eq!(is_feasible(&g, &x).unwrap(), is_feasible(&g, &y).unwrap());
    }

    #[test]
    fn matchings_meet_a_class_in_all_or_nothing(seed in any::<u64>()) {
        let g = covered(seed);
        let classes = equivalent_classes(&g).unwrap();
        let all = enumerate_perfect_matchings(&g, None);
        let removable = removable_edges(&g).unwrap();
        for class in &classes.nontrivial {
            let k = EdgeSet::from_ids(g.edge_count(), class.iter().copied());
            for m in &all.matchings {
                let hit = m.edges().intersection_count(&k);
                prop_assert!(hit == 0 || hit == class.len());
            }
            prop_assert_eq!(is_feasible(&g, &k).unwrap(), class.len() % 2 == 1);
            for &e in class {
                prop_assert!(!removable.contains(e));
            }
        }
    }

    #[test]
    fn classification_chain(seed in any::<u64>()) {
        let r = classify(&covered(seed));
        prop_assert!(r.matching_covered);
        prop_assert!(!r.two_extendable || r.strongly_coverable);
        prop_assert!(!r.strongly_coverable || r.no_equivalent_class);
        prop_assert!(!r.brace || r.bipartite);
    }

    #[test]
    fn augmentation_reaches_matching_covered(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let h = rng.gen_range(2..=6);
        let p = rng.gen_range(0.1..0.6);
        let g = random_matchable_bipartite(&mut rng, h, p);
        let d = dm_decomposition(&g).unwrap();
        d.validate(&g).unwrap();
        let dig = dm_digraph(&g, &d).unwrap();
        prop_assert!(dig.is_acyclic());
        let (aug, plan) = augment_to_matching_covered(&g).unwrap();
        prop_assert!(is_matching_covered(&aug));
        prop_assert_eq!(aug.edge_count(), g.edge_count() + plan.ell);
        prop_assert_eq!(plan.ell == 0, is_matching_covered(&g));
    }

    #[test]
    fn bipartite_unions_of_matchings_are_covered(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let h = rng.gen_range(1..=7);
        let g = random_bipartite_matching_covered(&mut rng, h, 2);
        prop_assert!(is_matching_covered(&g));
    }

    #[test]
    fn serialization_round_trips(seed in any::<u64>()) {
        let g = covered(seed);
        let text = serialize_graph(&g);
        let back = parse_graph(&text).unwrap();
        prop_assert_eq!(back.edges(), g.edges());
        prop_assert_eq!(back.labels(), g.labels());
        prop_assert_eq!(serialize_graph(&back), text);
    }
}

#[test]
fn construction_counts_and_colour_classes() {
    for k in 3..=5 {
        for m in 2..=4 {
            let r = build_gkm(k, m).unwrap();
            assert_eq!(r.graph.vertex_count(), 2 * k * m);
            assert_eq!(r.graph.edge_count(), m * k * k);
            assert_eq!(r.graph.is_regular(), Some(k));
            assert!(r.coloring.conflict(&r.graph).is_none());
            for c in 1..=k {
                let class = r.coloring.class(c);
                assert_eq!(class.len(), k * m);
                let mut seen = vec![false; r.graph.vertex_count()];
                for e in class.iter() {
                    let (u, v) = r.graph.endpoints(e);
                    assert!(!seen[u] && !seen[v]);
                    seen[u] = true;
                    seen[v] = true;
                }
            }
            assert!(r.link_edges.is_subset(&r.coloring.class(1)));
            assert!(r.test_set.is_subset(&r.link_edges));
        }
    }
}
