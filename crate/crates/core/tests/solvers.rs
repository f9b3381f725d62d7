mod common;

use proptest::prelude::*;
use rayon::prelude::*;
use semitotal::domination::{
    enumerate_min_sets, feasible_sets_of_size, is_feasible, parameter, solve, Budget,
    DominationKind,
};
use semitotal::graph::enumerate::connected_graphs_range;
use semitotal::graph::{random_connected, Graph, VertexSet};

const KINDS: [DominationKind; 3] = DominationKind::ALL;

#[test]
fn branch_and_bound_matches_subset_scan_on_all_small_connected_graphs() {
    let graphs = connected_graphs_range(2, 8);
    graphs.par_iter().for_each(|g| {
        for kind in KINDS {
            let r = solve(g, kind).unwrap();
            assert_eq!(Some(r.value), common::parameter(g, kind), "{kind} on {g:?}");
            assert!(is_feasible(g, &r.witness_set, kind).unwrap());
        }
    });
}

#[test]
fn branch_and_bound_matches_subset_scan_on_seeded_graphs() {
    (0..1000u64).into_par_iter().for_each(|seed| {
        let n = 9 + (seed % 6) as usize;
        let p = 0.15 + 0.05 * (seed % 7) as f64;
        let g = random_connected(n, p, seed).unwrap();
        for kind in KINDS {
            assert_eq!(
                Some(parameter(&g, kind).unwrap()),
                common::parameter(&g, kind),
                "{kind} seed {seed}"
            );
        }
    });
}

#[test]
fn sandwich_and_floor_on_order_up_to_seven() {
    for g in connected_graphs_range(2, 7) {
        let gamma = parameter(&g, DominationKind::Domination).unwrap();
        let gt = parameter(&g, DominationKind::Total).unwrap();
        let gt2 = parameter(&g, DominationKind::Semitotal).unwrap();
        assert!(gamma <= gt2 && gt2 <= gt, "{g:?}");
        assert!(gt2 >= 2);
    }
}

#[test]
fn enumeration_is_exactly_the_optimal_feasible_sets() {
    let graphs = connected_graphs_range(2, 7);
    graphs.par_iter().for_each(|g| {
        for kind in KINDS {
            let got: Vec<Vec<usize>> = enumerate_min_sets(g, kind)
                .unwrap()
                .iter()
                .map(VertexSet::to_vec)
                .collect();
            assert_eq!(got, common::min_sets(g, kind), "{kind} on {g:?}");
        }
    });
}

#[test]
fn fixed_size_scan_matches_oracle() {
    for seed in 0..40 {
        let g = random_connected(8, 0.3, seed).unwrap();
        let dist = common::distances(&g);
        for k in 2..=4 {
            let got = feasible_sets_of_size(&g, DominationKind::Semitotal, k, &Budget::default()).unwrap();
            let want = (0u64..1 << 8)
                .filter(|m| m.count_ones() as usize == k)
                .filter(|&m| common::feasible(&g, &dist, m, DominationKind::Semitotal))
                .count();
            assert_eq!(got.len(), want);
        }
    }
}

#[test]
fn isolated_vertices_are_rejected_for_total_kinds() {
    let g = Graph::from_edges(3, &[(0, 1)]).unwrap();
    assert!(solve(&g, DominationKind::Semitotal).is_err());
    assert!(solve(&g, DominationKind::Total).is_err());
    assert_eq!(parameter(&g, DominationKind::Domination).unwrap(), 2);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn every_enumerated_optimum_is_feasible_and_optimal(
        n in 3usize..11, p in 0.2f64..0.7, seed in any::<u64>()
    ) {
        let g = random_connected(n, p, seed).unwrap();
        let value = parameter(&g, DominationKind::Semitotal).unwrap();
        let all = enumerate_min_sets(&g, DominationKind::Semitotal).unwrap();
        prop_assert!(!all.is_empty());
        for d in &all {
            prop_assert_eq!(d.len(), value);
            prop_assert!(is_feasible(&g, d, DominationKind::Semitotal).unwrap());
        }
        for w in all.windows(2) {
            prop_assert!(w[0].lex_cmp(&w[1]).is_lt());
        }
    }

    #[test]
    fn supersets_of_feasible_sets_stay_feasible(
        n in 3usize..11, p in 0.2f64..0.7, seed in any::<u64>(), extra in 0usize..11
    ) {
        let g = random_connected(n, p, seed).unwrap();
        let mut d = solve(&g, DominationKind::Semitotal).unwrap().witness_set;
        d.insert(extra % n);
        prop_assert!(is_feasible(&g, &d, DominationKind::Semitotal).unwrap());
    }
}
