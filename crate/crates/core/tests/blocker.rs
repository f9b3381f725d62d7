mod common;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use semitotal::blocker::{
    characterize_ct, classify_ct_domination, classify_ct_total, ct_exact, exists_plus1_sds_with_config,
    has_friendly_triple, match_st_configuration, p4_configuration_check, path_contraction_certificate,
    StConfigId,
};
use semitotal::domination::{enumerate_min_sets, is_feasible, parameter, Budget, DominationKind};
use semitotal::graph::enumerate::connected_graphs_range;
use semitotal::graph::{contract_edges, random_connected, Edge, Graph, VertexSet};

use DominationKind::*;

#[test]
fn contraction_number_matches_brute_force() {
    let graphs = connected_graphs_range(2, 6);
    graphs.par_iter().for_each(|g| {
        for kind in DominationKind::ALL {
            let got = ct_exact(g, kind, 3).unwrap();
            assert_eq!(got.as_ref().map(|c| c.k()), common::ct(g, kind, 3), "{kind} {g:?}");
            if let Some(c) = got {
                let h = common::contract(g, &c.edges.iter().map(|e| (e.u, e.v)).collect::<Vec<_>>());
                assert_eq!(common::parameter(&h, kind), Some(c.value_after));
                c.validate(g).unwrap();
            }
        }
    });
}

#[test]
fn characterization_agrees_with_contraction_search() {
    let graphs = connected_graphs_range(2, 7);
    graphs.par_iter().for_each(|g| {
        let verdict = characterize_ct(g).unwrap();
        let oracle = ct_exact(g, Semitotal, 3).unwrap().map(|c| c.k());
        assert_eq!(verdict.k, oracle, "{g:?}");
        verdict.validate(g).unwrap();
        if let Some(cert) = verdict.certificate(g, &Budget::default()).unwrap() {
            cert.validate(g).unwrap();
        }
    });
}

#[test]
fn classic_classifications_agree_with_contraction_search() {
    let graphs = connected_graphs_range(2, 6);
    graphs.par_iter().for_each(|g| {
        let b = Budget::default();
        if parameter(g, Domination).unwrap() >= 2 {
            let oracle = ct_exact(g, Domination, 3).unwrap().map(|c| c.k());
            assert_eq!(Some(classify_ct_domination(g, &b).unwrap()), oracle, "{g:?}");
        }
        if parameter(g, Total).unwrap() >= 3 {
            let oracle = ct_exact(g, Total, 3).unwrap().map(|c| c.k());
            assert_eq!(Some(classify_ct_total(g, &b).unwrap()), oracle, "{g:?}");
        }
    });
}

#[test]
fn path_certificates_use_at_most_three_edges() {
    for g in connected_graphs_range(3, 7) {
        if parameter(&g, Semitotal).unwrap() < 3 {
            continue;
        }
        let cert = path_contraction_certificate(&g).unwrap();
        assert!(cert.k() <= 3);
        cert.validate(&g).unwrap();
    }
}

#[test]
fn friendly_triples_and_thick_edges_lower_the_parameter() {
    let graphs = connected_graphs_range(4, 7);
    graphs.par_iter().for_each(|g| {
        let value = parameter(g, Semitotal).unwrap();
        if value < 3 {
            return;
        }
        for d in enumerate_min_sets(g, Semitotal).unwrap() {
            if let Some((x, y, _)) = has_friendly_triple(g, &d) {
                let h = contract_edges(g, &[Edge::new(x, y)]).unwrap().graph;
                assert!(parameter(&h, Semitotal).unwrap() < value);
            }
        }
        if let Some((_, m)) = exists_plus1_sds_with_config(g, &Budget::default()).unwrap() {
            let h = contract_edges(g, &m.thick_edges).unwrap().graph;
            assert!(parameter(&h, Semitotal).unwrap() < value, "{g:?} {m:?}");
        }
    });
}

/// Configuration shapes written out independently of the library:
/// (role count, solid pairs, dashed pairs, pair allowed to coincide).
fn reference_shape(c: StConfigId) -> (usize, Vec<(usize, usize)>, Vec<(usize, usize)>, Option<(usize, usize)>) {
    match c {
        StConfigId::O1 => (6, vec![(0, 1), (1, 2), (3, 4), (4, 5)], vec![], None),
        StConfigId::O2 => (6, vec![(0, 1), (3, 4), (4, 5)], vec![(1, 2)], None),
        StConfigId::O3 => (6, vec![(0, 1), (3, 4)], vec![(1, 2), (4, 5)], Some((2, 5))),
        StConfigId::O4 => (4, vec![(0, 1), (0, 2), (0, 3)], vec![], None),
        StConfigId::O5 => (4, vec![(0, 1), (1, 2)], vec![(2, 3)], None),
        StConfigId::O6 => (4, vec![(0, 1), (1, 3)], vec![(1, 2)], None),
        StConfigId::O7 => (4, vec![(0, 1), (2, 3)], vec![(1, 2)], None),
    }
}

fn reference_match(g: &Graph, s: &[usize]) -> Option<(StConfigId, Vec<usize>)> {
    let dist = common::distances(g);
    for c in StConfigId::ALL {
        let (r, solid, dashed, same) = reference_shape(c);
        // every r-tuple over s in lexicographic order
        let total = s.len().pow(r as u32);
        for code in 0..total {
            let mut t = vec![0; r];
            let mut x = code;
            for i in (0..r).rev() {
                t[i] = s[x % s.len()];
                x /= s.len();
            }
            let distinct = (0..r).all(|i| (i + 1..r).all(|j| t[i] != t[j] || same == Some((i, j))));
            if distinct
                && solid.iter().all(|&(i, j)| dist[t[i]][t[j]] == 1)
                && dashed.iter().all(|&(i, j)| dist[t[i]][t[j]] == 2)
            {
                return Some((c, t));
            }
        }
    }
    None
}

#[test]
fn matcher_agrees_with_reference_on_seeded_pairs() {
    (0..500u64).into_par_iter().for_each(|seed| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = rng.gen_range(5..=10);
        let g = random_connected(n, rng.gen_range(0.2..0.6), seed).unwrap();
        let size = rng.gen_range(3..=n.min(7));
        let mut s: Vec<usize> = (0..n).collect();
        while s.len() > size {
            let i = rng.gen_range(0..s.len());
            s.remove(i);
        }
        let set = VertexSet::from_iter_with(n, s.iter().copied());
        let got = match_st_configuration(&g, &set).map(|m| {
            assert!(m.validate(&g, &set));
            (m.config, m.tuple())
        });
        assert_eq!(got, reference_match(&g, &s), "seed {seed}");
    });
}

#[test]
fn p4_check_holds_on_random_semitotal_sets() {
    (0..200u64).into_par_iter().for_each(|seed| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
        let n = rng.gen_range(6..=12);
        let g = random_connected(n, rng.gen_range(0.15..0.5), seed).unwrap();
        // grow a random set until it is semitotal dominating
        let mut order: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            order.swap(i, rng.gen_range(0..=i));
        }
        let mut d = VertexSet::new(n);
        for v in order {
            d.insert(v);
            if is_feasible(&g, &d, Semitotal).unwrap() {
                break;
            }
        }
        assert!(p4_configuration_check(&g, &d), "seed {seed}");
    });
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn contraction_certificates_round_trip_through_json(n in 5usize..9, seed in any::<u64>()) {
        let g = random_connected(n, 0.3, seed).unwrap();
        if let Some(cert) = ct_exact(&g, Semitotal, 3).unwrap() {
            let text = serde_json::to_string(&cert).unwrap();
            let back: semitotal::blocker::ContractionCertificate = serde_json::from_str(&text).unwrap();
            prop_assert_eq!(&back, &cert);
            prop_assert!(back.validate(&g).is_ok());
        }
    }
}
