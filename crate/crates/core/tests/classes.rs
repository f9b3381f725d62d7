mod common;

use proptest::prelude::*;
use rayon::prelude::*;
use semitotal::classes::{
    abc_partition, classify_h, ec1_gt2_p3kp2free, ec1_gt2_p5free, is_h_free, p3kp2_threshold, poly_dispatch,
    regular_vertices, Verdict,
};
use semitotal::domination::{Budget, DominationKind};
use semitotal::graph::enumerate::connected_graphs_range;
use semitotal::graph::{random_connected, Graph, PatternGraph};
use semitotal::Error;

use DominationKind::*;

fn pattern(name: &str) -> PatternGraph {
    PatternGraph::parse(name).unwrap()
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(k - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, k - 1);
            out.push(q);
        }
    }
    out
}

/// Induced containment by trying every vertex subset and every bijection.
fn contains_by_scan(g: &Graph, h: &Graph) -> bool {
    let (n, k) = (g.order(), h.order());
    let perms = permutations(k);
    (0u32..1 << n).filter(|m| m.count_ones() as usize == k).any(|m| {
        let s: Vec<usize> = (0..n).filter(|&v| m >> v & 1 == 1).collect();
        perms.iter().any(|p| {
            (0..k).all(|i| (0..k).all(|j| i == j || h.has_edge(i, j) == g.has_edge(s[p[i]], s[p[j]])))
        })
    })
}

fn one_edge(g: &Graph) -> bool {
    common::ct(g, Semitotal, 1).is_some()
}

fn free_graphs(name: &str, lo: usize, hi: usize) -> Vec<Graph> {
    let h = pattern(name);
    connected_graphs_range(lo, hi)
        .into_iter()
        .filter(|g| is_h_free(g, &h).unwrap())
        .collect()
}

#[test]
fn recognition_matches_subset_scan() {
    let graphs = connected_graphs_range(1, 6);
    for name in ["P3", "P4", "claw", "C4", "2P3", "P3+P2", "P5"] {
        let h = pattern(name);
        graphs.par_iter().for_each(|g| {
            assert_eq!(is_h_free(g, &h).unwrap(), !contains_by_scan(g, h.graph()), "{name} {g:?}");
        });
    }
}

#[test]
fn p5_free_algorithm_matches_contraction_oracle() {
    free_graphs("P5", 2, 7).par_iter().for_each(|g| {
        assert_eq!(ec1_gt2_p5free(g).unwrap(), one_edge(g), "{g:?}");
    });
}

#[test]
fn p3_kp2_free_algorithm_matches_contraction_oracle() {
    for (k, name) in [(1, "P3+P2"), (2, "P3+2P2")] {
        free_graphs(name, 2, 7).par_iter().for_each(|g| {
            assert_eq!(ec1_gt2_p3kp2free(g, k).unwrap(), one_edge(g), "k={k} {g:?}");
        });
    }
}

#[test]
fn dispatch_matches_contraction_oracle() {
    for name in ["P5+K1", "P4+2K1", "P3+P2+K1", "P2+2K1"] {
        let h = pattern(name);
        assert_eq!(classify_h(&h).verdict, Verdict::PolyTime);
        free_graphs(name, 2, 7).par_iter().for_each(|g| {
            assert_eq!(poly_dispatch(g, &h).unwrap(), one_edge(g), "{name} {g:?}");
        });
    }
}

#[test]
fn preconditions_are_enforced() {
    let p5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
    assert!(matches!(ec1_gt2_p5free(&p5), Err(Error::PreconditionViolated(_))));
    let p6 = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)]).unwrap();
    assert!(matches!(ec1_gt2_p3kp2free(&p6, 1), Err(Error::PreconditionViolated(_))));
    assert!(matches!(poly_dispatch(&p5, &pattern("claw")), Err(Error::PreconditionViolated(_))));
    let split = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
    assert!(matches!(ec1_gt2_p5free(&split), Err(Error::PreconditionViolated(_))));
}

#[test]
fn threshold_formula() {
    // (k+1)(a+2) + k(1 + 2(k+1)) + 5a - 4 for k = 1, a = 3 and k = 2, a = 5
    assert_eq!(p3kp2_threshold(1, 3), 10 + 5 + 15 - 4);
    assert_eq!(p3kp2_threshold(2, 5), 21 + 14 + 25 - 4);
}

#[test]
fn regular_vertices_have_clique_neighbourhoods_and_are_far_apart() {
    let graphs = free_graphs("P3+P2", 2, 8);
    graphs.par_iter().for_each(|g| {
        let b = Budget::default();
        let Some(part) = abc_partition(g, 1, &b).unwrap() else {
            return;
        };
        let dist = common::distances(g);
        let r = regular_vertices(g, &part, 1, &b).unwrap();
        assert_eq!(r, part.r);
        // with k = 1 a regular vertex needs one partner, which is then regular too
        let pool: Vec<usize> = part
            .c
            .iter()
            .filter(|&v| {
                let nb: Vec<usize> = (0..g.order()).filter(|&u| g.has_edge(u, v)).collect();
                nb.iter().all(|&a| nb.iter().all(|&b| a == b || g.has_edge(a, b)))
            })
            .collect();
        let expected: Vec<usize> = pool
            .iter()
            .copied()
            .filter(|&v| pool.iter().any(|&u| dist[u][v] >= 4))
            .collect();
        assert_eq!(r.to_vec(), expected, "{g:?}");
        if !r.is_empty() {
            assert_eq!(common::parameter(g, Domination), common::parameter(g, Semitotal), "{g:?}");
        }
    });
}

#[test]
fn fixture_verdicts() {
    use Verdict::*;
    let cases = [
        ("claw", CoNpHard, "Thm-claw"),
        ("C3", NpHard, "Thm-girth"),
        ("C4", NpHard, "Thm-girth"),
        ("C7", NpHard, "Thm-girth"),
        ("P6", NpHard, "Thm-P6/P4+P2"),
        ("2P3", CoNpHard, "Thm-2P3"),
        ("P4+2P2", NpHard, "Thm-P6/P4+P2"),
        ("P5", PolyTime, "Thm-P5+tK1"),
        ("P5+3K1", PolyTime, "Thm-P5+tK1"),
        ("P3+2P2+K1", PolyTime, "Thm-P3+pP2+tK1"),
    ];
    for (name, verdict, reason) in cases {
        let got = classify_h(&pattern(name));
        assert_eq!((got.verdict, got.reason.as_str()), (verdict, reason), "{name}");
    }
}

/// The classification reads only the shape of each component.
fn reference_verdict(h: &Graph) -> Verdict {
    let n = h.order();
    let dist = common::distances(h);
    let mut seen = vec![false; n];
    let mut comps = Vec::new();
    for s in 0..n {
        if !seen[s] {
            let comp: Vec<usize> = (0..n).filter(|&v| dist[s][v] < common::INF).collect();
            comp.iter().for_each(|&v| seen[v] = true);
            comps.push(comp);
        }
    }
    let degree = |v: usize| (0..n).filter(|&u| h.has_edge(u, v)).count();
    let edges = common::edges(h);
    if comps.iter().any(|c| edges.iter().filter(|(u, _)| c.contains(u)).count() >= c.len()) {
        return Verdict::NpHard;
    }
    if (0..n).any(|v| degree(v) >= 3) {
        return Verdict::CoNpHard;
    }
    let mut paths: Vec<usize> = comps.iter().map(|c| c.len()).collect();
    paths.sort_unstable_by(|a, b| b.cmp(a));
    match paths.as_slice() {
        [l, ..] if *l >= 6 => Verdict::NpHard,
        [l, rest @ ..] if *l >= 4 && rest.iter().any(|&r| r >= 2) => Verdict::NpHard,
        [l, ..] if *l >= 4 => Verdict::PolyTime,
        [3, 3, ..] => Verdict::CoNpHard,
        _ => Verdict::PolyTime,
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn verdict_is_a_function_of_component_shapes(
        n in 1usize..9,
        edges in prop::collection::vec((0usize..8, 0usize..8), 0..10),
        shift in 0usize..8,
    ) {
        let mut h = Graph::empty(n);
        for (a, b) in edges {
            let (a, b) = (a % n, b % n);
            if a != b {
                h.add_edge(a, b).unwrap();
            }
        }
        let rotated: Vec<usize> = (0..n).map(|v| (v + shift) % n).collect();
        let p = PatternGraph::new("H", h.clone());
        let q = PatternGraph::new("H'", h.permuted(&rotated));
        let got = classify_h(&p);
        prop_assert_eq!(got.verdict, reference_verdict(&h));
        prop_assert_eq!(got, classify_h(&q));
    }

    #[test]
    fn recognition_is_hereditary(n in 4usize..10, seed in any::<u64>(), drop in 0usize..10) {
        let g = random_connected(n, 0.35, seed).unwrap();
        let keep: Vec<usize> = (0..n).filter(|&v| v != drop % n).collect();
        let sub = g.induced_subgraph(&keep);
        for name in ["P4", "claw", "P3+P2"] {
            let h = pattern(name);
            if is_h_free(&g, &h).unwrap() {
                prop_assert!(is_h_free(&sub, &h).unwrap());
            }
        }
    }
}
