mod common;

use std::collections::BTreeSet;

use proptest::prelude::*;
use semitotal::domination::{parameter, DominationKind};
use semitotal::graph::enumerate::connected_graphs_range;
use semitotal::graph::{cycle_graph, path_graph, random_connected, Graph};
use semitotal::reductions::{
    brute_1in3, reduce_2p3free, reduce_chordal, reduce_clawfree, reduce_tree, validate_reduction, CheckStatus,
    ReductionOutput, SatInstance,
};

use DominationKind::*;

type NamedEdges = BTreeSet<(String, String)>;

fn pair(a: impl Into<String>, b: impl Into<String>) -> (String, String) {
    let (a, b) = (a.into(), b.into());
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

fn named_edges(out: &ReductionOutput) -> NamedEdges {
    let names = out.names();
    common::edges(&out.graph)
        .into_iter()
        .map(|(u, v)| pair(names[u], names[v]))
        .collect()
}

fn clique(into: &mut NamedEdges, names: &[String]) {
    for (i, a) in names.iter().enumerate() {
        for b in &names[i + 1..] {
            into.insert(pair(a.clone(), b.clone()));
        }
    }
}

fn paw(into: &mut NamedEdges, name: &str) {
    let p = |i: usize| format!("{name}({i})");
    clique(into, &[p(1), p(2), p(3)]);
    into.insert(pair(p(3), p(4)));
    into.insert(pair(p(4), p(5)));
}

fn x(v: usize) -> String {
    format!("x{}", v + 1)
}

fn c(i: usize) -> String {
    format!("c{}", i + 1)
}

/// Edge set of the claw-free graph written out from the gadget description,
/// one rule per line, without looking at vertex ids.
fn clawfree_reference(phi: &SatInstance) -> NamedEdges {
    let mut e = NamedEdges::new();
    for v in 0..phi.num_vars {
        let xv = x(v);
        clique(&mut e, &[format!("T_{xv}"), format!("F_{xv}"), format!("u_{xv}")]);
        e.insert(pair(format!("u_{xv}"), format!("v_{xv}")));
        e.insert(pair(format!("v_{xv}"), format!("w_{xv}")));
        let occ: Vec<usize> = (0..phi.clauses.len()).filter(|&i| phi.clauses[i].contains(&v)).collect();
        let a: Vec<String> = occ.iter().map(|&q| format!("a_{xv}^{}", c(q))).collect();
        let b: Vec<String> = occ.iter().map(|&q| format!("b_{xv}^{}", c(q))).collect();
        clique(&mut e, &a);
        clique(&mut e, &b);
        for (k, &q) in occ.iter().enumerate() {
            let p1 = format!("P_{{{xv},1}}^{}", c(q));
            let p2 = format!("P_{{{xv},2}}^{}", c(q));
            paw(&mut e, &p1);
            paw(&mut e, &p2);
            e.insert(pair(a[k].clone(), format!("{p1}(1)")));
            e.insert(pair(b[k].clone(), format!("{p2}(2)")));
            e.insert(pair(a[k].clone(), format!("F_{xv}")));
            e.insert(pair(b[k].clone(), format!("T_{xv}")));
        }
    }
    for (i, vars) in phi.clauses.iter().enumerate() {
        let ci = c(i);
        let pairs: Vec<(usize, usize)> = vec![(vars[0], vars[1]), (vars[0], vars[2]), (vars[1], vars[2])];
        let w = |p: (usize, usize)| format!("w_{ci}^{{{}{}}}", x(p.0), x(p.1));
        let f = |p: (usize, usize)| format!("f_{ci}^{{{}{}}}", x(p.0), x(p.1));
        let t = |v: usize| format!("t_{ci}^{}", x(v));
        clique(&mut e, &pairs.iter().map(|&p| w(p)).collect::<Vec<_>>());
        clique(&mut e, &pairs.iter().map(|&p| f(p)).collect::<Vec<_>>());
        clique(&mut e, &vars.iter().map(|&v| t(v)).collect::<Vec<_>>());
        for &v in vars {
            e.insert(pair(format!("u_{ci}"), t(v)));
            e.insert(pair(format!("P_{{{},2}}^{ci}(1)", x(v)), t(v)));
            for &p in pairs.iter().filter(|p| p.0 == v || p.1 == v) {
                e.insert(pair(t(v), w(p)));
                e.insert(pair(format!("P_{{{},1}}^{ci}(2)", x(v)), f(p)));
                e.insert(pair(format!("P_{{{},2}}^{ci}(1)", x(v)), w(p)));
            }
        }
    }
    e
}

fn two_p3_reference(phi: &SatInstance) -> NamedEdges {
    let mut e = NamedEdges::new();
    for v in 0..phi.num_vars {
        clique(&mut e, &["T", "F", "u"].map(|r| format!("{r}_{}", x(v))));
    }
    let mut all = Vec::new();
    for (i, vars) in phi.clauses.iter().enumerate() {
        let ci = c(i);
        for &s in vars {
            all.push(format!("v_{ci}^{}", x(s)));
            e.insert(pair(format!("u_{ci}^T"), format!("T_{}", x(s))));
            e.insert(pair(format!("u_{ci}^F"), format!("F_{}", x(s))));
            e.insert(pair(format!("v_{ci}^{}", x(s)), format!("T_{}", x(s))));
            for &r in vars.iter().filter(|&&r| r != s) {
                e.insert(pair(format!("v_{ci}^{}", x(s)), format!("F_{}", x(r))));
            }
        }
        all.push(format!("u_{ci}^T"));
        all.push(format!("u_{ci}^F"));
    }
    clique(&mut e, &all);
    e
}

fn tree_reference(g: &Graph) -> NamedEdges {
    let mut e = NamedEdges::new();
    for (u, v) in common::edges(g) {
        e.insert(pair(format!("v_{u}"), format!("v_{v}")));
    }
    for v in 0..g.order() {
        let path = ["v", "a", "b", "c", "d"].map(|r| format!("{r}_{v}"));
        for w in path.windows(2) {
            e.insert(pair(w[0].clone(), w[1].clone()));
        }
        for i in 1..=3 {
            e.insert(pair(format!("b_{v}"), format!("y^{v}_{i}")));
            e.insert(pair(format!("d_{v}"), format!("x^{v}_{i}")));
        }
    }
    e
}

fn chordal_reference(g: &Graph, ell: usize) -> NamedEdges {
    let n = g.order();
    let mut e = NamedEdges::new();
    let mut core: Vec<String> = (0..n).map(|j| format!("v^0_{j}")).collect();
    core.push("x_0".into());
    clique(&mut e, &core);
    e.insert(pair("y", "x_0"));
    for i in 1..=ell {
        for j in 0..n {
            e.insert(pair(format!("x_{i}"), format!("v^0_{j}")));
            e.insert(pair(format!("x_{i}"), format!("v^{i}_{j}")));
            for a in (0..n).filter(|&a| a == j || g.has_edge(a, j)) {
                e.insert(pair(format!("v^{i}_{j}"), format!("v^0_{a}")));
            }
        }
    }
    e
}

fn claw_free(g: &Graph) -> bool {
    let n = g.order();
    (0..n).all(|v| {
        let nb: Vec<usize> = (0..n).filter(|&u| g.has_edge(u, v)).collect();
        nb.iter().enumerate().all(|(i, &a)| {
            nb[i + 1..].iter().enumerate().all(|(j, &b)| {
                g.has_edge(a, b) || nb[i + j + 2..].iter().all(|&c| g.has_edge(a, c) || g.has_edge(b, c))
            })
        })
    })
}

/// Induced paths on three vertices as (end, middle, end).
fn induced_p3s(g: &Graph) -> Vec<[usize; 3]> {
    let n = g.order();
    let mut out = Vec::new();
    for m in 0..n {
        for a in 0..n {
            for b in a + 1..n {
                if a != m && b != m && g.has_edge(a, m) && g.has_edge(b, m) && !g.has_edge(a, b) {
                    out.push([a, m, b]);
                }
            }
        }
    }
    out
}

fn two_p3_free(g: &Graph) -> bool {
    let p3s = induced_p3s(g);
    p3s.iter().all(|p| {
        p3s.iter().all(|q| {
            q.iter().any(|v| p.contains(v)) || p.iter().any(|&a| q.iter().any(|&b| g.has_edge(a, b)))
        })
    })
}

/// Chordality by repeatedly deleting a vertex whose neighbourhood is a clique.
fn chordal(g: &Graph) -> bool {
    let n = g.order();
    let mut alive = vec![true; n];
    for _ in 0..n {
        let simplicial = (0..n).find(|&v| {
            alive[v] && {
                let nb: Vec<usize> = (0..n).filter(|&u| alive[u] && g.has_edge(u, v)).collect();
                nb.iter().all(|&a| nb.iter().all(|&b| a == b || g.has_edge(a, b)))
            }
        });
        match simplicial {
            Some(v) => alive[v] = false,
            None => return false,
        }
    }
    true
}

fn triple() -> SatInstance {
    SatInstance::new(3, vec![[0, 1, 2]; 3]).unwrap()
}

fn all_four_triples() -> SatInstance {
    SatInstance::new(4, vec![[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]]).unwrap()
}

fn labels_are_a_bijection(out: &ReductionOutput) {
    let ids: BTreeSet<usize> = out.labels.values().copied().collect();
    assert_eq!(ids.len(), out.labels.len());
    assert_eq!(ids, (0..out.graph.order()).collect());
}

#[test]
fn clawfree_matches_rules_edge_for_edge() {
    for phi in [triple(), all_four_triples()] {
        let out = reduce_clawfree(&phi).unwrap();
        labels_are_a_bijection(&out);
        assert_eq!(out.graph.order(), 41 * phi.num_vars + 10 * phi.clauses.len());
        assert_eq!(named_edges(&out), clawfree_reference(&phi));
        assert!(claw_free(&out.graph));
    }
}

#[test]
fn two_p3_matches_rules_and_is_2p3_free() {
    for phi in SatInstance::all_small(4, 3).iter().step_by(7).chain([&all_four_triples()]) {
        let out = reduce_2p3free(phi);
        labels_are_a_bijection(&out);
        assert_eq!(out.graph.order(), 3 * phi.num_vars + 5 * phi.clauses.len());
        assert_eq!(named_edges(&out), two_p3_reference(phi));
        assert!(two_p3_free(&out.graph));
    }
}

#[test]
fn two_p3_identity_against_subset_scan() {
    let sat = SatInstance::new(3, vec![[0, 1, 2]]).unwrap();
    let out = reduce_2p3free(&sat);
    assert_eq!(out.graph.order(), 14);
    assert_eq!(common::parameter(&out.graph, Semitotal), Some(3));

    let unsat = all_four_triples();
    assert_eq!(brute_1in3(&unsat).unwrap(), None);
    let out = reduce_2p3free(&unsat);
    assert_eq!(out.graph.order(), 32);
    assert!(parameter(&out.graph, Semitotal).unwrap() > 4);
}

#[test]
fn tree_and_chordal_match_rules() {
    for g in connected_graphs_range(2, 5) {
        let out = reduce_tree(&g).unwrap();
        labels_are_a_bijection(&out);
        assert_eq!(named_edges(&out), tree_reference(&g));
        for ell in [1, 2, 3] {
            let out = reduce_chordal(&g, ell).unwrap();
            labels_are_a_bijection(&out);
            assert_eq!(out.graph.order(), g.order() * (ell + 1) + ell + 2);
            assert_eq!(named_edges(&out), chordal_reference(&g, ell));
            assert!(chordal(&out.graph));
        }
    }
}

#[test]
fn chordal_identity_against_subset_scan() {
    let mut cases: Vec<(Graph, usize)> = connected_graphs_range(1, 3).into_iter().map(|g| (g, 2)).collect();
    cases.push((cycle_graph(4), 2));
    cases.push((path_graph(4), 1));
    for (g, ell) in cases {
        let out = reduce_chordal(&g, ell).unwrap();
        let gamma = common::parameter(&g, Domination).unwrap();
        assert_eq!(common::parameter(&out.graph, Semitotal), Some((gamma + 1).min(ell + 1)), "{g:?} {ell}");
        // every minimum set meets {x_0, y}
        let hub = [out.id("x_0").unwrap(), out.id("y").unwrap()];
        for d in common::min_sets(&out.graph, Semitotal) {
            assert!(d.iter().any(|v| hub.contains(v)));
        }
    }
}

#[test]
fn tree_identity_on_small_sources() {
    for g in connected_graphs_range(2, 4) {
        let out = reduce_tree(&g).unwrap();
        let gamma = common::parameter(&g, Domination).unwrap();
        assert_eq!(parameter(&out.graph, Semitotal).unwrap(), gamma + 2 * g.order(), "{g:?}");
    }
}

#[test]
fn validators_pass_on_sound_outputs() {
    let g = path_graph(3);
    assert!(validate_reduction(&reduce_tree(&g).unwrap()).ok());
    assert!(validate_reduction(&reduce_chordal(&cycle_graph(4), 2).unwrap()).ok());
    assert!(validate_reduction(&reduce_2p3free(&all_four_triples())).ok());
}

#[test]
fn validator_rejects_an_extra_edge() {
    let mut out = reduce_chordal(&cycle_graph(4), 2).unwrap();
    let (a, b) = (out.id("v^1_0").unwrap(), out.id("v^2_2").unwrap());
    out.graph.add_edge(a, b).unwrap();
    let report = validate_reduction(&out);
    assert!(!report.ok());
    assert_eq!(report.status("chordal"), Some(CheckStatus::Fail));
}

fn formula() -> impl Strategy<Value = SatInstance> {
    (3usize..7).prop_flat_map(|n| {
        prop::collection::vec(prop::sample::subsequence((0..n).collect::<Vec<_>>(), 3), 1..6)
            .prop_map(move |cs| SatInstance::new(n, cs.into_iter().map(|c| [c[0], c[1], c[2]]).collect()).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn sat_text_round_trips(phi in formula()) {
        let text = phi.to_string();
        prop_assert_eq!(text.parse::<SatInstance>().unwrap(), phi);
    }

    #[test]
    fn brute_force_matches_assignment_scan(phi in formula()) {
        let n = phi.num_vars;
        let any = (0u32..1 << n).any(|m| {
            phi.clauses.iter().all(|c| c.iter().filter(|&&v| m >> v & 1 == 1).count() == 1)
        });
        let got = brute_1in3(&phi).unwrap();
        prop_assert_eq!(got.is_some(), any);
        if let Some(a) = got {
            prop_assert!(phi.satisfied_by(&a));
        }
    }

    #[test]
    fn tree_output_keeps_source_class(n in 2usize..9, seed in any::<u64>()) {
        let g = random_connected(n, 0.4, seed).unwrap();
        let out = reduce_tree(&g).unwrap();
        prop_assert_eq!(out.graph.order(), 11 * n);
        prop_assert_eq!(chordal(&out.graph), chordal(&g));
        prop_assert!(common::is_connected(&out.graph));
    }
}
