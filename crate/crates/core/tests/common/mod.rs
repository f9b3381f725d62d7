//! Brute-force reference implementations shared by the integration tests.
//!
//! Nothing here calls the library's solvers, contraction or distance code;
//! graphs are read only through `order` and `has_edge`.

#![allow(dead_code)]

use semitotal::domination::DominationKind;
use semitotal::graph::Graph;

pub const INF: usize = usize::MAX / 4;

pub fn distances(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.order();
    let mut d = vec![vec![INF; n]; n];
    for u in 0..n {
        d[u][u] = 0;
        for v in 0..n {
            if g.has_edge(u, v) {
                d[u][v] = 1;
            }
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if d[i][k] + d[k][j] < d[i][j] {
                    d[i][j] = d[i][k] + d[k][j];
                }
            }
        }
    }
    d
}

pub fn members(mask: u64, n: usize) -> Vec<usize> {
    (0..n).filter(|&v| mask >> v & 1 == 1).collect()
}

pub fn feasible(g: &Graph, dist: &[Vec<usize>], mask: u64, kind: DominationKind) -> bool {
    let n = g.order();
    let inside = |v: usize| mask >> v & 1 == 1;
    let dominated = |u: usize, closed: bool| (closed && inside(u)) || (0..n).any(|w| inside(w) && g.has_edge(u, w));
    match kind {
        DominationKind::Domination => (0..n).all(|u| dominated(u, true)),
        DominationKind::Total => (0..n).all(|u| dominated(u, false)),
        DominationKind::Semitotal => {
            (0..n).all(|u| dominated(u, true))
                && (0..n)
                    .filter(|&v| inside(v))
                    .all(|v| (0..n).any(|w| w != v && inside(w) && dist[v][w] <= 2))
        }
    }
}

/// Smallest feasible set size, `None` when the parameter is undefined.
pub fn parameter(g: &Graph, kind: DominationKind) -> Option<usize> {
    let n = g.order();
    assert!(n <= 20);
    if n == 0 {
        return None;
    }
    if kind != DominationKind::Domination && (0..n).any(|u| (0..n).all(|v| !g.has_edge(u, v))) {
        return None;
    }
    let dist = distances(g);
    (0u64..1 << n)
        .filter(|&m| feasible(g, &dist, m, kind))
        .map(|m| m.count_ones() as usize)
        .min()
}

/// All minimum feasible sets as sorted vertex lists, lexicographically ordered.
pub fn min_sets(g: &Graph, kind: DominationKind) -> Vec<Vec<usize>> {
    let n = g.order();
    let Some(best) = parameter(g, kind) else {
        return Vec::new();
    };
    let dist = distances(g);
    let mut out: Vec<Vec<usize>> = (0u64..1 << n)
        .filter(|&m| m.count_ones() as usize == best && feasible(g, &dist, m, kind))
        .map(|m| members(m, n))
        .collect();
    out.sort();
    out
}

pub fn edges(g: &Graph) -> Vec<(usize, usize)> {
    let n = g.order();
    let mut out = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if g.has_edge(u, v) {
                out.push((u, v));
            }
        }
    }
    out
}

/// Collapses each component of the chosen edges onto its smallest vertex and
/// renumbers in order.
pub fn contract(g: &Graph, chosen: &[(usize, usize)]) -> Graph {
    let n = g.order();
    let mut label: Vec<usize> = (0..n).collect();
    // repeated relaxation until every chosen edge has equal labels
    loop {
        let mut changed = false;
        for &(a, b) in chosen {
            let m = label[a].min(label[b]);
            for v in [a, b] {
                if label[v] != m {
                    let old = label[v];
                    for l in label.iter_mut() {
                        if *l == old {
                            *l = m;
                        }
                    }
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    let mut reps: Vec<usize> = label.clone();
    reps.sort();
    reps.dedup();
    let id = |v: usize| reps.binary_search(&label[v]).unwrap();
    let mut pairs = Vec::new();
    for (u, v) in edges(g) {
        let (a, b) = (id(u), id(v));
        if a != b {
            pairs.push((a.min(b), a.max(b)));
        }
    }
    pairs.sort();
    pairs.dedup();
    Graph::from_edges(reps.len(), &pairs).unwrap()
}

fn subsets_of(items: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, items: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..items {
            cur.push(i);
            rec(i + 1, items, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, items, k, &mut Vec::new(), &mut out);
    out
}

/// Smallest `k <= kmax` such that contracting some `k` edges lowers the
/// parameter. Contractions that leave the parameter undefined do not count.
pub fn ct(g: &Graph, kind: DominationKind, kmax: usize) -> Option<usize> {
    let before = parameter(g, kind)?;
    let es = edges(g);
    for k in 1..=kmax.min(es.len()) {
        for pick in subsets_of(es.len(), k) {
            let chosen: Vec<(usize, usize)> = pick.iter().map(|&i| es[i]).collect();
            let h = contract(g, &chosen);
            if parameter(&h, kind).is_some_and(|after| after < before) {
                return Some(k);
            }
        }
    }
    None
}

pub fn is_connected(g: &Graph) -> bool {
    let n = g.order();
    if n == 0 {
        return true;
    }
    let d = distances(g);
    (0..n).all(|v| d[0][v] < INF)
}
