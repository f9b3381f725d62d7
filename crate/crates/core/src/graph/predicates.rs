use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use super::{Graph, VertexSet};

/// Structural facts about a graph. `girth` is `None` for forests.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassReport {
    pub connected: bool,
    pub bipartite: bool,
    pub chordal: bool,
    pub girth: Option<usize>,
}

pub fn class_predicates(g: &Graph) -> ClassReport {
    ClassReport {
        connected: g.is_connected(),
        bipartite: is_bipartite(g),
        chordal: is_chordal(g),
        girth: girth(g),
    }
}

pub fn is_bipartite(g: &Graph) -> bool {
    let mut side = vec![u8::MAX; g.order()];
    for s in g.vertices() {
        if side[s] != u8::MAX {
            continue;
        }
        side[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            for y in g.neighbors(x).iter() {
                if side[y] == u8::MAX {
                    side[y] = 1 - side[x];
                    queue.push_back(y);
                } else if side[y] == side[x] {
                    return false;
                }
            }
        }
    }
    true
}

/// Maximum cardinality search order, reversed into a candidate perfect
/// elimination ordering.
fn mcs_elimination_order(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let mut weight = vec![0usize; n];
    let mut numbered = VertexSet::new(n);
    let mut visit = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !numbered.contains(v))
            .max_by_key(|&v| (weight[v], std::cmp::Reverse(v)))
            .expect("unnumbered vertex remains");
        numbered.insert(v);
        visit.push(v);
        for u in g.neighbors(v).iter() {
            if !numbered.contains(u) {
                weight[u] += 1;
            }
        }
    }
    visit.reverse();
    visit
}

/// Chordality by checking that the reversed maximum cardinality search order
/// is a perfect elimination ordering.
pub fn is_chordal(g: &Graph) -> bool {
    let order = mcs_elimination_order(g);
    let mut position = vec![0; g.order()];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    for &v in &order {
        let later: Vec<usize> = g
            .neighbors(v)
            .iter()
            .filter(|&u| position[u] > position[v])
            .collect();
        let Some(&parent) = later.iter().min_by_key(|&&u| position[u]) else {
            continue;
        };
        if later
            .iter()
            .any(|&u| u != parent && !g.has_edge(parent, u))
        {
            return false;
        }
    }
    true
}

/// Length of a shortest cycle, `None` for forests.
pub fn girth(g: &Graph) -> Option<usize> {
    let n = g.order();
    let mut best: Option<usize> = None;
    for s in 0..n {
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        dist[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            for y in g.neighbors(x).iter() {
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    queue.push_back(y);
                } else if parent[x] != y {
                    let len = dist[x] + dist[y] + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
    }
    best
}
