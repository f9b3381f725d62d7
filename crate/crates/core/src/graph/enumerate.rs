//! Exhaustive generation of small connected graphs up to isomorphism.
//!
//! Every connected graph on `n >= 2` vertices has a vertex whose removal
//! leaves it connected, so all of them arise from the connected graphs on
//! `n - 1` vertices by adding one vertex with a nonempty neighbourhood.
//! Duplicates are removed by canonical code. A hereditary filter can be
//! applied level by level without losing members of the class.

use std::collections::HashSet;

use rayon::prelude::*;

use super::canon::{canonical_code, canonical_form, MAX_CANON_ORDER};
use super::{encode_graph6, Graph};

/// Nonisomorphic connected graphs of each order `1..=max_n` that satisfy
/// `keep`, in canonical form and sorted by graph6 within each order.
/// Index `i` of the result holds order `i + 1`.
///
/// `keep` must describe a hereditary class (closed under vertex deletion),
/// otherwise members whose every connected one-vertex-deleted subgraph is
/// rejected go missing.
pub fn connected_graphs_where<F>(max_n: usize, keep: F) -> Vec<Vec<Graph>>
where
    F: Fn(&Graph) -> bool + Sync,
{
    assert!(max_n <= MAX_CANON_ORDER, "enumeration supports at most {MAX_CANON_ORDER} vertices");
    let mut levels: Vec<Vec<Graph>> = Vec::with_capacity(max_n);
    if max_n == 0 {
        return levels;
    }
    let k1 = Graph::empty(1);
    levels.push(if keep(&k1) { vec![k1] } else { Vec::new() });
    for n in 2..=max_n {
        let parents = &levels[n - 2];
        let mut children: Vec<((usize, u128), Graph)> = parents
            .par_iter()
            .flat_map_iter(|p| {
                (1u64..(1 << (n - 1))).map(move |mask| {
                    let mut g = p.clone();
                    let v = g.add_vertex();
                    for u in 0..n - 1 {
                        if mask >> u & 1 == 1 {
                            g.add_edge(u, v).expect("in range");
                        }
                    }
                    g
                })
            })
            .filter(|g| keep(g))
            .map(|g| (canonical_code(&g), g))
            .collect();
        children.par_sort_unstable_by(|a, b| a.0.cmp(&b.0));
        let mut seen = HashSet::new();
        children.retain(|(code, _)| seen.insert(*code));
        let mut level: Vec<(String, Graph)> = children
            .into_par_iter()
            .map(|(_, g)| {
                let c = canonical_form(&g);
                (encode_graph6(&c), c)
            })
            .collect();
        level.sort_unstable_by(|a, b| a.0.cmp(&b.0));
        levels.push(level.into_iter().map(|(_, g)| g).collect());
    }
    levels
}

/// All nonisomorphic connected graphs of order exactly `n`.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    connected_graphs_where(n, |_| true).pop().unwrap_or_default()
}

/// All nonisomorphic connected graphs of orders `lo..=hi`, ordered by order
/// and then graph6.
pub fn connected_graphs_range(lo: usize, hi: usize) -> Vec<Graph> {
    connected_graphs_where(hi, |_| true)
        .into_iter()
        .skip(lo.saturating_sub(1))
        .flatten()
        .collect()
}
