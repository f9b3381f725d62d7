use serde::{Deserialize, Serialize};

use super::{Edge, Graph};
use crate::error::{Error, Result};

/// Result of contracting a set of edges.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Contraction {
    pub graph: Graph,
    /// `vertex_map[old] = new`.
    pub vertex_map: Vec<usize>,
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Contracts every edge in `edges` at once.
///
/// Each connected component of the subgraph spanned by the selected edges
/// collapses into one vertex carrying the union of the members'
/// neighbourhoods. The merged vertex takes the position of the component's
/// smallest old id and ids are recompacted in order, so the result does not
/// depend on the order of `edges`.
pub fn contract_edges(g: &Graph, edges: &[Edge]) -> Result<Contraction> {
    if edges.is_empty() {
        return Err(Error::InvalidInstance("no edges to contract".into()));
    }
    let n = g.order();
    let mut parent: Vec<usize> = (0..n).collect();
    for e in edges {
        if e.u >= n || e.v >= n || !g.has_edge(e.u, e.v) {
            return Err(Error::InvalidEdge(e.u, e.v));
        }
        let (a, b) = (find(&mut parent, e.u), find(&mut parent, e.v));
        if a != b {
            // smaller root wins so the representative is the component minimum
            let (lo, hi) = (a.min(b), a.max(b));
            parent[hi] = lo;
        }
    }

    let mut new_id = vec![usize::MAX; n];
    let mut next = 0;
    for v in 0..n {
        if find(&mut parent, v) == v {
            new_id[v] = next;
            next += 1;
        }
    }
    let vertex_map: Vec<usize> = (0..n).map(|v| new_id[find(&mut parent, v)]).collect();

    let mut h = Graph::empty(next);
    for (a, b) in g.edge_pairs() {
        let (x, y) = (vertex_map[a], vertex_map[b]);
        if x != y {
            h.add_edge(x, y)?;
        }
    }
    Ok(Contraction {
        graph: h,
        vertex_map,
    })
}
