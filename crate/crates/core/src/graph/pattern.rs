//! Induced and non-induced pattern search by backtracking over bitsets.

use std::fmt;
use std::str::FromStr;

use super::{
    complete_graph, cycle_graph, disjoint_union, long_paw, net_graph, path_graph, star, Graph,
    VertexSet,
};
use crate::error::{Error, Result};

/// Largest pattern the search accepts.
pub const MAX_PATTERN_ORDER: usize = 12;

/// A named graph used as a forbidden or sought pattern.
///
/// Names follow the usual shorthand: `Pn`, `Cn`, `Kn`, `claw`, `net`,
/// `longpaw`, and disjoint sums with multiplicities such as `P5+2K1` or
/// `P3+1P2+2K1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatternGraph {
    name: String,
    graph: Graph,
}

impl PatternGraph {
    pub fn new(name: impl Into<String>, graph: Graph) -> Self {
        PatternGraph {
            name: name.into(),
            graph,
        }
    }

    pub fn parse(name: &str) -> Result<Self> {
        let mut graph = Graph::empty(0);
        let mut offset = 0;
        for term in name.split('+') {
            let trimmed = term.trim();
            let at = offset + term.len() - term.trim_start().len();
            let (count, base) = split_count(trimmed, at)?;
            let piece = base_pattern(base, at + trimmed.len() - base.len())?;
            for _ in 0..count {
                graph = disjoint_union(&graph, &piece);
            }
            offset += term.len() + 1;
        }
        Ok(PatternGraph {
            name: name.trim().to_string(),
            graph,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn order(&self) -> usize {
        self.graph.order()
    }
}

impl FromStr for PatternGraph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        PatternGraph::parse(s)
    }
}

impl fmt::Display for PatternGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

fn split_count(term: &str, at: usize) -> Result<(usize, &str)> {
    let digits = term.bytes().take_while(u8::is_ascii_digit).count();
    if digits == 0 {
        return Ok((1, term));
    }
    let count = term[..digits]
        .parse()
        .map_err(|_| Error::parse(at, "multiplicity too large"))?;
    Ok((count, &term[digits..]))
}

fn base_pattern(base: &str, at: usize) -> Result<Graph> {
    match base {
        "claw" => return Ok(star(3)),
        "net" => return Ok(net_graph()),
        "longpaw" => return Ok(long_paw()),
        "" => return Err(Error::parse(at, "empty pattern term")),
        _ => {}
    }
    let (kind, size) = base.split_at(1);
    let n: usize = size
        .parse()
        .map_err(|_| Error::parse(at, format!("unknown pattern `{base}`")))?;
    match kind {
        "P" if n >= 1 => Ok(path_graph(n)),
        "K" if n >= 1 => Ok(complete_graph(n)),
        "C" if n >= 3 => Ok(cycle_graph(n)),
        "P" | "K" | "C" => Err(Error::parse(at + 1, format!("`{base}` has too few vertices"))),
        _ => Err(Error::parse(at, format!("unknown pattern `{base}`"))),
    }
}

/// Finds an induced copy of `h` in `g`.
///
/// The result maps pattern vertex `i` to host vertex `result[i]`; adjacency
/// and non-adjacency are both preserved.
pub fn contains_induced(g: &Graph, h: &PatternGraph) -> Result<Option<Vec<usize>>> {
    embed(g, h.graph(), true)
}

/// Finds a not necessarily induced copy of `h` in `g`: pattern edges map to
/// host edges, pattern non-edges are unconstrained.
pub fn contains_subgraph(g: &Graph, h: &PatternGraph) -> Result<Option<Vec<usize>>> {
    embed(g, h.graph(), false)
}

fn embed(g: &Graph, h: &Graph, induced: bool) -> Result<Option<Vec<usize>>> {
    let k = h.order();
    if k > MAX_PATTERN_ORDER {
        return Err(Error::PatternTooLarge(k));
    }
    if k > g.order() {
        return Ok(None);
    }
    // Visit pattern vertices so that each one, where possible, has an
    // already placed neighbour; that keeps candidate sets small.
    let mut order: Vec<usize> = Vec::with_capacity(k);
    let mut placed = vec![false; k];
    while order.len() < k {
        let next = (0..k)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| {
                let back = order.iter().filter(|&&u| h.has_edge(u, v)).count();
                (back, h.degree(v), std::cmp::Reverse(v))
            })
            .expect("unplaced vertex exists");
        placed[next] = true;
        order.push(next);
    }
    let mut image = vec![usize::MAX; k];
    let mut used = VertexSet::new(g.order());
    let found = extend(g, h, induced, &order, 0, &mut image, &mut used);
    Ok(found.then_some(image))
}

fn extend(
    g: &Graph,
    h: &Graph,
    induced: bool,
    order: &[usize],
    depth: usize,
    image: &mut [usize],
    used: &mut VertexSet,
) -> bool {
    if depth == order.len() {
        return true;
    }
    let p = order[depth];
    let mut cand = g.vertex_set();
    cand.difference_with(used);
    for &q in &order[..depth] {
        if h.has_edge(p, q) {
            cand.intersect_with(g.neighbors(image[q]));
        } else if induced {
            cand.difference_with(g.neighbors(image[q]));
        }
    }
    let need = h.degree(p);
    for v in cand.iter() {
        if g.degree(v) < need {
            continue;
        }
        image[p] = v;
        used.insert(v);
        if extend(g, h, induced, order, depth + 1, image, used) {
            return true;
        }
        used.remove(v);
    }
    image[p] = usize::MAX;
    false
}
