//! Canonical labelling of small graphs by individualization and refinement.
//!
//! The search explores every leaf of the refinement tree (minus branches that
//! differ only by swapping twin vertices) and keeps the labelling whose
//! upper-triangle adjacency code is smallest. That is exponential in the
//! worst case, but the graphs it is used on have at most 16 vertices and are
//! mostly asymmetric.

use super::Graph;

/// Largest order accepted by [`canonical_labeling`].
pub const MAX_CANON_ORDER: usize = 16;

type Cells = Vec<u32>;

fn bits(mut m: u32) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(v)
        }
    })
}

/// Splits cells by neighbour counts into earlier cells until the ordered
/// partition is equitable. Pieces are emitted in ascending count order, so
/// the result commutes with relabelling.
fn refine(adj: &[u32], cells: &mut Cells) {
    'outer: loop {
        for s in 0..cells.len() {
            let splitter = cells[s];
            let mut next = Vec::with_capacity(adj.len());
            let mut split = false;
            for &c in cells.iter() {
                if c.count_ones() == 1 {
                    next.push(c);
                    continue;
                }
                let mut groups = [0u32; MAX_CANON_ORDER + 1];
                for v in bits(c) {
                    groups[(adj[v] & splitter).count_ones() as usize] |= 1 << v;
                }
                let before = next.len();
                next.extend(groups.iter().copied().filter(|&g| g != 0));
                split |= next.len() - before > 1;
            }
            if split {
                *cells = next;
                continue 'outer;
            }
        }
        return;
    }
}

fn leaf_code(adj: &[u32], cells: &Cells) -> u128 {
    let at: Vec<usize> = cells.iter().map(|c| c.trailing_zeros() as usize).collect();
    let mut code = 0u128;
    for j in 1..at.len() {
        for i in 0..j {
            code = (code << 1) | ((adj[at[i]] >> at[j]) & 1) as u128;
        }
    }
    code
}

fn search(adj: &[u32], cells: Cells, best: &mut Option<(u128, Cells)>) {
    let Some(ci) = cells.iter().position(|c| c.count_ones() > 1) else {
        let code = leaf_code(adj, &cells);
        if best.as_ref().is_none_or(|(b, _)| code < *b) {
            *best = Some((code, cells));
        }
        return;
    };
    let cell = cells[ci];
    let mut tried: Vec<usize> = Vec::new();
    for v in bits(cell) {
        let twin = tried
            .iter()
            .any(|&u| adj[u] & !(1 << v) == adj[v] & !(1 << u));
        if twin {
            continue;
        }
        tried.push(v);
        let mut next = Vec::with_capacity(cells.len() + 1);
        next.extend_from_slice(&cells[..ci]);
        next.push(1 << v);
        next.push(cell & !(1 << v));
        next.extend_from_slice(&cells[ci + 1..]);
        refine(adj, &mut next);
        search(adj, next, best);
    }
}

/// `result[v]` is the canonical position of vertex `v`. Isomorphic graphs
/// receive labellings that produce identical relabelled graphs.
///
/// Panics if `g` has more than [`MAX_CANON_ORDER`] vertices.
pub fn canonical_labeling(g: &Graph) -> Vec<usize> {
    let n = g.order();
    assert!(n <= MAX_CANON_ORDER, "canonical labelling supports at most {MAX_CANON_ORDER} vertices");
    if n == 0 {
        return Vec::new();
    }
    let adj: Vec<u32> = (0..n).map(|v| g.neighbors(v).mask() as u32).collect();
    let mut cells = vec![((1u64 << n) - 1) as u32];
    refine(&adj, &mut cells);
    let mut best = None;
    search(&adj, cells, &mut best);
    let (_, cells) = best.expect("the search reaches at least one leaf");
    let mut perm = vec![0; n];
    for (pos, c) in cells.iter().enumerate() {
        perm[c.trailing_zeros() as usize] = pos;
    }
    perm
}

/// The canonical representative of the isomorphism class of `g`.
pub fn canonical_form(g: &Graph) -> Graph {
    g.permuted(&canonical_labeling(g))
}

/// Order and upper-triangle code of the canonical form; equal exactly for
/// isomorphic graphs.
pub fn canonical_code(g: &Graph) -> (usize, u128) {
    let h = canonical_form(g);
    let mut code = 0u128;
    for j in 1..h.order() {
        for i in 0..j {
            code = (code << 1) | h.has_edge(i, j) as u128;
        }
    }
    (h.order(), code)
}
