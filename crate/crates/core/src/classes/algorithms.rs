use serde::{Deserialize, Serialize};

use super::{classify_h, is_h_free, pieces, Piece, Verdict};
use crate::blocker::min_sds_has_friendly_triple;
use crate::domination::{
    check_defined, enumerate_min_sets_with, find_set_at_most, solve_with, Budget, Combinations, DominationKind,
    SolveOptions,
};
use crate::error::{Error, Result};
use crate::graph::{all_pairs_distances, bfs_distances, DistanceMatrix, Graph, PatternGraph, VertexSet};

fn precondition(msg: impl Into<String>) -> Error {
    Error::PreconditionViolated(msg.into())
}

fn p3_kp2(k: usize) -> Result<PatternGraph> {
    if k == 0 {
        PatternGraph::parse("P3")
    } else {
        PatternGraph::parse(&format!("P3+{k}P2"))
    }
}

fn require_connected(g: &Graph) -> Result<()> {
    check_defined(g, DominationKind::Semitotal)?;
    if g.is_connected() {
        Ok(())
    } else {
        Err(precondition("the graph is not connected"))
    }
}

/// Some pair `u, v` with `d(u, v) <= 2` dominates `g`, i.e. `γt2(g) = 2`.
pub fn has_semitotal_pair(g: &Graph) -> bool {
    let n = g.order();
    let dm = all_pairs_distances(g);
    let full = g.vertex_set();
    (0..n).any(|u| {
        let nu = g.closed_neighbors(u);
        (u + 1..n).any(|v| dm.get(u, v) <= 2 && nu.union(&g.closed_neighbors(v)) == full)
    })
}

/// Decides `ct_γt2(g) = 1` on a connected `P5`-free graph. Such a graph is
/// a yes-instance exactly when `γt2(g) >= 3`, which a pair scan decides.
pub fn ec1_gt2_p5free(g: &Graph) -> Result<bool> {
    require_connected(g)?;
    if !is_h_free(g, &PatternGraph::parse("P5")?)? {
        return Err(precondition("the graph contains an induced P5"));
    }
    Ok(!has_semitotal_pair(g))
}

/// The lexicographically first vertex set inducing `P3 + (k-1)P2`.
pub fn find_a(g: &Graph, k: usize) -> Option<VertexSet> {
    assert!(k >= 1, "k must be at least 1");
    let size = 2 * k + 1;
    Combinations::new(g.order(), size)
        .find(|c| {
            let s = VertexSet::from_iter_with(g.order(), c.iter().copied());
            let degrees: Vec<usize> = c.iter().map(|&v| g.neighbors(v).intersection_len(&s)).collect();
            degrees.iter().filter(|&&d| d == 2).count() == 1 && degrees.iter().all(|&d| d == 1 || d == 2)
        })
        .map(|c| VertexSet::from_iter_with(g.order(), c))
}

/// The layers around an induced `P3 + (k-1)P2`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ABCPartition {
    pub a: VertexSet,
    /// Distance one from `a`.
    pub b: VertexSet,
    /// Distance two from `a`.
    pub c: VertexSet,
    /// Regular vertices, a subset of `c`.
    pub r: VertexSet,
}

/// Finds `A` for `P3 + kP2`-free `g` and splits the rest by distance. Fails
/// if some vertex is further than two from `A`, which cannot happen in a
/// connected `P3 + kP2`-free graph.
pub fn abc_partition(g: &Graph, k: usize, budget: &Budget) -> Result<Option<ABCPartition>> {
    let Some(a) = find_a(g, k) else {
        return Ok(None);
    };
    let n = g.order();
    let mut dist = vec![usize::MAX; n];
    for s in a.iter() {
        for (v, d) in bfs_distances(g, s).into_iter().enumerate() {
            dist[v] = dist[v].min(d);
        }
    }
    let layer = |i: usize| VertexSet::from_iter_with(n, (0..n).filter(|&v| dist[v] == i));
    let (b, c) = (layer(1), layer(2));
    if a.len() + b.len() + c.len() != n {
        return Err(precondition(format!(
            "some vertex is more than two steps from A; the graph is not connected and P3+{k}P2-free"
        )));
    }
    let mut part = ABCPartition {
        a,
        b,
        c,
        r: VertexSet::new(n),
    };
    part.r = regular_vertices(g, &part, k, budget)?;
    Ok(Some(part))
}

/// Vertices `v1` of `C` for which `k` more vertices of `C` exist such that
/// all `k + 1` are pairwise at distance at least four and each has a clique
/// as neighbourhood.
pub fn regular_vertices(g: &Graph, part: &ABCPartition, k: usize, budget: &Budget) -> Result<VertexSet> {
    let dm = all_pairs_distances(g);
    let pool: Vec<usize> = part.c.iter().filter(|&v| g.is_clique(g.neighbors(v))).collect();
    let mut tracker = budget.tracker();
    let mut out = VertexSet::new(g.order());

    // pick `need` more pool vertices from index `from` on, far from everything chosen
    fn extend(
        dm: &DistanceMatrix,
        pool: &[usize],
        chosen: &mut Vec<usize>,
        from: usize,
        need: usize,
        tick: &mut dyn FnMut() -> Result<()>,
    ) -> Result<bool> {
        if need == 0 {
            return Ok(true);
        }
        for i in from..pool.len() {
            tick()?;
            let v = pool[i];
            if chosen.iter().all(|&u| dm.get(u, v) >= 4) {
                chosen.push(v);
                if extend(dm, pool, chosen, i + 1, need - 1, tick)? {
                    return Ok(true);
                }
                chosen.pop();
            }
        }
        Ok(false)
    }

    for &v in &pool {
        let mut chosen = vec![v];
        if extend(&dm, &pool, &mut chosen, 0, k, &mut || tracker.tick())? {
            out.insert(v);
        }
    }
    Ok(out)
}

/// Size above which a no-instance with no regular vertices cannot have a
/// semitotal dominating set, for `A` of size `a`.
pub fn p3kp2_threshold(k: usize, a: usize) -> usize {
    (k + 1) * (a + 2) + k * (1 + 2 * (k + 1)) + 5 * a - 4
}

/// Decides `ct_γt2(g) = 1` on a connected `P3 + kP2`-free graph.
pub fn ec1_gt2_p3kp2free(g: &Graph, k: usize) -> Result<bool> {
    ec1_gt2_p3kp2free_with(g, k, &Budget::default())
}

pub fn ec1_gt2_p3kp2free_with(g: &Graph, k: usize, budget: &Budget) -> Result<bool> {
    require_connected(g)?;
    if !is_h_free(g, &p3_kp2(k)?)? {
        return Err(precondition(format!("the graph contains an induced {}", p3_kp2(k)?.name())));
    }
    // without an induced P3 the graph is a clique
    if is_h_free(g, &p3_kp2(0)?)? {
        return Ok(false);
    }
    // use the smallest k that still fits
    let mut k = k;
    while k >= 2 && is_h_free(g, &p3_kp2(k - 1)?)? {
        k -= 1;
    }
    let part = abc_partition(g, k, budget)?.expect("g contains an induced P3+(k-1)P2");
    if !part.r.is_empty() {
        // here the answer agrees with the one for domination
        let sets = enumerate_min_sets_with(g, DominationKind::Domination, budget)?;
        return Ok(sets.iter().any(|d| !g.is_independent(d)));
    }
    let threshold = p3kp2_threshold(k, part.a.len());
    let opts = SolveOptions::with_budget(*budget);
    if find_set_at_most(g, DominationKind::Semitotal, threshold, &opts)?.is_none() {
        return Ok(true);
    }
    Ok(min_sds_has_friendly_triple(g, budget)?.is_some())
}

/// Decides `ct_γt2(g) = 1` for `H`-free `g` when `H` is a tractable
/// pattern. Isolated vertices of `H` are peeled off one at a time: if `g`
/// avoids the smaller pattern the question is passed on, otherwise a copy of
/// it dominates `g` and `γt2(g)` is at most twice its order.
pub fn poly_dispatch(g: &Graph, h: &PatternGraph) -> Result<bool> {
    if classify_h(h).verdict != Verdict::PolyTime {
        return Err(precondition(format!("{} is not a tractable pattern", h.name())));
    }
    require_connected(g)?;
    if !is_h_free(g, h)? {
        return Err(precondition(format!("the graph contains an induced {}", h.name())));
    }
    dispatch(g, h.graph())
}

fn dispatch(g: &Graph, h: &Graph) -> Result<bool> {
    if let Some(lone) = h.vertices().find(|&v| h.degree(v) == 0) {
        let keep: Vec<usize> = h.vertices().filter(|&v| v != lone).collect();
        let smaller = h.induced_subgraph(&keep);
        if smaller.order() == 0 {
            return Err(precondition("no graph with a vertex is K1-free"));
        }
        if is_h_free(g, &PatternGraph::new("H", smaller.clone()))? {
            return dispatch(g, &smaller);
        }
        return bounded(g, 2 * smaller.order());
    }
    let pieces = pieces(h);
    let longest = pieces
        .iter()
        .map(|p| match p {
            Piece::Path(n) => *n,
            _ => unreachable!("tractable patterns are linear forests"),
        })
        .max()
        .unwrap_or(0);
    if longest >= 4 {
        ec1_gt2_p5free(g)
    } else {
        let k = pieces.iter().filter(|&&p| p == Piece::Path(2)).count();
        ec1_gt2_p3kp2free(g, k)
    }
}

/// `γt2(g) <= q` is known; decide by the minimum sets.
fn bounded(g: &Graph, q: usize) -> Result<bool> {
    let budget = Budget::default();
    let value = solve_with(g, DominationKind::Semitotal, &SolveOptions::with_budget(budget))?.value;
    if value > q {
        return Err(precondition(format!("γt2 = {value} exceeds the bound {q}")));
    }
    Ok(value >= 3 && min_sds_has_friendly_triple(g, &budget)?.is_some())
}
