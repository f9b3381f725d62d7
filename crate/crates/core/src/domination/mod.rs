//! Exact domination, total domination and semitotal domination.

mod kind;
mod search;
mod subsets;

pub use kind::DominationKind;
pub use search::Budget;
pub use subsets::{feasible_sets_of_size, Combinations};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{ball, Graph, VertexSet};
use search::{Mode, Search};

/// Optimum value, one optimum set, and optionally every optimum set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveResult {
    pub value: usize,
    pub witness_set: VertexSet,
    /// Lexicographically ordered when present.
    pub all_optima: Option<Vec<VertexSet>>,
}

#[derive(Debug, Clone, Default)]
pub struct SolveOptions {
    pub budget: Budget,
    /// Only these vertices need to be dominated; defaults to all of them.
    /// Witness requirements of semitotal domination still apply to every
    /// member of the set.
    pub must_dominate: Option<VertexSet>,
    /// Also list every optimum.
    pub all: bool,
}

impl SolveOptions {
    pub fn with_budget(budget: Budget) -> Self {
        SolveOptions {
            budget,
            ..Default::default()
        }
    }
}

/// Rejects graphs on which the parameter is undefined: the empty graph, and
/// for total and semitotal domination any graph with an isolated vertex.
pub(crate) fn check_defined(g: &Graph, kind: DominationKind) -> Result<()> {
    if g.order() == 0 {
        return Err(Error::Infeasible("the graph has no vertices".into()));
    }
    if kind != DominationKind::Domination {
        if g.order() < 2 {
            return Err(Error::Infeasible(format!("{kind} domination needs at least two vertices")));
        }
        if g.has_isolated_vertex() {
            return Err(Error::Infeasible(format!(
                "{kind} domination is undefined on graphs with isolated vertices"
            )));
        }
    }
    Ok(())
}

/// Checks whether `d` is a dominating set of the given kind.
pub fn is_feasible(g: &Graph, d: &VertexSet, kind: DominationKind) -> Result<bool> {
    check_defined(g, kind)?;
    if let Some(v) = d.iter().find(|&v| v >= g.order()) {
        return Err(Error::VertexOutOfRange(v, g.order()));
    }
    Ok(feasible_unchecked(g, d, kind))
}

pub(crate) fn feasible_unchecked(g: &Graph, d: &VertexSet, kind: DominationKind) -> bool {
    match kind {
        DominationKind::Domination => {
            g.vertices().all(|u| d.contains(u) || g.neighbors(u).intersects(d))
        }
        DominationKind::Total => g.vertices().all(|u| g.neighbors(u).intersects(d)),
        DominationKind::Semitotal => {
            feasible_unchecked(g, d, DominationKind::Domination)
                && d.iter().all(|v| {
                    let mut near = ball(g, v, 2);
                    near.remove(v);
                    near.intersects(d)
                })
        }
    }
}

/// Exact optimum with default options.
pub fn solve(g: &Graph, kind: DominationKind) -> Result<SolveResult> {
    solve_with(g, kind, &SolveOptions::default())
}

pub fn solve_with(g: &Graph, kind: DominationKind, opts: &SolveOptions) -> Result<SolveResult> {
    check_defined(g, kind)?;
    let mut s = Search::new(g, kind, opts.must_dominate.as_ref(), Mode::Optimize, &opts.budget);
    s.run()?;
    let witness_set = s
        .found
        .ok_or_else(|| Error::Infeasible("no feasible set exists".into()))?;
    let value = witness_set.len();
    let all_optima = if opts.all {
        Some(collect(g, kind, value, opts)?)
    } else {
        None
    };
    Ok(SolveResult {
        value,
        witness_set,
        all_optima,
    })
}

/// The parameter value alone.
pub fn parameter(g: &Graph, kind: DominationKind) -> Result<usize> {
    solve(g, kind).map(|r| r.value)
}

/// A feasible set of size at most `k`, if one exists.
pub fn find_set_at_most(
    g: &Graph,
    kind: DominationKind,
    k: usize,
    opts: &SolveOptions,
) -> Result<Option<VertexSet>> {
    check_defined(g, kind)?;
    let mut s = Search::new(g, kind, opts.must_dominate.as_ref(), Mode::Decide(k), &opts.budget);
    s.run()?;
    Ok(s.found)
}

fn collect(g: &Graph, kind: DominationKind, value: usize, opts: &SolveOptions) -> Result<Vec<VertexSet>> {
    let mut s = Search::new(g, kind, opts.must_dominate.as_ref(), Mode::Collect(value), &opts.budget);
    s.run()?;
    let mut all = s.all;
    all.sort_by(|a, b| a.lex_cmp(b));
    Ok(all)
}

/// Every minimum set of the given kind, lexicographically ordered.
pub fn enumerate_min_sets(g: &Graph, kind: DominationKind) -> Result<Vec<VertexSet>> {
    enumerate_min_sets_with(g, kind, &Budget::default())
}

pub fn enumerate_min_sets_with(
    g: &Graph,
    kind: DominationKind,
    budget: &Budget,
) -> Result<Vec<VertexSet>> {
    let opts = SolveOptions {
        budget: *budget,
        all: true,
        must_dominate: None,
    };
    Ok(solve_with(g, kind, &opts)?
        .all_optima
        .expect("requested all optima"))
}

/// Members of `d ∖ {v}` within distance two of `v`.
pub fn witnesses_of(g: &Graph, d: &VertexSet, v: usize) -> Result<VertexSet> {
    g.check_vertex(v)?;
    if !d.contains(v) {
        return Err(Error::NotInSet(v));
    }
    let mut near = ball(g, v, 2);
    near.remove(v);
    near.intersect_with(d);
    Ok(near)
}

/// Vertices outside `d` whose only neighbour in `d` is `v`.
pub fn private_neighbours(g: &Graph, d: &VertexSet, v: usize) -> Result<VertexSet> {
    g.check_vertex(v)?;
    if !d.contains(v) {
        return Err(Error::NotInSet(v));
    }
    let mut out = VertexSet::new(g.order());
    for w in g.neighbors(v).iter() {
        if !d.contains(w) && g.neighbors(w).intersection_len(d) == 1 {
            out.insert(w);
        }
    }
    Ok(out)
}

/// Whether no minimum semitotal dominating set contains an edge.
pub fn all_min_sds_independent(g: &Graph) -> Result<bool> {
    Ok(enumerate_min_sets(g, DominationKind::Semitotal)?
        .iter()
        .all(|d| g.is_independent(d)))
}
