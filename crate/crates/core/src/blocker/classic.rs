//! The known characterizations of `ct` for domination and total domination.

use crate::domination::{
    enumerate_min_sets_with, feasible_sets_of_size, solve_with, Budget, DominationKind,
    SolveOptions,
};
use crate::error::{Error, Result};
use crate::graph::{contains_subgraph, Graph, PatternGraph, VertexSet};

fn edges_inside(g: &Graph, d: &VertexSet) -> usize {
    d.iter().map(|v| g.neighbors(v).intersection_len(d)).sum::<usize>() / 2
}

fn has_subgraph(g: &Graph, d: &VertexSet, patterns: &[PatternGraph]) -> bool {
    let inner = g.induced_subgraph(&d.to_vec());
    patterns
        .iter()
        .any(|p| contains_subgraph(&inner, p).expect("patterns are small").is_some())
}

fn patterns(names: &[&str]) -> Vec<PatternGraph> {
    names
        .iter()
        .map(|n| PatternGraph::parse(n).expect("valid pattern name"))
        .collect()
}

/// `ct` for domination from the structure of dominating sets: 1 if some
/// minimum dominating set is not independent, 2 if some dominating set of
/// size `γ + 1` spans at least two edges, 3 otherwise.
///
/// Requires `γ(g) >= 2`.
pub fn classify_ct_domination(g: &Graph, budget: &Budget) -> Result<usize> {
    let kind = DominationKind::Domination;
    let value = solve_with(g, kind, &SolveOptions::with_budget(*budget))?.value;
    if value < 2 {
        return Err(Error::PreconditionViolated("domination number is below 2".into()));
    }
    if enumerate_min_sets_with(g, kind, budget)?
        .iter()
        .any(|d| !g.is_independent(d))
    {
        return Ok(1);
    }
    if feasible_sets_of_size(g, kind, value + 1, budget)?
        .iter()
        .any(|d| edges_inside(g, d) >= 2)
    {
        return Ok(2);
    }
    Ok(3)
}

/// `ct` for total domination: 1 if some minimum total dominating set spans
/// a (not necessarily induced) `P3`, 2 if some total dominating set of size
/// `γt + 1` spans a `P4`, `K1,3` or `2P3`, 3 otherwise.
///
/// Requires `γt(g) >= 3`.
pub fn classify_ct_total(g: &Graph, budget: &Budget) -> Result<usize> {
    let kind = DominationKind::Total;
    let value = solve_with(g, kind, &SolveOptions::with_budget(*budget))?.value;
    if value < 3 {
        return Err(Error::PreconditionViolated("total domination number is below 3".into()));
    }
    let p3 = patterns(&["P3"]);
    if enumerate_min_sets_with(g, kind, budget)?
        .iter()
        .any(|d| has_subgraph(g, d, &p3))
    {
        return Ok(1);
    }
    let wide = patterns(&["P4", "claw", "2P3"]);
    if feasible_sets_of_size(g, kind, value + 1, budget)?
        .iter()
        .any(|d| has_subgraph(g, d, &wide))
    {
        return Ok(2);
    }
    Ok(3)
}
