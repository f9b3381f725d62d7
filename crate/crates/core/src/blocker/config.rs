//! The seven ST-configurations and a backtracking matcher for them.
//!
//! Solid constraints are edges of the host graph; dashed constraints ask
//! for distance exactly two in the host graph. Additional adjacencies
//! between role vertices are unconstrained. Role vertices are distinct,
//! except that the two dashed endpoints `c` and `f` of `O3` may coincide.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::domination::{feasible_sets_of_size, solve_with, Budget, DominationKind, SolveOptions};
use crate::error::Result;
use crate::graph::{all_pairs_distances, contains_subgraph, DistanceMatrix, Edge, Graph, PatternGraph, VertexSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum StConfigId {
    O1,
    O2,
    O3,
    O4,
    O5,
    O6,
    O7,
}

struct Shape {
    roles: &'static [&'static str],
    solid: &'static [(usize, usize)],
    dashed: &'static [(usize, usize)],
    thick: [(usize, usize); 2],
    may_coincide: Option<(usize, usize)>,
}

const ABCDEF: &[&str] = &["a", "b", "c", "d", "e", "f"];
const ABCD: &[&str] = &["a", "b", "c", "d"];

impl StConfigId {
    pub const ALL: [StConfigId; 7] = [
        Self::O1,
        Self::O2,
        Self::O3,
        Self::O4,
        Self::O5,
        Self::O6,
        Self::O7,
    ];

    fn shape(self) -> Shape {
        match self {
            Self::O1 => Shape {
                roles: ABCDEF,
                solid: &[(0, 1), (1, 2), (3, 4), (4, 5)],
                dashed: &[],
                thick: [(0, 1), (3, 4)],
                may_coincide: None,
            },
            Self::O2 => Shape {
                roles: ABCDEF,
                solid: &[(0, 1), (3, 4), (4, 5)],
                dashed: &[(1, 2)],
                thick: [(0, 1), (3, 4)],
                may_coincide: None,
            },
            Self::O3 => Shape {
                roles: ABCDEF,
                solid: &[(0, 1), (3, 4)],
                dashed: &[(1, 2), (4, 5)],
                thick: [(0, 1), (3, 4)],
                may_coincide: Some((2, 5)),
            },
            Self::O4 => Shape {
                roles: &["x", "a", "b", "c"],
                solid: &[(0, 1), (0, 2), (0, 3)],
                dashed: &[],
                thick: [(0, 1), (0, 2)],
                may_coincide: None,
            },
            Self::O5 => Shape {
                roles: ABCD,
                solid: &[(0, 1), (1, 2)],
                dashed: &[(2, 3)],
                thick: [(0, 1), (1, 2)],
                may_coincide: None,
            },
            Self::O6 => Shape {
                roles: ABCD,
                solid: &[(0, 1), (1, 3)],
                dashed: &[(1, 2)],
                thick: [(0, 1), (1, 3)],
                may_coincide: None,
            },
            Self::O7 => Shape {
                roles: ABCD,
                solid: &[(0, 1), (2, 3)],
                dashed: &[(1, 2)],
                thick: [(0, 1), (2, 3)],
                may_coincide: None,
            },
        }
    }

    /// Role names in assignment order.
    pub fn roles(self) -> &'static [&'static str] {
        self.shape().roles
    }
}

impl fmt::Display for StConfigId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// A configuration found inside a vertex set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConfigMatch {
    pub config: StConfigId,
    /// Role name to host vertex.
    pub assignment: BTreeMap<String, usize>,
    /// The two edges whose contraction the configuration calls for.
    pub thick_edges: [Edge; 2],
}

impl ConfigMatch {
    fn from_tuple(config: StConfigId, tuple: &[usize]) -> Self {
        let shape = config.shape();
        let assignment = shape
            .roles
            .iter()
            .zip(tuple)
            .map(|(r, &v)| (r.to_string(), v))
            .collect();
        let thick_edges = shape.thick.map(|(i, j)| Edge::new(tuple[i], tuple[j]));
        ConfigMatch {
            config,
            assignment,
            thick_edges,
        }
    }

    /// Vertices in role order.
    pub fn tuple(&self) -> Vec<usize> {
        self.config
            .roles()
            .iter()
            .map(|r| self.assignment[*r])
            .collect()
    }

    /// Re-checks every constraint against `g` and membership in `s`.
    pub fn validate(&self, g: &Graph, s: &VertexSet) -> bool {
        let roles = self.config.roles();
        if self.assignment.len() != roles.len() || roles.iter().any(|r| !self.assignment.contains_key(*r)) {
            return false;
        }
        let t = self.tuple();
        if t.iter().any(|&v| v >= g.order() || !s.contains(v)) {
            return false;
        }
        let dm = all_pairs_distances(g);
        let shape = self.config.shape();
        let ok = (0..t.len()).all(|i| consistent(&shape, &dm, &t[..=i]));
        ok && self.thick_edges == shape.thick.map(|(i, j)| Edge::new(t[i], t[j]))
    }
}

/// Whether the newest entry of `partial` respects every constraint that
/// involves only assigned roles.
fn consistent(shape: &Shape, dm: &DistanceMatrix, partial: &[usize]) -> bool {
    let j = partial.len() - 1;
    let v = partial[j];
    for (i, &u) in partial[..j].iter().enumerate() {
        if u == v && shape.may_coincide != Some((i, j)) {
            return false;
        }
    }
    shape
        .solid
        .iter()
        .filter(|&&(a, b)| a.max(b) == j)
        .all(|&(a, b)| dm.get(partial[a], partial[b]) == 1)
        && shape
            .dashed
            .iter()
            .filter(|&&(a, b)| a.max(b) == j)
            .all(|&(a, b)| dm.get(partial[a], partial[b]) == 2)
}

fn search(shape: &Shape, dm: &DistanceMatrix, members: &[usize], partial: &mut Vec<usize>) -> bool {
    if partial.len() == shape.roles.len() {
        return true;
    }
    for &v in members {
        partial.push(v);
        if consistent(shape, dm, partial) && search(shape, dm, members, partial) {
            return true;
        }
        partial.pop();
    }
    false
}

pub(crate) fn match_config_in(
    dm: &DistanceMatrix,
    s: &VertexSet,
    config: StConfigId,
) -> Option<ConfigMatch> {
    let members = s.to_vec();
    let shape = config.shape();
    let mut partial = Vec::with_capacity(shape.roles.len());
    search(&shape, dm, &members, &mut partial).then(|| ConfigMatch::from_tuple(config, &partial))
}

/// The lexicographically first assignment of `config` inside `s`.
pub fn match_config(g: &Graph, s: &VertexSet, config: StConfigId) -> Option<ConfigMatch> {
    match_config_in(&all_pairs_distances(g), s, config)
}

/// Scans `O1` to `O7` in order and returns the first configuration found
/// inside `s`, with its lexicographically first role assignment.
pub fn match_st_configuration(g: &Graph, s: &VertexSet) -> Option<ConfigMatch> {
    let dm = all_pairs_distances(g);
    StConfigId::ALL
        .iter()
        .find_map(|&c| match_config_in(&dm, s, c))
}

/// A semitotal dominating set of size `γt2(g) + 1` containing an
/// ST-configuration; the lexicographically first such set.
pub fn exists_plus1_sds_with_config(
    g: &Graph,
    budget: &Budget,
) -> Result<Option<(VertexSet, ConfigMatch)>> {
    let value = solve_with(g, DominationKind::Semitotal, &SolveOptions::with_budget(*budget))?.value;
    let dm = all_pairs_distances(g);
    let sets = feasible_sets_of_size(g, DominationKind::Semitotal, value + 1, budget)?;
    Ok(sets.into_iter().find_map(|s| {
        StConfigId::ALL
            .iter()
            .find_map(|&c| match_config_in(&dm, &s, c))
            .map(|m| (s, m))
    }))
}

/// True when `d` contains no (not necessarily induced) `P4` of `g`, or when
/// it contains `O4` or `O6`.
pub fn p4_configuration_check(g: &Graph, d: &VertexSet) -> bool {
    let ids = d.to_vec();
    let inner = g.induced_subgraph(&ids);
    let p4 = PatternGraph::parse("P4").expect("valid pattern name");
    let has_p4 = contains_subgraph(&inner, &p4)
        .expect("pattern is small")
        .is_some();
    if !has_p4 {
        return true;
    }
    let dm = all_pairs_distances(g);
    match_config_in(&dm, d, StConfigId::O4).is_some() || match_config_in(&dm, d, StConfigId::O6).is_some()
}
