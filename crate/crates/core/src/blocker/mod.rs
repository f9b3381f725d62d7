//! Contraction blockers: how many edge contractions it takes to lower a
//! domination parameter, and the structures that decide it.

mod characterize;
mod classic;
mod config;
mod friendly;

pub use characterize::{
    characterize_ct, characterize_ct_with, path_contraction_certificate,
    path_contraction_certificate_from, CtVerdict, Mechanism,
};
pub use classic::{classify_ct_domination, classify_ct_total};
pub use config::{
    exists_plus1_sds_with_config, match_config, match_st_configuration, p4_configuration_check,
    ConfigMatch, StConfigId,
};
pub use friendly::{has_friendly_triple, min_sds_has_friendly_triple};

use serde::{Deserialize, Serialize};

use crate::domination::{
    check_defined, find_set_at_most, parameter, solve_with, Budget, Combinations, DominationKind,
    SolveOptions,
};
use crate::error::{Error, Result};
use crate::graph::{contract_edges, Edge, Graph};

/// A set of edges whose contraction lowers a parameter, with the values on
/// both sides and the resulting vertex map.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ContractionCertificate {
    pub kind: DominationKind,
    pub edges: Vec<Edge>,
    pub value_before: usize,
    pub value_after: usize,
    /// `vertex_map[old] = new` in the contracted graph.
    pub vertex_map: Vec<usize>,
}

impl ContractionCertificate {
    /// Number of contracted edges.
    pub fn k(&self) -> usize {
        self.edges.len()
    }

    /// Builds a certificate by contracting `edges` and solving both sides exactly.
    pub fn for_edges(
        g: &Graph,
        kind: DominationKind,
        edges: &[Edge],
        budget: &Budget,
    ) -> Result<Self> {
        let opts = SolveOptions::with_budget(*budget);
        let value_before = solve_with(g, kind, &opts)?.value;
        let c = contract_edges(g, edges)?;
        let value_after = solve_with(&c.graph, kind, &opts)?.value;
        let mut edges = edges.to_vec();
        edges.sort();
        Ok(ContractionCertificate {
            kind,
            edges,
            value_before,
            value_after,
            vertex_map: c.vertex_map,
        })
    }

    /// Re-derives everything from `g`: the edges exist, the vertex map and
    /// both values are reproduced, and the value strictly drops.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let reject = |m: String| Err(Error::CertificateRejected(m));
        if self.edges.is_empty() {
            return reject("no edges".into());
        }
        for e in &self.edges {
            if e.v >= g.order() || !g.has_edge(e.u, e.v) {
                return reject(format!("({}, {}) is not an edge", e.u, e.v));
            }
        }
        let c = contract_edges(g, &self.edges)?;
        if c.vertex_map != self.vertex_map {
            return reject("vertex map does not match the contraction".into());
        }
        let before = parameter(g, self.kind)?;
        if before != self.value_before {
            return reject(format!("value before is {before}, certificate says {}", self.value_before));
        }
        let after = parameter(&c.graph, self.kind)?;
        if after != self.value_after {
            return reject(format!("value after is {after}, certificate says {}", self.value_after));
        }
        if after >= before {
            return reject(format!("value does not drop ({before} to {after})"));
        }
        Ok(())
    }
}

/// Smallest `k <= kmax` such that contracting some `k` edges strictly lowers
/// the parameter, with a certificate; `None` if there is none.
///
/// Edge sets are tried by increasing size and lexicographically within a
/// size, so the certificate is the first success in that order. Contractions
/// that leave the parameter undefined (a single vertex for the total
/// variants) are skipped.
pub fn ct_exact(g: &Graph, kind: DominationKind, kmax: usize) -> Result<Option<ContractionCertificate>> {
    ct_exact_with(g, kind, kmax, &Budget::default())
}

/// [`ct_exact`] with an explicit budget; the budget applies to each solver
/// call and separately to the number of edge sets tried.
pub fn ct_exact_with(
    g: &Graph,
    kind: DominationKind,
    kmax: usize,
    budget: &Budget,
) -> Result<Option<ContractionCertificate>> {
    check_defined(g, kind)?;
    let opts = SolveOptions::with_budget(*budget);
    let before = solve_with(g, kind, &opts)?.value;
    if before <= kind.floor() {
        return Ok(None);
    }
    let edges = g.edges();
    let mut tracker = budget.tracker();
    for k in 1..=kmax.min(edges.len()) {
        for pick in Combinations::new(edges.len(), k) {
            tracker.tick()?;
            let chosen: Vec<Edge> = pick.iter().map(|&i| edges[i]).collect();
            let c = contract_edges(g, &chosen)?;
            if check_defined(&c.graph, kind).is_err() {
                continue;
            }
            if find_set_at_most(&c.graph, kind, before - 1, &opts)?.is_some() {
                let value_after = solve_with(&c.graph, kind, &opts)?.value;
                return Ok(Some(ContractionCertificate {
                    kind,
                    edges: chosen,
                    value_before: before,
                    value_after,
                    vertex_map: c.vertex_map,
                }));
            }
        }
    }
    Ok(None)
}
