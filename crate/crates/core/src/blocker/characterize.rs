use serde::{Deserialize, Serialize};

use super::config::{exists_plus1_sds_with_config, ConfigMatch};
use super::friendly::min_sds_has_friendly_triple;
use super::ContractionCertificate;
use crate::domination::{
    check_defined, feasible_unchecked, solve_with, Budget, DominationKind, SolveOptions,
};
use crate::error::{Error, Result};
use crate::graph::{all_pairs_distances, bfs_distances, Edge, Graph, VertexSet};

/// Why `ct` takes the value it does.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "mechanism", rename_all = "kebab-case")]
pub enum Mechanism {
    /// A minimum semitotal dominating set containing a friendly triple.
    FriendlyTriple {
        set: VertexSet,
        triple: (usize, usize, usize),
    },
    /// A semitotal dominating set one larger than the minimum containing
    /// an ST-configuration.
    StConfiguration { set: VertexSet, matched: ConfigMatch },
    /// Neither of the above; a shortest path of at most three edges between
    /// members of a minimum set does the job.
    ShortestPath { certificate: ContractionCertificate },
    /// `γt2 = 2`, which no contraction can lower.
    Floor,
}

impl Mechanism {
    pub fn name(&self) -> &'static str {
        match self {
            Mechanism::FriendlyTriple { .. } => "friendly-triple",
            Mechanism::StConfiguration { .. } => "st-configuration",
            Mechanism::ShortestPath { .. } => "shortest-path",
            Mechanism::Floor => "floor",
        }
    }
}

/// The contraction number for semitotal domination with its evidence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CtVerdict {
    pub gamma_t2: usize,
    /// `None` when the graph is not reducible.
    #[serde(rename = "ct")]
    pub k: Option<usize>,
    #[serde(flatten)]
    pub mechanism: Mechanism,
}

impl CtVerdict {
    /// The edges the evidence says to contract.
    pub fn edges(&self) -> Option<Vec<Edge>> {
        match &self.mechanism {
            Mechanism::FriendlyTriple { triple: (x, y, _), .. } => Some(vec![Edge::new(*x, *y)]),
            Mechanism::StConfiguration { matched, .. } => Some(matched.thick_edges.to_vec()),
            Mechanism::ShortestPath { certificate } => Some(certificate.edges.clone()),
            Mechanism::Floor => None,
        }
    }

    /// Contracts the evidence edges and solves the result exactly.
    pub fn certificate(&self, g: &Graph, budget: &Budget) -> Result<Option<ContractionCertificate>> {
        match &self.mechanism {
            Mechanism::ShortestPath { certificate } => Ok(Some(certificate.clone())),
            _ => self
                .edges()
                .map(|e| ContractionCertificate::for_edges(g, DominationKind::Semitotal, &e, budget))
                .transpose(),
        }
    }

    /// Checks that the evidence is what it claims to be on `g`.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let reject = |m: &str| Err(Error::CertificateRejected(m.to_string()));
        let value = solve_with(g, DominationKind::Semitotal, &SolveOptions::default())?.value;
        if value != self.gamma_t2 {
            return reject("gamma_t2 does not match");
        }
        // sets read back from JSON are only as wide as their largest member
        let resized = |set: &VertexSet| VertexSet::from_iter_with(g.order(), set.iter().filter(|&v| v < g.order()));
        let set_ok = |set: &VertexSet, size: usize| {
            set.len() == size
                && set.iter().all(|v| v < g.order())
                && feasible_unchecked(g, &resized(set), DominationKind::Semitotal)
        };
        match (&self.mechanism, self.k) {
            (Mechanism::Floor, None) if value == 2 => Ok(()),
            (Mechanism::FriendlyTriple { set, triple }, Some(1)) => {
                if !set_ok(set, value) {
                    return reject("set is not a minimum semitotal dominating set");
                }
                let (x, y, z) = *triple;
                let inside = [x, y, z].iter().all(|&v| set.contains(v));
                let dist = bfs_distances(g, y);
                if !inside || x == z || y == z || !g.has_edge(x, y) || dist[z] > 2 {
                    return reject("not a friendly triple");
                }
                Ok(())
            }
            (Mechanism::StConfiguration { set, matched }, Some(2)) => {
                if !set_ok(set, value + 1) {
                    return reject("set is not a semitotal dominating set of size gamma_t2 + 1");
                }
                if !matched.validate(g, &resized(set)) {
                    return reject("configuration does not match");
                }
                Ok(())
            }
            (Mechanism::ShortestPath { certificate }, Some(k)) if k == certificate.k() && k <= 3 => {
                certificate.validate(g)
            }
            _ => reject("k and mechanism disagree"),
        }
    }
}

/// Decides `ct` for semitotal domination from the structure of small
/// semitotal dominating sets instead of trying contractions.
pub fn characterize_ct(g: &Graph) -> Result<CtVerdict> {
    characterize_ct_with(g, &Budget::default())
}

pub fn characterize_ct_with(g: &Graph, budget: &Budget) -> Result<CtVerdict> {
    check_defined(g, DominationKind::Semitotal)?;
    require_connected(g)?;
    let opts = SolveOptions::with_budget(*budget);
    let sol = solve_with(g, DominationKind::Semitotal, &opts)?;
    let gamma_t2 = sol.value;
    if gamma_t2 == 2 {
        return Ok(CtVerdict {
            gamma_t2,
            k: None,
            mechanism: Mechanism::Floor,
        });
    }
    if let Some((set, triple)) = min_sds_has_friendly_triple(g, budget)? {
        return Ok(CtVerdict {
            gamma_t2,
            k: Some(1),
            mechanism: Mechanism::FriendlyTriple { set, triple },
        });
    }
    if let Some((set, matched)) = exists_plus1_sds_with_config(g, budget)? {
        return Ok(CtVerdict {
            gamma_t2,
            k: Some(2),
            mechanism: Mechanism::StConfiguration { set, matched },
        });
    }
    let certificate = path_certificate(g, &sol.witness_set, gamma_t2, budget)?;
    Ok(CtVerdict {
        gamma_t2,
        k: Some(3),
        mechanism: Mechanism::ShortestPath { certificate },
    })
}

/// Lowers `γt2` by contracting a shortest path between members of a
/// minimum semitotal dominating set found by the solver.
///
/// Fails with [`Error::Floor`] when `γt2 < 3`.
pub fn path_contraction_certificate(g: &Graph) -> Result<ContractionCertificate> {
    check_defined(g, DominationKind::Semitotal)?;
    require_connected(g)?;
    let budget = Budget::default();
    let sol = solve_with(g, DominationKind::Semitotal, &SolveOptions::with_budget(budget))?;
    if sol.value < 3 {
        return Err(Error::Floor);
    }
    path_certificate(g, &sol.witness_set, sol.value, &budget)
}

/// As [`path_contraction_certificate`], starting from a given minimum set `d`.
pub fn path_contraction_certificate_from(g: &Graph, d: &VertexSet) -> Result<ContractionCertificate> {
    check_defined(g, DominationKind::Semitotal)?;
    require_connected(g)?;
    let budget = Budget::default();
    let value = solve_with(g, DominationKind::Semitotal, &SolveOptions::with_budget(budget))?.value;
    if value < 3 {
        return Err(Error::Floor);
    }
    if d.len() != value
        || d.iter().any(|v| v >= g.order())
        || !feasible_unchecked(g, d, DominationKind::Semitotal)
    {
        return Err(Error::PreconditionViolated(
            "the set is not a minimum semitotal dominating set".into(),
        ));
    }
    path_certificate(g, d, value, &budget)
}

fn require_connected(g: &Graph) -> Result<()> {
    if g.is_connected() {
        Ok(())
    } else {
        Err(Error::PreconditionViolated("the graph is not connected".into()))
    }
}

/// Picks the first pair `u < v` of `d` at distance at most two, the member
/// `w` of the rest closest to the pair (smallest id on ties), and contracts a
/// shortest path from `w` to the nearer of `u` and `v` (`u` on ties). The
/// path has at most three edges.
fn path_certificate(
    g: &Graph,
    d: &VertexSet,
    value: usize,
    budget: &Budget,
) -> Result<ContractionCertificate> {
    let dm = all_pairs_distances(g);
    let members = d.to_vec();
    let (u, v) = members
        .iter()
        .enumerate()
        .flat_map(|(i, &u)| members[i + 1..].iter().map(move |&v| (u, v)))
        .find(|&(u, v)| dm.get(u, v) <= 2)
        .ok_or_else(|| Error::PreconditionViolated("no two members within distance two".into()))?;
    let w = members
        .iter()
        .copied()
        .filter(|&x| x != u && x != v)
        .min_by_key(|&x| (dm.get(x, u).min(dm.get(x, v)), x))
        .ok_or(Error::Floor)?;
    let target = if dm.get(w, u) <= dm.get(w, v) { u } else { v };

    // walk from w towards target, always stepping to the smallest-id neighbour one closer
    let to_target = bfs_distances(g, target);
    if to_target[w] > 3 {
        return Err(Error::PreconditionViolated(
            "no other member within distance three of the pair".into(),
        ));
    }
    let mut path = Vec::new();
    let mut cur = w;
    while cur != target {
        let next = g
            .neighbors(cur)
            .iter()
            .find(|&x| to_target[x] + 1 == to_target[cur])
            .expect("a shortest path exists in a connected graph");
        path.push(Edge::new(cur, next));
        cur = next;
    }
    debug_assert!(path.len() <= 3);
    let cert = ContractionCertificate::for_edges(g, DominationKind::Semitotal, &path, budget)?;
    debug_assert_eq!(cert.value_before, value);
    Ok(cert)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cycle_graph, star};

    #[test]
    fn c6_is_friendly() {
        let g = cycle_graph(6);
        let v = characterize_ct(&g).unwrap();
        assert_eq!(v.k, Some(1));
        assert_eq!(v.mechanism.name(), "friendly-triple");
        v.validate(&g).unwrap();
    }

    #[test]
    fn star_is_at_the_floor() {
        let v = characterize_ct(&star(3)).unwrap();
        assert_eq!((v.gamma_t2, v.k), (2, None));
        assert_eq!(v.mechanism, Mechanism::Floor);
    }

    #[test]
    fn c6_path_recipe() {
        let g = cycle_graph(6);
        let d = VertexSet::from_iter_with(6, [0, 2, 4]);
        let cert = path_contraction_certificate_from(&g, &d).unwrap();
        assert_eq!(cert.edges, vec![Edge::new(0, 5), Edge::new(4, 5)]);
        assert_eq!((cert.value_before, cert.value_after), (3, 2));
        cert.validate(&g).unwrap();
    }

    #[test]
    fn floor_is_reported() {
        assert_eq!(path_contraction_certificate(&star(3)), Err(Error::Floor));
    }

    #[test]
    fn wrong_start_set_is_rejected() {
        let g = cycle_graph(6);
        let d = VertexSet::from_iter_with(6, [0, 3]);
        assert!(matches!(
            path_contraction_certificate_from(&g, &d),
            Err(Error::PreconditionViolated(_))
        ));
    }
}
