use crate::domination::{enumerate_min_sets_with, Budget, DominationKind};
use crate::error::Result;
use crate::graph::{ball, Graph, VertexSet};

/// First `(x, y, z)` in lexicographic order with `x, y, z` distinct members
/// of `d`, `xy` an edge and `d(y, z) <= 2`.
///
/// The distance condition is anchored at `y`, so each edge is tried in
/// both orientations.
pub fn has_friendly_triple(g: &Graph, d: &VertexSet) -> Option<(usize, usize, usize)> {
    for x in d.iter() {
        for y in g.neighbors(x).intersection(d).iter() {
            let mut near = ball(g, y, 2);
            near.intersect_with(d);
            near.remove(x);
            near.remove(y);
            if let Some(z) = near.first() {
                return Some((x, y, z));
            }
        }
    }
    None
}

/// A minimum semitotal dominating set containing a friendly triple, the
/// lexicographically first such set if any.
pub fn min_sds_has_friendly_triple(
    g: &Graph,
    budget: &Budget,
) -> Result<Option<(VertexSet, (usize, usize, usize))>> {
    Ok(enumerate_min_sets_with(g, DominationKind::Semitotal, budget)?
        .into_iter()
        .find_map(|d| has_friendly_triple(g, &d).map(|t| (d, t))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, cycle_graph, net_graph, path_graph};

    fn set(n: usize, ids: &[usize]) -> VertexSet {
        VertexSet::from_iter_with(n, ids.iter().copied())
    }

    #[test]
    fn spec_examples() {
        assert_eq!(has_friendly_triple(&cycle_graph(6), &set(6, &[0, 1, 3])), Some((0, 1, 3)));
        assert_eq!(has_friendly_triple(&path_graph(6), &set(6, &[1, 3, 5])), None);
        assert_eq!(has_friendly_triple(&complete_graph(3), &set(3, &[0, 1])), None);
    }

    #[test]
    fn orientation_matters() {
        // path 0-1-2-3 with d = {0, 1, 3}: only y = 1 reaches 3
        let g = path_graph(4);
        assert_eq!(has_friendly_triple(&g, &set(4, &[0, 1, 3])), Some((0, 1, 3)));
        // 0-1-2-3-4 with d = {0,1,4}: no member within distance two of 0 or 1 besides each other
        let g = path_graph(5);
        assert_eq!(has_friendly_triple(&g, &set(5, &[0, 1, 4])), None);
    }

    #[test]
    fn minimum_sets_with_triples() {
        let b = Budget::default();
        assert!(min_sds_has_friendly_triple(&cycle_graph(6), &b).unwrap().is_some());
        let (d, _) = min_sds_has_friendly_triple(&net_graph(), &b).unwrap().unwrap();
        assert_eq!(d, set(6, &[0, 1, 2]));
    }
}
