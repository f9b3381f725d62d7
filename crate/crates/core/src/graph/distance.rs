use std::collections::VecDeque;

use super::{Graph, VertexSet};

/// All-pairs shortest-path lengths. Unreachable pairs hold [`DistanceMatrix::INFINITE`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<usize>,
}

impl DistanceMatrix {
    pub const INFINITE: usize = usize::MAX;

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> usize {
        self.d[u * self.n + v]
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Distance from `v` to the nearest member of `set`.
    pub fn to_set(&self, v: usize, set: &VertexSet) -> usize {
        set.iter().map(|s| self.get(v, s)).min().unwrap_or(Self::INFINITE)
    }

    /// Vertices at distance at most `r` from `v`, `v` included.
    pub fn ball(&self, v: usize, r: usize) -> VertexSet {
        VertexSet::from_iter_with(self.n, (0..self.n).filter(|&u| self.get(v, u) <= r))
    }
}

/// Single-source BFS distances from `s`.
pub fn bfs_distances(g: &Graph, s: usize) -> Vec<usize> {
    let mut dist = vec![DistanceMatrix::INFINITE; g.order()];
    let mut queue = VecDeque::from([s]);
    dist[s] = 0;
    while let Some(x) = queue.pop_front() {
        for y in g.neighbors(x).iter() {
            if dist[y] == DistanceMatrix::INFINITE {
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
        }
    }
    dist
}

pub fn all_pairs_distances(g: &Graph) -> DistanceMatrix {
    let n = g.order();
    let mut d = Vec::with_capacity(n * n);
    for s in 0..n {
        d.extend(bfs_distances(g, s));
    }
    DistanceMatrix { n, d }
}

/// Vertices within distance `r` of `v` (including `v`), by bounded BFS on bitsets.
pub fn ball(g: &Graph, v: usize, r: usize) -> VertexSet {
    let mut reached = VertexSet::new(g.order());
    reached.insert(v);
    let mut frontier = reached.clone();
    for _ in 0..r {
        let mut next = VertexSet::new(g.order());
        for x in frontier.iter() {
            next.union_with(g.neighbors(x));
        }
        next.difference_with(&reached);
        if next.is_empty() {
            break;
        }
        reached.union_with(&next);
        frontier = next;
    }
    reached
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cycle_graph, disjoint_union, path_graph};

    #[test]
    fn path_endpoints() {
        assert_eq!(all_pairs_distances(&path_graph(4)).get(0, 3), 3);
    }

    #[test]
    fn c6_antipodal() {
        let d = all_pairs_distances(&cycle_graph(6));
        assert_eq!(d.get(0, 3), 3);
        assert_eq!(d.get(4, 1), 3);
    }

    #[test]
    fn disconnected_pairs_are_infinite() {
        let g = disjoint_union(&path_graph(2), &path_graph(2));
        let d = all_pairs_distances(&g);
        assert_eq!(d.get(0, 2), DistanceMatrix::INFINITE);
        assert_eq!(d.get(2, 3), 1);
    }

    #[test]
    fn matrix_is_symmetric_with_zero_diagonal() {
        let g = cycle_graph(7);
        let d = all_pairs_distances(&g);
        for u in 0..7 {
            assert_eq!(d.get(u, u), 0);
            for v in 0..7 {
                assert_eq!(d.get(u, v), d.get(v, u));
            }
        }
    }

    #[test]
    fn bitset_ball_matches_matrix() {
        let g = cycle_graph(9);
        let d = all_pairs_distances(&g);
        for v in 0..9 {
            for r in 0..5 {
                assert_eq!(ball(&g, v, r), d.ball(v, r));
            }
        }
    }
}
