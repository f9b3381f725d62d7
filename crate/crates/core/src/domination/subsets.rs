use super::{check_defined, feasible_unchecked, Budget, DominationKind};
use crate::error::Result;
use crate::graph::{Graph, VertexSet};

/// The `k`-subsets of `0..n` in lexicographic order.
#[derive(Debug, Clone)]
pub struct Combinations {
    n: usize,
    current: Option<Vec<usize>>,
}

impl Combinations {
    pub fn new(n: usize, k: usize) -> Self {
        Combinations {
            n,
            current: (k <= n).then(|| (0..k).collect()),
        }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.clone()?;
        let c = self.current.as_mut().expect("checked above");
        let k = c.len();
        match (0..k).rev().find(|&i| c[i] < self.n - k + i) {
            Some(i) => {
                c[i] += 1;
                for j in i + 1..k {
                    c[j] = c[j - 1] + 1;
                }
            }
            None => self.current = None,
        }
        Some(out)
    }
}

/// Every feasible set of exactly `k` vertices, lexicographically ordered.
/// Each visited subset counts against the budget.
pub fn feasible_sets_of_size(
    g: &Graph,
    kind: DominationKind,
    k: usize,
    budget: &Budget,
) -> Result<Vec<VertexSet>> {
    check_defined(g, kind)?;
    let mut tracker = budget.tracker();
    let mut out = Vec::new();
    for c in Combinations::new(g.order(), k) {
        tracker.tick()?;
        let d = VertexSet::from_iter_with(g.order(), c);
        if feasible_unchecked(g, &d, kind) {
            out.push(d);
        }
    }
    Ok(out)
}
