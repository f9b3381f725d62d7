//! Branch and bound over vertex bitsets.
//!
//! Each node holds a partial set `D` and a set of forbidden vertices. The
//! node branches on one unmet requirement: an undominated target vertex, or
//! (semitotal only, once everything is dominated) a member of `D` with no
//! other member within distance two. Candidates that satisfy the requirement
//! are tried in order of decreasing gain, and every candidate is forbidden in
//! the branches of its later siblings, so each feasible set is reached at
//! most once. That makes the same search usable for optimization, for
//! decision queries and for listing every optimum.

use std::time::Instant;

use super::DominationKind;
use crate::error::{Error, Result};
use crate::graph::{ball, Graph, VertexSet};

/// Limits on the size of a search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    /// Search nodes (or visited subsets for subset scans) before giving up.
    pub max_nodes: u64,
    pub deadline: Option<Instant>,
}

impl Budget {
    pub const DEFAULT_NODES: u64 = 100_000_000;

    pub fn nodes(max_nodes: u64) -> Self {
        Budget {
            max_nodes,
            deadline: None,
        }
    }

    pub fn with_deadline(mut self, deadline: Instant) -> Self {
        self.deadline = Some(deadline);
        self
    }

    pub(crate) fn tracker(&self) -> Tracker {
        Tracker {
            budget: *self,
            used: 0,
        }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::nodes(Self::DEFAULT_NODES)
    }
}

pub(crate) struct Tracker {
    budget: Budget,
    used: u64,
}

impl Tracker {
    #[inline]
    pub(crate) fn tick(&mut self) -> Result<()> {
        self.used += 1;
        if self.used > self.budget.max_nodes {
            return Err(Error::ScaleLimit(format!(
                "more than {} search nodes",
                self.budget.max_nodes
            )));
        }
        if self.used % 4096 == 0 {
            if let Some(deadline) = self.budget.deadline {
                if Instant::now() >= deadline {
                    return Err(Error::ScaleLimit("time budget exhausted".into()));
                }
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Mode {
    /// Minimize, keeping the first set of each improving size.
    Optimize,
    /// Stop at the first set of size at most the given bound.
    Decide(usize),
    /// Collect every feasible set of exactly the given size (which must be
    /// the optimum, since smaller feasible sets end the descent early).
    Collect(usize),
}

pub(crate) struct Search {
    kind: DominationKind,
    n: usize,
    /// Vertices that dominate `u`: `N[u]`, or `N(u)` for total domination.
    dom_by: Vec<VertexSet>,
    /// `ball2(v) ∖ {v}`.
    near: Vec<VertexSet>,
    /// `ball3(v)`, semitotal only.
    far: Vec<VertexSet>,
    target: VertexSet,
    mode: Mode,
    tracker: Tracker,
    /// Sets must be strictly smaller than this to be recorded.
    pub(crate) best: usize,
    pub(crate) found: Option<VertexSet>,
    pub(crate) all: Vec<VertexSet>,
}

impl Search {
    pub(crate) fn new(
        g: &Graph,
        kind: DominationKind,
        target: Option<&VertexSet>,
        mode: Mode,
        budget: &Budget,
    ) -> Self {
        let n = g.order();
        let dom_by = (0..n)
            .map(|u| match kind {
                DominationKind::Total => g.neighbors(u).clone(),
                _ => g.closed_neighbors(u),
            })
            .collect();
        let (near, far) = if kind == DominationKind::Semitotal {
            let near = (0..n)
                .map(|v| {
                    let mut b = ball(g, v, 2);
                    b.remove(v);
                    b
                })
                .collect();
            (near, (0..n).map(|v| ball(g, v, 3)).collect())
        } else {
            (Vec::new(), Vec::new())
        };
        let best = match mode {
            Mode::Optimize => n + 1,
            Mode::Decide(k) | Mode::Collect(k) => k + 1,
        };
        Search {
            kind,
            n,
            dom_by,
            near,
            far,
            target: target.cloned().unwrap_or_else(|| VertexSet::full(n)),
            mode,
            tracker: budget.tracker(),
            best,
            found: None,
            all: Vec::new(),
        }
    }

    pub(crate) fn run(&mut self) -> Result<()> {
        let mut d = VertexSet::new(self.n);
        let covered = VertexSet::new(self.n);
        let forbidden = VertexSet::new(self.n);
        self.descend(&mut d, &covered, &forbidden).map(|_| ())
    }

    fn limit(&self) -> usize {
        match self.mode {
            Mode::Collect(k) => k,
            _ => self.best - 1,
        }
    }

    /// Greedy packing of pairwise disjoint demand regions. Each region must
    /// receive `weight` fresh vertices, so the total weight of a disjoint
    /// family bounds the number of vertices still to add. `None` means some
    /// demand cannot be met at all.
    fn lower_bound(
        &self,
        d: &VertexSet,
        covered: &VertexSet,
        allowed: &VertexSet,
    ) -> Option<usize> {
        let semitotal = self.kind == DominationKind::Semitotal;
        let mut items: Vec<(usize, VertexSet)> = Vec::new();
        for u in self.target.difference(covered).iter() {
            let region = self.dom_by[u].intersection(allowed);
            if region.is_empty() {
                return None;
            }
            if semitotal && !self.far[u].intersects(d) {
                // the dominator of u and its witness are both new and lie in ball3(u)
                let wide = self.far[u].intersection(allowed);
                if wide.len() < 2 {
                    return None;
                }
                items.push((2, wide));
            } else {
                items.push((1, region));
            }
        }
        if semitotal {
            for v in d.iter() {
                if !self.near[v].intersects(d) {
                    let region = self.near[v].intersection(allowed);
                    if region.is_empty() {
                        return None;
                    }
                    items.push((1, region));
                }
            }
        }
        if items.is_empty() {
            return Some(0);
        }
        let pack = |items: &[(usize, VertexSet)]| {
            let mut used = VertexSet::new(self.n);
            let mut total = 0;
            for (w, r) in items {
                if !r.intersects(&used) {
                    used.union_with(r);
                    total += w;
                }
            }
            total
        };
        items.sort_by_key(|(_, r)| r.len());
        let a = pack(&items);
        items.sort_by_key(|(w, r)| (std::cmp::Reverse(*w), r.len()));
        let b = pack(&items);
        Some(a.max(b))
    }

    /// Returns `true` when the search should stop.
    fn descend(
        &mut self,
        d: &mut VertexSet,
        covered: &VertexSet,
        forbidden: &VertexSet,
    ) -> Result<bool> {
        self.tracker.tick()?;
        let size = d.len();
        let mut allowed = VertexSet::full(self.n);
        allowed.difference_with(forbidden);
        allowed.difference_with(d);
        let Some(lb) = self.lower_bound(d, covered, &allowed) else {
            return Ok(false);
        };
        if size + lb > self.limit() {
            return Ok(false);
        }

        let undominated = self.target.difference(covered);
        let mut choice: Option<VertexSet> = None;
        for u in undominated.iter() {
            let c = self.dom_by[u].intersection(&allowed);
            if choice.as_ref().is_none_or(|b| c.len() < b.len()) {
                choice = Some(c);
            }
        }
        if choice.is_none() && self.kind == DominationKind::Semitotal {
            for v in d.iter() {
                if !self.near[v].intersects(d) {
                    let c = self.near[v].intersection(&allowed);
                    if choice.as_ref().is_none_or(|b| c.len() < b.len()) {
                        choice = Some(c);
                    }
                }
            }
        }

        let Some(candidates) = choice else {
            return Ok(self.record(d));
        };

        let mut ranked: Vec<(usize, usize)> = candidates
            .iter()
            .map(|c| (self.dom_by[c].intersection_len(&undominated), c))
            .collect();
        ranked.sort_by_key(|&(gain, c)| (std::cmp::Reverse(gain), c));

        let mut excluded = forbidden.clone();
        for (_, c) in ranked {
            d.insert(c);
            let next_cover = covered.union(&self.dom_by[c]);
            let stop = self.descend(d, &next_cover, &excluded)?;
            d.remove(c);
            if stop {
                return Ok(true);
            }
            excluded.insert(c);
            if size + lb > self.limit() {
                break;
            }
        }
        Ok(false)
    }

    fn record(&mut self, d: &VertexSet) -> bool {
        match self.mode {
            Mode::Optimize => {
                if d.len() < self.best {
                    self.best = d.len();
                    self.found = Some(d.clone());
                }
                false
            }
            Mode::Decide(_) => {
                self.found = Some(d.clone());
                true
            }
            Mode::Collect(k) => {
                if d.len() == k {
                    self.all.push(d.clone());
                }
                false
            }
        }
    }
}
