//! Gadget constructions that carry domination questions over to semitotal
//! domination, with a brute-force 1-in-3 oracle and validators.
//!
//! Every construction names each vertex it creates. Names follow the usual
//! gadget notation (`a_3`, `T_x1`, `P_{x1,2}^c3(1)`, `w_c1^{x1x2}`) with
//! variables `x1, x2, ...` and clauses `c1, c2, ...` numbered from one.

mod chordal;
mod clawfree;
mod sat;
mod tree;
mod two_p3;
mod validate;

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::graph::Graph;

pub use chordal::reduce_chordal;
pub use clawfree::{reduce_clawfree, CLAWFREE_CLAUSE_SIZE, CLAWFREE_VARIABLE_SIZE};
pub use sat::{brute_1in3, SatInstance, MAX_BRUTE_VARS};
pub use tree::reduce_tree;
pub use two_p3::reduce_2p3free;
pub use validate::{
    validate_reduction, validate_reduction_with, CheckResult, CheckStatus, ValidationReport,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Target {
    Tree,
    Chordal,
    Clawfree,
    #[serde(rename = "2p3free")]
    TwoP3Free,
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Target::Tree => "tree",
            Target::Chordal => "chordal",
            Target::Clawfree => "clawfree",
            Target::TwoP3Free => "2p3free",
        })
    }
}

/// The value a construction promises for `γt2` of its output.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "identity", rename_all = "kebab-case")]
pub enum Identity {
    /// `γt2 = γ(source) + 2|V(source)|`.
    DominationPlusTwiceOrder { source: Graph },
    /// `γt2 = min(γ(source) + 1, ell + 1)`.
    CappedDomination { source: Graph, ell: usize },
    /// `γt2 >= value`, with equality exactly when `formula` is satisfiable.
    SatisfiableIffEqual { formula: SatInstance, value: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionMeta {
    pub target: Target,
    pub expected_order: usize,
    #[serde(flatten)]
    pub identity: Identity,
}

/// A constructed graph, a name for every vertex, and what is claimed about it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionOutput {
    pub graph: Graph,
    pub labels: BTreeMap<String, usize>,
    pub meta: ReductionMeta,
}

impl ReductionOutput {
    pub fn id(&self, label: &str) -> Option<usize> {
        self.labels.get(label).copied()
    }

    /// Names indexed by vertex id.
    pub fn names(&self) -> Vec<&str> {
        let mut out = vec![""; self.graph.order()];
        for (name, &v) in &self.labels {
            if v < out.len() {
                out[v] = name;
            }
        }
        out
    }
}

/// Grows a graph one named vertex at a time.
struct Builder {
    graph: Graph,
    labels: BTreeMap<String, usize>,
}

impl Builder {
    fn new() -> Self {
        Builder {
            graph: Graph::empty(0),
            labels: BTreeMap::new(),
        }
    }

    fn vertex(&mut self, name: impl Into<String>) -> usize {
        let v = self.graph.add_vertex();
        let prev = self.labels.insert(name.into(), v);
        debug_assert!(prev.is_none(), "duplicate gadget label");
        v
    }

    fn edge(&mut self, u: usize, v: usize) {
        self.graph.add_edge(u, v).expect("gadget vertices exist and differ");
    }

    fn clique(&mut self, vs: &[usize]) {
        for (i, &u) in vs.iter().enumerate() {
            for &v in &vs[i + 1..] {
                self.edge(u, v);
            }
        }
    }

    /// A long paw: triangle `P(1) P(2) P(3)` with the path `P(3) P(4) P(5)`.
    /// Returns the five ids in order.
    fn long_paw(&mut self, name: &str) -> [usize; 5] {
        let p = [1, 2, 3, 4, 5].map(|i| self.vertex(format!("{name}({i})")));
        self.clique(&p[..3]);
        self.edge(p[2], p[3]);
        self.edge(p[3], p[4]);
        p
    }

    fn finish(self, meta: ReductionMeta) -> ReductionOutput {
        ReductionOutput {
            graph: self.graph,
            labels: self.labels,
            meta,
        }
    }
}

fn var_name(v: usize) -> String {
    format!("x{}", v + 1)
}

fn clause_name(c: usize) -> String {
    format!("c{}", c + 1)
}
