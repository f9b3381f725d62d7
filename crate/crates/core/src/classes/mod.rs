//! Forbidden induced subgraphs: recognition, the complexity classifier for
//! single forbidden patterns, and the polynomial algorithms behind its
//! tractable cases.

mod algorithms;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::graph::{contains_induced, Graph, PatternGraph};

pub use algorithms::{
    abc_partition, ec1_gt2_p3kp2free, ec1_gt2_p3kp2free_with, ec1_gt2_p5free, find_a, has_semitotal_pair,
    p3kp2_threshold, poly_dispatch, regular_vertices, ABCPartition,
};

/// `g` contains no induced copy of `h`.
pub fn is_h_free(g: &Graph, h: &PatternGraph) -> Result<bool> {
    Ok(contains_induced(g, h)?.is_none())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    #[serde(rename = "polynomial")]
    PolyTime,
    #[serde(rename = "NP-hard")]
    NpHard,
    #[serde(rename = "coNP-hard")]
    CoNpHard,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::PolyTime => "polynomial",
            Verdict::NpHard => "NP-hard",
            Verdict::CoNpHard => "coNP-hard",
        })
    }
}

/// Multiplicities of the small components in a tractable pattern.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct HParams {
    /// Isolated vertices.
    pub t: usize,
    /// Components that are single edges.
    pub p: usize,
}

/// Complexity of deciding `ct_γt2 = 1` on `H`-free graphs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HClassification {
    pub verdict: Verdict,
    pub reason: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub params: Option<HParams>,
}

impl HClassification {
    fn new(verdict: Verdict, reason: &str, params: Option<HParams>) -> Self {
        HClassification {
            verdict,
            reason: reason.to_string(),
            params,
        }
    }
}

/// Shape of one connected component of a pattern.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Piece {
    Cyclic,
    Branching,
    Path(usize),
}

pub(crate) fn pieces(h: &Graph) -> Vec<Piece> {
    h.components()
        .into_iter()
        .map(|comp| {
            let edges: usize = comp.iter().map(|&v| h.degree(v)).sum::<usize>() / 2;
            if edges >= comp.len() {
                Piece::Cyclic
            } else if comp.iter().any(|&v| h.degree(v) >= 3) {
                Piece::Branching
            } else {
                Piece::Path(comp.len())
            }
        })
        .collect()
}

/// Places `H` in the dichotomy. Cycles and branch vertices are checked
/// first; what remains is a disjoint union of paths, decided by its longest
/// path and the size of the other components.
pub fn classify_h(h: &PatternGraph) -> HClassification {
    use Verdict::*;
    let pieces = pieces(h.graph());
    if pieces.contains(&Piece::Cyclic) {
        return HClassification::new(NpHard, "Thm-girth", None);
    }
    if pieces.contains(&Piece::Branching) {
        return HClassification::new(CoNpHard, "Thm-claw", None);
    }
    let mut lens: Vec<usize> = pieces
        .iter()
        .map(|p| match p {
            Piece::Path(n) => *n,
            _ => unreachable!(),
        })
        .collect();
    lens.sort_unstable_by(|a, b| b.cmp(a));
    let longest = lens.first().copied().unwrap_or(0);
    let rest = lens.get(1..).unwrap_or(&[]);
    let count = |n: usize| lens.iter().filter(|&&l| l == n).count();
    if longest >= 6 {
        return HClassification::new(NpHard, "Thm-P6/P4+P2", None);
    }
    if longest >= 4 {
        if rest.iter().any(|&l| l >= 2) {
            return HClassification::new(NpHard, "Thm-P6/P4+P2", None);
        }
        return HClassification::new(PolyTime, "Thm-P5+tK1", Some(HParams { t: rest.len(), p: 0 }));
    }
    if longest == 3 && rest.first() == Some(&3) {
        return HClassification::new(CoNpHard, "Thm-2P3", None);
    }
    HClassification::new(
        PolyTime,
        "Thm-P3+pP2+tK1",
        Some(HParams {
            t: count(1),
            p: count(2),
        }),
    )
}
